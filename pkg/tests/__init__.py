# DFS Behavioral Parser - Test Suite
