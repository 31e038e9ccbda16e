"""Security tests for DFS Behavioral Parser."""
