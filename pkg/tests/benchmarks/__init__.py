"""Performance benchmarks for DFS Behavioral Parser."""
