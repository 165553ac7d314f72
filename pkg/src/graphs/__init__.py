"""Explicit graphs, burning schedules and the exact burning-number solver."""
