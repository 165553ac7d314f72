"""Constant-word burning schedules for Hamming graphs."""
