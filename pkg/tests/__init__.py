"""Test package for hamburn."""
