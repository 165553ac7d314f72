"""Implicit model of the Hamming graph H(n, q) with exact integer counting."""
