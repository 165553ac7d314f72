"""hamburn: exact burning numbers and bounds for Hamming graphs."""
