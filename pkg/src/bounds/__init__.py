"""Closed-form bounds on β(H(n, q)) and their exact certificates."""
