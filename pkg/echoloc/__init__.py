"""Pointwise Weyl counting functions and echolocation."""
