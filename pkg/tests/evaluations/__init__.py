"""Define evaluations."""
