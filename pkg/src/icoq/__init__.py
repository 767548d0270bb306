"""Exact verification toolkit."""
