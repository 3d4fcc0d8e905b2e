"""Packaged sample data for local runs."""
