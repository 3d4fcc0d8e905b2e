"""Bundled sample quivers and central charges for local runs and tests."""
