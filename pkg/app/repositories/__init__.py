"""Repositories for complex files."""
