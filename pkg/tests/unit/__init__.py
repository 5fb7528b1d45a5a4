"""Unit tests for repositories and services."""
