"""Test suite for EdgeLab."""
