"""Tests for the ghurwitz package."""
