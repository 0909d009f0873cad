"""Unit test package."""

