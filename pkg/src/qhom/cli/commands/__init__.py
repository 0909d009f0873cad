"""Command registration helpers for the qhom CLI."""

from __future__ import annotations
