"""Shared exception types."""

from __future__ import annotations


class ParseError(ValueError):
    """A graph or orientation file is malformed."""


class BoundExceededError(RuntimeError):
    """An enumeration would exceed its configured size bound.

    The message names the knob (``WD_LAB_BOUND`` or a function argument)
    that raises the bound.
    """
