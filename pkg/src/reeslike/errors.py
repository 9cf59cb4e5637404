"""Exception types shared across the package."""

from __future__ import annotations


class ReeslikeError(Exception):
    """Base class for every error raised by this package."""


class InputError(ReeslikeError, ValueError):
    """Malformed or unsupported input (CLI exit code 1)."""


class ParseError(InputError):
    """Polynomial text that does not fit the grammar; ``position`` is 0-based."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        self.reason = message
        pointer = ""
        if text:
            pointer = f"\n  {text}\n  {' ' * position}^"
        super().__init__(f"{message} at position {position}{pointer}")


class HypothesisError(InputError):
    """An operation was asked to run outside the hypotheses it needs."""


class DegreeCapExceeded(ReeslikeError):
    """A Groebner computation produced an S-pair above the configured degree cap."""

    def __init__(self, degree: int, cap: int):
        self.degree = degree
        self.cap = cap
        super().__init__(f"S-pair of degree {degree} exceeds the degree cap {cap} (set REESLIKE_DEGREE_CAP to raise it)")


class TooLargeError(ReeslikeError):
    """Enumeration would exceed a configured desk-scale limit."""


class InvariantViolation(ReeslikeError):
    """A verification found a disagreement; ``report`` carries the witnesses (CLI exit code 2)."""

    def __init__(self, message: str, report: dict | None = None):
        self.report = report or {}
        super().__init__(message)
