"""Exception types shared across the package.

The hierarchy is flat on purpose: callers usually want to distinguish
"your input was malformed" (ParseError and friends), "your input is
outside the theory's hypotheses" (precondition errors), and "the library
caught itself producing garbage" (InternalCheckError), nothing finer.
"""

from __future__ import annotations


class TropnewtonError(Exception):
    """Base class for every error raised by this package."""


# --- input / parsing -------------------------------------------------------

class ParseError(TropnewtonError):
    """Malformed expression text.

    Carries the character offset where scanning failed so the CLI can
    print a caret under the offending spot.
    """

    def __init__(self, message: str, text: str = "", pos: int = 0):
        super().__init__(message)
        self.text = text
        self.pos = pos

    def caret_block(self) -> str:
        return f"{self.text}\n{' ' * self.pos}^"


class NegativeExponentError(ParseError):
    """An exponent parsed negative where only naturals are allowed."""


class EmptySupportError(TropnewtonError):
    """All terms cancelled, or no monomials were given."""


class DuplicateMonomialError(TropnewtonError):
    """The same (i, j) monomial appeared twice in a lifted polynomial."""


class SchemaError(TropnewtonError):
    """Structured input violates the JSON schema.

    ``pointer`` is a JSON-pointer-style path to the offending element,
    e.g. ``/monomials/3/t``.
    """

    def __init__(self, message: str, pointer: str = ""):
        super().__init__(f"{pointer}: {message}" if pointer else message)
        self.pointer = pointer


# --- preconditions of the theory -------------------------------------------

class NotSingularAtOriginError(TropnewtonError):
    """Support contains (0,0), (1,0) or (0,1): no singularity at 0."""


class NotConvenientError(TropnewtonError):
    """Support misses an axis, so the Newton diagram region is unbounded."""


class NotCoprimeError(TropnewtonError):
    """A (p, q) pair fed to the square counters is not coprime."""


class BadSequenceError(TropnewtonError):
    """A lifting sequence is not non-negative strictly increasing ints."""


class ValOfZeroError(TropnewtonError):
    """Valuation of the zero series is undefined."""


# --- geometry --------------------------------------------------------------

class DegenerateHullError(TropnewtonError):
    """Fewer than three non-collinear points, so no 2D hull exists."""


class ZeroSegmentError(TropnewtonError):
    """Lattice length of a segment with equal endpoints is undefined."""


class DegenerateInputError(TropnewtonError):
    """Lifted support is affinely degenerate (all points collinear)."""


class NonRegularInputError(TropnewtonError):
    """Adjacent cells share a plane gradient; no dual edge exists."""


class NotCellUnionError(TropnewtonError):
    """The restriction region is not a union of subdivision cells."""


class NotConnectedError(TropnewtonError):
    """The restriction region's cells are not edge-connected."""


class RegularityCertificationError(TropnewtonError):
    """The height feasibility system for the target subdivision has no
    solution.  Not expected for convenient staircase supports; carries a
    diagnostic payload in ``details``.
    """

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}


# --- self checks -----------------------------------------------------------

class ParityViolationError(TropnewtonError):
    """mu + r - 1 came out odd; signals a defect, never corrected."""


class InternalCheckError(TropnewtonError):
    """A construction-time invariant failed.  Always a bug, surfaced loudly."""


def check(condition: bool, message: str) -> None:
    """Raise InternalCheckError unless ``condition`` holds."""
    if not condition:
        raise InternalCheckError(message)
