"""Finite Puiseux series in t with Gaussian rational coefficients.

A series is a finite sum of c * t^e with e rational.  The valuation
used throughout the package is val(sum c_k t^{e_k}) = -min e_k, so a
higher-order series has a more negative value and val(t^e) = -e.
Coefficients are (re, im) pairs of Fractions; arithmetic cancels
exactly, and the valuation of an exact zero is an error rather than
a sentinel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ValOfZeroError

Coeff = tuple[Fraction, Fraction]

_ZERO = (Fraction(0), Fraction(0))


def _as_coeff(c) -> Coeff:
    if isinstance(c, tuple):
        return (Fraction(c[0]), Fraction(c[1]))
    if isinstance(c, complex):
        raise TypeError("use exact (re, im) pairs, not floats")
    return (Fraction(c), Fraction(0))


@dataclass(frozen=True)
class PuiseuxSeries:
    """Immutable finite series; ``terms`` maps exponent to coefficient."""

    terms: tuple[tuple[Fraction, Coeff], ...]

    @classmethod
    def from_dict(cls, mapping) -> "PuiseuxSeries":
        cleaned = {Fraction(e): _as_coeff(c) for e, c in mapping.items()}
        return cls(tuple(sorted((e, c) for e, c in cleaned.items() if c != _ZERO)))

    @classmethod
    def term(cls, exponent, coeff=1) -> "PuiseuxSeries":
        return cls.from_dict({Fraction(exponent): coeff})

    @classmethod
    def zero(cls) -> "PuiseuxSeries":
        return cls(())

    def is_zero(self) -> bool:
        return not self.terms

    def val(self) -> Fraction:
        if not self.terms:
            raise ValOfZeroError("valuation of the zero series is undefined")
        return -self.terms[0][0]

    def __add__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        acc = dict(self.terms)
        for e, (re, im) in other.terms:
            a, b = acc.get(e, _ZERO)
            acc[e] = (a + re, b + im)
        return PuiseuxSeries.from_dict(acc)

    def __neg__(self) -> "PuiseuxSeries":
        return PuiseuxSeries(tuple((e, (-re, -im)) for e, (re, im) in self.terms))

    def __sub__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        return self + (-other)

    def __mul__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        acc: dict[Fraction, Coeff] = {}
        for e1, (a, b) in self.terms:
            for e2, (c, d) in other.terms:
                re, im = acc.get(e1 + e2, _ZERO)
                acc[e1 + e2] = (re + a * c - b * d, im + a * d + b * c)
        return PuiseuxSeries.from_dict(acc)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, (re, im) in self.terms:
            c = f"{re}" if im == 0 else f"({re}+{im}i)"
            if e == 0:
                parts.append(c)
            else:
                tp = "t" if e == 1 else f"t^{e}"
                parts.append(tp if c == "1" else f"{c}{tp}")
        return "+".join(parts).replace("+-", "-")


def val(series: PuiseuxSeries) -> Fraction:
    return series.val()
