"""Parsers and serializers for supports and lifted supports.

Three input routes produce the same two data shapes:

  * germ text like ``x^5+x^2*y^2+y^5``      -> SupportSet
  * lifted text like ``1+tz+t^3z^2``        -> LiftedSupport
  * JSON ``{"monomials": [...]}``           -> either, decided by whether
    the monomials carry a ``t`` field (mixing is a SchemaError)

Coefficients only matter up to cancellation, so germ coefficients are
kept as Gaussian integers (re, im) and everything else about them is
forgotten.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Union

from .errors import (
    DuplicateMonomialError,
    EmptySupportError,
    NegativeExponentError,
    ParseError,
    SchemaError,
)
from .lattice import LatticePoint


@dataclass(frozen=True)
class SupportSet:
    """Finite set of exponent points with nonzero Gaussian coefficients."""

    terms: tuple[tuple[LatticePoint, tuple[int, int]], ...]

    @classmethod
    def from_points(cls, points, coeffs: Mapping | None = None) -> "SupportSet":
        seen = {}
        for p in points:
            lp = LatticePoint(int(p[0]), int(p[1]))
            c = (coeffs or {}).get(tuple(p), (1, 0))
            if isinstance(c, int):
                c = (c, 0)
            seen[lp] = c
        if not seen or any(c == (0, 0) for c in seen.values()):
            raise EmptySupportError("support must be nonempty with nonzero coefficients")
        return cls(tuple(sorted(seen.items())))

    @property
    def points(self) -> tuple[LatticePoint, ...]:
        return tuple(p for p, _ in self.terms)

    def coefficient(self, p) -> tuple[int, int]:
        for q, c in self.terms:
            if q == tuple(p):
                return c
        return (0, 0)


@dataclass(frozen=True)
class LiftedSupport:
    """Exponent points together with exact rational lifting values."""

    entries: tuple[tuple[LatticePoint, Fraction], ...]

    @classmethod
    def from_mapping(cls, mapping: Mapping) -> "LiftedSupport":
        items = sorted((LatticePoint(int(p[0]), int(p[1])), Fraction(v))
                       for p, v in mapping.items())
        if not items:
            raise EmptySupportError("lifted support must be nonempty")
        return cls(tuple(items))

    @property
    def points(self) -> tuple[LatticePoint, ...]:
        return tuple(p for p, _ in self.entries)

    def as_dict(self) -> dict[LatticePoint, Fraction]:
        return dict(self.entries)

    def value(self, p) -> Fraction:
        return self.as_dict()[LatticePoint(int(p[0]), int(p[1]))]


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None, cls=ParseError):
        raise cls(message, self.text, self.pos if pos is None else pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def natural_exponent(self) -> int:
        """Integer after '^' where negatives are a distinct error."""
        self.skip_ws()
        if self.peek() == "-":
            self.error("exponent must be non-negative", cls=NegativeExponentError)
        return self.integer()


def _gauss_add(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    return (a[0] + b[0], a[1] + b[1])


def parse_germ(text: str) -> SupportSet:
    """Parse a polynomial germ in x, y and return its support.

    Terms are combined; a support that cancels to nothing raises
    EmptySupportError.  Coefficients may be integers, ``i``, or ``<int>i``.
    """
    sc = _Scanner(text)
    acc: dict[LatticePoint, tuple[int, int]] = {}
    if sc.at_end():
        sc.error("empty expression")
    sign = 1
    if sc.peek() in "+-":
        sign = -1 if sc.take() == "-" else 1
    while True:
        point, coeff = _parse_germ_term(sc)
        coeff = (sign * coeff[0], sign * coeff[1])
        acc[point] = _gauss_add(acc.get(point, (0, 0)), coeff)
        if sc.at_end():
            break
        ch = sc.peek()
        if ch not in "+-":
            sc.error(f"expected '+' or '-', found {ch!r}")
        sign = -1 if sc.take() == "-" else 1
    terms = {p: c for p, c in acc.items() if c != (0, 0)}
    if not terms:
        raise EmptySupportError("all terms cancelled")
    return SupportSet(tuple(sorted(terms.items())))


def _parse_germ_term(sc: _Scanner) -> tuple[LatticePoint, tuple[int, int]]:
    sc.skip_ws()
    coeff: tuple[int, int] | None = None
    coeff_pos = sc.pos
    if sc.peek().isdigit():
        n = sc.integer()
        if sc.peek() == "i":
            sc.take()
            coeff = (0, n)
        else:
            coeff = (n, 0)
        if n == 0:
            sc.error("zero coefficient", pos=coeff_pos)
    elif sc.peek() == "i":
        sc.take()
        coeff = (0, 1)
    sc.skip_ws()
    star_after_coeff = False
    if coeff is not None and sc.peek() == "*":
        sc.take()
        star_after_coeff = True
    exps = {"x": 0, "y": 0}
    seen_var = False
    while True:
        sc.skip_ws()
        ch = sc.peek()
        if ch not in ("x", "y"):
            break
        sc.take()
        e = 1
        sc.skip_ws()
        if sc.peek() == "^":
            sc.take()
            e = sc.natural_exponent()
        exps[ch] += e
        seen_var = True
        sc.skip_ws()
        if sc.peek() == "*":
            star_pos = sc.pos
            sc.take()
            sc.skip_ws()
            if sc.peek() not in ("x", "y"):
                sc.error("expected a variable after '*'", pos=star_pos + 1)
    if star_after_coeff and not seen_var:
        sc.error("expected a monomial after '*'")
    if coeff is None and not seen_var:
        sc.error("expected a term")
    return LatticePoint(exps["x"], exps["y"]), coeff if coeff is not None else (1, 0)


def _rational_exponent(sc: _Scanner) -> Fraction:
    sc.skip_ws()
    wrapped = sc.peek() == "("
    if wrapped:
        sc.take()
        sc.skip_ws()
    neg = False
    if sc.peek() == "-":
        sc.take()
        neg = True
    num = sc.integer()
    den = 1
    if sc.peek() == "/":
        sc.take()
        den_pos = sc.pos
        den = sc.integer()
        if den == 0:
            sc.error("zero denominator", pos=den_pos)
    if wrapped:
        sc.skip_ws()
        if sc.peek() != ")":
            sc.error("expected ')'")
        sc.take()
    return Fraction(-num if neg else num, den)


def parse_puiseux_poly(text: str) -> LiftedSupport:
    """Parse ``t``-lifted terms in z, w like ``1+tz+t^3z^2+t^2zw``.

    Coefficients are implicitly one; factors appear in t, z, w order;
    a repeated (i, j) monomial is a DuplicateMonomialError.
    """
    sc = _Scanner(text)
    entries: dict[LatticePoint, Fraction] = {}
    if sc.at_end():
        sc.error("empty expression")
    if sc.peek() in "+-":
        sc.take()
    while True:
        point, nu = _parse_lifted_term(sc)
        if point in entries:
            raise DuplicateMonomialError(f"monomial z^{point.i} w^{point.j} appears twice")
        entries[point] = nu
        if sc.at_end():
            break
        if sc.peek() not in "+-":
            sc.error(f"expected '+' or '-', found {sc.peek()!r}")
        sc.take()
    return LiftedSupport(tuple(sorted(entries.items())))


def _parse_lifted_term(sc: _Scanner) -> tuple[LatticePoint, Fraction]:
    sc.skip_ws()
    nu = Fraction(0)
    i = j = 0
    saw_factor = False
    if sc.peek().isdigit():
        one_pos = sc.pos
        n = sc.integer()
        if n != 1:
            sc.error("coefficients are implicitly 1", pos=one_pos)
        saw_factor = True
        if sc.peek() == "*":
            sc.take()
    sc.skip_ws()
    if sc.peek() == "t":
        sc.take()
        nu = Fraction(1)
        if sc.peek() == "^":
            sc.take()
            nu = _rational_exponent(sc)
        saw_factor = True
        if sc.peek() == "*":
            sc.take()
    sc.skip_ws()
    if sc.peek() == "z":
        sc.take()
        i = 1
        if sc.peek() == "^":
            sc.take()
            i = sc.natural_exponent()
        saw_factor = True
        if sc.peek() == "*":
            sc.take()
    sc.skip_ws()
    if sc.peek() == "w":
        sc.take()
        j = 1
        if sc.peek() == "^":
            sc.take()
            j = sc.natural_exponent()
        saw_factor = True
    if not saw_factor:
        sc.error("expected a term (t, z, w or 1)")
    return LatticePoint(i, j), nu


# --- JSON route -------------------------------------------------------------

def _require_nonneg_int(value, pointer: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError("must be an integer", pointer)
    if value < 0:
        raise SchemaError("must be non-negative", pointer)
    return value


def _parse_t_string(value, pointer: str) -> Fraction:
    if not isinstance(value, str):
        raise SchemaError("t must be a string rational like \"3/2\"", pointer)
    try:
        num, _, den = value.partition("/")
        return Fraction(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {value!r} ({exc})", pointer) from None


_ALLOWED_KEYS = {"i", "j", "t", "coeff"}


def parse_json_obj(obj) -> Union[SupportSet, LiftedSupport]:
    """Validate a decoded JSON object and build the matching support."""
    if not isinstance(obj, dict) or "monomials" not in obj:
        raise SchemaError("top level must be an object with \"monomials\"", "/monomials")
    monomials = obj["monomials"]
    extra = set(obj) - {"monomials"}
    if extra:
        raise SchemaError(f"unknown key {sorted(extra)[0]!r}", "/" + sorted(extra)[0])
    if not isinstance(monomials, list) or not monomials:
        raise SchemaError("must be a non-empty list", "/monomials")

    lifted = None
    support_acc: dict[LatticePoint, tuple[int, int]] = {}
    lift_acc: dict[LatticePoint, Fraction] = {}
    for k, entry in enumerate(monomials):
        ptr = f"/monomials/{k}"
        if not isinstance(entry, dict):
            raise SchemaError("must be an object", ptr)
        unknown = set(entry) - _ALLOWED_KEYS
        if unknown:
            raise SchemaError(f"unknown key {sorted(unknown)[0]!r}",
                              f"{ptr}/{sorted(unknown)[0]}")
        if "i" not in entry or "j" not in entry:
            raise SchemaError("needs both \"i\" and \"j\"", ptr)
        i = _require_nonneg_int(entry["i"], f"{ptr}/i")
        j = _require_nonneg_int(entry["j"], f"{ptr}/j")
        has_t = "t" in entry
        if lifted is None:
            lifted = has_t
        elif lifted != has_t:
            raise SchemaError("either every monomial carries t or none does", f"{ptr}/t")
        coeff = entry.get("coeff", 1)
        if isinstance(coeff, bool) or not isinstance(coeff, int):
            raise SchemaError("coeff must be an integer", f"{ptr}/coeff")
        if coeff == 0:
            raise SchemaError("coeff must be nonzero", f"{ptr}/coeff")
        point = LatticePoint(i, j)
        if lifted:
            if point in lift_acc:
                raise SchemaError(f"duplicate monomial ({i},{j})", ptr)
            lift_acc[point] = _parse_t_string(entry["t"], f"{ptr}/t")
        else:
            support_acc[point] = _gauss_add(support_acc.get(point, (0, 0)), (coeff, 0))

    if lifted:
        return LiftedSupport(tuple(sorted(lift_acc.items())))
    support_acc = {p: c for p, c in support_acc.items() if c != (0, 0)}
    if not support_acc:
        raise SchemaError("support is empty after combining terms", "/monomials")
    return SupportSet(tuple(sorted(support_acc.items())))


def load_json(path) -> Union[SupportSet, LiftedSupport]:
    """Read and validate a support file.  IO errors propagate to the caller."""
    raw = Path(path).read_text()
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}", "") from None
    return parse_json_obj(obj)


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def serialize_json(obj: Union[SupportSet, LiftedSupport]) -> str:
    """Canonical JSON text; parse_json_obj inverts it exactly."""
    monomials = []
    if isinstance(obj, LiftedSupport):
        for p, nu in obj.entries:
            monomials.append({"i": p.i, "j": p.j, "t": _frac_str(nu)})
    else:
        for p, (re, im) in obj.terms:
            if im != 0:
                raise ValueError(f"coefficient {re}+{im}i at {p} has no JSON form")
            entry = {"i": p.i, "j": p.j}
            if re != 1:
                entry["coeff"] = re
            monomials.append(entry)
    return json.dumps({"monomials": monomials}, indent=2, sort_keys=True)


def _coeff_prefix(c: tuple[int, int], bare_point: bool) -> str:
    re, im = c
    if im == 0:
        body = "" if abs(re) == 1 and not bare_point else str(abs(re))
        return ("-" if re < 0 else "") + body
    if re == 0:
        body = ("" if abs(im) == 1 else str(abs(im))) + "i"
        return ("-" if im < 0 else "") + body
    raise ValueError(f"coefficient {re}+{im}i has no canonical text form")


def germ_text(support: SupportSet) -> str:
    """Canonical germ string; parse_germ inverts it on its output."""
    parts = []
    for p, c in sorted(support.terms, key=lambda t: (t[0].i + t[0].j, -t[0].i)):
        mono = []
        if p.i:
            mono.append("x" if p.i == 1 else f"x^{p.i}")
        if p.j:
            mono.append("y" if p.j == 1 else f"y^{p.j}")
        prefix = _coeff_prefix(c, bare_point=not mono)
        parts.append(prefix + "*".join(mono) if mono or prefix else "1")
    out = parts[0]
    for term in parts[1:]:
        out += term if term.startswith("-") else "+" + term
    return out
