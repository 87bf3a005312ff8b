"""Small exact simplex solver.

Solves max c.x subject to Ax = b, x >= 0 over Fractions.  Costs are
(penalty, unit) pairs compared lexicographically.  Without a starting
basis the solver appends one artificial variable with cost (-1, 0) per
row, so a feasible program ends with penalty part 0 and an infeasible
one ends negative; callers whose columns already hold an identity
submatrix can pass that basis and skip the artificial phase.  Bland's
rule is used for both the entering and the leaving choice, which rules
out cycling at the price of speed; the certification programs this
backs are small, so that trade is fine.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InternalCheckError

Pair = tuple[Fraction, Fraction]

ZERO_PAIR: Pair = (Fraction(0), Fraction(0))


def _scaled(pair: Pair, f: Fraction) -> Pair:
    return (pair[0] * f, pair[1] * f)


def _plus(a: Pair, b: Pair) -> Pair:
    return (a[0] + b[0], a[1] + b[1])


def simplex_max(rows: list[list[Fraction]], rhs: list[Fraction],
                costs: list[Pair],
                basis: list[int] | None = None) -> tuple[list[Fraction], Pair]:
    """Return (x, objective) maximizing costs.x with rows.x == rhs, x >= 0.

    When ``basis`` names one column per row that together form an
    identity submatrix with nonnegative rhs, the program starts feasible
    there and no artificial variables are added.
    """
    m = len(rows)
    n = len(costs)
    tab = []
    if basis is not None:
        if len(basis) != m:
            raise InternalCheckError("starting basis needs one column per row")
        for r in range(m):
            row = [Fraction(v) for v in rows[r]]
            if len(row) != n:
                raise InternalCheckError("row length does not match cost vector")
            bval = Fraction(rhs[r])
            if bval < 0:
                raise InternalCheckError("starting basis requires nonnegative rhs")
            for rr in range(m):
                if row[basis[rr]] != (1 if rr == r else 0):
                    raise InternalCheckError("starting basis is not an identity")
            tab.append(row + [bval])
        cost: list[Pair] = list(costs)
        basis = list(basis)
        total = n
    else:
        for r in range(m):
            row = [Fraction(v) for v in rows[r]]
            if len(row) != n:
                raise InternalCheckError("row length does not match cost vector")
            bval = Fraction(rhs[r])
            if bval < 0:
                row = [-v for v in row]
                bval = -bval
            art = [Fraction(0)] * m
            art[r] = Fraction(1)
            tab.append(row + art + [bval])
        cost = list(costs) + [(Fraction(-1), Fraction(0))] * m
        basis = list(range(n, n + m))
        total = n + m

    # reduced-cost row c_j - y.A_j and objective y.b, kept current across
    # pivots so the entering scan is one pass; basic columns sit at zero
    zrow: list[Pair] = []
    for j in range(total):
        zj = cost[j]
        for r in range(m):
            a = tab[r][j]
            if a:
                c = cost[basis[r]]
                if c != ZERO_PAIR:
                    zj = _plus(zj, _scaled(c, -a))
        zrow.append(zj)
    zval = ZERO_PAIR
    for r in range(m):
        c = cost[basis[r]]
        if c != ZERO_PAIR:
            zval = _plus(zval, _scaled(c, tab[r][-1]))

    while True:
        entering = -1
        for j in range(total):
            if zrow[j] > ZERO_PAIR:
                entering = j
                break
        if entering < 0:
            break
        leaving = -1
        best = None
        for r in range(m):
            a = tab[r][entering]
            if a > 0:
                ratio = tab[r][-1] / a
                if best is None or ratio < best or (
                        ratio == best and basis[r] < basis[leaving]):
                    best = ratio
                    leaving = r
        if leaving < 0:
            raise InternalCheckError("objective unbounded; bad certification program")
        piv = tab[leaving][entering]
        tab[leaving] = lrow = [v / piv for v in tab[leaving]]
        for r in range(m):
            if r != leaving and tab[r][entering]:
                f = tab[r][entering]
                tab[r] = [v - f * w for v, w in zip(tab[r], lrow)]
        f = zrow[entering]
        zval = _plus(zval, _scaled(f, lrow[-1]))
        zrow = [zj if w == 0 else _plus(zj, _scaled(f, -w))
                for zj, w in zip(zrow, lrow)]
        basis[leaving] = entering

    x = [Fraction(0)] * n
    for r in range(m):
        if basis[r] < n:
            x[basis[r]] = tab[r][-1]
    return x, zval
