"""Newton boundary of a plane curve germ and the numbers read off it.

The germ must be singular at the origin and convenient: the support
misses (0,0), (1,0), (0,1) and meets both coordinate axes.  The
boundary gamma is the chain of compact faces of the shifted positive
quadrant hull; everything downstream (region below the boundary,
staircase decomposition, Milnor and delta numbers) is derived from it
in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    NotConvenientError,
    NotSingularAtOriginError,
    ParityViolationError,
    check,
)
from .lattice import (
    LatticePoint,
    LatticePolygon,
    cross,
    enumerate_lattice_points,
    segment_lattice_points,
)


@dataclass(frozen=True)
class NewtonDiagram:
    """Support plus its Newton boundary from (0, q) down to (p, 0)."""

    support: tuple[LatticePoint, ...]
    gamma_vertices: tuple[LatticePoint, ...]
    gamma_lattice: tuple[LatticePoint, ...]
    p: int
    q: int

    @property
    def gamma_edges(self) -> tuple[tuple[LatticePoint, LatticePoint], ...]:
        v = self.gamma_vertices
        return tuple(zip(v, v[1:]))

    @property
    def primitive_steps(self) -> tuple[tuple[int, int], ...]:
        """(p_i, q_i) for each unit lattice segment along the boundary."""
        g = self.gamma_lattice
        return tuple((b.i - a.i, a.j - b.j) for a, b in zip(g, g[1:]))

    @property
    def branch_count(self) -> int:
        return len(self.gamma_lattice) - 1

    @cached_property
    def gamma_minus(self) -> LatticePolygon:
        """Region between the boundary and the axes, counterclockwise."""
        ring = [LatticePoint(0, 0)] + list(reversed(self.gamma_vertices))
        return LatticePolygon(ring)

    def on_gamma(self, point) -> bool:
        g = self.gamma_lattice
        pt = LatticePoint(int(point[0]), int(point[1]))
        return any(a.i <= pt.i <= b.i and b.j <= pt.j <= a.j
                   and cross(a, b, pt) == 0 for a, b in zip(g, g[1:]))

    @cached_property
    def gamma_minus_lattice(self) -> tuple[LatticePoint, ...]:
        return tuple(enumerate_lattice_points(self.gamma_minus))

    @cached_property
    def interior_lattice_count(self) -> int:
        return len(enumerate_lattice_points(self.gamma_minus, interior_only=True))


def analyze_support(points) -> NewtonDiagram:
    """Build the Newton diagram, rejecting non-singular or non-convenient input."""
    pts = sorted({LatticePoint(int(p[0]), int(p[1])) for p in points})
    for bad in ((0, 0), (1, 0), (0, 1)):
        if LatticePoint(*bad) in pts:
            raise NotSingularAtOriginError(
                f"support contains {bad}; the germ is not singular at the origin")
    on_x = [p.i for p in pts if p.j == 0]
    on_y = [p.j for p in pts if p.i == 0]
    if not on_x or not on_y:
        raise NotConvenientError("support must meet both coordinate axes")
    p, q = min(on_x), min(on_y)
    check(p >= 2 and q >= 2, "axis intercepts below 2 after singularity check")

    lowest: dict[int, int] = {}
    for pt in pts:
        if pt.i <= p and pt.j <= q:
            lowest[pt.i] = min(lowest.get(pt.i, pt.j), pt.j)
    chain: list[LatticePoint] = []
    floor = None
    for i in sorted(lowest):
        j = lowest[i]
        if floor is not None and j >= floor:
            continue
        floor = j
        nxt = LatticePoint(i, j)
        while len(chain) >= 2 and cross(chain[-2], chain[-1], nxt) <= 0:
            chain.pop()
        chain.append(nxt)
    check(chain[0] == (0, q) and chain[-1] == (p, 0), "boundary endpoints off axes")

    lattice: list[LatticePoint] = [chain[0]]
    for a, b in zip(chain, chain[1:]):
        lattice.extend(segment_lattice_points(a, b)[1:])
    return NewtonDiagram(tuple(pts), tuple(chain), tuple(lattice), p, q)


@dataclass(frozen=True)
class StaircaseDecomposition:
    """Split of the region under the boundary into corner triangles
    and the grid staircase beneath them."""

    triangles: tuple[tuple[LatticePoint, LatticePoint, LatticePoint], ...]
    staircase: LatticePolygon | None
    triangle_squares: int
    staircase_squares: int

    @property
    def square_count(self) -> int:
        return self.triangle_squares + self.staircase_squares

    @property
    def touching_count(self) -> int:
        """Squares that will meet the boundary in a vertex: one per
        lattice point interior to the boundary chain."""
        return len(self.triangles) - 1


def decompose_diagram(nd: NewtonDiagram) -> StaircaseDecomposition:
    g = nd.gamma_lattice
    triangles = []
    tri_squares2 = 0
    for a, b in zip(g, g[1:]):
        corner = LatticePoint(a.i, b.j)
        triangles.append((corner, b, a))
        tri_squares2 += (b.i - a.i - 1) * (a.j - b.j - 1)
    check(tri_squares2 % 2 == 0, "triangle square total must be even")

    n = len(g) - 1
    staircase = None
    stair_squares = 0
    if n > 1:
        ring = [LatticePoint(0, 0), LatticePoint(g[n - 1].i, 0)]
        for k in range(n - 1, 0, -1):
            ring.append(LatticePoint(g[k].i, g[k].j))
            ring.append(LatticePoint(g[k - 1].i, g[k].j))
        staircase = LatticePolygon(ring)
        check(staircase.area2 % 2 == 0, "staircase area must be integral in squares")
        stair_squares = staircase.area2 // 2
        alt = sum((g[i].i - g[i - 1].i) * g[i].j for i in range(1, n))
        check(stair_squares == alt, "staircase area disagrees with step sum")
    return StaircaseDecomposition(tuple(triangles), staircase,
                                  tri_squares2 // 2, stair_squares)


def milnor_number(nd: NewtonDiagram) -> int:
    """Count for a boundary-generic germ, computed two independent ways."""
    via_area = nd.gamma_minus.area2 - (nd.p + nd.q) + 1
    dec = decompose_diagram(nd)
    hypotenuse = sum(pi * qi for pi, qi in nd.primitive_steps)
    via_steps = hypotenuse + 2 * dec.staircase_squares - (nd.p + nd.q) + 1
    check(via_area == via_steps, "area route and staircase route disagree")
    return via_area


def delta_invariant(mu: int, branches: int) -> int:
    total = mu + branches - 1
    if total % 2 != 0:
        raise ParityViolationError(
            f"mu + branches - 1 = {total} is odd; counts are inconsistent")
    return total // 2
