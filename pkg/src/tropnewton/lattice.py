"""Exact plane lattice geometry.

All predicates run on Python ints or fractions.Fraction; no floats enter
any decision.  Points are (i, j) pairs; LatticePoint is a named tuple so
lattice data stays tuple-compatible, while rational points (cell plane
gradients, midpoints) are plain tuples of Fraction.

Polygon conventions:
  * boundaries are counterclockwise,
  * the canonical vertex order starts at the lexicographically smallest
    vertex (smallest i, then smallest j),
  * ConvexPolygon additionally forbids three consecutive collinear
    vertices, so equality of polygons is equality of vertex tuples.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from .errors import DegenerateHullError, ZeroSegmentError, check

Coord = Union[int, Fraction]
Point = Sequence[Coord]


class LatticePoint(NamedTuple):
    i: int
    j: int

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def as_lattice_point(p: Point) -> LatticePoint:
    i, j = p
    if isinstance(i, Fraction):
        check(i.denominator == 1 and j.denominator == 1,
              f"point {p} is not a lattice point")
        i, j = int(i), int(j)
    return LatticePoint(int(i), int(j))


def cross(o: Point, a: Point, b: Point) -> Coord:
    """Signed area x2 of triangle (o, a, b); positive if counterclockwise."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def dot(u: Point, v: Point) -> Coord:
    return u[0] * v[0] + u[1] * v[1]


def sub(a: Point, b: Point) -> tuple:
    return (a[0] - b[0], a[1] - b[1])


def lattice_length(a: Point, b: Point) -> int:
    """Number of primitive lattice steps from a to b along their segment."""
    di, dj = int(b[0] - a[0]), int(b[1] - a[1])
    if di == 0 and dj == 0:
        raise ZeroSegmentError(f"zero segment at {tuple(a)}")
    return gcd(abs(di), abs(dj))


def primitive_direction(dx: Coord, dy: Coord) -> tuple[int, int]:
    """Scale a nonzero rational vector to coprime integers, keeping direction."""
    fx, fy = Fraction(dx), Fraction(dy)
    if fx == 0 and fy == 0:
        raise ZeroSegmentError("no direction for the zero vector")
    m = fx.denominator * fy.denominator // gcd(fx.denominator, fy.denominator)
    ix, iy = int(fx * m), int(fy * m)
    g = gcd(abs(ix), abs(iy))
    return ix // g, iy // g


def segment_lattice_points(a: Point, b: Point) -> list[LatticePoint]:
    """All lattice points on segment [a, b], endpoints included, in order."""
    a, b = as_lattice_point(a), as_lattice_point(b)
    n = lattice_length(a, b)
    si, sj = (b.i - a.i) // n, (b.j - a.j) // n
    return [LatticePoint(a.i + k * si, a.j + k * sj) for k in range(n + 1)]


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """Exact test: p lies on the closed segment [a, b]."""
    if cross(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Do closed segments [a,b] and [c,d] share at least one point?"""
    d1 = cross(c, d, a)
    d2 = cross(c, d, b)
    d3 = cross(a, b, c)
    d4 = cross(a, b, d)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and d1 != d2 and d3 != d4:
        return True
    return (on_segment(a, c, d) or on_segment(b, c, d)
            or on_segment(c, a, b) or on_segment(d, a, b))


def segments_cross_properly(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True when the open segments intersect in exactly one interior point."""
    d1, d2 = cross(c, d, a), cross(c, d, b)
    d3, d4 = cross(a, b, c), cross(a, b, d)
    return ((d1 > 0) != (d2 > 0) and (d3 > 0) != (d4 > 0)
            and d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0)


def shoelace2(vertices: Sequence[Point]) -> Coord:
    """Twice the signed area of the closed polygon through ``vertices``."""
    total = 0
    n = len(vertices)
    for k in range(n):
        a, b = vertices[k], vertices[(k + 1) % n]
        total += a[0] * b[1] - b[0] * a[1]
    return total


def _canonical_rotation(vertices: tuple) -> tuple:
    k = vertices.index(min(vertices))
    return vertices[k:] + vertices[:k]


def _strip_collinear(vertices: Sequence[LatticePoint]) -> tuple:
    """Drop vertices lying between their neighbours on a straight run."""
    out = list(vertices)
    changed = True
    while changed and len(out) > 3:
        changed = False
        for k in range(len(out)):
            p, c, n = out[k - 1], out[k], out[(k + 1) % len(out)]
            if cross(p, c, n) == 0 and dot(sub(c, p), sub(n, c)) > 0:
                out.pop(k)
                changed = True
                break
    return tuple(out)


class ConvexPolygon:
    """Strictly convex lattice polygon, counterclockwise, canonical start."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[Point]):
        verts = tuple(as_lattice_point(v) for v in vertices)
        check(len(verts) >= 3, "convex polygon needs at least 3 vertices")
        verts = _canonical_rotation(verts)
        n = len(verts)
        for k in range(n):
            c = cross(verts[k - 1], verts[k], verts[(k + 1) % n])
            check(c > 0, f"vertices not strictly convex ccw at {verts[k]}")
        object.__setattr__(self, "vertices", verts)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("ConvexPolygon is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, ConvexPolygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"ConvexPolygon({list(self.vertices)})"

    def edges(self) -> Iterator[tuple[LatticePoint, LatticePoint]]:
        n = len(self.vertices)
        for k in range(n):
            yield self.vertices[k], self.vertices[(k + 1) % n]

    @property
    def area2(self) -> int:
        return int(shoelace2(self.vertices))

    def locate(self, p: Point) -> str:
        """'inside', 'boundary' or 'outside', decided exactly."""
        on_edge = False
        for a, b in self.edges():
            c = cross(a, b, p)
            if c < 0:
                return "outside"
            if c == 0:
                on_edge = True
        return "boundary" if on_edge else "inside"

    def interior_point(self) -> tuple[Fraction, Fraction]:
        """The vertex average; lies strictly inside by convexity."""
        n = len(self.vertices)
        return (Fraction(sum(v.i for v in self.vertices), n),
                Fraction(sum(v.j for v in self.vertices), n))

    def bbox(self) -> tuple[int, int, int, int]:
        xs = [v.i for v in self.vertices]
        ys = [v.j for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


class LatticePolygon:
    """Simple closed lattice polygon, possibly non-convex, ccw."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[Point]):
        verts = tuple(as_lattice_point(v) for v in vertices)
        check(len(verts) >= 3, "polygon needs at least 3 vertices")
        check(len(set(verts)) == len(verts), "repeated vertex in polygon")
        verts = _strip_collinear(verts)
        verts = _canonical_rotation(verts)
        check(shoelace2(verts) > 0, "polygon boundary must be ccw with area > 0")
        n = len(verts)
        for k in range(n):
            # a spike folds the boundary back over itself
            c = cross(verts[k - 1], verts[k], verts[(k + 1) % n])
            d = dot(sub(verts[k], verts[k - 1]), sub(verts[(k + 1) % n], verts[k]))
            check(c != 0 or d > 0, f"boundary spike at {verts[k]}")
        for a_idx in range(n):
            a1, a2 = verts[a_idx], verts[(a_idx + 1) % n]
            for b_idx in range(a_idx + 1, n):
                if b_idx == a_idx or (b_idx + 1) % n == a_idx or (a_idx + 1) % n == b_idx:
                    continue  # adjacent edges share an endpoint by design
                b1, b2 = verts[b_idx], verts[(b_idx + 1) % n]
                check(not segments_intersect(a1, a2, b1, b2),
                      f"self-intersection between edges {a1}-{a2} and {b1}-{b2}")
        object.__setattr__(self, "vertices", verts)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("LatticePolygon is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, LatticePolygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"LatticePolygon({list(self.vertices)})"

    def edges(self) -> Iterator[tuple[LatticePoint, LatticePoint]]:
        n = len(self.vertices)
        for k in range(n):
            yield self.vertices[k], self.vertices[(k + 1) % n]

    @property
    def area2(self) -> int:
        return int(shoelace2(self.vertices))

    def bbox(self) -> tuple[int, int, int, int]:
        xs = [v.i for v in self.vertices]
        ys = [v.j for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def locate(self, p: Point) -> str:
        """'inside', 'boundary' or 'outside' by exact crossing count."""
        x, y = Fraction(p[0]), Fraction(p[1])
        for a, b in self.edges():
            if on_segment((x, y), a, b):
                return "boundary"
        crossings = 0
        for a, b in self.edges():
            ay, by = a.j, b.j
            if (ay > y) == (by > y):
                continue
            x_hit = Fraction(a.i) + (y - ay) * Fraction(b.i - a.i, by - ay)
            if x < x_hit:
                crossings += 1
        return "inside" if crossings % 2 == 1 else "outside"


Region = Union[ConvexPolygon, LatticePolygon]


def convex_hull(points: Iterable[Point]) -> ConvexPolygon:
    """Convex hull by monotone chain.  Needs 3 non-collinear points."""
    pts = sorted({as_lattice_point(p) for p in points})
    if len(pts) < 3:
        raise DegenerateHullError(f"{len(pts)} distinct points")

    def half(seq):
        chain: list[LatticePoint] = []
        for p in seq:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    verts = lower[:-1] + upper[:-1]
    if len(verts) < 3:
        raise DegenerateHullError("all points collinear")
    return ConvexPolygon(verts)


def enumerate_lattice_points(region: Region, interior_only: bool = False) -> list[LatticePoint]:
    """Lattice points of a region by exact point location over its bbox.

    Fine at desk scale; the scan is |bbox| point-in-polygon tests.
    """
    x0, y0, x1, y1 = region.bbox()
    wanted = ("inside",) if interior_only else ("inside", "boundary")
    out = []
    for i in range(x0, x1 + 1):
        for j in range(y0, y1 + 1):
            if region.locate((i, j)) in wanted:
                out.append(LatticePoint(i, j))
    return out


def clip_segment_to_convex(p0: Point, p1: Point,
                           polygon: ConvexPolygon) -> tuple[Fraction, Fraction] | None:
    """Parameter range [t0, t1] of segment p0->p1 inside a convex polygon.

    Returns None when the segment misses the polygon.  Endpoints may be
    rational.  The usual Cyrus-Beck half-plane walk, done in Fractions.
    """
    t0, t1 = Fraction(0), Fraction(1)
    dx, dy = p1[0] - p0[0], p1[1] - p0[1]
    for a, b in polygon.edges():
        # inside is the left of a->b:  n . (x - a) >= 0 with n = (-(b-a).j, (b-a).i)
        nx, ny = -(b.j - a.j), b.i - a.i
        num = nx * (p0[0] - a.i) + ny * (p0[1] - a.j)
        den = nx * dx + ny * dy
        if den == 0:
            if num < 0:
                return None
            continue
        t_hit = Fraction(-num, den)
        if den > 0:
            t0 = max(t0, t_hit)
        else:
            t1 = min(t1, t_hit)
        if t0 > t1:
            return None
    return t0, t1


def pick_interior_boundary(region: Region) -> tuple[int, int]:
    """(interior, boundary) lattice point counts by direct enumeration."""
    interior = 0
    boundary = 0
    x0, y0, x1, y1 = region.bbox()
    for i in range(x0, x1 + 1):
        for j in range(y0, y1 + 1):
            where = region.locate((i, j))
            if where == "inside":
                interior += 1
            elif where == "boundary":
                boundary += 1
    return interior, boundary
