"""Regular subdivisions of lifted supports and the special subdivision
of the region under a Newton boundary.

The central construction lifts each support point (i, j) to height
nu(i, j) and takes the lower convex hull; facets project to the cells
of a regular subdivision.  All hull decisions are made on integers
(heights are scaled by their common denominator), so there is no
tolerance anywhere.

For a diagram the goal is a subdivision whose cells inside the region
under the boundary are exactly unit squares and half-square triangles.
A separable lifting nu(i,j) = A(i) + B(j) with strictly convex partial
sums achieves this; if a caller-supplied variant does not, a target
subdivision is built combinatorially and certified by a small exact
linear program that recovers admissible heights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

from .errors import (
    BadSequenceError,
    DegenerateHullError,
    DegenerateInputError,
    InternalCheckError,
    NotCoprimeError,
    RegularityCertificationError,
    check,
)
from .lattice import (
    ConvexPolygon,
    LatticePoint,
    clip_segment_to_convex,
    convex_hull,
    cross,
    lattice_length,
    on_segment,
)
from .newton import NewtonDiagram, StaircaseDecomposition, decompose_diagram
from .parsing import LiftedSupport
from .simplex import simplex_max

Plane = tuple[Fraction, Fraction, Fraction]


def _det3(u, v, w):
    return (u[0] * (v[1] * w[2] - v[2] * w[1])
            - u[1] * (v[0] * w[2] - v[2] * w[0])
            + u[2] * (v[0] * w[1] - v[1] * w[0]))


@dataclass(frozen=True)
class Cell:
    """One facet of the lower hull, projected to the plane.

    ``tight`` holds every support point on the facet, including points
    interior to edges; ``polygon`` keeps only the corners.
    """

    polygon: ConvexPolygon
    plane: Plane
    tight: tuple[LatticePoint, ...]

    @property
    def gradient(self) -> tuple[Fraction, Fraction]:
        return (self.plane[0], self.plane[1])

    @property
    def kind(self) -> str:
        v = self.polygon.vertices
        if len(v) == 3:
            return "half_triangle" if self.polygon.area2 == 1 else "triangle"
        if len(v) == 4:
            lo = min(v)
            unit = {lo, (lo.i + 1, lo.j), (lo.i + 1, lo.j + 1), (lo.i, lo.j + 1)}
            return "square" if set(v) == unit else "quad"
        return "other"


class SubdivisionEdge(NamedTuple):
    a: LatticePoint
    b: LatticePoint
    cell_ids: tuple[int, ...]


@dataclass(frozen=True)
class RegularSubdivision:
    lifting: LiftedSupport
    domain: ConvexPolygon
    cells: tuple[Cell, ...]
    interior_edges: tuple[SubdivisionEdge, ...]
    boundary_edges: tuple[SubdivisionEdge, ...]
    vertices: tuple[LatticePoint, ...]

    def cell_neighbors(self, cid: int) -> tuple[int, ...]:
        out = []
        for e in self.interior_edges:
            if cid in e.cell_ids:
                out.append(e.cell_ids[0] if e.cell_ids[1] == cid else e.cell_ids[1])
        return tuple(out)

    def boundary_vertex_count(self) -> int:
        return sum(1 for v in self.vertices if self.domain.locate(v) == "boundary")


def _lower_chain_edge(pts3, a, b):
    """First edge of the 2d lower hull of the lifted points on segment ab."""
    d = (b.i - a.i, b.j - a.j)
    on_line = [(p3[0] * d[0] + p3[1] * d[1], p3[2], pt)
               for pt, p3 in pts3.items()
               if cross(a, b, pt) == 0 and on_segment(pt, a, b)]
    on_line.sort()
    chain: list = []
    for t, z, pt in on_line:
        while len(chain) >= 2 and (
                (chain[-1][0] - chain[-2][0]) * (z - chain[-2][1])
                - (chain[-1][1] - chain[-2][1]) * (t - chain[-2][0])) <= 0:
            chain.pop()
        chain.append((t, z, pt))
    check(len(chain) >= 2, "seed edge has no lifted chain")
    return chain[0][2], chain[1][2]


def lower_hull_subdivision(lifting: Union[LiftedSupport, Mapping]) -> RegularSubdivision:
    """Exact regular subdivision induced by the lifting's lower hull."""
    if not isinstance(lifting, LiftedSupport):
        lifting = LiftedSupport.from_mapping(lifting)
    heights = lifting.as_dict()
    pts = list(heights)
    if len(pts) < 3:
        raise DegenerateInputError("need at least 3 support points")
    try:
        domain = convex_hull(pts)
    except DegenerateHullError:
        raise DegenerateInputError("support points are collinear") from None

    scale = lcm(*[h.denominator for h in heights.values()])
    pts3 = {pt: (pt.i, pt.j, int(heights[pt] * scale)) for pt in pts}

    facets: dict[Plane, tuple[LatticePoint, ...]] = {}
    claimed: set[tuple[LatticePoint, LatticePoint]] = set()
    queue = [_lower_chain_edge(pts3, domain.vertices[0], domain.vertices[1])]

    while queue:
        a, b = queue.pop()
        if (a, b) in claimed:
            continue
        a3, b3 = pts3[a], pts3[b]
        ab = (b3[0] - a3[0], b3[1] - a3[1], b3[2] - a3[2])
        candidates = [pt for pt in pts if cross(a, b, pt) > 0]
        if not candidates:
            continue  # domain boundary on this side
        best = candidates[0]
        for c in candidates[1:]:
            c3 = pts3[c]
            w3 = pts3[best]
            if _det3(ab, (w3[0] - a3[0], w3[1] - a3[1], w3[2] - a3[2]),
                     (c3[0] - a3[0], c3[1] - a3[1], c3[2] - a3[2])) < 0:
                best = c
        w3 = pts3[best]
        u = (w3[0] - a3[0], w3[1] - a3[1], w3[2] - a3[2])
        normal = (ab[1] * u[2] - ab[2] * u[1],
                  ab[2] * u[0] - ab[0] * u[2],
                  ab[0] * u[1] - ab[1] * u[0])
        check(normal[2] > 0, "facet normal must point up")
        level = normal[0] * a3[0] + normal[1] * a3[1] + normal[2] * a3[2]
        tight = []
        for pt, p3 in pts3.items():
            value = normal[0] * p3[0] + normal[1] * p3[1] + normal[2] * p3[2]
            check(value >= level, "wrap produced a non-supporting plane")
            if value == level:
                tight.append(pt)
        plane = (Fraction(-normal[0], normal[2] * scale),
                 Fraction(-normal[1], normal[2] * scale),
                 Fraction(level, normal[2] * scale))
        if plane in facets:
            continue
        poly = convex_hull(tight)
        facets[plane] = tuple(sorted(tight))
        edge_list = list(poly.edges())
        check(any(e == (a, b) for e in edge_list), "wrap edge is not a facet edge")
        for u_, v_ in edge_list:
            claimed.add((u_, v_))
            if (v_, u_) not in claimed:
                queue.append((v_, u_))

    cells = sorted(
        (Cell(convex_hull(tight), plane, tight) for plane, tight in facets.items()),
        key=lambda c: c.polygon.vertices)
    return _assemble(lifting, domain, tuple(cells))


def _assemble(lifting, domain, cells) -> RegularSubdivision:
    check(sum(c.polygon.area2 for c in cells) == domain.area2,
          "cells do not tile the support hull")
    incidence: dict[tuple[LatticePoint, LatticePoint], list[int]] = {}
    for cid, cell in enumerate(cells):
        for a, b in cell.polygon.edges():
            key = (a, b) if a < b else (b, a)
            incidence.setdefault(key, []).append(cid)
    interior = []
    boundary = []
    for (a, b), ids in sorted(incidence.items()):
        mid = (Fraction(a.i + b.i, 2), Fraction(a.j + b.j, 2))
        on_rim = domain.locate(mid) == "boundary"
        if on_rim:
            check(len(ids) == 1, f"rim edge {a}-{b} shared by {len(ids)} cells")
            boundary.append(SubdivisionEdge(a, b, tuple(ids)))
        else:
            check(len(ids) == 2, f"inner edge {a}-{b} met {len(ids)} times")
            interior.append(SubdivisionEdge(a, b, tuple(sorted(ids))))
    corners = sorted({v for c in cells for v in c.polygon.vertices})
    return RegularSubdivision(lifting, domain, cells, tuple(interior),
                              tuple(boundary), tuple(corners))


# --- liftings ---------------------------------------------------------------

def separable_lifting(diagram_or_points, a: Sequence[int] | None = None,
                      b: Sequence[int] | None = None) -> LiftedSupport:
    """nu(i, j) = (a_0 + ... + a_i) + (b_0 + ... + b_j).

    Strictly increasing increment sequences make the lifting strictly
    convex along each axis, which is what forces every unit square whose
    corners are all in the domain to appear as a cell.  Default
    increments 0, 1, 2, ... give nu = i(i+1)/2 + j(j+1)/2.
    """
    if isinstance(diagram_or_points, NewtonDiagram):
        points = diagram_or_points.gamma_minus_lattice
    else:
        points = tuple(LatticePoint(int(p[0]), int(p[1])) for p in diagram_or_points)
    need_i = max(pt.i for pt in points)
    need_j = max(pt.j for pt in points)

    def prefix(seq, need, name):
        if seq is None:
            seq = range(need + 1)
        seq = [Fraction(v) for v in seq]
        if len(seq) < need + 1:
            raise BadSequenceError(f"{name} needs at least {need + 1} increments")
        for u, v in zip(seq, seq[1:]):
            if v <= u:
                raise BadSequenceError(f"{name} increments must strictly increase")
        out = []
        total = Fraction(0)
        for v in seq[:need + 1]:
            total += v
            out.append(total)
        return out

    sa = prefix(a, need_i, "a")
    sb = prefix(b, need_j, "b")
    return LiftedSupport.from_mapping({pt: sa[pt.i] + sb[pt.j] for pt in points})


# --- classification against a region ----------------------------------------

def _region_edge_cuts(poly: ConvexPolygon, region) -> bool:
    for a, b in region.edges():
        clipped = clip_segment_to_convex(a, b, poly)
        if clipped is None:
            continue
        t0, t1 = clipped
        if t1 <= t0:
            continue
        tm = (t0 + t1) / 2
        mid = (a.i + tm * (b.i - a.i), a.j + tm * (b.j - a.j))
        if poly.locate(mid) == "inside":
            return True
    return False


def classify_cells_by_region(sd: RegularSubdivision, region) -> tuple[tuple[int, ...], bool]:
    """Cells lying inside the region, plus whether they tile it exactly.

    The region may be non-convex; a cell counts as inside when all its
    corners and an interior point are in the region and no region edge
    passes through its interior.  The area comparison then decides
    whether the inside cells cover the region with nothing left over.
    """
    inside = []
    for cid, cell in enumerate(sd.cells):
        poly = cell.polygon
        if any(region.locate(v) == "outside" for v in poly.vertices):
            continue
        if region.locate(poly.interior_point()) == "outside":
            continue
        if _region_edge_cuts(poly, region):
            continue
        inside.append(cid)
    area = sum(sd.cells[c].polygon.area2 for c in inside)
    return tuple(inside), area == region.area2


# --- combinatorial target for the fallback ----------------------------------

def _column_heights(p: int, q: int) -> list[int]:
    """Top of the stack of contained unit squares per column of the
    primitive right triangle with legs p, q."""
    return [(q * (p - 1 - a)) // p for a in range(p)]


def triangle_square_count(p: int, q: int) -> int:
    """Unit grid squares contained in the triangle (0,0), (p,0), (0,q),
    counted by direct containment tests."""
    if p < 1 or q < 1 or lattice_length((0, 0), (p, q)) != 1:
        raise NotCoprimeError(f"legs must be positive and coprime, got ({p}, {q})")
    count = 0
    for a in range(p):
        for bb in range(q):
            if q * (a + 1) + p * (bb + 1) <= p * q:
                count += 1
    return count


def crossed_square_count(p: int, q: int) -> int:
    """Unit grid squares whose interior meets the open segment from
    (0, q) to (p, 0)."""
    if p < 1 or q < 1 or lattice_length((0, 0), (p, q)) != 1:
        raise NotCoprimeError(f"legs must be positive and coprime, got ({p}, {q})")
    count = 0
    for a in range(p):
        for bb in range(q):
            lo = q * a + p * bb
            if lo < p * q < lo + p + q:
                count += 1
    return count


def _in_closed_triangle(v, a, b, c) -> bool:
    return cross(a, b, v) >= 0 and cross(b, c, v) >= 0 and cross(c, a, v) >= 0


def _ear_clip(ring: Sequence[LatticePoint]) -> list[tuple[LatticePoint, ...]]:
    """Triangulate a simple ccw polygon using exactly its listed vertices.

    Collinear vertices are kept: they mark points that neighboring cells
    use, so no ear may swallow one, even on its boundary.  When every
    convex corner is blocked, the polygon is split along a diagonal to
    the blocking vertex farthest from the corner's base line.
    """
    verts = list(ring)
    if len(verts) == 3:
        check(cross(*verts) > 0, "degenerate triangle ring")
        return [tuple(verts)]
    n = len(verts)
    for k in range(n):
        a, b, c = verts[k - 1], verts[k], verts[(k + 1) % n]
        if cross(a, b, c) <= 0:
            continue
        if any(v not in (a, b, c) and _in_closed_triangle(v, a, b, c)
               for v in verts):
            continue
        return [(a, b, c)] + _ear_clip(verts[:k] + verts[k + 1:])
    for k in range(n):
        a, b, c = verts[k - 1], verts[k], verts[(k + 1) % n]
        if cross(a, b, c) <= 0:
            continue
        blockers = [v for v in verts
                    if v not in (a, b, c) and _in_closed_triangle(v, a, b, c)]
        check(bool(blockers), "blocked corner without blockers")
        u = min(blockers, key=lambda v: (cross(a, c, v),
                                         (v.i - b.i) ** 2 + (v.j - b.j) ** 2))
        i1, i2 = sorted((k, verts.index(u)))
        left = verts[i1:i2 + 1]
        right = verts[i2:] + verts[:i1 + 1]
        return _ear_clip(left) + _ear_clip(right)
    raise InternalCheckError("ring has no convex corner")


def _band_cells(corner: LatticePoint, p: int, q: int) -> list[tuple[LatticePoint, ...]]:
    """Unimodular triangles covering the strip triangle minus its squares."""
    heights = _column_heights(p, q) + [0]
    ring = [LatticePoint(0, q)]
    ring.extend(LatticePoint(0, y) for y in range(q - 1, heights[0] - 1, -1))
    for x in range(p):
        ring.append(LatticePoint(x + 1, heights[x]))
        ring.extend(LatticePoint(x + 1, y)
                    for y in range(heights[x] - 1, heights[x + 1] - 1, -1))
    tris = _ear_clip(ring)
    out = []
    for t in tris:
        check(cross(*t) == 1, "band triangle is not unimodular")
        out.append(tuple(LatticePoint(corner.i + v.i, corner.j + v.j) for v in t))
    return out


def special_target_cells(nd: NewtonDiagram) -> list[tuple[LatticePoint, ...]]:
    """Cell list (vertex rings, ccw) of the intended subdivision of the
    whole support hull: all contained unit squares, unimodular triangles
    filling the rest of the region under the boundary, and fan triangles
    over the pockets between the boundary and its chord."""
    cells: list[tuple[LatticePoint, ...]] = []
    squares = 0
    for pt in nd.gamma_minus_lattice:
        if pt.i >= 1 and pt.j >= 1:
            cells.append((LatticePoint(pt.i - 1, pt.j - 1), LatticePoint(pt.i, pt.j - 1),
                          pt, LatticePoint(pt.i - 1, pt.j)))
            squares += 1
    dec = decompose_diagram(nd)
    check(squares == dec.square_count, "square census mismatch")

    g = nd.gamma_lattice
    for a, b in zip(g, g[1:]):
        cells.extend(_band_cells(LatticePoint(a.i, b.j), b.i - a.i, a.j - b.j))

    if len(nd.gamma_vertices) > 2:
        # pocket between the boundary chain and its chord; every chain
        # lattice point stays a corner so edges match the band cells
        cells.extend(_ear_clip(list(g)))
    return cells


def _affine_coefficients(w, v0, v1, v2) -> tuple[Fraction, Fraction, Fraction]:
    d = cross(v0, v1, v2)
    a = Fraction(cross(v0, w, v2), d)
    b = Fraction(cross(v0, v1, w), d)
    return (1 - a - b, a, b)


def certify_heights(points: Sequence[LatticePoint],
                    cells: Sequence[tuple[LatticePoint, ...]]) -> dict[LatticePoint, Fraction]:
    """Heights whose lower hull realizes exactly the given cell tiling.

    Requires a tiling that contains the unit square below-left of every
    point with both coordinates positive, as the special target does.
    Those squares' flatness conditions chain down to the axes and force
    any admissible height function to split as h(i, j) = A_i + B_j, so
    the search runs over the two axis sequences only.  An exact simplex
    run maximizes the least fold across interior edges; a positive
    optimum certifies the tiling as a regular subdivision and the
    returned heights witness it.
    """
    pts = sorted(set(points))
    top_right = set()
    for ring in cells:
        if len(ring) == 4:
            lo = min(ring)
            check(set(ring) == {lo, (lo.i + 1, lo.j), (lo.i + 1, lo.j + 1),
                                (lo.i, lo.j + 1)},
                  "4-gon target cell is not a unit square")
            top_right.add(LatticePoint(lo.i + 1, lo.j + 1))
    check(all(pt in top_right for pt in pts if pt.i >= 1 and pt.j >= 1),
          "tiling does not pin a square to every inner point")

    max_i = max(pt.i for pt in pts)
    max_j = max(pt.j for pt in pts)
    n_ab = max_i + max_j
    s_col = n_ab

    def acol(i):
        return i - 1

    def bcol(j):
        return max_i + j - 1

    edge_cells: dict[tuple, list[int]] = {}
    for cid, ring in enumerate(cells):
        m = len(ring)
        for k in range(m):
            a, b = ring[k], ring[(k + 1) % m]
            key = (a, b) if a < b else (b, a)
            edge_cells.setdefault(key, []).append(cid)

    shared = []
    for key, ids in sorted(edge_cells.items()):
        if len(ids) == 2:
            shared.append((key, ids))
        else:
            check(len(ids) == 1, f"edge {key} in {len(ids)} cells")

    n_cols = n_ab + 1 + len(shared) + 1  # A,B then s, surpluses, cap slack
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []

    def add_point(row, pt, f):
        if pt.i >= 1:
            row[acol(pt.i)] += f
        if pt.j >= 1:
            row[bcol(pt.j)] += f

    # fold across each shared edge, written with the off-vertex negated
    # so the surplus column starts basic at zero
    for k, (key, ids) in enumerate(shared):
        base = cells[ids[0]][:3]
        off = next(v for v in cells[ids[1]] if cross(key[0], key[1], v) != 0)
        lam = _affine_coefficients(off, *base)
        row = [Fraction(0)] * n_cols
        add_point(row, off, Fraction(-1))
        for v, l in zip(base, lam):
            add_point(row, v, l)
        row[s_col] = Fraction(1)
        row[n_ab + 1 + k] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(0))
    cap = [Fraction(0)] * n_cols
    cap[s_col] = Fraction(1)
    cap[-1] = Fraction(1)
    rows.append(cap)
    rhs.append(Fraction(1))

    costs = [(Fraction(0), Fraction(0))] * n_cols
    costs[s_col] = (Fraction(0), Fraction(1))
    basis = list(range(n_ab + 1, n_cols))
    x, _ = simplex_max(rows, rhs, costs, basis=basis)
    if x[s_col] <= 0:
        raise RegularityCertificationError(
            "target tiling is not a regular subdivision: best fold is zero",
            {"cells": len(cells), "edges": len(shared)})
    return {pt: (x[acol(pt.i)] if pt.i else Fraction(0))
            + (x[bcol(pt.j)] if pt.j else Fraction(0)) for pt in pts}


# --- the special subdivision of a diagram -----------------------------------

@dataclass(frozen=True)
class SubdividedDiagram:
    diagram: NewtonDiagram
    decomposition: StaircaseDecomposition
    subdivision: RegularSubdivision
    inside_cells: tuple[int, ...]
    used_fallback: bool

    @property
    def lifting(self) -> LiftedSupport:
        return self.subdivision.lifting

    def inside_kinds(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for cid in self.inside_cells:
            k = self.subdivision.cells[cid].kind
            out[k] = out.get(k, 0) + 1
        return out

    @property
    def square_cell_ids(self) -> tuple[int, ...]:
        return tuple(c for c in self.inside_cells
                     if self.subdivision.cells[c].kind == "square")

    @property
    def touching_square_count(self) -> int:
        nd = self.diagram
        return sum(1 for c in self.square_cell_ids
                   if any(nd.on_gamma(v)
                          for v in self.subdivision.cells[c].polygon.vertices))


def _inside_ok(sd: RegularSubdivision, inside, clean) -> bool:
    return clean and all(sd.cells[c].kind in ("square", "half_triangle")
                         for c in inside)


def subdivide_diagram(nd: NewtonDiagram, a: Sequence[int] | None = None,
                      b: Sequence[int] | None = None) -> SubdividedDiagram:
    """Special subdivision of the region under the Newton boundary.

    Tries the separable lifting first; if its restriction to the region
    is not made of unit squares and half-square triangles, falls back to
    the combinatorial target certified through the linear program.
    """
    lifting = separable_lifting(nd, a, b)
    sd = lower_hull_subdivision(lifting)
    region = nd.gamma_minus
    inside, clean = classify_cells_by_region(sd, region)
    used_fallback = False
    if not _inside_ok(sd, inside, clean):
        target = special_target_cells(nd)
        heights = certify_heights(nd.gamma_minus_lattice, target)
        sd = lower_hull_subdivision(LiftedSupport.from_mapping(heights))
        inside, clean = classify_cells_by_region(sd, region)
        check(_inside_ok(sd, inside, clean), "certified fallback still off target")
        used_fallback = True

    dec = decompose_diagram(nd)
    result = SubdividedDiagram(nd, dec, sd, inside, used_fallback)
    check(len(result.square_cell_ids) == dec.square_count,
          "inside squares disagree with the decomposition count")
    check(result.touching_square_count == dec.touching_count,
          "touching squares disagree with interior boundary points")
    return result
