"""Newton boundary extraction and the numeric invariants derived from it.

Expected values for the three running germs were computed by hand from
the definitions (boundary chain, Pick's theorem, Milnor's formula) and
are frozen here.
"""

import random

import pytest

from tropnewton.errors import (
    NotConvenientError,
    NotSingularAtOriginError,
    ParityViolationError,
)
from tropnewton.lattice import LatticePoint, cross
from tropnewton.newton import (
    analyze_support,
    decompose_diagram,
    delta_invariant,
    milnor_number,
)
from tropnewton.parsing import parse_germ

QUINTIC = parse_germ("x^5+x^2*y^2+y^5").points
CUSP = parse_germ("x^2+y^3").points
NODE = parse_germ("x^2+y^2").points


def test_quintic_boundary():
    nd = analyze_support(QUINTIC)
    assert (nd.p, nd.q) == (5, 5)
    assert nd.gamma_vertices == ((0, 5), (2, 2), (5, 0))
    assert nd.gamma_lattice == ((0, 5), (2, 2), (5, 0))
    assert nd.branch_count == 2
    assert nd.primitive_steps == ((2, 3), (3, 2))
    assert nd.gamma_minus.area2 == 20
    assert nd.interior_lattice_count == 5


def test_cusp_boundary():
    nd = analyze_support(CUSP)
    assert (nd.p, nd.q) == (2, 3)
    assert nd.gamma_vertices == ((0, 3), (2, 0))
    assert nd.gamma_lattice == ((0, 3), (2, 0))
    assert nd.branch_count == 1
    assert nd.interior_lattice_count == 1


def test_node_boundary_has_midpoint():
    nd = analyze_support(NODE)
    assert nd.gamma_vertices == ((0, 2), (2, 0))
    assert nd.gamma_lattice == ((0, 2), (1, 1), (2, 0))
    assert nd.branch_count == 2
    assert nd.interior_lattice_count == 0


def test_shadowed_points_do_not_bend_the_boundary():
    # (1,2) lies above the segment from (0,3) to (2,0); axis points beyond
    # the intercepts and interior bulk points are shadowed too
    nd = analyze_support([(0, 3), (2, 0), (5, 0), (0, 7), (3, 3), (1, 2)])
    assert (nd.p, nd.q) == (2, 3)
    assert nd.gamma_vertices == ((0, 3), (2, 0))
    nd2 = analyze_support([(0, 3), (1, 1), (2, 0), (5, 0), (0, 7), (3, 3)])
    assert nd2.gamma_vertices == ((0, 3), (1, 1), (2, 0))


def test_collinear_support_point_is_lattice_not_vertex():
    nd = analyze_support([(0, 4), (2, 2), (4, 0)])
    assert nd.gamma_vertices == ((0, 4), (4, 0))
    assert nd.gamma_lattice == ((0, 4), (1, 3), (2, 2), (3, 1), (4, 0))
    assert nd.branch_count == 4


def test_rejects_units_and_smooth_germs():
    for pts in [[(0, 0), (2, 0), (0, 2)], [(1, 0), (0, 2)], [(0, 1), (2, 0)]]:
        with pytest.raises(NotSingularAtOriginError):
            analyze_support(pts)


def test_rejects_non_convenient():
    with pytest.raises(NotConvenientError):
        analyze_support([(2, 0), (1, 1)])
    with pytest.raises(NotConvenientError):
        analyze_support([(2, 1), (1, 2)])


def test_on_gamma():
    nd = analyze_support(QUINTIC)
    assert nd.on_gamma((2, 2))
    assert nd.on_gamma((0, 5))
    assert not nd.on_gamma((1, 1))
    assert not nd.on_gamma((1, 4))  # strictly above the first edge


def test_quintic_decomposition():
    dec = decompose_diagram(analyze_support(QUINTIC))
    assert dec.triangle_squares == 2
    assert dec.staircase_squares == 4
    assert dec.square_count == 6
    assert dec.touching_count == 1
    assert dec.staircase.area2 == 8
    corners = {t[0] for t in dec.triangles}
    assert corners == {(0, 2), (2, 0)}


def test_cusp_decomposition():
    dec = decompose_diagram(analyze_support(CUSP))
    assert dec.square_count == 1
    assert dec.staircase is None
    assert dec.touching_count == 0


def test_node_decomposition():
    dec = decompose_diagram(analyze_support(NODE))
    assert (dec.triangle_squares, dec.staircase_squares) == (0, 1)
    assert dec.touching_count == 1


def test_milnor_numbers():
    assert milnor_number(analyze_support(QUINTIC)) == 11
    assert milnor_number(analyze_support(CUSP)) == 2
    assert milnor_number(analyze_support(NODE)) == 1
    # ordinary m-fold point: mu = (m-1)^2
    for m in range(2, 8):
        nd = analyze_support([(m, 0), (0, m)])
        assert milnor_number(nd) == (m - 1) ** 2
    # A_k chain: x^2 + y^(k+1)
    for k in range(1, 9):
        assert milnor_number(analyze_support([(2, 0), (0, k + 1)])) == k


def test_delta_invariant():
    assert delta_invariant(11, 2) == 6
    assert delta_invariant(2, 1) == 1
    assert delta_invariant(1, 2) == 1
    with pytest.raises(ParityViolationError):
        delta_invariant(2, 2)


def random_staircase(rng: random.Random, max_pq: int = 12):
    """Strictly descending support chain giving a convenient singular germ."""
    p = rng.randrange(2, max_pq + 1)
    q = rng.randrange(2, max_pq + 1)
    pts = [(0, q), (p, 0)]
    k = rng.randrange(0, 4)
    xs = sorted(rng.sample(range(1, p), min(k, p - 1)))
    ys = sorted(rng.sample(range(1, q), min(len(xs), q - 1)), reverse=True)
    pts.extend(zip(xs, ys))
    return pts


def test_random_staircases_yield_valid_boundaries():
    rng = random.Random(20260814)
    for _ in range(300):
        nd = analyze_support(random_staircase(rng))
        # boundary is convex with strictly negative slopes
        for (a, b), (c, d) in zip(nd.gamma_edges, nd.gamma_edges[1:]):
            assert cross(a, b, d) > 0
        for a, b in nd.gamma_edges:
            assert b.i > a.i and b.j < a.j
        # support never dips strictly inside the region under the boundary
        poly = nd.gamma_minus
        for pt in nd.support:
            assert poly.locate(pt) != "inside"
        for pt in nd.gamma_lattice:
            assert poly.locate(pt) == "boundary"
            assert nd.on_gamma(pt)
        # Milnor number is consistent both ways (checked internally) and odd
        # iff branch parity says so
        mu = milnor_number(nd)
        delta = delta_invariant(mu, nd.branch_count)
        assert delta >= 0
        dec = decompose_diagram(nd)
        area_from_parts = 2 * dec.staircase_squares + sum(
            pi * qi for pi, qi in nd.primitive_steps)
        assert area_from_parts == poly.area2


def test_support_points_strictly_inside_region_are_allowed():
    nd = analyze_support([(0, 3), (2, 0), (1, 1)])
    assert nd.gamma_vertices == ((0, 3), (1, 1), (2, 0))
    nd2 = analyze_support([(0, 5), (2, 2), (5, 0), (2, 1)])
    assert nd2.gamma_vertices == ((0, 5), (2, 1), (5, 0))
