"""From a diagram to a certified regular subdivision and its polynomial.

The default lifting nu(i, j) = T(i) + T(j) (triangular numbers) already
realizes the wanted squares-and-triangles tiling for straight
boundaries.  Bent boundaries usually defeat it; the engine then solves
an exact feasibility program for new heights and re-verifies.

Run:  python3 demos/02_subdivision_and_polynomial.py
"""

from tropnewton import (
    analyze_support,
    build_patchwork,
    emit_polynomial_text,
    subdivide_diagram,
)

for label, pts in [("cusp x^2+y^3", [(2, 0), (0, 3)]),
                   ("bent staircase", [(0, 8), (5, 2), (8, 0)])]:
    nd = analyze_support(pts)
    sdd = subdivide_diagram(nd)
    print(f"{label}:")
    print(f"  cells: {len(sdd.subdivision.cells)} total, "
          f"{len(sdd.inside_cells)} under the boundary")
    print(f"  kinds under the boundary: {sdd.inside_kinds()}")
    print(f"  default lifting sufficed: {not sdd.used_fallback}")

    pp = build_patchwork(nd, sdd)
    text = emit_polynomial_text(pp)
    if len(text) > 70:
        text = text[:67] + "..."
    print(f"  polynomial: {text}\n")

# The lifting values themselves, for the cusp: each support point gets
# the exponent of t on its coefficient.
nd = analyze_support([(2, 0), (0, 3)])
pp = build_patchwork(nd)
for p in sorted(pp.support, key=lambda p: (p.i + p.j, -p.i)):
    print(f"  nu({p.i},{p.j}) = {pp.nu[p]}")
