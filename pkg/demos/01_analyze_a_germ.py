"""Walk a germ through the Newton diagram and read off its invariants.

Run:  python3 demos/01_analyze_a_germ.py
"""

from tropnewton import analyze, analyze_support, decompose_diagram, parse_germ

# A two-branch singularity with a bent Newton boundary.
germ = "x^5 + x^2*y^2 + y^5"
support = parse_germ(germ).points
print(f"germ: {germ}")
print(f"support points: {[tuple(p) for p in support]}")

nd = analyze_support(support)
print(f"\nboundary runs from (0,{nd.q}) to ({nd.p},0)")
print(f"boundary corners:        {[tuple(p) for p in nd.gamma_vertices]}")
print(f"boundary lattice points: {[tuple(p) for p in nd.gamma_lattice]}")
print(f"branches: {nd.branch_count}")
print(f"lattice points under the boundary: {len(nd.gamma_minus_lattice)}")
print(f"strictly inside: {nd.interior_lattice_count}")

# The staircase decomposition counts unit squares under the boundary in
# two bookkeeping groups; both reappear later as 4-valent curve vertices.
dec = decompose_diagram(nd)
print(f"\nsquares under the boundary: {dec.square_count}")
print(f"squares touching the boundary: {dec.touching_count}")

# The one-call version of everything below and beyond:
report = analyze(support)
print(f"\nmu = {report.mu}, v = {report.v}, r = {report.r}, "
      f"delta = {report.delta}")
print(f"mu = v + r holds: {report.identity_holds}")
print(f"delta = v holds:  {report.corollary_holds}")
