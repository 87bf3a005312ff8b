"""Render figures and batch-certify a seeded corpus.

Writes two SVG files next to this script and then replays a seeded
batch of random staircase germs through the full pipeline.

Run:  python3 demos/04_figures_and_corpus.py
"""

import pathlib

from tropnewton import parse_germ, render_svg, run_corpus

here = pathlib.Path(__file__).parent

quintic = parse_germ("x^5+x^2*y^2+y^5").points
out = here / "quintic.svg"
out.write_text(render_svg(quintic))
print(f"wrote {out} (subdivision + restricted curve)")

cusp = parse_germ("x^2+y^3").points
out = here / "cusp_full.svg"
out.write_text(render_svg(cusp, region="full"))
print(f"wrote {out} (whole curve, nothing cut)")

# The same generator drives `tropnewton corpus`; a seed pins the exact
# sequence of cases, so failures replay anywhere.
result = run_corpus(seed=1, count=50, pmax=12, qmax=12)
print(f"\ncorpus: {result.passed}/{result.count} identities hold")
for support, report in result.failures:
    print(f"  FAILED on {[tuple(p) for p in support]}")
    print("\n".join("  " + n for n in report.notes))
