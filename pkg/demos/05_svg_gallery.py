"""Render a small gallery of SVG pictures into ./out (or a given directory)."""

import sys
from pathlib import Path

from kinclust import (
    GeneratorConfig,
    TrajectorySet,
    generate_instance,
    render_svg,
    sd_exact_goodseq,
)

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("out")
out.mkdir(parents=True, exist_ok=True)

# A four-segment instance with its full-set span shaded.
quad = TrajectorySet.from_pairs(
    [("0", "6.15385"), ("2.46154", "2.46154"), ("4.92308", "1.23077"), ("8", "4.30769")]
)
(out / "span.svg").write_bytes(
    render_svg(quad, overlay="clustering", clustering=[quad.all_indices()])
)

# The same instance with every bounded hole outlined.
(out / "holes.svg").write_bytes(render_svg(quad, overlay="holes"))

# A random instance colored by its best 3-clustering for the diameter sum.
S = generate_instance(GeneratorConfig(seed=4, n=8))
sol = sd_exact_goodseq(S, 3)
(out / "clustering.svg").write_bytes(
    render_svg(S, overlay="clustering", clustering=sol.clustering)
)

for name in ("span.svg", "holes.svg", "clustering.svg"):
    print(f"wrote {out / name}")
