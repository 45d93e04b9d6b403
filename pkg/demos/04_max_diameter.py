"""Approximating the minimum of the maximum cluster diameter.

On a four-trajectory instance whose unique optimal 2-clustering pairs
interleaved wedges, no split sequence can reach the optimum, so this
objective is approximated: a threshold greedy inside a binary search
(factor 2.7072 + eps) and a farthest-point k-center reduction (factor
6.8285).
"""

from fractions import Fraction

from kinclust import (
    TrajectorySet,
    bsearch,
    gp,
    kcenter_gonzalez,
    md_value,
    md_wellsep_dp,
)
from kinclust.oracle import brute_opt_md

S = TrajectorySet.from_pairs(
    [("-2.4142135624", "1"), ("-0.9", "2"), ("0", "0"), ("0.1", "-0.4142135624")]
)

opt = brute_opt_md(S, 2)
print("exhaustive optimum for k=2:", float(opt.value),
      [sorted(c) for c in opt.clustering])

print("\nthreshold greedy at various D:")
for D in ("0", "0.5", "1.0000000001", "2"):
    clusters = gp(S, D)
    print(f"  D = {D:>12}: {len(clusters)} clusters, "
          f"max diameter {float(md_value(S, clusters)):.6f}")

sol = bsearch(S, 2, "0.1")
print(f"\nbinary search (eps = 0.1): value {float(sol.value):.6f} in "
      f"{sol.iterations} iterations")
a, b = sol.interval
print(f"  final interval width {float(b - a):.2e} <= delta {float(sol.delta):.2e}")
print(f"  ratio vs optimum: {float(sol.value / opt.value):.4f} "
      f"(guarantee {float(Fraction('2.7072') + Fraction('0.1')):.4f})")

centers, clustering = kcenter_gonzalez(S, 2)
print(f"\nk-center reduction: centers {list(centers.centers)}, "
      f"value {float(md_value(S, clustering)):.6f} "
      f"(ratio {float(md_value(S, clustering) / opt.value):.4f}, guarantee 6.8285)")

dp = md_wellsep_dp(S, 2)
print(f"\nbest well-separated 2-clustering: {float(dp.value):.6f} "
      f"{[sorted(c) for c in dp.clustering]}")
print("  (worse than the optimum here: the optimal pairing is not well separated)")
