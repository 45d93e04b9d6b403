"""Command line front end.

Subcommands: ``holes`` (face table), ``sd`` and ``md`` (solvers), ``gen``
(seeded instance generator), ``render`` (SVG).  Exit codes: 0 on success,
2 when a solver reports infeasibility, 1 on any input error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .arrangement import compute_holes
from .geometry import TrajectorySet, as_cluster, diameter
from .instances import (
    GeneratorConfig,
    InstanceError,
    dumps_instance,
    generate_instance,
    parse_instance,
    scalar_decimal,
)
from .max_diameter import bsearch, gp, kcenter_gonzalez, md_value
from .oracle import brute_opt_md, brute_opt_sd
from .render import render_svg
from .sum_diameter import md_wellsep_dp, sd_exact_goodseq, sd_wellsep_dp


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the CLI reserves 2 for
    # infeasible solver results, so usage problems are remapped to 1.
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _fmt(v: Fraction) -> str:
    return f"{v} ({scalar_decimal(v)})"


def _load(path: str) -> TrajectorySet:
    return parse_instance(Path(path).read_bytes())


def _print_clustering(S: TrajectorySet, clustering) -> None:
    for i, C in enumerate(clustering):
        d = diameter(S, C)
        print(f"cluster {i}: {sorted(C)} diameter = {_fmt(d)}")


def _cmd_holes(args) -> int:
    S = _load(args.file)
    holes = compute_holes(S)
    print(f"{len(holes)} holes")
    for h in holes:
        left = "{" + ", ".join(str(i) for i in sorted(h.left_set)) + "}"
        print(f"left={left} t=({h.t_lo}, {h.t_hi}) {h.kind}")
    return 0


def _cmd_sd(args) -> int:
    S = _load(args.file)
    solver = {
        "exact": sd_exact_goodseq,
        "wellsep": sd_wellsep_dp,
        "brute": brute_opt_sd,
    }[args.solver]
    sol = solver(S, args.k)
    if not sol.feasible:
        print("infeasible: no chain of nested separators is long enough", file=sys.stderr)
        return 2
    _print_clustering(S, sol.clustering)
    print(f"clusters: {len(sol.clustering)}")
    print(f"sum of diameters = {_fmt(sol.value)}")
    return 0


def _cmd_md(args) -> int:
    S = _load(args.file)
    if args.solver == "gp":
        clustering = gp(S, args.threshold)
        _print_clustering(S, clustering)
        print(f"clusters: {len(clustering)}")
        print(f"max diameter = {_fmt(md_value(S, clustering))}")
        return 0
    if args.solver == "bsearch":
        sol = bsearch(S, args.k, args.eps)
    elif args.solver == "kcenter":
        centers, clustering = kcenter_gonzalez(S, args.k)
        _print_clustering(S, clustering)
        print(f"centers: {list(centers.centers)}")
        print(f"max diameter = {_fmt(md_value(S, clustering))}")
        return 0
    elif args.solver == "wellsep":
        sol = md_wellsep_dp(S, args.k)
    else:
        sol = brute_opt_md(S, args.k)
    if not sol.feasible:
        print("infeasible: no chain of nested separators is long enough", file=sys.stderr)
        return 2
    _print_clustering(S, sol.clustering)
    print(f"clusters: {len(sol.clustering)}")
    print(f"max diameter = {_fmt(sol.value)}")
    return 0


def _cmd_gen(args) -> int:
    cfg = GeneratorConfig(
        seed=args.seed,
        n=args.n,
        x0_range=tuple(args.x0_range),
        slope_range=tuple(args.slope_range),
        grid=args.grid,
    )
    S = generate_instance(cfg)
    Path(args.out).write_text(dumps_instance(S, name=f"seed-{args.seed}"))
    print(f"wrote {args.out}: {len(S)} trajectories")
    return 0


def _cmd_render(args) -> int:
    S = _load(args.file)
    if args.holes:
        svg = render_svg(S, overlay="holes")
    elif args.clusters:
        import json

        doc = json.loads(Path(args.clusters).read_text())
        if not isinstance(doc, dict) or "clusters" not in doc:
            raise InstanceError("clusters file must be an object with a 'clusters' list")
        clustering = [as_cluster(c, len(S)) for c in doc["clusters"]]
        svg = render_svg(S, overlay="clustering", clustering=clustering)
    else:
        svg = render_svg(S)
    Path(args.out).write_bytes(svg)
    print(f"wrote {args.out}")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="kinclust", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_holes = sub.add_parser("holes", help="print the hole table of an instance")
    p_holes.add_argument("file")
    p_holes.set_defaults(handler=_cmd_holes)

    p_sd = sub.add_parser("sd", help="minimize the sum of cluster diameters")
    p_sd.add_argument("solver", choices=["exact", "wellsep", "brute"])
    p_sd.add_argument("file")
    p_sd.add_argument("-k", type=int, required=True, help="number of clusters")
    p_sd.set_defaults(handler=_cmd_sd)

    p_md = sub.add_parser("md", help="minimize the maximum cluster diameter")
    p_md.add_argument("solver", choices=["gp", "bsearch", "kcenter", "wellsep", "brute"])
    p_md.add_argument("file")
    p_md.add_argument("-k", type=int, help="number of clusters")
    p_md.add_argument("-D", dest="threshold", help="gp growth threshold (exact decimal)")
    p_md.add_argument("--eps", default="0.05", help="bsearch precision (exact decimal)")
    p_md.set_defaults(handler=_cmd_md)

    p_gen = sub.add_parser("gen", help="generate a random instance")
    p_gen.add_argument("-n", type=int, required=True)
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--x0-range", nargs=2, default=("0", "10"), metavar=("LO", "HI"))
    p_gen.add_argument("--slope-range", nargs=2, default=("-5", "5"), metavar=("LO", "HI"))
    p_gen.add_argument("--grid", type=int, default=10)
    p_gen.add_argument("-o", "--out", required=True)
    p_gen.set_defaults(handler=_cmd_gen)

    p_render = sub.add_parser("render", help="render an instance to SVG")
    p_render.add_argument("file")
    group = p_render.add_mutually_exclusive_group()
    group.add_argument("--clusters", help="JSON file with a 'clusters' list to shade")
    group.add_argument("--holes", action="store_true", help="outline bounded holes")
    p_render.add_argument("-o", "--out", required=True)
    p_render.set_defaults(handler=_cmd_render)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        print("run 'kinclust --help' for usage", file=sys.stderr)
        return 1
    try:
        if getattr(args, "command", None) == "md":
            if args.solver == "gp" and args.threshold is None:
                raise _UsageError("md gp requires -D")
            if args.solver != "gp" and args.k is None:
                raise _UsageError(f"md {args.solver} requires -k")
        return args.handler(args)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (InstanceError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
