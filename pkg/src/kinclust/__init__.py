"""Clustering of points moving on a line with constant velocity.

Each point traces a straight segment across the strip 0 <= t <= 1; a
cluster's diameter is the area of its span (the region between the
cluster's pointwise min and max positions).  The package provides exact
rational geometry for spans and arrangement holes, an exact solver and a
well-separated dynamic program for the minimum-sum-of-diameters
clustering, approximation algorithms for the minimum-maximum-diameter
clustering, and brute-force oracles for verification at small sizes.
"""

from .arrangement import (
    Hole,
    SeparatorPoset,
    build_poset,
    compute_holes,
    hole_within_span,
    is_covered,
    is_well_separated,
    separates,
    side_partition,
)
from .geometry import (
    Cluster,
    Clustering,
    Envelope,
    Scalar,
    Trajectory,
    TrajectorySet,
    as_cluster,
    as_scalar,
    bottom_leftmost,
    bottom_leftmost_index,
    canonical_key,
    diameter,
    envelope,
    normalize_clustering,
    pairwise_diameter,
)
from .instances import (
    GeneratorConfig,
    InstanceError,
    dumps_instance,
    generate_instance,
    parse_instance,
    scalar_decimal,
    scalar_literal,
)
from .max_diameter import (
    GP_FACTOR,
    CenterSet,
    MdSolution,
    bsearch,
    gp,
    kcenter_gonzalez,
    md_value,
)
from .oracle import (
    brute_opt_md,
    brute_opt_sd,
    brute_opt_wellsep,
    enumerate_partitions,
    numeric_diameter,
    stirling2,
)
from .render import render_svg
from .sum_diameter import (
    GoodSequence,
    SdSolution,
    md_wellsep_dp,
    sd_exact_goodseq,
    sd_value,
    sd_wellsep_dp,
)

__version__ = "0.1.0"

__all__ = [
    "Cluster",
    "Clustering",
    "CenterSet",
    "Envelope",
    "GeneratorConfig",
    "GoodSequence",
    "GP_FACTOR",
    "Hole",
    "InstanceError",
    "MdSolution",
    "Scalar",
    "SdSolution",
    "SeparatorPoset",
    "Trajectory",
    "TrajectorySet",
    "as_cluster",
    "as_scalar",
    "bottom_leftmost",
    "bottom_leftmost_index",
    "brute_opt_md",
    "brute_opt_sd",
    "brute_opt_wellsep",
    "bsearch",
    "build_poset",
    "canonical_key",
    "compute_holes",
    "diameter",
    "dumps_instance",
    "enumerate_partitions",
    "envelope",
    "generate_instance",
    "gp",
    "hole_within_span",
    "is_covered",
    "is_well_separated",
    "kcenter_gonzalez",
    "md_value",
    "md_wellsep_dp",
    "normalize_clustering",
    "numeric_diameter",
    "pairwise_diameter",
    "parse_instance",
    "render_svg",
    "scalar_decimal",
    "scalar_literal",
    "sd_exact_goodseq",
    "sd_value",
    "sd_wellsep_dp",
    "separates",
    "side_partition",
    "stirling2",
]
