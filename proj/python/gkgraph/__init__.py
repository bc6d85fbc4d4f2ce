"""Prime graph complement realizability toolkit."""

import json

from _gkgraph import (
    GkError,
    PrimeGraph,
    applicability,
    build_frobenius_module,
    complement,
    dataset_names,
    dataset_pgc,
    fixed_dim,
    induced,
    is_prime,
    is_solvable_realizable,
    k_colorable,
    monochromatic_neighbor_coloring,
    parse_graph,
    realize,
    suzgen_decide,
    triangles,
)
from _gkgraph import classify_psl213 as _classify_psl213

__all__ = [
    "GkError",
    "PrimeGraph",
    "applicability",
    "build_frobenius_module",
    "classify_psl213",
    "complement",
    "dataset_names",
    "dataset_pgc",
    "fixed_dim",
    "induced",
    "is_prime",
    "is_solvable_realizable",
    "k_colorable",
    "monochromatic_neighbor_coloring",
    "parse_graph",
    "realize",
    "suzgen_decide",
    "triangles",
]


def classify_psl213(g):
    """Classify a graph against the PSL(2,13)-solvable conditions.

    Returns a dict with keys "realizable", "condition" and, when a
    certificate exists, "X" / "labeling" / "coloring".
    """
    return json.loads(_classify_psl213(g))
