"""Askey-Wilson relations for Q-polynomial distance-regular graphs."""

import json

from ._core import (
    AwgraphError,
    Graph,
    family,
    fit_base_q,
    intersection_array,
    load,
    parse,
    run_cli,
    spectrum,
)

__all__ = [
    "AwgraphError",
    "Graph",
    "analyze",
    "family",
    "fit_base_q",
    "intersection_array",
    "load",
    "parse",
    "run_cli",
    "spectrum",
]


def analyze(graph, vertex=0, stage="analyze", tol=1e-8, seed=0, q_branch="canonical"):
    """Run the pipeline; returns (exit_code, reports) with one dict per attempt.

    vertex=None analyzes every vertex.
    """
    from ._core import reports

    code, docs = reports(graph, vertex, stage, tol, seed, q_branch)
    return code, [json.loads(d) for d in docs]
