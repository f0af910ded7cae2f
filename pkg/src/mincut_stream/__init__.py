"""Incremental minimum-cut maintenance under edge insertions.

Four maintenance modes: exact, exact clamped at k, multi-sample (1+eps),
and single-sample space-efficient (1+eps), plus the static oracles and
supporting structures they are verified against.
"""

from .graph_core import (
    ContractionMap,
    DegreeHeap,
    EmptySideError,
    IncompletePartitionError,
    Multigraph,
    SelfLoopError,
)
from .oracle import CutFamily, TooLargeError, enumerate_min_cuts, local_connectivity, static_min_cut


def __getattr__(name):
    # the maintenance modes import lazily so that plain oracle use stays light
    if name in ("ExactMinCut", "LimitedMinCut", "MultiSampleMinCut", "SingleSampleMinCut"):
        from . import approx, exact_inc, limited_exact

        return {
            "ExactMinCut": exact_inc.ExactMinCut,
            "LimitedMinCut": limited_exact.LimitedMinCut,
            "MultiSampleMinCut": approx.MultiSampleMinCut,
            "SingleSampleMinCut": approx.SingleSampleMinCut,
        }[name]
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = [
    "ContractionMap",
    "CutFamily",
    "DegreeHeap",
    "EmptySideError",
    "ExactMinCut",
    "IncompletePartitionError",
    "LimitedMinCut",
    "Multigraph",
    "MultiSampleMinCut",
    "SelfLoopError",
    "SingleSampleMinCut",
    "TooLargeError",
    "enumerate_min_cuts",
    "local_connectivity",
    "static_min_cut",
]
