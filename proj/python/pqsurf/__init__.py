"""Exact invariants, cohomology and deformation bookkeeping for cyclic
product-quotient surfaces.

Everything is computed in exact rational arithmetic; reports come back as
plain dicts matching the JSON emitted by the ``pqsurf`` command line tool.
"""

from ._core import (
    PqsurfError,
    bidouble,
    builtin_scenarios,
    ci_def_dim,
    eigendims,
    epsilon,
    genus,
    hj_evaluate,
    hj_expand,
    invariants,
    natdef,
    pardini,
    partial_smoothing,
    relations,
    resolve,
    resolve_scenario,
    scenario,
    smooth_check,
    tangent,
    verify_paper,
)

__all__ = [
    "PqsurfError",
    "bidouble",
    "builtin_scenarios",
    "ci_def_dim",
    "eigendims",
    "epsilon",
    "genus",
    "hj_evaluate",
    "hj_expand",
    "invariants",
    "natdef",
    "pardini",
    "partial_smoothing",
    "relations",
    "resolve",
    "resolve_scenario",
    "scenario",
    "smooth_check",
    "tangent",
    "verify_paper",
]
