"""Exact arithmetic for the two-loop finite-type invariant.

Thin re-export of the compiled core module.
"""

from ._core import (
    Scalar,
    SThetaElt,
    TriLaurent,
    certificate,
    circle_weight,
    cohomology,
    cyclic_lift,
    decomposition_check,
    embed,
    eval_word,
    fpoly,
    image_size,
    invariants_dim,
    parse_scalar,
    parse_trilaurent,
    rank_over_Q,
    repro_case_names,
    run_all_repro,
    run_repro,
    surgery_value,
    theta_weight,
)

__all__ = [
    "Scalar",
    "SThetaElt",
    "TriLaurent",
    "certificate",
    "circle_weight",
    "cohomology",
    "cyclic_lift",
    "decomposition_check",
    "embed",
    "eval_word",
    "fpoly",
    "image_size",
    "invariants_dim",
    "parse_scalar",
    "parse_trilaurent",
    "rank_over_Q",
    "repro_case_names",
    "run_all_repro",
    "run_repro",
    "surgery_value",
    "theta_weight",
]

__version__ = "0.1.0"
