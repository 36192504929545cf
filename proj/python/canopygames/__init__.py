"""Finite-depth games on trees: dimension estimators, solvers, ball engines."""

from canopygames._core import (  # noqa: F401
    __version__,
    acceptance_keys,
    box_count,
    cantor_interval,
    cylinder_diameter,
    dim_estimate,
    mc_flipcoin,
    measure_estimate,
    metric_distance,
    packing_number,
    play_schmidt,
    run_acceptance,
    run_experiment,
    solve,
    solve_iterative,
    threshold,
    value_sandwich,
    verdict,
    verify_packing_lemma,
)

__all__ = [
    "__version__",
    "acceptance_keys",
    "box_count",
    "cantor_interval",
    "cylinder_diameter",
    "dim_estimate",
    "mc_flipcoin",
    "measure_estimate",
    "metric_distance",
    "packing_number",
    "play_schmidt",
    "run_acceptance",
    "run_experiment",
    "solve",
    "solve_iterative",
    "threshold",
    "value_sandwich",
    "verdict",
    "verify_packing_lemma",
]
