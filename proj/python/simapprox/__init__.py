"""Certified simultaneous translation approximants."""

from ._core import (
    Series,
    SimapproxError,
    approximate,
    certified_error,
    density_probe,
    discs_pairwise_disjoint,
    hermite_crt,
    min_pair_gap,
    separation_threshold,
    shift_argument,
    sup_bound_on_disc,
)

__all__ = [
    "Series",
    "SimapproxError",
    "approximate",
    "certified_error",
    "density_probe",
    "discs_pairwise_disjoint",
    "hermite_crt",
    "min_pair_gap",
    "separation_threshold",
    "shift_argument",
    "sup_bound_on_disc",
]
