"""Exhaustive and sampled checks of the intersection bounds."""

from .report import HypothesisError, VerificationReport, reports_to_csv
from .rng import SplitMix64
from .upsets import count_upsets, enumerate_upsets, upset_indicators
from .verify import (
    cross_measure_extremum,
    has_principal_witness,
    verify_af,
    verify_daykin,
    verify_katona_single,
    verify_le3_reduction,
    verify_tm1,
    verify_tm2,
    verify_tm3,
    verify_tm4,
    verify_uniform_cross,
)

__all__ = [
    "HypothesisError",
    "VerificationReport",
    "reports_to_csv",
    "SplitMix64",
    "count_upsets",
    "enumerate_upsets",
    "upset_indicators",
    "cross_measure_extremum",
    "has_principal_witness",
    "verify_af",
    "verify_daykin",
    "verify_katona_single",
    "verify_le3_reduction",
    "verify_tm1",
    "verify_tm2",
    "verify_tm3",
    "verify_tm4",
    "verify_uniform_cross",
]
