"""Exact, exhaustive checks of intersection bounds for set families and
integer sequences."""

from .rational import Rational, format_rational, parse_rational, rat_arith, rat_make
from .setfam import (
    SetFamily,
    frankl_family,
    is_cross_t_intersecting,
    is_t_intersecting,
    katona_family,
    measure,
    power_set,
    principal_family,
    t_dual,
    up_closure,
)
from .seqfam import (
    SeqFamily,
    correlation_check,
    is_cross_t_intersecting_seq,
    is_cross_tvec_intersecting,
    is_p_complete,
    meet,
    p_complete_closure,
    seq_dual,
    symbol_count,
)
from .shift import (
    ShiftSpec,
    StabilizationTrace,
    check_layer_sandwich,
    is_stable,
    min_member_size,
    shift_AB,
    stabilize_pair,
)

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "format_rational",
    "parse_rational",
    "rat_arith",
    "rat_make",
    "SetFamily",
    "frankl_family",
    "is_cross_t_intersecting",
    "is_t_intersecting",
    "katona_family",
    "measure",
    "power_set",
    "principal_family",
    "t_dual",
    "up_closure",
    "SeqFamily",
    "correlation_check",
    "is_cross_t_intersecting_seq",
    "is_cross_tvec_intersecting",
    "is_p_complete",
    "meet",
    "p_complete_closure",
    "seq_dual",
    "symbol_count",
    "ShiftSpec",
    "StabilizationTrace",
    "check_layer_sandwich",
    "is_stable",
    "min_member_size",
    "shift_AB",
    "stabilize_pair",
]
