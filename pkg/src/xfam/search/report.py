"""Verification reports and their JSON / CSV forms."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from ..rational import format_rational

THEOREM_IDS = ("TM1", "TM2", "TM3", "TM4", "AF", "KATONA", "LE1", "LE3", "LE8", "IU")
CSV_COLUMNS = ("theorem_id", "params", "mode", "extremum", "bound", "pass", "witness", "seed")

Number = Union[int, Fraction]


class HypothesisError(ValueError):
    """Parameters fall outside the hypothesis of the checked statement."""


def _num(x: Number) -> str:
    if isinstance(x, Fraction):
        return format_rational(x)
    return str(x)


def _param(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, tuple):
        return list(v)
    return v


@dataclass
class VerificationReport:
    """Outcome of one bound check.

    ``passed`` is derived: the extremum found by the search never exceeds
    the bound.  ``regime`` is ``"conjectural"`` for parameters where the
    bound is not known to hold; such reports never count as failures.
    """

    theorem_id: str
    params: dict
    mode: str
    computed_extremum: Number
    paper_bound: Number
    witness: dict
    ties: list = field(default_factory=list)
    tie_count: int = 1
    regime: str = "proven"
    trials: Optional[int] = None
    seed: Optional[int] = None
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.theorem_id not in THEOREM_IDS:
            raise ValueError(f"unknown theorem id {self.theorem_id!r}")
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "exhaustive" and self.trials is not None:
            raise ValueError("exhaustive reports carry no trial count")

    @property
    def passed(self) -> bool:
        return self.computed_extremum <= self.paper_bound

    @property
    def attained(self) -> bool:
        return self.computed_extremum == self.paper_bound

    @property
    def failing(self) -> bool:
        """A bound violation in a regime where the bound is proven."""
        return not self.passed and self.regime == "proven"

    def to_dict(self) -> dict:
        d = {
            "theorem_id": self.theorem_id,
            "params": {k: _param(v) for k, v in self.params.items()},
            "mode": self.mode,
            "computed_extremum": _num(self.computed_extremum),
            "paper_bound": _num(self.paper_bound),
            "pass": self.passed,
            "regime": self.regime,
            "witness": self.witness,
            "tie_count": self.tie_count,
            "ties": self.ties,
            "notes": self.notes,
        }
        if self.mode == "sampled":
            d["trials"] = self.trials
            d["seed"] = self.seed
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def csv_row(self) -> list:
        params = ";".join(f"{k}={_param(v)}" for k, v in self.params.items())
        return [
            self.theorem_id,
            params,
            self.mode,
            _num(self.computed_extremum),
            _num(self.paper_bound),
            "conjectural" if self.regime == "conjectural" and not self.passed else str(self.passed).lower(),
            json.dumps(self.witness, separators=(",", ":")),
            "" if self.seed is None else self.seed,
        ]


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow(r.csv_row())
    return buf.getvalue()
