"""Check reports: the result record of one quantified theorem check."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .finite_linalg import Subspace


def subspace_obj(s: Subspace) -> dict:
    return {"type": "subspace", "basis": s.basis.tolist()}


def element_obj(coords) -> dict:
    if isinstance(coords, np.ndarray):
        coords = coords.tolist()
    elif hasattr(coords, "coords"):
        coords = coords.coords.tolist()
    return {"type": "element", "coords": list(coords)}


def relation(op: str, lhs, rhs=None, expect: bool = True, **context) -> dict:
    """A serialized, re-evaluable assertion; used as a failure witness.

    ``op`` is one of leq / eq / is_zero / is_lie_ideal /
    contains_nonzero_ideal / is_unit; ``expect`` is the value the theorem
    predicts.  A genuine failure re-fails when re-evaluated from this form.
    """
    rec = {"relation": {"op": op, "lhs": lhs, "rhs": rhs, "expect": bool(expect)}}
    rec.update(context)
    return rec


@dataclass
class CheckReport:
    """Outcome of one check on one algebra."""

    check_id: str
    algebra: str
    status: str  # "pass" | "fail" | "skipped"
    instances_tested: int = 0
    instances_vacuous: int = 0
    instances_skipped: int = 0
    witness: dict | None = None

    def __post_init__(self):
        assert (self.status == "fail") == (self.witness is not None)

    def to_json_obj(self) -> dict:
        return {
            "check": self.check_id,
            "algebra": self.algebra,
            "status": self.status,
            "instances": self.instances_tested,
            "vacuous": self.instances_vacuous,
            "witness": self.witness,
        }


@dataclass
class Collector:
    """Accumulates instance outcomes for one check; first failure wins."""

    check_id: str
    algebra: str
    tested: int = 0
    vacuous: int = 0
    skipped: int = 0
    witness: dict | None = field(default=None)

    def ok(self, n: int = 1) -> None:
        self.tested += n

    def vac(self, n: int = 1) -> None:
        self.vacuous += n

    def skip(self, n: int = 1) -> None:
        self.skipped += n

    def fail(self, witness: dict) -> None:
        self.tested += 1
        if self.witness is None:
            self.witness = witness

    def check(self, condition: bool, witness_factory) -> None:
        """Count one instance; record the lazily built witness on failure."""
        if condition:
            self.ok()
        else:
            self.fail(witness_factory())

    def report(self) -> CheckReport:
        return CheckReport(
            check_id=self.check_id,
            algebra=self.algebra,
            status="fail" if self.witness is not None else "pass",
            instances_tested=self.tested,
            instances_vacuous=self.vacuous,
            instances_skipped=self.skipped,
            witness=self.witness,
        )


def skipped_report(check_id: str, algebra: str, reason: str) -> CheckReport:
    rep = CheckReport(check_id=check_id, algebra=algebra, status="skipped")
    rep.reason = reason  # informational only, not part of the JSON schema
    return rep
