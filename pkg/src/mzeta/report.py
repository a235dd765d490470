"""Verification records shared by the identity checks and the CLI."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .hurwitz import EPS
from .summation import fsum

FIELDS = ("identity", "args", "lhs", "rhs", "abs_err", "rel_err", "tol", "passed", "detail", "checks")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of comparing an expression (``lhs``) with a reference (``rhs``).

    ``detail`` maps term labels to signed values that add up to ``lhs``;
    ``checks`` holds auxiliary inequalities that must also hold (for
    instance the two-sided bound on the smooth-approximation gap).
    """

    identity_name: str
    args: tuple[float, ...]
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    tolerance: float
    passed: bool
    detail: dict[str, float] = field(default_factory=dict)
    checks: dict[str, bool] = field(default_factory=dict)
    extras: dict[str, float] = field(default_factory=dict)

    @classmethod
    def compare(
        cls,
        name: str,
        args,
        lhs: float,
        rhs: float,
        tolerance: float,
        detail=None,
        checks=None,
        extras=None,
    ) -> "VerificationReport":
        abs_err = abs(lhs - rhs)
        rel_err = abs_err / abs(rhs) if rhs != 0.0 else math.inf
        passed = rel_err <= tolerance or (abs(rhs) < 1.0 and abs_err <= tolerance)
        return cls(
            identity_name=name,
            args=tuple(float(a) for a in args),
            lhs=float(lhs),
            rhs=float(rhs),
            abs_err=float(abs_err),
            rel_err=float(rel_err),
            tolerance=float(tolerance),
            passed=bool(passed),
            detail={k: float(v) for k, v in (detail or {}).items()},
            checks={k: bool(v) for k, v in (checks or {}).items()},
            extras={k: float(v) for k, v in (extras or {}).items()},
        )

    @classmethod
    def from_terms(cls, name, args, terms: dict[str, float], rhs, tolerance, **kw):
        """Build a report whose ``lhs`` is the compensated sum of ``terms``."""
        return cls.compare(name, args, fsum(terms.values()), rhs, tolerance, detail=terms, **kw)

    @property
    def ok(self) -> bool:
        """``passed`` and every auxiliary check."""
        return self.passed and all(self.checks.values())

    def terms_consistent(self, ulps: float = 4.0) -> bool:
        if not self.detail:
            return True
        scale = max([abs(self.lhs)] + [abs(v) for v in self.detail.values()])
        return abs(fsum(self.detail.values()) - self.lhs) <= ulps * EPS * scale

    def to_dict(self) -> dict:
        return {
            "identity": self.identity_name,
            "args": list(self.args),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "tol": self.tolerance,
            "passed": self.ok,
            "detail": dict(self.detail, **self.extras),
            "checks": dict(self.checks),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())
