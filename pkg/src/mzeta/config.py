"""Evaluation settings and the exception hierarchy."""

from __future__ import annotations

from dataclasses import dataclass, replace


class MZetaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(MZetaError, ValueError):
    """An argument lies outside the region where the function is defined."""


class AccuracyError(MZetaError, ArithmeticError):
    """The requested accuracy cannot be met within the configured limits."""


@dataclass(frozen=True)
class EvaluationConfig:
    """Knobs shared by every evaluator.

    ``rel_tol`` is the accuracy gate: an evaluation whose computed error
    bound exceeds ``rel_tol * |value|`` raises :class:`AccuracyError`
    (series and quadrature apply their own floors on top, see there).
    ``em_terms`` is the minimum number of directly summed Hurwitz terms and
    ``em_bernoulli_depth`` the largest number of Bernoulli corrections.
    ``quad_order`` is the Gauss-Legendre order per unit segment and
    ``max_segments`` caps the truncation point of ``[1, inf)``.
    """

    rel_tol: float = 1e-12
    em_terms: int = 10
    em_bernoulli_depth: int = 15
    quad_order: int = 20
    max_segments: int = 4096

    def __post_init__(self):
        if not 0.0 < self.rel_tol < 1.0:
            raise DomainError(f"rel_tol must lie in (0, 1), got {self.rel_tol!r}")
        if self.em_terms < 1:
            raise DomainError(f"em_terms must be >= 1, got {self.em_terms!r}")
        if not 1 <= self.em_bernoulli_depth <= 15:
            raise DomainError(
                f"em_bernoulli_depth must lie in [1, 15], got {self.em_bernoulli_depth!r}"
            )
        if self.quad_order < 4:
            raise DomainError(f"quad_order must be >= 4, got {self.quad_order!r}")
        if self.max_segments < 8:
            raise DomainError(f"max_segments must be >= 8, got {self.max_segments!r}")

    def with_tol(self, rel_tol: float) -> "EvaluationConfig":
        return replace(self, rel_tol=rel_tol)


DEFAULT_CONFIG = EvaluationConfig()


def resolve(cfg: EvaluationConfig | None) -> EvaluationConfig:
    return DEFAULT_CONFIG if cfg is None else cfg
