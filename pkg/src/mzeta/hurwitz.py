"""Hurwitz zeta function for real s > 1 and alpha > 0.

Values come from Euler-Maclaurin summation::

    zeta(s, a) = sum_{n < M} (n + a)^-s
                 + x^(1-s)/(s-1) + x^-s/2
                 + sum_{k=1..K} B_2k/(2k)! * s(s+1)...(s+2k-2) * x^(-s-2k+1)
                 + R,                                       x = a + M

For real s > 1 the summand is completely monotone, so ``|R|`` is bounded by
the first omitted Bernoulli term.  ``M`` is chosen per point so that ``x``
reaches a common threshold ``X``; ``X`` and ``K`` are picked once per ``s``
so that the remainder sits below a quarter of an ulp of the leading term.
Because ``x`` is the same for ``a`` and ``a + 1`` the shift identity
``zeta(s, a) - a^-s = zeta(s, a + 1)`` holds to rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .config import AccuracyError, DomainError, EvaluationConfig, resolve
from .summation import neumaier_rows

EPS = float(np.finfo(float).eps)

# B_2, B_4, ..., B_32.  The last entry only feeds the remainder bound.
BERNOULLI = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
    Fraction(854513, 138),
    Fraction(-236364091, 2730),
    Fraction(8553103, 6),
    Fraction(-23749461029, 870),
    Fraction(8615841276005, 14322),
    Fraction(-7709321041217, 510),
)

# B_2k / (2k)!, converted once.
_SCALED_BERNOULLI = tuple(
    float(b / math.factorial(2 * (k + 1))) for k, b in enumerate(BERNOULLI)
)

_MAX_THRESHOLD = 1 << 20
_TRUNCATION_TARGET = EPS / 8


@dataclass(frozen=True)
class ZetaArgument:
    """A validated ``(s, alpha)`` pair with ``s > 1`` and ``alpha > 0``."""

    s: float
    alpha: float = 1.0

    def __post_init__(self):
        s, alpha = float(self.s), float(self.alpha)
        if not math.isfinite(s) or s <= 1.0:
            raise DomainError(f"Hurwitz zeta needs s > 1, got s={self.s!r}")
        if not math.isfinite(alpha) or alpha <= 0.0:
            raise DomainError(f"Hurwitz zeta needs alpha > 0, got alpha={self.alpha!r}")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "alpha", alpha)


@lru_cache(maxsize=512)
def em_coefficients(s: float, depth: int = 16) -> tuple[float, ...]:
    """Return ``c_k = B_2k/(2k)! * s(s+1)...(s+2k-2)`` for ``k = 1..depth``."""
    out = []
    rising = s
    for k in range(1, depth + 1):
        if k > 1:
            rising *= (s + 2 * k - 3) * (s + 2 * k - 2)
        out.append(_SCALED_BERNOULLI[k - 1] * rising)
    return tuple(out)


def asymptotic_terms(s: float, depth: int) -> list[tuple[int, float]]:
    """Large-``x`` expansion ``zeta(s, x) ~ sum c * x^-(s - 1 + offset)``.

    Returns ``(offset, c)`` pairs with integer offsets 0, 1, 2, 4, ..., 2*depth.
    The series diverges; it is meant for ``x`` well above ``s``.
    """
    if depth > len(BERNOULLI):
        raise ValueError(f"at most {len(BERNOULLI)} Bernoulli terms are tabulated")
    terms = [(0, 1.0 / (s - 1.0)), (1, 0.5)]
    terms.extend((2 * k, c) for k, c in enumerate(em_coefficients(s, depth), start=1))
    return terms


@lru_cache(maxsize=512)
def _plan(s: float, start: int, max_depth: int, rel_tol: float) -> tuple[float, int, float]:
    """Pick the summation threshold ``X`` and Bernoulli depth ``K``.

    Returns ``(X, K, r)`` where ``r`` bounds the remainder relative to the
    leading term ``x^(1-s)/(s-1)`` for every ``x >= X``.
    """
    coeffs = em_coefficients(s, 16)
    threshold = float(max(start, math.ceil(s) + 10))
    best = (threshold, max_depth, math.inf)
    while threshold <= _MAX_THRESHOLD:
        for k in range(1, max_depth + 1):
            r = (s - 1.0) * abs(coeffs[k]) * threshold ** (-2.0 * k - 2.0)
            if r <= _TRUNCATION_TARGET:
                return threshold, k, r
            if r < best[2]:
                best = (threshold, k, r)
        threshold *= 2.0
    if best[2] <= 0.5 * rel_tol:
        return best
    raise AccuracyError(
        f"Euler-Maclaurin remainder for s={s} cannot reach rel_tol={rel_tol} "
        f"with at most {max_depth} Bernoulli terms"
    )


def hurwitz_array(
    s: float, alpha, cfg: EvaluationConfig | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised ``zeta(s, alpha)``; returns ``(values, error_bounds)``.

    ``alpha`` may be any array of positive reals.  Validation of ``s`` and
    ``alpha`` is done here as well, so quadrature and series code can call
    this directly.
    """
    cfg = resolve(cfg)
    s = float(s)
    alpha = np.asarray(alpha, dtype=float)
    shape = alpha.shape
    a = alpha.ravel()
    if not math.isfinite(s) or s <= 1.0:
        raise DomainError(f"Hurwitz zeta needs s > 1, got s={s!r}")
    if a.size and (not np.all(np.isfinite(a)) or np.any(a <= 0.0)):
        raise DomainError("Hurwitz zeta needs finite alpha > 0")

    threshold, depth, rel_rem = _plan(s, cfg.em_terms, cfg.em_bernoulli_depth, cfg.rel_tol)
    shift = np.maximum(0.0, np.ceil(threshold - a))
    x = a + shift
    width = int(shift.max()) if a.size else 0

    x_ms = x ** (-s)
    leading = x ** (1.0 - s) / (s - 1.0)
    inv_x2 = 1.0 / (x * x)
    poly = np.zeros_like(x)
    for c in reversed(em_coefficients(s, depth)):
        poly = poly * inv_x2 + c
    corrections = poly * x_ms / x

    columns = [corrections, 0.5 * x_ms, leading]
    if width:
        n = np.arange(width - 1, -1, -1, dtype=float)
        direct = np.where(
            n[None, :] < shift[:, None], (a[:, None] + n[None, :]) ** (-s), 0.0
        )
        table = np.column_stack(columns + [direct])
    else:
        table = np.column_stack(columns)
    values = neumaier_rows(table)
    if not np.all(np.isfinite(values)):
        raise AccuracyError(f"Hurwitz zeta overflows for s={s} at the given alpha")

    errors = rel_rem * leading + (0.5 * s + 2.0) * EPS * np.abs(values)
    return values.reshape(shape), errors.reshape(shape)


def hurwitz_zeta_estimate(
    s: float, alpha: float = 1.0, cfg: EvaluationConfig | None = None
) -> tuple[float, float]:
    """``zeta(s, alpha)`` together with a bound on its absolute error."""
    cfg = resolve(cfg)
    arg = ZetaArgument(s, alpha)
    values, errors = hurwitz_array(arg.s, np.array([arg.alpha]), cfg)
    value, err = float(values[0]), float(errors[0])
    if err > cfg.rel_tol * abs(value):
        raise AccuracyError(
            f"zeta({arg.s}, {arg.alpha}) error bound {err:.3g} exceeds rel_tol={cfg.rel_tol}"
        )
    return value, err


def hurwitz_zeta(s: float, alpha: float = 1.0, cfg: EvaluationConfig | None = None) -> float:
    """Hurwitz zeta ``sum_{n >= 0} (n + alpha)^-s`` for ``s > 1``, ``alpha > 0``.

    >>> round(hurwitz_zeta(2.0, 1.0), 15)
    1.644934066848226
    """
    return hurwitz_zeta_estimate(s, alpha, cfg)[0]


def riemann_zeta(s: float, cfg: EvaluationConfig | None = None) -> float:
    """Riemann zeta for real ``s > 1``; identical to ``hurwitz_zeta(s, 1)``."""
    return hurwitz_zeta(s, 1.0, cfg)


def step_hurwitz(s: float, u: float, cfg: EvaluationConfig | None = None) -> float:
    """The right-continuous step function ``zeta(s, floor(u) + 1)`` for ``u >= 1``."""
    u = float(u)
    if not math.isfinite(u) or u < 1.0:
        raise DomainError(f"step_hurwitz needs u >= 1, got u={u!r}")
    return hurwitz_zeta(s, math.floor(u) + 1.0, cfg)


def hurwitz_du(s: float, alpha: float = 1.0, cfg: EvaluationConfig | None = None) -> float:
    """Derivative in the shift: ``d/du zeta(s, u) = -s * zeta(s + 1, u)``."""
    arg = ZetaArgument(s, alpha)
    return -arg.s * hurwitz_zeta(arg.s + 1.0, arg.alpha, cfg)


def decay_bound(s: float, u):
    """Upper bound ``u^-s + u^(1-s)/(s-1)`` on ``zeta(s, u)``."""
    u = np.asarray(u, dtype=float)
    return u ** (-s) + u ** (1.0 - s) / (s - 1.0)
