"""Integrals over ``[a, inf)`` of products of Hurwitz-type factors.

A factor is one of

* ``Smooth(s)``: ``u -> zeta(s, u)``
* ``Step(s)``:   ``u -> zeta(s, floor(u) + 1)``, constant on ``[n, n + 1)``
* ``Power(p)``:  ``u -> u^-p``

Every product is analytic on each unit segment ``[n, n + 1]`` (the step
factors are frozen there), so ``[a, N)`` is integrated segment by segment
with fixed-order Gauss-Legendre and the error is estimated by comparison
with a rule of 1.5 times the order.

The remaining mass over ``[N, inf)`` is ``sum_{n >= N} G(n)`` with
``G(n) = int_0^1 prod f(n + t) dt``.  Expanding every factor in powers of
``1/n`` (large-argument Hurwitz asymptotics followed by the binomial series
of ``(n + t)^-q``), multiplying the expansions and integrating in ``t``
gives ``G(n) ~ sum_j c_j n^-(D + j)``, hence the tail
``sum_j c_j zeta(D + j, N)``.  The size of the last retained orders is the
reported tail bound; the elementary bound ``zeta(s, u) <= u^-s +
u^(1-s)/(s-1)`` is kept alongside as a sanity ceiling.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian

import numpy as np

from .config import AccuracyError, DomainError, EvaluationConfig, resolve
from .hurwitz import EPS, asymptotic_terms, hurwitz_array, hurwitz_zeta_estimate
from .summation import fsum

SLOW_DECAY = 1.25
SLOW_DECAY_TOL = 1e-6

# Orders of 1/n kept in the tail expansion; the Hurwitz asymptotics need
# (ORDERS - 1) // 2 Bernoulli terms.
ORDERS = 24
MIN_SEGMENTS = 32


class FactorKind(enum.Enum):
    SMOOTH = "smooth"
    STEP = "step"
    POWER = "power"


@dataclass(frozen=True)
class IntegrandFactor:
    kind: FactorKind
    exponent: float

    def __post_init__(self):
        kind = FactorKind(self.kind)
        exponent = float(self.exponent)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "exponent", exponent)
        if not math.isfinite(exponent):
            raise DomainError(f"non-finite exponent in {self}")
        if kind is FactorKind.POWER:
            if exponent <= 0.0:
                raise DomainError(f"Power factor needs exponent > 0, got {exponent}")
        elif exponent <= 1.0:
            raise DomainError(f"{kind.value} factor needs exponent > 1, got {exponent}")

    @property
    def decay(self) -> float:
        """Exponent ``d`` with ``factor(u) ~ u^-d`` as ``u -> inf``."""
        if self.kind is FactorKind.POWER:
            return self.exponent
        return self.exponent - 1.0

    def __str__(self):
        return f"{self.kind.value.capitalize()}({self.exponent:g})"


def Smooth(s: float) -> IntegrandFactor:
    return IntegrandFactor(FactorKind.SMOOTH, s)


def Step(s: float) -> IntegrandFactor:
    return IntegrandFactor(FactorKind.STEP, s)


def Power(p: float) -> IntegrandFactor:
    return IntegrandFactor(FactorKind.POWER, p)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    quad_error: float
    tail_bound: float
    segments_used: int
    tail_value: float = 0.0
    tail_crude_bound: float = math.inf
    tolerance: float = 0.0
    relaxed: bool = False

    @property
    def total_error(self) -> float:
        return self.quad_error + self.tail_bound


@lru_cache(maxsize=16)
def _gauss(order: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(order)
    # Mapped to [0, 1].
    return 0.5 * (x + 1.0), 0.5 * w


def _binomial_series(q: float, count: int) -> np.ndarray:
    """Coefficients of ``(1 + z)^-q`` up to ``z^(count-1)``."""
    out = np.empty(count)
    out[0] = 1.0
    for m in range(1, count):
        out[m] = out[m - 1] * -(q + m - 1.0) / m
    return out


def _expansion(factor: IntegrandFactor, orders: int) -> tuple[float, np.ndarray]:
    """Expansion of ``factor(n + t)`` as ``n^-e * sum E[j, m] n^-j t^m``."""
    table = np.zeros((orders, orders))
    s = factor.exponent
    if factor.kind is FactorKind.POWER:
        table[np.arange(orders), np.arange(orders)] = _binomial_series(s, orders)
        return s, table
    for offset, coeff in asymptotic_terms(s, (orders - 1) // 2):
        if offset >= orders:
            break
        count = orders - offset
        binom = coeff * _binomial_series(s - 1.0 + offset, count)
        rows = offset + np.arange(count)
        if factor.kind is FactorKind.SMOOTH:
            table[rows, np.arange(count)] += binom
        else:
            # zeta(s, n + 1): the shift is the constant t = 1.
            table[rows, 0] += binom
    return s - 1.0, table


def _multiply(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    orders = left.shape[0]
    out = np.zeros_like(left)
    for i in range(orders):
        for j in range(orders - i):
            out[i + j] += np.convolve(left[i], right[j])[:orders]
    return out


@lru_cache(maxsize=256)
def _tail_coefficients(factors: tuple[IntegrandFactor, ...], orders: int):
    base = 0.0
    table = None
    for factor in factors:
        e, t = _expansion(factor, orders)
        base += e
        table = t if table is None else _multiply(table, t)
    # int_0^1 t^m dt = 1/(m+1)
    coeffs = table @ (1.0 / np.arange(1, orders + 1))
    return base, coeffs


def _tail(factors, start: int, cfg: EvaluationConfig) -> tuple[float, float]:
    """Asymptotic value of the ``[start, inf)`` mass and an error estimate."""
    base, coeffs = _tail_coefficients(tuple(factors), ORDERS)
    terms = []
    zeta_err = 0.0
    for j, c in enumerate(coeffs):
        z, dz = hurwitz_zeta_estimate(base + j, float(start), cfg.with_tol(0.5))
        terms.append(c * z)
        zeta_err += abs(c) * dz
    terms = np.array(terms)
    value = fsum(terms)
    error = (
        2.0 * (abs(terms[-1]) + abs(terms[-2]))
        + 8.0 * EPS * fsum(np.abs(terms))
        + zeta_err
    )
    return value, error


def _crude_tail_bound(factors, start: float) -> float:
    """``int_start^inf`` of the product of elementary upper bounds."""
    pieces = []
    for f in factors:
        if f.kind is FactorKind.POWER:
            pieces.append([(1.0, f.exponent)])
        else:
            s = f.exponent
            pieces.append([(1.0, s), (1.0 / (s - 1.0), s - 1.0)])
    total = []
    for combo in cartesian(*pieces):
        coeff = math.prod(c for c, _ in combo)
        p = sum(e for _, e in combo)
        total.append(coeff * start ** (1.0 - p) / (p - 1.0))
    return fsum(total)


class _SegmentIntegrator:
    """Gauss-Legendre on ``[left, right]`` pieces with a paired higher order."""

    def __init__(self, factors, cfg: EvaluationConfig):
        self.factors = factors
        self.cfg = cfg
        self.rules = (_gauss(cfg.quad_order), _gauss(cfg.quad_order + cfg.quad_order // 2))
        self.rel_eval_err = sum(
            (0.5 * f.exponent + 2.0) * EPS
            for f in factors
            if f.kind is not FactorKind.POWER
        ) + 2.0 * EPS * len(factors)

    def integrate(self, left: np.ndarray, right: np.ndarray):
        """Return ``(values, error_estimates)`` per piece."""
        width = right - left
        # Step factors take the value at the next integer above the piece start.
        step_at = np.floor(left) + 1.0
        estimates = []
        for nodes, weights in self.rules:
            u = left[:, None] + width[:, None] * nodes[None, :]
            prod = np.ones_like(u)
            for f in self.factors:
                if f.kind is FactorKind.SMOOTH:
                    prod *= hurwitz_array(f.exponent, u, self.cfg)[0]
                elif f.kind is FactorKind.STEP:
                    prod *= hurwitz_array(f.exponent, step_at, self.cfg)[0][:, None]
                else:
                    prod *= u ** (-f.exponent)
            estimates.append(width * (prod @ weights))
        low, high = estimates
        err = np.abs(high - low) + self.rel_eval_err * np.abs(high)
        return high, err


def _validate(factors) -> tuple[IntegrandFactor, ...]:
    factors = tuple(factors)
    if not factors:
        raise DomainError("integrate_product needs at least one factor")
    for f in factors:
        if not isinstance(f, IntegrandFactor):
            raise DomainError(f"not an IntegrandFactor: {f!r}")
    decay = sum(f.decay for f in factors)
    if decay <= 1.0:
        raise DomainError(
            f"product decays like u^-{decay:g}; integrability on [1, inf) needs more than u^-1"
        )
    return factors


def integrate_product(
    factors, cfg: EvaluationConfig | None = None, lower: float = 1.0
) -> QuadratureResult:
    """Integrate ``prod(factors)(u)`` over ``[lower, inf)``, ``lower >= 1``.

    The truncation point ``N`` starts at ``max(32, lower + 16, 2 * max
    exponent)`` and doubles until the reported error (segment error plus
    tail estimate) is within ``rel_tol * |value|``.  Products decaying no
    faster than ``u^-1.25`` are held to ``max(rel_tol, 1e-6)`` instead, and
    the result is flagged ``relaxed``.
    """
    cfg = resolve(cfg)
    factors = _validate(factors)
    lower = float(lower)
    if not math.isfinite(lower) or lower < 1.0:
        raise DomainError(f"lower limit must be >= 1, got {lower!r}")

    decay = sum(f.decay for f in factors)
    relaxed = decay <= SLOW_DECAY
    tol = max(cfg.rel_tol, SLOW_DECAY_TOL) if relaxed else cfg.rel_tol

    integrator = _SegmentIntegrator(factors, cfg)
    first = math.floor(lower) + 1
    max_exp = max(f.exponent for f in factors)
    cut = max(MIN_SEGMENTS, first + 16, 2 * math.ceil(max_exp))
    if cut > cfg.max_segments:
        raise AccuracyError(f"max_segments={cfg.max_segments} is below the minimum cut {cut}")

    # First piece [lower, first) may be partial; the rest are unit segments.
    edges = np.concatenate(([lower], np.arange(first, cut + 1, dtype=float)))
    seg_vals, seg_errs = integrator.integrate(edges[:-1], edges[1:])
    seg_vals, seg_errs = list(seg_vals), list(seg_errs)

    while True:
        tail_value, tail_err = _tail(factors, cut, cfg)
        value = fsum(seg_vals + [tail_value])
        quad_err = fsum(seg_errs) + 2.0 * EPS * fsum(np.abs(seg_vals))
        crude = _crude_tail_bound(factors, float(cut))
        tail_err = min(tail_err, crude)
        if quad_err + tail_err <= tol * abs(value):
            return QuadratureResult(
                value=float(value),
                quad_error=float(quad_err),
                tail_bound=float(tail_err),
                segments_used=len(seg_vals),
                tail_value=float(tail_value),
                tail_crude_bound=float(crude),
                tolerance=tol,
                relaxed=relaxed,
            )
        if quad_err > 0.5 * tol * abs(value):
            raise AccuracyError(
                f"segment error {quad_err:.3g} exceeds the budget for rel_tol={tol}; "
                f"raise quad_order (now {cfg.quad_order})"
            )
        new_cut = 2 * cut
        if new_cut > cfg.max_segments:
            raise AccuracyError(
                f"tail estimate {tail_err:.3g} above tolerance at max_segments={cfg.max_segments}"
            )
        left = np.arange(cut, new_cut, dtype=float)
        more_vals, more_errs = integrator.integrate(left, left + 1.0)
        seg_vals.extend(more_vals)
        seg_errs.extend(more_errs)
        cut = new_cut


def _odd_gap(a: float, b: float) -> int:
    gap = b - a
    n = round(gap)
    if n < 1 or n % 2 == 0 or abs(gap - n) > 1e-12 * max(1.0, abs(b)):
        raise DomainError(f"b - a must be an odd positive integer, got {gap!r}")
    return n


def smooth_pair_terms(a: float, b: float, cfg: EvaluationConfig | None = None) -> list[float]:
    """Signed terms whose sum is ``int_1^inf zeta(a, u) zeta(b, u) du``.

    Integration by parts with ``d/du zeta(b-1, u) = -(b-1) zeta(b, u)`` gives
    ``I(a, b) = zeta(a) zeta(b-1)/(b-1) - a/(b-1) I(a+1, b-1)``, which closes
    at ``I(s, s+1) = zeta(s)^2 / (2s)`` when ``b - a`` is odd.
    """
    from .hurwitz import riemann_zeta

    a, b = float(a), float(b)
    if not math.isfinite(a) or a <= 1.0:
        raise DomainError(f"closed form needs a > 1, got {a!r}")
    steps = (_odd_gap(a, b) - 1) // 2
    b = a + 2 * steps + 1
    terms = []
    scale = 1.0
    for _ in range(steps):
        terms.append(scale * riemann_zeta(a, cfg) * riemann_zeta(b - 1.0, cfg) / (b - 1.0))
        scale *= -a / (b - 1.0)
        a, b = a + 1.0, b - 1.0
    terms.append(scale * riemann_zeta(a, cfg) ** 2 / (2.0 * a))
    return terms


def smooth_pair_closed_form(a: float, b: float, cfg: EvaluationConfig | None = None) -> float:
    """``int_1^inf zeta(a, u) zeta(b, u) du`` for odd positive ``b - a``."""
    return fsum(smooth_pair_terms(a, b, cfg))
