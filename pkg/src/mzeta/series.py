"""Direct series evaluation of zeta_2, zeta_3 and the Tornheim double zeta.

These are the reference values the integral representations are checked
against.  Each sum is split into a head that is summed term by term and a
tail that is summed in closed form:

* ``zeta_2(s1, s2) = sum_n n^-s1 zeta(s2, n + 1)``.  For ``n > N`` the
  inner Hurwitz value is replaced by its large-``n`` expansion, so the tail
  becomes a short combination of ``zeta(p, N + 1)``.
* ``zeta_3`` nests the same idea twice: the suffix sums
  ``sum_{m > n} m^-s2 zeta(s3, m + 1)`` are accumulated exactly up to ``N``
  and expanded beyond it.
* Tornheim's ``T(s1, s2, s3)`` is summed over the square ``n1, n2 <= N``
  and the two strips with binomial tails; the far quadrant ``n1, n2 > N`` is
  replaced by its midpoint-rule integral plus the first gradient correction.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from importlib import resources

import numpy as np
from scipy import integrate

from .config import AccuracyError, DomainError, EvaluationConfig, resolve
from .hurwitz import EPS, asymptotic_terms, hurwitz_array, hurwitz_zeta_estimate
from .report import VerificationReport
from .summation import fsum, neumaier_rows, suffix_sums

ZETA2_TOL_FLOOR = 1e-10
ZETA3_TOL_FLOOR = 1e-8
TORNHEIM_TOL_FLOOR = 1e-8

_ORDERS = 24
_START = 64
_MAX_TRUNCATION = 1 << 16
_TORNHEIM_MAX = 4096
_BINOMIAL_TERMS = 48


@dataclass(frozen=True)
class SeriesEstimate:
    value: float
    error: float
    truncation: int
    tail_bound: float


class _Expansion:
    """A formal series ``sum_j c[j] n^-(base + j)`` in powers of ``1/n``."""

    def __init__(self, base: float, coeffs: np.ndarray):
        self.base = base
        self.coeffs = coeffs

    @classmethod
    def shifted_hurwitz(cls, s: float, orders: int = _ORDERS) -> "_Expansion":
        """``zeta(s, n + 1)`` expanded for large ``n``."""
        coeffs = np.zeros(orders)
        for offset, c in asymptotic_terms(s, (orders - 1) // 2):
            if offset >= orders:
                break
            q = s - 1.0 + offset
            b = c
            for m in range(orders - offset):
                coeffs[offset + m] += b
                b *= -(q + m) / (m + 1.0)
        return cls(s - 1.0, coeffs)

    def times_power(self, p: float) -> "_Expansion":
        return _Expansion(self.base + p, self.coeffs)

    def summed_above(self) -> "_Expansion":
        """The expansion of ``n -> sum_{m > n} self(m)``."""
        orders = self.coeffs.size
        out = np.zeros(orders)
        for j, c in enumerate(self.coeffs):
            if c == 0.0:
                continue
            inner = _Expansion.shifted_hurwitz(self.base + j, orders - j)
            out[j:] += c * inner.coeffs
        return _Expansion(self.base - 1.0, out)

    def sum_from(self, start: int, cfg: EvaluationConfig) -> tuple[float, float]:
        """``sum_{n >= start} self(n)`` and an estimate of its error."""
        terms = []
        zeta_err = 0.0
        for j, c in enumerate(self.coeffs):
            z, dz = hurwitz_zeta_estimate(self.base + j, float(start), cfg.with_tol(0.5))
            terms.append(c * z)
            zeta_err += abs(c) * dz
        mags = np.abs(terms)
        err = 2.0 * (mags[-1] + mags[-2]) + 8.0 * EPS * fsum(mags) + zeta_err
        return fsum(terms), err


def _check_real(name, *values):
    for v in values:
        if not math.isfinite(v):
            raise DomainError(f"{name}: arguments must be finite, got {values!r}")


def zeta2_series_estimate(
    s1: float, s2: float, cfg: EvaluationConfig | None = None
) -> SeriesEstimate:
    cfg = resolve(cfg)
    s1, s2 = float(s1), float(s2)
    _check_real("zeta2", s1, s2)
    if s1 < 1.0 or s2 <= 1.0:
        raise DomainError(f"zeta2 needs s1 >= 1 and s2 > 1, got ({s1}, {s2})")
    tol = max(cfg.rel_tol, ZETA2_TOL_FLOOR)
    tail_series = _Expansion.shifted_hurwitz(s2).times_power(s1)

    n_max = _START
    while True:
        n = np.arange(1, n_max + 1, dtype=float)
        inner, inner_err = hurwitz_array(s2, n + 1.0, cfg)
        weights = n ** (-s1)
        head = fsum(weights * inner)
        tail, tail_err = tail_series.sum_from(n_max + 1, cfg)
        value = fsum([head, tail])
        err = fsum(weights * inner_err) + 2.0 * EPS * abs(head) + tail_err
        if err <= 0.5 * tol * abs(value):
            return SeriesEstimate(float(value), float(err), n_max, float(tail_err))
        if 2 * n_max > _MAX_TRUNCATION:
            raise AccuracyError(f"zeta2({s1}, {s2}) error {err:.3g} above tolerance")
        n_max *= 2


def zeta2_series(s1: float, s2: float, cfg: EvaluationConfig | None = None) -> float:
    """``zeta_2(s1, s2) = sum_{n1 >= 1} n1^-s1 sum_{n2 > n1} n2^-s2``.

    Defined for ``s1 >= 1`` and ``s2 > 1``.

    >>> round(zeta2_series(1.0, 2.0), 12)  # Euler: zeta_2(1, 2) = zeta(3)
    1.20205690316
    """
    return zeta2_series_estimate(s1, s2, cfg).value


def zeta3_series_estimate(
    s1: float, s2: float, s3: float, cfg: EvaluationConfig | None = None
) -> SeriesEstimate:
    cfg = resolve(cfg)
    s1, s2, s3 = float(s1), float(s2), float(s3)
    _check_real("zeta3", s1, s2, s3)
    if min(s1, s2, s3) <= 1.0:
        raise DomainError(f"zeta3 needs all exponents > 1, got ({s1}, {s2}, {s3})")
    tol = max(cfg.rel_tol, ZETA3_TOL_FLOOR)
    inner_series = _Expansion.shifted_hurwitz(s3).times_power(s2)
    outer_series = inner_series.summed_above().times_power(s1)

    n_max = _START
    while True:
        n = np.arange(1, n_max + 1, dtype=float)
        z3, z3_err = hurwitz_array(s3, n + 1.0, cfg)
        w = n ** (-s2) * z3
        w_err = n ** (-s2) * z3_err
        inner_tail, inner_tail_err = inner_series.sum_from(n_max + 1, cfg)
        # F(n1) = sum_{n2 > n1} w(n2); the suffix starting at n1 + 1.
        suffix = np.append(suffix_sums(w)[1:], 0.0) + inner_tail
        weights = n ** (-s1)
        head = fsum(weights * suffix)
        tail, tail_err = outer_series.sum_from(n_max + 1, cfg)
        value = fsum([head, tail])
        err = (
            fsum(weights) * (fsum(w_err) + inner_tail_err)
            + 4.0 * EPS * abs(head)
            + tail_err
        )
        if err <= 0.5 * tol * abs(value):
            return SeriesEstimate(float(value), float(err), n_max, float(tail_err))
        if 2 * n_max > _MAX_TRUNCATION:
            raise AccuracyError(f"zeta3({s1}, {s2}, {s3}) error {err:.3g} above tolerance")
        n_max *= 2


def zeta3_series(s1: float, s2: float, s3: float, cfg: EvaluationConfig | None = None) -> float:
    """``zeta_3(s1, s2, s3)`` with the innermost index largest; all ``s_i > 1``."""
    return zeta3_series_estimate(s1, s2, s3, cfg).value


def _strip_sums(n1: np.ndarray, sa: float, sb: float, s3: float, first: int, last: int, cfg):
    """``n1^-sa * sum_{n2 >= first} n2^-sb (n1 + n2)^-s3`` for each row ``n1``.

    ``n2`` is summed directly up to ``last``; beyond it ``(n1 + n2)^-s3`` is
    expanded in ``n1 / n2``, leaving Hurwitz values at ``last + 1``.  Needs
    ``n1 <= last / 4`` for the expansion to converge quickly.
    Returns ``(row_values, row_error_estimates)``.
    """
    n2 = np.arange(first, last + 1, dtype=float)
    # Columns run from the largest n2 down so small terms are added first.
    cols = n2[::-1] ** (-sb)
    rows = []
    for block in np.array_split(n1, max(1, n1.size // 256)):
        table = cols[None, :] * (block[:, None] + n2[None, ::-1]) ** (-s3)
        rows.append(neumaier_rows(table))
    direct = np.concatenate(rows)

    binom = np.empty(_BINOMIAL_TERMS)
    binom[0] = 1.0
    for k in range(1, _BINOMIAL_TERMS):
        binom[k] = binom[k - 1] * -(s3 + k - 1.0) / k
    zetas = np.array(
        [
            hurwitz_zeta_estimate(sb + s3 + k, float(last + 1), cfg.with_tol(0.5))[0]
            for k in range(_BINOMIAL_TERMS)
        ]
    )
    ratio = n1[:, None] ** np.arange(_BINOMIAL_TERMS)[None, :]
    tail_terms = binom[None, :] * ratio * zetas[None, :]
    tails = neumaier_rows(tail_terms[:, ::-1])
    trunc = 2.0 * np.abs(tail_terms[:, -1])
    scale = n1 ** (-sa)
    values = scale * (direct + tails)
    errors = scale * (trunc + 4.0 * EPS * (np.abs(direct) + np.abs(tails)))
    return values, errors


def _far_quadrant(s1: float, s2: float, s3: float, corner: float):
    """``sum_{n1, n2 > N}`` via the integral over ``[N + 1/2, inf)^2``.

    Returns ``(integral, gradient_correction, error_estimate)``.
    """
    total = s1 + s2 + s3

    def alg(f, exponent):
        val, err = integrate.quad(f, 0.0, 0.5, weight="alg", wvar=(exponent, 0.0))
        return val, err

    # x = rho w, y = rho (1 - w); the constraint x, y >= a gives rho >= a / min(w, 1 - w).
    q1, e1 = alg(lambda w: (1.0 - w) ** (-s2), s2 + s3 - 2.0)
    q2, e2 = alg(lambda w: (1.0 - w) ** (-s1), s1 + s3 - 2.0)
    scale = corner ** (2.0 - total) / (total - 2.0)
    main = scale * (q1 + q2)

    # Gradient terms along the two boundary lines, with v = 1/w on [1, inf).
    def edge(sa, sb):
        f = lambda w: (1.0 + w) ** (-s3) * (sa + s3 * w / (1.0 + w))
        val, err = integrate.quad(f, 0.0, 1.0, weight="alg", wvar=(sb + s3 - 2.0, 0.0))
        return val, err

    j1, f1 = edge(s1, s2)
    j2, f2 = edge(s2, s1)
    correction = -corner ** (-total) * (j1 + j2) / 24.0
    err = (
        abs(correction) * (total + 3.0) ** 2 / corner**2
        + scale * (e1 + e2)
        + corner ** (-total) * (f1 + f2) / 24.0
    )
    return main, correction, err


def tornheim_series_estimate(
    s1: float, s2: float, s3: float, cfg: EvaluationConfig | None = None
) -> SeriesEstimate:
    cfg = resolve(cfg)
    s1, s2, s3 = float(s1), float(s2), float(s3)
    _check_real("tornheim", s1, s2, s3)
    if min(s1, s2, s3) < 0.0:
        raise DomainError(f"tornheim needs non-negative exponents, got ({s1}, {s2}, {s3})")
    if s1 + s3 <= 1.0 or s2 + s3 <= 1.0 or s1 + s2 + s3 <= 2.0:
        raise DomainError(
            f"tornheim({s1}, {s2}, {s3}) lies outside s1+s3 > 1, s2+s3 > 1, s1+s2+s3 > 2"
        )
    tol = max(cfg.rel_tol, TORNHEIM_TOL_FLOOR)

    n_max = _START
    while True:
        last = 4 * n_max
        rows = np.arange(1, n_max + 1, dtype=float)
        # n1 <= N, any n2; then n2 <= N with n1 > N.
        # {n1 <= N} and {n2 <= N, n1 > N}; the quadrant {n1, n2 > N} is integrated.
        near, near_err = _strip_sums(rows, s1, s2, s3, 1, last, cfg)
        side, side_err = _strip_sums(rows, s2, s1, s3, n_max + 1, last, cfg)
        main, corr, far_err = _far_quadrant(s1, s2, s3, n_max + 0.5)
        value = fsum(list(near) + list(side) + [main, corr])
        err = fsum(near_err) + fsum(side_err) + far_err + 4.0 * EPS * abs(value)
        if err <= 0.5 * tol * abs(value):
            return SeriesEstimate(float(value), float(err), n_max, float(far_err))
        if 2 * n_max > _TORNHEIM_MAX:
            raise AccuracyError(f"tornheim({s1}, {s2}, {s3}) error {err:.3g} above tolerance")
        n_max *= 2


def tornheim_series(s1: float, s2: float, s3: float, cfg: EvaluationConfig | None = None) -> float:
    """Tornheim's ``T = sum_{n1, n2 >= 1} n1^-s1 n2^-s2 (n1 + n2)^-s3``."""
    return tornheim_series_estimate(s1, s2, s3, cfg).value


REFLECTION_TOL = 1e-9


def reflection_check(
    s1: float, s2: float, cfg: EvaluationConfig | None = None, tolerance: float = REFLECTION_TOL
) -> VerificationReport:
    """Compare ``zeta_2(s1, s2) + zeta_2(s2, s1)`` with ``zeta(s1) zeta(s2) - zeta(s1 + s2)``."""
    from .hurwitz import riemann_zeta

    s1, s2 = float(s1), float(s2)
    if s1 <= 1.0 or s2 <= 1.0:
        raise DomainError(f"reflection needs s1, s2 > 1, got ({s1}, {s2})")
    terms = {
        "zeta2(s1,s2)": zeta2_series(s1, s2, cfg),
        "zeta2(s2,s1)": zeta2_series(s2, s1, cfg),
    }
    z1, z2, z12 = riemann_zeta(s1, cfg), riemann_zeta(s2, cfg), riemann_zeta(s1 + s2, cfg)
    rhs = fsum([z1 * z2, -z12])
    return VerificationReport.from_terms(
        "reflection",
        (s1, s2),
        terms,
        rhs,
        tolerance,
        extras={"zeta(s1)zeta(s2)": z1 * z2, "zeta(s1+s2)": z12},
    )


# Reference points recorded in the shipped golden table.
GOLDEN_POINTS = (
    ("zeta2", (1.0, 2.0)),
    ("zeta2", (2.0, 2.0)),
    ("zeta2", (3.0, 2.0)),
    ("zeta3", (2.0, 2.0, 2.0)),
    ("zeta3", (2.0, 3.0, 2.0)),
    ("zeta3", (3.0, 2.0, 4.0)),
    ("tornheim", (2.0, 0.0, 2.0)),
    ("tornheim", (1.0, 0.0, 2.0)),
    ("tornheim", (2.0, 2.0, 2.0)),
)
GOLDEN_FILE = "golden_values_v1.csv"
GOLDEN_COLUMNS = ("function", "args", "value", "truncation", "tail_bound")

_ESTIMATORS = {
    "zeta2": zeta2_series_estimate,
    "zeta3": zeta3_series_estimate,
    "tornheim": tornheim_series_estimate,
}


def format_args(args) -> str:
    return ";".join(repr(float(a)) for a in args)


def mint_golden(cfg: EvaluationConfig | None = None) -> list[dict]:
    rows = []
    for name, args in GOLDEN_POINTS:
        est = _ESTIMATORS[name](*args, cfg=cfg)
        rows.append(
            {
                "function": name,
                "args": format_args(args),
                "value": repr(est.value),
                "truncation": str(est.truncation),
                "tail_bound": f"{est.tail_bound:.3e}",
            }
        )
    return rows


def golden_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=GOLDEN_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def load_golden() -> dict[tuple[str, tuple[float, ...]], float]:
    """Read the shipped golden table into ``{(function, args): value}``."""
    text = resources.files("mzeta.data").joinpath(GOLDEN_FILE).read_text()
    out = {}
    for row in csv.DictReader(io.StringIO(text)):
        args = tuple(float(a) for a in row["args"].split(";"))
        out[(row["function"], args)] = float(row["value"])
    return out
