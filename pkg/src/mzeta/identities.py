"""Integral representations of zeta_2 and zeta_3 and their verification.

For ``s1 >= 1`` and ``s2 > 1``::

    zeta_2(s1, s2) = s1 * int_1^inf zeta(s1 + 1, u) zeta(s2, [u] + 1) du
                   = s1 * int_1^inf zeta(s1 + 1, u) zeta(s2, u) du - A(s1, s2)

with ``0 <= A <= s1 * int zeta(s1 + 1, u) u^-s2 du <= s1 zeta(s1 + 1)/(s2 - 1)``.
When ``s2 - s1`` is an even positive integer the smooth integral also has a
closed form through :func:`mzeta.quadrature.smooth_pair_closed_form`.

``zeta_3`` is written as Riemann and double zeta values plus three
integrals with stepped factors; see :func:`zeta3_terms`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .config import AccuracyError, DomainError, EvaluationConfig, resolve
from .hurwitz import EPS, riemann_zeta
from .quadrature import Power, Smooth, Step, integrate_product, smooth_pair_closed_form
from .report import VerificationReport
from .series import (
    reflection_check,
    tornheim_series,
    zeta2_series,
    zeta2_series_estimate,
    zeta3_series,
)
from .summation import fsum

THEOREM1_TOL = 1e-8
THEOREM1_SLOW_TOL = 1e-6
# s1 + s2 below this counts as slow decay for the zeta_2 integrand.
THEOREM1_SLOW_SUM = 3.25
THEOREM2_TOL = 1e-6
CLOSED_FORM_TOL = 1e-9
DUAL_ROUTE_TOL = 1e-9
TORNHEIM_TOL = 1e-8

THEOREM1_GRID = tuple(itertools.product((1.0, 1.5, 2.0, 3.0), (1.5, 2.0, 3.0, 6.0)))
THEOREM2_POINTS = ((2.0, 2.0, 2.0), (2.0, 3.0, 2.0), (3.0, 2.0, 4.0), (4.0, 4.0, 4.0), (2.0, 2.0, 3.0))
REFLECTION_GRID = tuple(itertools.product((1.5, 2.0, 3.0, 6.0), repeat=2))
TORNHEIM_GRID = tuple(itertools.product((1.5, 2.0, 3.0), (2.0, 3.0)))
PAIR_POINTS = ((1.5,), (2.0,), (3.0,), (5.0,))
TRIPLE_POINTS = ((2.0,), (3.0,))
ODD_GAP_POINTS = ((2.0, 5.0), (3.0, 6.0), (2.0, 7.0))
EVEN_GAP_POINTS = ((2.0, 4.0), (2.0, 6.0), (3.0, 5.0))


def theorem1_tolerance(s1: float, s2: float) -> float:
    return THEOREM1_SLOW_TOL if s1 + s2 < THEOREM1_SLOW_SUM else THEOREM1_TOL


def _zeta2_args(s1, s2) -> tuple[float, float]:
    s1, s2 = float(s1), float(s2)
    if not (math.isfinite(s1) and math.isfinite(s2)) or s1 < 1.0 or s2 <= 1.0:
        raise DomainError(f"the zeta_2 integral needs s1 >= 1 and s2 > 1, got ({s1}, {s2})")
    return s1, s2


def zeta2_integral_result(s1: float, s2: float, cfg: EvaluationConfig | None = None):
    """The stepped integral ``int zeta(s1 + 1, u) zeta(s2, [u] + 1) du`` (unscaled)."""
    s1, s2 = _zeta2_args(s1, s2)
    return integrate_product([Smooth(s1 + 1.0), Step(s2)], cfg)


def zeta2_integral(s1: float, s2: float, cfg: EvaluationConfig | None = None) -> float:
    """``zeta_2(s1, s2)`` through ``s1 * int_1^inf zeta(s1 + 1, u) zeta(s2, [u] + 1) du``."""
    return s1 * zeta2_integral_result(s1, s2, cfg).value


def _even_gap(s1: float, s2: float) -> bool:
    gap = s2 - s1
    n = round(gap)
    return n >= 2 and n % 2 == 0 and abs(gap - n) <= 1e-12 * max(1.0, abs(s2))


@dataclass(frozen=True)
class SmoothApprox:
    """Smooth approximation of ``zeta_2`` and the gap ``A`` to the exact value.

    Unpacks as ``approx, a_value, a_bound``.
    """

    approx: float
    a_value: float
    a_bound: float
    a_mid_bound: float
    exact: float
    error: float
    closed_form: float | None = None

    def __iter__(self):
        return iter((self.approx, self.a_value, self.a_bound))


def zeta2_smooth_approx(
    s1: float, s2: float, cfg: EvaluationConfig | None = None
) -> SmoothApprox:
    """``s1 * int zeta(s1 + 1, u) zeta(s2, u) du`` and ``A = approx - zeta_2``.

    ``a_bound = s1 zeta(s1 + 1)/(s2 - 1)``; ``a_mid_bound`` is the sharper
    ``s1 int zeta(s1 + 1, u) u^-s2 du`` sitting between ``A`` and it.  For an
    even positive ``s2 - s1`` the closed form is computed as well and must
    agree with the quadrature to ``1e-9``.
    """
    s1, s2 = _zeta2_args(s1, s2)
    smooth = integrate_product([Smooth(s1 + 1.0), Smooth(s2)], cfg)
    stepped = zeta2_integral_result(s1, s2, cfg)
    mid = integrate_product([Smooth(s1 + 1.0), Power(s2)], cfg)
    approx = s1 * smooth.value
    exact = s1 * stepped.value
    closed = None
    if _even_gap(s1, s2):
        closed = s1 * smooth_pair_closed_form(s1 + 1.0, s2, cfg)
        if abs(closed - approx) > DUAL_ROUTE_TOL * abs(closed):
            raise AccuracyError(
                f"closed form {closed!r} and quadrature {approx!r} disagree at ({s1}, {s2})"
            )
    return SmoothApprox(
        approx=approx,
        a_value=approx - exact,
        a_bound=s1 * riemann_zeta(s1 + 1.0, cfg) / (s2 - 1.0),
        a_mid_bound=s1 * mid.value,
        exact=exact,
        error=s1 * (smooth.total_error + stepped.total_error),
        closed_form=closed,
    )


def verify_theorem1(
    s1: float, s2: float, cfg: EvaluationConfig | None = None, tolerance: float | None = None
) -> VerificationReport:
    """Check ``s1 int zeta(s1+1,u) zeta(s2,u) du - A`` against the double series.

    ``lhs`` is the integral side, built from the smooth integral and ``-A``;
    ``rhs`` is :func:`zeta2_series`.  The chain ``0 <= A <= mid <= bound``
    goes into ``checks``.
    """
    s1, s2 = _zeta2_args(s1, s2)
    if tolerance is None:
        tolerance = theorem1_tolerance(s1, s2)
    sa = zeta2_smooth_approx(s1, s2, cfg)
    series = zeta2_series(s1, s2, cfg)
    terms = {
        "s1*int zeta(s1+1,u)zeta(s2,u)du": sa.approx,
        "-A(s1,s2)": -sa.a_value,
    }
    checks = {
        "0<=A": sa.a_value >= 0.0,
        "A<=s1*int zeta(s1+1,u)u^-s2du": sa.a_value <= sa.a_mid_bound,
        "s1*int zeta(s1+1,u)u^-s2du<=s1*zeta(s1+1)/(s2-1)": sa.a_mid_bound <= sa.a_bound,
    }
    extras = {
        "zeta2_integral": sa.exact,
        "A_bound": sa.a_bound,
        "A_mid_bound": sa.a_mid_bound,
        "quadrature_error": sa.error,
    }
    if sa.closed_form is not None:
        extras["closed_form_approx"] = sa.closed_form
        checks["closed_form_matches_quadrature"] = (
            abs(sa.closed_form - sa.approx) <= DUAL_ROUTE_TOL * abs(sa.closed_form)
        )
    return VerificationReport.from_terms(
        "theorem1", (s1, s2), terms, series, tolerance, checks=checks, extras=extras
    )


def _zeta3_args(s1, s2, s3):
    args = tuple(float(s) for s in (s1, s2, s3))
    if not all(math.isfinite(s) and s > 1.0 for s in args):
        raise DomainError(f"the zeta_3 decomposition needs s1, s2, s3 > 1, got {args}")
    return args


def zeta3_terms_estimate(
    s1: float, s2: float, s3: float, cfg: EvaluationConfig | None = None
) -> tuple[dict[str, float], float]:
    """The eight signed terms of :func:`zeta3_terms` and an error estimate of their sum."""
    s1, s2, s3 = _zeta3_args(s1, s2, s3)
    cfg = resolve(cfg)
    z1 = riemann_zeta(s1, cfg)
    r_a = integrate_product([Step(s1), Smooth(s2 + 1.0), Smooth(s3)], cfg)
    r_b = integrate_product([Step(s1), Smooth(s2), Smooth(s3 + 1.0)], cfg)
    r_c = integrate_product([Step(s1), Step(s2), Smooth(s3 + 1.0)], cfg)
    i_a, i_b, i_c = r_a.value, r_b.value, r_c.value
    d_a = zeta2_series_estimate(s1, s2 + s3, cfg)
    d_b = zeta2_series_estimate(s1 + s2, s3, cfg)
    d_c = zeta2_series_estimate(s3, s2, cfg)
    terms = {
        "zeta(s1)zeta(s2)zeta(s3)": z1 * riemann_zeta(s2, cfg) * riemann_zeta(s3, cfg),
        "-zeta2(s1,s2+s3)": -d_a.value,
        "-zeta2(s1+s2,s3)": -d_b.value,
        "-zeta(s1)zeta2(s3,s2)": -z1 * d_c.value,
        "-zeta(s1+s2+s3)": -riemann_zeta(s1 + s2 + s3, cfg),
        "-s2*int zeta(s1,[u]+1)zeta(s2+1,u)zeta(s3,u)du": -s2 * i_a,
        "-s3*int zeta(s1,[u]+1)zeta(s2,u)zeta(s3+1,u)du": -s3 * i_b,
        "+s3*int zeta(s1,[u]+1)zeta(s2,[u]+1)zeta(s3+1,u)du": s3 * i_c,
    }
    quad = s2 * r_a.total_error + s3 * (r_b.total_error + r_c.total_error)
    series = d_a.error + d_b.error + z1 * d_c.error
    rounding = 16.0 * EPS * fsum(abs(v) for v in terms.values())
    return terms, quad + series + rounding


def zeta3_terms(
    s1: float, s2: float, s3: float, cfg: EvaluationConfig | None = None
) -> dict[str, float]:
    """The eight signed terms whose sum is ``zeta_3(s1, s2, s3)``.

    Double zeta values come from the series (not the integral route) so the
    check stays independent of the ``zeta_2`` representation.  Note the
    argument order of ``zeta_2(s3, s2)``.
    """
    return zeta3_terms_estimate(s1, s2, s3, cfg)[0]


def zeta3_integral(s1: float, s2: float, s3: float, cfg: EvaluationConfig | None = None) -> float:
    """``zeta_3(s1, s2, s3)`` assembled from :func:`zeta3_terms`."""
    return fsum(zeta3_terms(s1, s2, s3, cfg).values())


def verify_theorem2(
    s1: float,
    s2: float,
    s3: float,
    cfg: EvaluationConfig | None = None,
    tolerance: float = THEOREM2_TOL,
) -> VerificationReport:
    """Compare the eight-term decomposition (``lhs``) with the triple series."""
    terms = zeta3_terms(s1, s2, s3, cfg)
    series = zeta3_series(s1, s2, s3, cfg)
    return VerificationReport.from_terms(
        "theorem2", _zeta3_args(s1, s2, s3), terms, series, tolerance
    )


def closed_form_pair_check(s: float, cfg=None, tolerance=CLOSED_FORM_TOL) -> VerificationReport:
    """``int_1^inf zeta(s, u) zeta(s + 1, u) du = zeta(s)^2 / (2s)``."""
    r = integrate_product([Smooth(s), Smooth(s + 1.0)], cfg)
    return VerificationReport.from_terms(
        "closed_form_pair",
        (s,),
        {"int zeta(s,u)zeta(s+1,u)du": r.value},
        riemann_zeta(s, cfg) ** 2 / (2.0 * s),
        tolerance,
        extras={"quadrature_error": r.total_error},
    )


def closed_form_triple_check(s: float, cfg=None, tolerance=CLOSED_FORM_TOL) -> VerificationReport:
    """``int_1^inf zeta(s, u)^2 zeta(s + 1, u) du = zeta(s)^3 / (3s)``."""
    r = integrate_product([Smooth(s), Smooth(s), Smooth(s + 1.0)], cfg)
    return VerificationReport.from_terms(
        "closed_form_triple",
        (s,),
        {"int zeta(s,u)^2 zeta(s+1,u)du": r.value},
        riemann_zeta(s, cfg) ** 3 / (3.0 * s),
        tolerance,
        extras={"quadrature_error": r.total_error},
    )


def odd_gap_check(a: float, b: float, cfg=None, tolerance=CLOSED_FORM_TOL) -> VerificationReport:
    """Quadrature of ``int zeta(a, u) zeta(b, u) du`` against the recurrence."""
    r = integrate_product([Smooth(a), Smooth(b)], cfg)
    return VerificationReport.from_terms(
        "odd_gap_recurrence",
        (a, b),
        {"int zeta(a,u)zeta(b,u)du": r.value},
        smooth_pair_closed_form(a, b, cfg),
        tolerance,
        extras={"quadrature_error": r.total_error},
    )


def even_gap_check(s1: float, s2: float, cfg=None, tolerance=DUAL_ROUTE_TOL) -> VerificationReport:
    """Both routes for ``s1 int zeta(s1 + 1, u) zeta(s2, u) du`` with even ``s2 - s1``."""
    s1, s2 = _zeta2_args(s1, s2)
    if not _even_gap(s1, s2):
        raise DomainError(f"s2 - s1 must be an even positive integer, got {s2 - s1!r}")
    r = integrate_product([Smooth(s1 + 1.0), Smooth(s2)], cfg)
    return VerificationReport.from_terms(
        "even_gap_approx",
        (s1, s2),
        {"s1*int zeta(s1+1,u)zeta(s2,u)du": s1 * r.value},
        s1 * smooth_pair_closed_form(s1 + 1.0, s2, cfg),
        tolerance,
        extras={"quadrature_error": s1 * r.total_error},
    )


def tornheim_reduction_check(
    s1: float, s3: float, cfg=None, tolerance=TORNHEIM_TOL
) -> VerificationReport:
    """``T(s1, 0, s3) = zeta_2(s1, s3)``."""
    return VerificationReport.from_terms(
        "tornheim_reduction",
        (s1, 0.0, s3),
        {"T(s1,0,s3)": tornheim_series(s1, 0.0, s3, cfg)},
        zeta2_series(s1, s3, cfg),
        tolerance,
    )


# suite name -> list of (check, default points)
SUITES = {
    "theorem1": [(verify_theorem1, THEOREM1_GRID)],
    "theorem2": [(verify_theorem2, THEOREM2_POINTS)],
    "reflection": [(reflection_check, REFLECTION_GRID)],
    "closed-forms": [
        (closed_form_pair_check, PAIR_POINTS),
        (closed_form_triple_check, TRIPLE_POINTS),
        (odd_gap_check, ODD_GAP_POINTS),
        (even_gap_check, EVEN_GAP_POINTS),
    ],
    "tornheim-reduction": [(tornheim_reduction_check, TORNHEIM_GRID)],
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def suite_jobs(name: str, points=None):
    """``(check, args)`` pairs for a suite, in a fixed order.

    ``points`` overrides the default grid; it is only accepted for suites
    made of a single check.
    """
    if name == "all":
        if points is not None:
            raise DomainError("custom grids are not supported for the 'all' suite")
        return [job for suite in SUITES for job in suite_jobs(suite)]
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    entries = SUITES[name]
    if points is not None:
        if len(entries) != 1:
            raise DomainError(f"suite {name!r} combines several checks; use its default grid")
        return [(entries[0][0], tuple(p)) for p in points]
    return [(check, tuple(p)) for check, grid in entries for p in grid]


def run_suite(name: str, points=None, cfg: EvaluationConfig | None = None):
    cfg = resolve(cfg)
    return [check(*args, cfg=cfg) for check, args in suite_jobs(name, points)]
