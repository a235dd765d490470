"""Hurwitz, Euler-Zagier and Tornheim zeta values for real arguments.

The package evaluates the Hurwitz zeta function by Euler-Maclaurin
summation, sums double and triple Euler-Zagier series and the Tornheim
double series with asymptotic tail corrections, and integrates products of
Hurwitz factors over ``[1, inf)`` with stepped (``zeta(s, [u] + 1)``) factors.
The integral representations of ``zeta_2`` and ``zeta_3`` are checked
against the series.
"""

from .config import AccuracyError, DomainError, EvaluationConfig, MZetaError
from .hurwitz import (
    ZetaArgument,
    hurwitz_du,
    hurwitz_zeta,
    riemann_zeta,
    step_hurwitz,
)
from .identities import (
    SmoothApprox,
    VerificationReport,
    verify_theorem1,
    verify_theorem2,
    zeta2_integral,
    zeta2_smooth_approx,
    zeta3_integral,
)
from .quadrature import (
    IntegrandFactor,
    Power,
    QuadratureResult,
    Smooth,
    Step,
    integrate_product,
    smooth_pair_closed_form,
)
from .series import reflection_check, tornheim_series, zeta2_series, zeta3_series

__all__ = [
    "AccuracyError",
    "DomainError",
    "EvaluationConfig",
    "IntegrandFactor",
    "MZetaError",
    "Power",
    "QuadratureResult",
    "Smooth",
    "SmoothApprox",
    "Step",
    "VerificationReport",
    "ZetaArgument",
    "hurwitz_du",
    "hurwitz_zeta",
    "integrate_product",
    "reflection_check",
    "riemann_zeta",
    "smooth_pair_closed_form",
    "step_hurwitz",
    "tornheim_series",
    "verify_theorem1",
    "verify_theorem2",
    "zeta2_integral",
    "zeta2_series",
    "zeta2_smooth_approx",
    "zeta3_integral",
    "zeta3_series",
]

__version__ = "0.1.0"
