import json
import math

import pytest

from mzeta import (
    DomainError,
    SmoothApprox,
    VerificationReport,
    riemann_zeta,
    verify_theorem1,
    verify_theorem2,
    zeta2_integral,
    zeta2_series,
    zeta2_smooth_approx,
    zeta3_integral,
    zeta3_series,
)
from mzeta.identities import (
    SUITE_NAMES,
    THEOREM1_GRID,
    THEOREM2_TOL,
    even_gap_check,
    run_suite,
    suite_jobs,
    theorem1_tolerance,
    zeta3_terms,
    zeta3_terms_estimate,
)
from mzeta.report import FIELDS

from oracles import zeta2_at_one

SWAP_TERM = "-zeta(s1)zeta2(s3,s2)"
LAST_TERM = "+s3*int zeta(s1,[u]+1)zeta(s2,[u]+1)zeta(s3+1,u)du"


def test_zeta2_integral_route():
    assert zeta2_integral(2.0, 2.0) == pytest.approx(zeta2_series(2.0, 2.0), rel=1e-12)
    assert zeta2_integral(1.0, 2.0) == pytest.approx(riemann_zeta(3.0), rel=1e-12)


@pytest.mark.parametrize("s2", [1.01, 1.1, 1.2])
def test_integral_route_near_boundary(s2):
    # s1 + s2 just above 2, where the integrand decays only like u^-s2.
    assert zeta2_integral(1.0, s2) == pytest.approx(zeta2_at_one(s2), rel=1e-6)


def test_theorem1_report_shape():
    rep = verify_theorem1(2.0, 3.0)
    assert rep.identity_name == "theorem1" and rep.args == (2.0, 3.0)
    assert rep.ok and rep.terms_consistent()
    assert math.fsum(rep.detail.values()) == rep.lhs
    assert set(rep.checks) >= {"0<=A"}
    d = json.loads(rep.to_json())
    assert tuple(d) == FIELDS


def test_theorem1_tolerance_regimes():
    assert theorem1_tolerance(1.0, 2.0) == 1e-6
    assert theorem1_tolerance(1.5, 2.0) == 1e-8
    assert theorem1_tolerance(2.0, 2.0) == 1e-8


def test_smooth_approximation_gap():
    sa = zeta2_smooth_approx(2.0, 4.0)
    assert isinstance(sa, SmoothApprox)
    approx, a_value, a_bound = sa
    assert 0 <= a_value <= sa.a_mid_bound <= a_bound
    assert sa.closed_form == pytest.approx(approx, rel=1e-9)
    assert approx - a_value == pytest.approx(zeta2_series(2.0, 4.0), rel=1e-12)


def test_theorem2_point():
    rep = verify_theorem2(2.0, 3.0, 2.0)
    assert rep.ok and len(rep.detail) == 8
    assert zeta3_integral(2.0, 2.0, 2.0) == pytest.approx(math.pi**6 / 5040, rel=1e-10)


def test_zeta3_error_estimate_covers_discrepancy():
    for args in [(2.0, 2.0, 2.0), (3.0, 2.0, 4.0)]:
        terms, err = zeta3_terms_estimate(*args)
        assert abs(math.fsum(terms.values()) - zeta3_series(*args)) <= err + 1e-15


@pytest.mark.parametrize("args", [(2.0, 3.0, 2.0), (3.0, 2.0, 4.0)])
def test_swapped_double_zeta_is_detected(args):
    s1, s2, s3 = args
    terms = zeta3_terms(*args)
    terms[SWAP_TERM] = -riemann_zeta(s1) * zeta2_series(s2, s3)
    wrong = math.fsum(terms.values())
    series = zeta3_series(*args)
    assert abs(wrong - series) > THEOREM2_TOL * abs(series)


@pytest.mark.parametrize("args", [(2.0, 3.0, 2.0), (3.0, 2.0, 4.0)])
def test_flipped_last_integral_is_detected(args):
    terms = zeta3_terms(*args)
    terms[LAST_TERM] = -terms[LAST_TERM]
    wrong = math.fsum(terms.values())
    series = zeta3_series(*args)
    assert abs(wrong - series) > THEOREM2_TOL * abs(series)


def test_domain_errors():
    with pytest.raises(DomainError):
        verify_theorem1(0.5, 2.0)
    with pytest.raises(DomainError):
        verify_theorem2(1.0, 2.0, 2.0)
    with pytest.raises(DomainError):
        even_gap_check(2.0, 5.0)


def test_report_compare_uses_absolute_error_for_small_reference():
    rep = VerificationReport.compare("x", (1.0,), 1e-3 + 5e-10, 1e-3, 1e-9)
    assert rep.passed and rep.rel_err > 1e-9
    big = VerificationReport.compare("x", (1.0,), 10.0 + 1e-6, 10.0, 1e-9)
    assert not big.passed


def test_failing_check_makes_report_not_ok():
    rep = VerificationReport.compare("x", (), 1.0, 1.0, 1e-9, checks={"bound": False})
    assert rep.passed and not rep.ok
    assert rep.to_dict()["passed"] is False


def test_suite_layout():
    assert SUITE_NAMES[-1] == "all"
    assert len(suite_jobs("theorem1")) == len(THEOREM1_GRID) == 16
    assert len(suite_jobs("all")) == sum(len(suite_jobs(n)) for n in SUITE_NAMES[:-1])
    assert suite_jobs("theorem1", [(2, 2)])[0][1] == (2, 2)
    with pytest.raises(DomainError):
        suite_jobs("closed-forms", [(2.0,)])
    with pytest.raises(DomainError):
        suite_jobs("nope")


def test_all_suites_pass():
    reports = run_suite("all")
    failed = [(r.identity_name, r.args, r.rel_err) for r in reports if not r.ok]
    assert not failed
