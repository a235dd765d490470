import pytest

from mzeta import DomainError, EvaluationConfig, MZetaError
from mzeta.config import DEFAULT_CONFIG, resolve


def test_defaults():
    cfg = EvaluationConfig()
    assert cfg == DEFAULT_CONFIG and resolve(None) is DEFAULT_CONFIG
    assert cfg.quad_order == 20 and cfg.rel_tol == 1e-12


@pytest.mark.parametrize(
    "kwargs",
    [
        {"rel_tol": 0.0},
        {"rel_tol": 1.0},
        {"em_terms": 0},
        {"em_bernoulli_depth": 16},
        {"quad_order": 3},
        {"max_segments": 4},
    ],
)
def test_invalid_configs(kwargs):
    with pytest.raises(DomainError):
        EvaluationConfig(**kwargs)


def test_with_tol_and_error_hierarchy():
    assert EvaluationConfig().with_tol(1e-9).rel_tol == 1e-9
    assert issubclass(DomainError, MZetaError) and issubclass(DomainError, ValueError)
