import math

from bloch_lab.utils import (
    DomainError,
    ParameterRegimeError,
    PreconditionError,
    QuadratureError,
    SolverError,
    validate_closed_interval,
    validate_finite,
    validate_half_open_unit,
    validate_in_unit_ball,
    validate_positive,
    validate_positive_int,
    validate_radius,
)
import pytest


def test_error_hierarchy():
    assert issubclass(DomainError, ValueError)
    assert issubclass(ParameterRegimeError, ValueError)
    assert issubclass(PreconditionError, ValueError)
    assert issubclass(SolverError, RuntimeError)
    assert issubclass(QuadratureError, RuntimeError)


def test_errors_carry_context():
    assert DomainError("x", limit=0.5).limit == 0.5
    assert SolverError("x", bracket=(0.1, 0.2)).bracket == (0.1, 0.2)
    assert QuadratureError("x", error_estimate=1e-3).error_estimate == 1e-3


@pytest.mark.parametrize("value", [math.nan, math.inf, complex(1, math.inf)])
def test_validate_finite_rejects(value):
    with pytest.raises(ValueError):
        validate_finite(value, "x")


def test_validate_positive():
    validate_positive(0.1, "x")
    with pytest.raises(ValueError, match="положительным"):
        validate_positive(0.0, "x")


def test_validate_positive_int():
    validate_positive_int(3, "n")
    validate_positive_int(0, "k", minimum=0)
    for bad in (0, 1.5, True, "2"):
        with pytest.raises(ValueError):
            validate_positive_int(bad, "n")


def test_validate_half_open_unit():
    validate_half_open_unit(1.0, "lambda")
    for bad in (0.0, 1.0 + 1e-12, -0.5):
        with pytest.raises(ValueError, match=r"\(0, 1\]"):
            validate_half_open_unit(bad, "lambda")


def test_validate_closed_interval():
    validate_closed_interval(0.0, "x", 0.0, 1.0)
    with pytest.raises(DomainError):
        validate_closed_interval(1.1, "x", 0.0, 1.0)


def test_validate_radius_slack_and_limit():
    validate_radius(0.5 * (1 + 1e-14), "r", 0.5)
    with pytest.raises(DomainError) as info:
        validate_radius(0.6, "r", 0.5)
    assert info.value.limit == 0.5
    with pytest.raises(DomainError):
        validate_radius(0.5, "r", 0.5, inclusive=False)
    with pytest.raises(DomainError):
        validate_radius(-0.1, "r", 0.5)


def test_validate_in_unit_ball():
    validate_in_unit_ball(0.999)
    with pytest.raises(DomainError):
        validate_in_unit_ball(1.0)
