import math

import pytest

from gcwe.qlimit import QValue, f_coefficient, limit_checks, q_number


@pytest.mark.parametrize("bad", [0, 1, -0.5, 1.5])
def test_qvalue_range(bad):
    with pytest.raises(ValueError):
        QValue(bad)


def test_q_numbers_small_cases():
    q = 0.3
    assert q_number(0, q) == 0.0
    assert math.isclose(q_number(1, q), 1.0)
    assert math.isclose(q_number(2, q), q + 1 / q)
    assert math.isclose(q_number(3, q), q**2 + 1 + q**-2)


@pytest.mark.parametrize("q", [0.2, 0.5, 0.9])
def test_q_number_approaches_integer_as_q_to_one(q):
    # [x]_q is symmetric under q -> 1/q and tends to x only as q -> 1
    assert q_number(3, q) >= 3.0
    assert math.isclose(q_number(3, 0.999999), 3.0, rel_tol=1e-6)


def test_f_coefficient_boundaries():
    assert f_coefficient("3/2", "3/2", "+", 0.1) == 0.0
    assert f_coefficient("3/2", "-3/2", "-", 0.1) == 0.0
    assert f_coefficient(1, 0, "+", 0.1) == pytest.approx(f_coefficient(1, 0, "-", 0.1))
    with pytest.raises(ValueError):
        f_coefficient(1, 0, "up", 0.1)
    with pytest.raises(ValueError):
        f_coefficient(1, 2, "+", 0.1)


def test_report_shape_and_failures():
    rep = limit_checks(1e-4, max_x=4, max_j=2)
    assert list(rep.q_numbers) == ["x=1", "x=2", "x=3", "x=4"]
    assert len(rep.casimir) == 4
    # 2j non-vanishing F per sign over j = 1/2 .. 2
    assert len(rep.f_coefficients) == sum(2 * t for t in range(1, 5))
    assert rep.failures(1.0) == []
    assert rep.to_dict()["q"] == 1e-4
    assert "EXCEEDS" in rep.to_text(1e-12)


def test_deviation_shrinks_with_q():
    assert limit_checks(1e-6).max_deviation() < limit_checks(1e-3).max_deviation()
