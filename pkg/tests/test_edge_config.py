# tests/test_edge_config.py

from fractions import Fraction

import pytest

from exceptions import ConfigValidationError
from services.angle_service import Angle
from services.surgery import validate_config
from services.surgery.edge_config import check_nonreturn, determine_signs, first_return_numbers


def test_fig2_is_valid(fig2_cfg):
    assert (fig2_cfg.k_v, fig2_cfg.k_w, fig2_cfg.k_tilde_v, fig2_cfg.k_tilde_w) == (7, 4, 4, 7)
    assert (fig2_cfg.sigma_v, fig2_cfg.sigma_w) == (1, -1)
    assert (fig2_cfg.s_v, fig2_cfg.s_w) == (Fraction(0), Fraction(1, 2))
    assert fig2_cfg.warnings == ()


def test_minus_plus_and_dict(fig2_cfg):
    assert [str(t) for t in fig2_cfg.minus] == ["11/56", "199/1008", "103/504", "23/112"]
    assert [str(t) for t in fig2_cfg.plus] == ["15/56", "269/1008", "131/504", "29/112"]
    assert fig2_cfg.as_dict()["theta1_plus"] == "15/56"


def test_first_return_and_signs(fig2_cfg):
    assert first_return_numbers(fig2_cfg.theta) == (7, 4, 4, 7)
    assert determine_signs(fig2_cfg.theta, 7, 4, 4, 7) == (1, -1)


def test_in_support(fig2_cfg):
    assert fig2_cfg.in_support("1/5")
    assert fig2_cfg.in_support("25/127")
    assert fig2_cfg.in_support("33/127")
    assert not fig2_cfg.in_support("11/56")
    assert not fig2_cfg.in_support("1/2")
    # între Θ_4^- și Θ_4^+ nu este în E
    assert not fig2_cfg.in_support("13/56")


def replaced(angles, index, value):
    changed = list(angles)
    changed[index] = value
    return changed


@pytest.mark.parametrize("mutate, code", [
    (lambda a: a[:7], "format"),
    (lambda a: [a[0], a[2], a[1], *a[3:]], "ordering"),
    (lambda a: replaced(a, 0, "25/127"), "preperiodic"),
    (lambda a: replaced(a, 7, "1/2"), "colanding"),
])
def test_invalid_configs(fig2_angles, mutate, code):
    with pytest.raises(ConfigValidationError) as error:
        validate_config(mutate(list(fig2_angles)))
    assert error.value.code == code
    assert error.value.angles


def test_zero_first_angle_is_rejected(fig2_angles):
    with pytest.raises(ConfigValidationError) as error:
        validate_config(replaced(fig2_angles, 0, "0/1"))
    assert error.value.code == "ordering"


def test_nonreturn_failure():
    theta = [Angle.parse(t) for t in ("1/8", "5/32", "3/16", "7/32", "9/32", "5/16", "11/32", "3/8")]
    with pytest.raises(ConfigValidationError) as error:
        check_nonreturn(theta)
    assert error.value.code == "nonreturn"
    # 1/8 -> 1/4 este deja în (1/8, 3/8)
    assert error.value.angles == ["1/8"]


def test_nonreturn_exact_hits_are_warnings():
    theta = [Angle.parse(t) for t in ("1/4", "9/32", "5/16", "11/32", "45/128", "23/64", "47/128", "3/8")]
    warnings = check_nonreturn(theta)
    assert warnings
    assert any("11/32" in w and "3/8" in w for w in warnings)
