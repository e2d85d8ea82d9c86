"""Shared curves for the test suite"""
import pytest

from src.curve import make_curve, point_ideal
from src.field import FieldSpec


@pytest.fixture
def qq():
    return FieldSpec.rationals()


@pytest.fixture
def gf5():
    return FieldSpec.gf(5)


@pytest.fixture
def elliptic_q(qq):
    """y^2 = x^3 + 3x over the rationals"""
    return make_curve(qq, ("x", "y"), (2, 3), ["y^2 - x^3 - 3*x"])


@pytest.fixture
def elliptic_gf5(gf5):
    """y^2 = x^3 + 3x over GF(5): ten points including infinity"""
    return make_curve(gf5, ("x", "y"), (2, 3), ["y^2 - x^3 - 3*x"])


@pytest.fixture
def miura_gf5(gf5):
    """y^2 = x^3 + 1, z^2 = xy + 1 over GF(5), genus 4"""
    return make_curve(gf5, ("x", "y", "z"), (4, 6, 5), ["y^2 - x^3 - 1", "z^2 - x*y - 1"])


@pytest.fixture
def session_ideals(elliptic_q):
    J = point_ideal(elliptic_q, (0, 0))
    K = point_ideal(elliptic_q, (1, 2))
    return J, K
