import itertools
from fractions import Fraction

import pytest

from src.crosscheck import nonsingular_coefficients
from src.curve import make_curve, on_curve, rational_points
from src.errors import PointNotOnCurve, SingularCurve, WrongCurveShape
from src.field import FieldSpec, FieldValue
from src.oracle import INFINITY, ECPoint, c23_negate_y, ec_add, ec_enumerate, ec_mul


def point(spec, x, y):
    return ECPoint(FieldValue(spec, x), FieldValue(spec, y))


def test_enumerate_gf5():
    order, points = ec_enumerate(3, 0, 5)
    assert order == 10
    assert points[-1] is INFINITY
    assert [(P.x.value, P.y.value) for P in points[:-1]] == [
        (0, 0), (1, 2), (1, 3), (2, 2), (2, 3), (3, 1), (3, 4), (4, 1), (4, 4),
    ]


def test_add_gf5(gf5):
    a, b = FieldValue(gf5, 3), FieldValue(gf5, 0)
    P = point(gf5, 1, 2)
    assert ec_add(P, P, a, b) == point(gf5, 4, 1)
    assert ec_add(P, -P, a, b) is INFINITY
    assert ec_add(INFINITY, P, a, b) == P
    assert ec_add(point(gf5, 0, 0), point(gf5, 1, 2), a, b) == point(gf5, 3, 4)


def test_mul_over_rationals(qq):
    a, b = FieldValue(qq, 3), FieldValue(qq, 0)
    P = point(qq, 1, 2)
    assert ec_mul(P, 2, a, b) == point(qq, Fraction(1, 4), Fraction(-7, 8))
    assert ec_mul(P, -1, a, b) == point(qq, 1, -2)
    assert ec_mul(P, 0, a, b) is INFINITY
    assert not ec_mul(P, 6, a, b).is_infinity
    assert ec_add(point(qq, 0, 0), P, a, b) == point(qq, 3, -6)


def test_lagrange_by_enumeration():
    order, points = ec_enumerate(2, 3, 7)
    spec = FieldSpec.gf(7)
    a, b = FieldValue(spec, 2), FieldValue(spec, 3)
    for P in points:
        assert ec_mul(P, order, a, b).is_infinity


def test_rejects_bad_curves(gf5):
    with pytest.raises(SingularCurve):
        ec_enumerate(0, 0, 5)
    spec = FieldSpec.gf(3)
    with pytest.raises(WrongCurveShape):
        ec_add(INFINITY, INFINITY, FieldValue(spec, 1), FieldValue(spec, 1))


def test_rejects_points_off_the_curve(gf5):
    a, b = FieldValue(gf5, 3), FieldValue(gf5, 0)
    with pytest.raises(PointNotOnCurve):
        ec_add(point(gf5, 1, 1), INFINITY, a, b)


def test_negate_y_short_form(elliptic_q):
    assert c23_negate_y(elliptic_q, 3, 6).value == -6


def test_negate_y_general_form(gf5):
    curve = make_curve(gf5, ("x", "y"), (2, 3), ["y^2 + x*y + y - x^3 - 1"])
    points = rational_points(curve)
    assert points
    for alpha, beta in points:
        other = c23_negate_y(curve, alpha, beta)
        assert on_curve(curve, (alpha, other))
        assert beta + other == -(alpha + 1)


def test_negate_y_needs_genus_one(miura_gf5):
    with pytest.raises(WrongCurveShape):
        c23_negate_y(miura_gf5, 2, 2)


def test_negate_y_point_off_curve(elliptic_q):
    with pytest.raises(PointNotOnCurve):
        c23_negate_y(elliptic_q, 1, 1)


def test_mul_checks_the_point(gf5):
    a, b = FieldValue(gf5, 3), FieldValue(gf5, 0)
    with pytest.raises(PointNotOnCurve):
        ec_mul(point(gf5, 1, 1), 0, a, b)
    with pytest.raises(SingularCurve):
        ec_mul(INFINITY, 0, FieldValue(gf5, 0), FieldValue(gf5, 0))


@pytest.mark.parametrize("a, b, p", [(3, 0, 5), (2, 3, 7), (1, 1, 11)])
def test_chord_tangent_group_law(a, b, p):
    spec = FieldSpec.gf(p)
    fa, fb = FieldValue(spec, a), FieldValue(spec, b)
    _, points = ec_enumerate(a, b, p)
    for P in points:
        assert ec_add(P, -P, fa, fb) is INFINITY
        assert ec_add(P, INFINITY, fa, fb) == P
    for P, Q in itertools.product(points, repeat=2):
        assert ec_add(P, Q, fa, fb) == ec_add(Q, P, fa, fb)
    for P, Q, R in itertools.product(points, repeat=3):
        assert ec_add(ec_add(P, Q, fa, fb), R, fa, fb) == ec_add(P, ec_add(Q, R, fa, fb), fa, fb)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_group_order_within_hasse_bound(p):
    for a, b in nonsingular_coefficients(p):
        order, _ = ec_enumerate(a, b, p)
        assert (order - p - 1) ** 2 <= 4 * p
