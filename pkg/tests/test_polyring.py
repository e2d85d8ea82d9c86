import itertools
import random
from fractions import Fraction
from functools import cmp_to_key

import pytest

from src.errors import ArityMismatch, PolynomialSyntaxError, RingMismatch, UnknownVariable, WeightsNotCoprime
from src.polyring import (
    MiuraOrder, Ordering, PolyRing, leading_term, mono_cmp, mono_mul, monomials_up_to, p_arith, parse_poly,
    pole_order, psi,
)


@pytest.fixture
def ring_q(qq):
    return PolyRing(qq, ("x", "y"), MiuraOrder((2, 3)))


@pytest.fixture
def ring_xyz(gf5):
    return PolyRing(gf5, ("x", "y", "z"), MiuraOrder((4, 6, 5)))


def test_psi_and_order():
    order = MiuraOrder((4, 6, 5))
    assert psi((1, 1, 0), order) == 10
    assert psi((0, 0, 2), order) == 10
    # equal weight: the larger exponent at the first difference is smaller
    assert mono_cmp((0, 0, 2), (1, 1, 0), order) == Ordering.GREATER
    assert mono_cmp((3, 0, 0), (0, 2, 0), order) == Ordering.LESS
    assert mono_cmp((1, 0, 0), (0, 0, 1), order) == Ordering.LESS
    assert mono_cmp((2, 0, 0), (2, 0, 0), order) == Ordering.EQUAL


def test_order_needs_coprime_weights():
    with pytest.raises(WeightsNotCoprime):
        MiuraOrder((2, 4))


def test_elimination_prefix_dominates():
    order = MiuraOrder((2, 3)).with_elimination()
    assert order.compare((1, 0, 0), (0, 5, 5)) == Ordering.GREATER
    assert order.psi((1, 1, 1)) == 5


def test_arity_checked():
    with pytest.raises(ArityMismatch):
        MiuraOrder((2, 3)).psi((1, 2, 3))


def test_parse_and_format(ring_q):
    f = parse_poly("y^2 - x^3 - 3*x", ring_q)
    assert str(f) == "y^2 - x^3 - 3*x"
    assert f.leading_monomial == (0, 2)
    assert pole_order(f) == 6
    m, c = leading_term(f)
    assert m == (0, 2) and c.value == 1


def test_format_over_gf5(gf5):
    ring = PolyRing(gf5, ("x", "y"), MiuraOrder((2, 3)))
    assert str(ring.parse("y^2 - x^3 - 3*x")) == "y^2 + 4*x^3 + 2*x"
    assert str(ring.zero()) == "0"


def test_juxtaposed_coefficients(ring_q):
    assert ring_q.parse("2x") == ring_q.parse("2*x")
    assert ring_q.parse("-x^2 + 1/2 x*y") == ring_q.parse("-1*x^2 + 1/2*x*y")


def test_rational_coefficients_print_signs(ring_q):
    assert str(ring_q.parse("x - 7/8")) == "x - 7/8"
    assert str(ring_q.parse("-2*x^3 + x*y")) == "-2*x^3 + x*y"


def test_unknown_variable_position(ring_q):
    with pytest.raises(UnknownVariable) as excinfo:
        ring_q.parse("x + w")
    assert excinfo.value.position == 4


@pytest.mark.parametrize("text", ["x +", "x ^", "*x", "x y", "1/0*x", ""])
def test_syntax_errors(ring_q, text):
    with pytest.raises(PolynomialSyntaxError):
        ring_q.parse(text)


def test_arithmetic(ring_q):
    x, y = ring_q.gens()
    assert (x + 1) * (x - 1) == x ** 2 - 1
    assert (x - x).is_zero()
    assert 3 - x == -(x - 3)
    assert p_arith("mul", x, y) == ring_q.parse("x*y")
    assert p_arith("scale", x, Fraction(1, 2)) == ring_q.parse("1/2*x")


def test_rings_do_not_mix(ring_q, gf5):
    other = PolyRing(gf5, ("x", "y"), MiuraOrder((2, 3)))
    with pytest.raises(RingMismatch):
        ring_q.gen("x") + other.gen("x")


def test_monic_and_content(ring_q, gf5):
    ring = PolyRing(gf5, ("x", "y"), MiuraOrder((2, 3)))
    assert ring.parse("2*x + 1").monic() == ring.parse("x + 3")
    assert ring_q.parse("1/2*x + 1/3").content_free() == ring_q.parse("3*x + 2")
    assert ring_q.parse("-4*y + 2").content_free() == ring_q.parse("2*y - 1")


def test_evaluate_and_derivative(ring_q):
    f = ring_q.parse("y^2 - x^3 - 3*x")
    assert f.evaluate((1, 2)).is_zero()
    assert f.evaluate((3, 6)).is_zero()
    assert f.evaluate((1, 1)).value == -3
    assert f.derivative("x") == ring_q.parse("-3*x^2 - 3")
    assert f.derivative(1) == ring_q.parse("2*y")


def test_three_variable_leading_monomial(ring_xyz):
    f = ring_xyz.parse("z^2 - x*y - 1")
    assert f.leading_monomial == (0, 0, 2)
    assert f.pole_order() == 10


def test_monomials_up_to():
    found = set(monomials_up_to((2, 3), 6))
    assert found == {(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1), (0, 2)}


ORDER_WEIGHTS = [(2, 3), (4, 6, 5)]


@pytest.mark.parametrize("weights", ORDER_WEIGHTS)
def test_order_is_a_total_order(weights):
    order = MiuraOrder(weights)
    monomials = list(monomials_up_to(weights, 30))
    for m, n in itertools.combinations(monomials, 2):
        assert mono_cmp(m, n, order) != Ordering.EQUAL
        assert mono_cmp(m, n, order) == -mono_cmp(n, m, order)
    ranked = sorted(monomials, key=cmp_to_key(lambda m, n: mono_cmp(m, n, order)))
    for i, j in itertools.combinations(range(len(ranked)), 2):
        assert mono_cmp(ranked[i], ranked[j], order) == Ordering.LESS


@pytest.mark.parametrize("weights", ORDER_WEIGHTS)
def test_constant_monomial_is_the_minimum(weights):
    order = MiuraOrder(weights)
    one = (0,) * len(weights)
    for m in monomials_up_to(weights, 30):
        if m != one:
            assert mono_cmp(one, m, order) == Ordering.LESS


@pytest.mark.parametrize("weights", ORDER_WEIGHTS)
def test_order_is_multiplicative(weights):
    order = MiuraOrder(weights)
    monomials = list(monomials_up_to(weights, 30))
    shifts = list(monomials_up_to(weights, 10))
    for m, n in itertools.combinations(monomials, 2):
        expected = mono_cmp(m, n, order)
        for w in shifts:
            assert mono_cmp(mono_mul(m, w), mono_mul(n, w), order) == expected


def random_polynomial(ring, rng, monomials):
    chosen = rng.sample(monomials, rng.randint(1, 5))
    return ring.from_terms({m: rng.randrange(1, ring.field.p) for m in chosen})


def test_psi_is_additive():
    order = MiuraOrder((4, 6, 5))
    monomials = list(monomials_up_to((4, 6, 5), 20))
    for m, n in itertools.product(monomials, repeat=2):
        assert psi(mono_mul(m, n), order) == psi(m, order) + psi(n, order)


def test_leading_monomial_of_product(ring_xyz):
    rng = random.Random(5)
    monomials = list(monomials_up_to((4, 6, 5), 24))
    for _ in range(50):
        f = random_polynomial(ring_xyz, rng, monomials)
        g = random_polynomial(ring_xyz, rng, monomials)
        assert (f * g).leading_monomial == mono_mul(f.leading_monomial, g.leading_monomial)
        assert pole_order(f * g) == pole_order(f) + pole_order(g)
