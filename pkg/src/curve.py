"""Miura-form curves: validation, genus, points and point ideals"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache, reduce
from typing import Sequence

import numpy as np

from config.settings import CANONICAL_CACHE_SIZE, logger
from src.errors import (
    ArityMismatch, BodyMonomialNotInB, CurveMismatch, LeadingExponentInB, NotMonic, PointNotOnCurve,
    UnitCurveIdeal, WeightsNotCoprime, WrongGeneratorCount, ZeroPolynomial,
)
from src.field import FieldSpec, FieldValue
from src.groebner import Basis, groebner_basis, standard_monomials
from src.ideal import IdealHandle
from src.polyring import MiuraOrder, PolyRing, Polynomial, monomials_up_to


@dataclass(frozen=True)
class CurveRing:
    """
    A nonsingular affine curve in Miura form

    Args:
        ring (PolyRing): K[x_1..x_t] with the weighted order
        generators (tuple): the t - 1 defining polynomials
        basis (Basis): reduced Groebner basis of the curve ideal
        genus (int): number of gaps of the semigroup of weights
    """
    ring: PolyRing
    generators: tuple
    basis: Basis = dc_field(compare=False)
    genus: int = dc_field(compare=False)

    @property
    def field(self) -> FieldSpec:
        return self.ring.field

    @property
    def variables(self) -> tuple:
        return self.ring.variables

    @property
    def order(self) -> MiuraOrder:
        return self.ring.order

    @property
    def weights(self) -> tuple:
        return self.ring.order.weights

    def parse(self, text: str) -> Polynomial:
        return self.ring.parse(text)

    def __str__(self) -> str:
        equations = "; ".join(str(g) for g in self.generators)
        return f"{equations} over {self.ring} with weights {self.weights}"


# Semigroup of weights

def _check_coprime(weights: Sequence[int]) -> tuple:
    weights = tuple(int(a) for a in weights)
    if not weights or any(a < 1 for a in weights):
        raise ValueError(f"Weights must be positive integers, got {weights}")
    if reduce(math.gcd, weights) != 1:
        raise WeightsNotCoprime(f"gcd of weights {weights} is not 1")
    return weights


def semigroup_gaps(weights: Sequence[int]) -> list:
    """
    Positive integers not representable as nonnegative combinations of the weights

    Representable integers are marked by a fixpoint sieve up to a bound past the
    Frobenius number; the conductor is the first run of min(weights) consecutive
    representable integers.
    """
    weights = _check_coprime(weights)
    smallest, largest = min(weights), max(weights)
    limit = smallest * largest + largest
    representable = np.zeros(limit + 1, dtype=bool)
    representable[0] = True
    count = 1
    while True:
        for a in weights:
            representable[a:] |= representable[:-a]
        new_count = int(representable.sum())
        if new_count == count:
            break
        count = new_count
    runs = np.lib.stride_tricks.sliding_window_view(representable, smallest).all(axis=1)
    conductor = int(np.argmax(runs))
    return [int(n) for n in np.flatnonzero(~representable[:conductor])]


def genus(weights: Sequence[int]) -> int:
    """Number of gaps of the numerical semigroup generated by the weights"""
    return len(semigroup_gaps(weights))


# The canonical exponents B

def _fiber(total: int, weights: tuple):
    """Exponent vectors N with Psi(N) == total"""
    if not weights:
        if total == 0:
            yield ()
        return
    head, rest = weights[0], weights[1:]
    for e in range(total // head, -1, -1):
        for tail in _fiber(total - e * head, rest):
            yield (e,) + tail


@lru_cache(maxsize=CANONICAL_CACHE_SIZE)
def canonical_exponent(total: int, weights: tuple):
    """
    The order-minimum of the Psi-fiber over total, or None if total is a gap

    The minimum of a fiber is its lexicographically largest vector.
    """
    return next(_fiber(total, tuple(weights)), None)


def in_B(exponents: Sequence[int], weights: Sequence[int]) -> bool:
    weights = tuple(weights)
    total = sum(n * a for n, a in zip(exponents, weights))
    return canonical_exponent(total, weights) == tuple(exponents)


def canonical_monomials(weights: Sequence[int], bound: int) -> list:
    """B-exponents with Psi <= bound, ascending in Psi"""
    weights = tuple(weights)
    found = [m for m in monomials_up_to(weights, bound) if in_B(m, weights)]
    return sorted(found, key=lambda m: sum(n * a for n, a in zip(m, weights)))


# Construction

def _check_miura_form(F: Polynomial):
    if not F:
        raise ZeroPolynomial("A curve generator is zero")
    order = F.ring.order
    weights = order.weights
    lead = F.leading_monomial
    if in_B(lead, weights):
        raise LeadingExponentInB(f"Leading exponent {lead} of {F} is canonical")
    for m in F.terms:
        if m == lead:
            continue
        if not in_B(m, weights) or order.psi(m) > order.psi(lead):
            raise BodyMonomialNotInB(f"Monomial {m} of {F} is not a canonical exponent below {lead}")
    if F.leading_coefficient != F.ring.field.one:
        raise NotMonic(f"{F} is not monic")


def make_curve(field: FieldSpec, variables: Sequence[str], weights: Sequence[int], gens: Sequence) -> CurveRing:
    """
    Validate and build a Miura curve

    Args:
        field (FieldSpec): coefficient field
        variables: names x_1..x_t
        weights: pole orders a_1..a_t, with gcd 1
        gens: t - 1 generators, as Polynomials or strings

    Returns:
        CurveRing: the curve with its Groebner basis and genus
    """
    weights = _check_coprime(weights)
    ring = PolyRing(field, tuple(variables), MiuraOrder(weights))
    polys = [ring.parse(g) if isinstance(g, str) else g for g in gens]
    if len(polys) != ring.nvars - 1:
        raise WrongGeneratorCount(f"{ring.nvars} variables need {ring.nvars - 1} generators, got {len(polys)}")
    for F in polys:
        _check_miura_form(F)
    basis = groebner_basis(polys, ring)
    if basis.is_unit():
        raise UnitCurveIdeal("The curve generators generate the unit ideal")
    curve = CurveRing(ring, tuple(polys), basis, genus(weights))
    logger.info(f"Curve defined: {curve} (genus {curve.genus})")
    return curve


# Points and point ideals

def _coordinates(curve: CurveRing, coords: Sequence) -> list:
    if len(coords) != curve.ring.nvars:
        raise ArityMismatch(f"{len(coords)} coordinates for {curve.ring.nvars} variables")
    return [c if isinstance(c, FieldValue) else FieldValue(curve.field, c) for c in coords]


def on_curve(curve: CurveRing, coords: Sequence) -> bool:
    values = _coordinates(curve, coords)
    return all(not F.evaluate(values) for F in curve.generators)


def point_ideal(curve: CurveRing, coords: Sequence) -> IdealHandle:
    """The ideal <x_1 - a_1, ..., x_t - a_t> of a point on the curve"""
    values = _coordinates(curve, coords)
    for F in curve.generators:
        if F.evaluate(values):
            point = ", ".join(str(v) for v in values)
            raise PointNotOnCurve(f"({point}) does not satisfy {F} = 0")
    gens = [curve.ring.gen(v) - value for v, value in zip(curve.variables, values)]
    return IdealHandle(curve, gens)


def rational_points(curve: CurveRing) -> list:
    """All affine points over a prime field, by exhaustive search"""
    if not curve.field.is_prime_field:
        raise ValueError("Point enumeration needs a finite field")
    p = curve.field.p
    points = []
    for coords in itertools.product(range(p), repeat=curve.ring.nvars):
        values = [FieldValue(curve.field, c) for c in coords]
        if all(not F.evaluate(values) for F in curve.generators):
            points.append(tuple(values))
    return points


def ideal_degree(curve: CurveRing, ideal: IdealHandle) -> int:
    """Colength of the ideal: the number of its standard monomials"""
    if ideal.curve != curve:
        raise CurveMismatch("Ideal belongs to another curve")
    return len(standard_monomials(ideal.preimage_gb))


# Nonsingularity

def _determinant(rows: list, ring: PolyRing) -> Polynomial:
    if not rows:
        return ring.one()
    total = ring.zero()
    for j, entry in enumerate(rows[0]):
        if not entry:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * _determinant(minor, ring)
        total = total + term if j % 2 == 0 else total - term
    return total


def jacobian_minors(curve: CurveRing) -> list:
    """All maximal minors of the matrix of partial derivatives of the generators"""
    t = curve.ring.nvars
    matrix = [[F.derivative(i) for i in range(t)] for F in curve.generators]
    minors = []
    for columns in itertools.combinations(range(t), t - 1):
        minors.append(_determinant([[row[c] for c in columns] for row in matrix], curve.ring))
    return minors


def is_nonsingular_affine(curve: CurveRing) -> bool:
    """Affine Jacobian criterion: the generators and maximal minors have no common zero"""
    basis = groebner_basis(list(curve.generators) + jacobian_minors(curve), curve.ring)
    nonsingular = basis.is_unit()
    logger.info(f"Affine nonsingularity of {curve}: {nonsingular}")
    return nonsingular
