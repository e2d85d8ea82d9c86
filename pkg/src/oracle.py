"""Chord-tangent arithmetic on short Weierstrass curves, used as an independent check"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.curve import CurveRing, on_curve
from src.errors import PointNotOnCurve, SingularCurve, WrongCurveShape
from src.field import FieldSpec, FieldValue

# Monomials allowed in a genus-one generator with weights (2, 3)
_C23_SUPPORT = {(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (3, 0), (0, 2)}


@dataclass(frozen=True)
class ECPoint:
    """An affine point (x, y), or the point at infinity when both are None"""
    x: FieldValue | None = None
    y: FieldValue | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self) -> "ECPoint":
        return self if self.is_infinity else ECPoint(self.x, -self.y)

    def __str__(self) -> str:
        return "infinity" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = ECPoint()


def _check_curve(a: FieldValue, b: FieldValue):
    if a.spec.characteristic in (2, 3):
        raise WrongCurveShape(f"Weierstrass formulas need characteristic other than 2 and 3, got {a.spec}")
    if not (4 * a ** 3 + 27 * b ** 2):
        raise SingularCurve(f"4a^3 + 27b^2 = 0 for a = {a}, b = {b}")


def _check_point(P: ECPoint, a: FieldValue, b: FieldValue):
    if P.is_infinity:
        return
    if P.y ** 2 != P.x ** 3 + a * P.x + b:
        raise PointNotOnCurve(f"{P} is not on y^2 = x^3 + {a}x + {b}")


def ec_add(P: ECPoint, Q: ECPoint, a: FieldValue, b: FieldValue) -> ECPoint:
    """Sum of two points on y^2 = x^3 + ax + b"""
    _check_curve(a, b)
    _check_point(P, a, b)
    _check_point(Q, a, b)
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if not (P.y + Q.y):
            return INFINITY
        slope = (3 * P.x ** 2 + a) / (2 * P.y)
    else:
        slope = (Q.y - P.y) / (Q.x - P.x)
    x = slope ** 2 - P.x - Q.x
    y = slope * (P.x - x) - P.y
    return ECPoint(x, y)


def ec_mul(P: ECPoint, m: int, a: FieldValue, b: FieldValue) -> ECPoint:
    """m * P by double-and-add; negative m uses -P"""
    _check_curve(a, b)
    _check_point(P, a, b)
    if m < 0:
        P, m = -P, -m
    result = INFINITY
    addend = P
    while m:
        if m & 1:
            result = ec_add(result, addend, a, b)
        addend = ec_add(addend, addend, a, b)
        m >>= 1
    return result


def ec_enumerate(a: int, b: int, p: int) -> tuple:
    """
    All points of y^2 = x^3 + ax + b over GF(p), infinity last

    Returns:
        tuple: (group order, list of ECPoint)
    """
    spec = FieldSpec.gf(p)
    fa, fb = FieldValue(spec, a), FieldValue(spec, b)
    _check_curve(fa, fb)
    residues = np.arange(p, dtype=np.int64)
    squares = residues * residues % p
    rhs = (residues * residues % p * residues + fa.value * residues + fb.value) % p
    points = []
    for x in range(p):
        for y in np.flatnonzero(squares == rhs[x]):
            points.append(ECPoint(FieldValue(spec, x), FieldValue(spec, int(y))))
    points.append(INFINITY)
    return len(points), points


def c23_negate_y(curve: CurveRing, alpha: FieldValue, beta: FieldValue) -> FieldValue:
    """
    Second intersection of the vertical line x = alpha with a genus-one curve

    For y^2 + c11*x*y + c01*y + (terms in x) the two y-roots sum to
    -(c11*alpha + c01).
    """
    if curve.weights != (2, 3) or len(curve.generators) != 1:
        raise WrongCurveShape(f"Need a single generator with weights (2, 3), got {curve}")
    F = curve.generators[0]
    if not set(F.terms) <= _C23_SUPPORT:
        raise WrongCurveShape(f"{F} has monomials outside the genus-one shape")
    alpha = alpha if isinstance(alpha, FieldValue) else FieldValue(curve.field, alpha)
    beta = beta if isinstance(beta, FieldValue) else FieldValue(curve.field, beta)
    if not on_curve(curve, (alpha, beta)):
        raise PointNotOnCurve(f"({alpha}, {beta}) does not satisfy {F} = 0")
    c11 = F.coefficient((1, 1))
    c01 = F.coefficient((0, 1))
    return -beta - c11 * alpha - c01
