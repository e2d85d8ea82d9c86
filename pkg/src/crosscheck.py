"""Compare ideal-class addition with chord-tangent addition on small elliptic curves"""
from __future__ import annotations

import itertools
from typing import Iterable

import pandas as pd

from config.settings import ORACLE_PRIMES, logger
from src import jacobian
from src.curve import CurveRing, make_curve, point_ideal
from src.field import FieldSpec, FieldValue
from src.ideal import IdealHandle
from src.oracle import ECPoint, ec_add, ec_enumerate

COLUMNS = ["prime", "a", "b", "order", "pairs", "mismatches", "lagrange_failures"]


def weierstrass_curve(a: int, b: int, p: int) -> CurveRing:
    """y^2 = x^3 + ax + b over GF(p) as a Miura curve with weights (2, 3)"""
    return make_curve(FieldSpec.gf(p), ("x", "y"), (2, 3), [f"y^2 - x^3 - {a % p}*x - {b % p}"])


def nonsingular_coefficients(p: int) -> list:
    """All (a, b) in GF(p)^2 with 4a^3 + 27b^2 != 0"""
    return [(a, b) for a, b in itertools.product(range(p), repeat=2) if (4 * a ** 3 + 27 * b ** 2) % p]


def _as_ideal(curve: CurveRing, point: ECPoint) -> IdealHandle:
    if point.is_infinity:
        return jacobian.unit_ideal(curve)
    return point_ideal(curve, (point.x, point.y))


def check_curve(a: int, b: int, p: int, lagrange: bool = False) -> dict:
    """
    Add every ordered pair of affine points both ways and count disagreements

    Returns:
        dict: one row of the survey, keyed by COLUMNS
    """
    curve = weierstrass_curve(a, b, p)
    fa, fb = FieldValue(curve.field, a), FieldValue(curve.field, b)
    order, points = ec_enumerate(a, b, p)
    affine = [P for P in points if not P.is_infinity]
    ideals = {P: _as_ideal(curve, P) for P in affine}
    mismatches = 0
    for P, Q in itertools.product(affine, repeat=2):
        expected = _as_ideal(curve, ec_add(P, Q, fa, fb))
        if jacobian.add(ideals[P], ideals[Q]) != expected:
            mismatches += 1
            logger.warning(f"Mismatch on {curve}: {P} + {Q}")
    lagrange_failures = None
    if lagrange:
        lagrange_failures = sum(not jacobian.multi(ideals[P], order).is_unit() for P in affine)
    logger.info(f"p={p} a={a} b={b}: order {order}, {len(affine) ** 2} pairs, {mismatches} mismatches")
    return {
        "prime": p, "a": a, "b": b, "order": order, "pairs": len(affine) ** 2,
        "mismatches": mismatches, "lagrange_failures": lagrange_failures,
    }


def crosscheck(primes: Iterable[int] = ORACLE_PRIMES, curves: Iterable[tuple] | None = None,
               lagrange: bool = False) -> pd.DataFrame:
    """
    Survey of curves y^2 = x^3 + ax + b

    Args:
        primes: characteristics to sweep over every nonsingular (a, b)
        curves: explicit (p, a, b) triples, used instead of the sweep when given
        lagrange (bool): also check that every point ideal times the group order is principal

    Returns:
        pd.DataFrame: one row per curve with the columns in COLUMNS
    """
    if curves is None:
        curves = [(p, a, b) for p in primes for a, b in nonsingular_coefficients(p)]
    rows = [check_curve(a, b, p, lagrange) for p, a, b in curves]
    df = pd.DataFrame(rows, columns=COLUMNS)
    if not lagrange:
        df = df.drop(columns=["lagrange_failures"])
    return df
