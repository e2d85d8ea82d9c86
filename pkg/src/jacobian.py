"""Divisor class group arithmetic on Miura curves through ideal classes

A class is represented by its reduced ideal. inv sends an ideal I to
<f> : I, where f is the element of I with the smallest pole order; applying it
twice gives the reduced ideal of the class of I.
"""
from __future__ import annotations

from config.settings import logger
from src.curve import CurveRing
from src.errors import ZeroDivisorIdeal, ZeroIdeal
from src.groebner import groebner_basis, ideal_colon, normal_form
from src.ideal import IdealHandle
from src.polyring import Polynomial


def unit_ideal(curve: CurveRing) -> IdealHandle:
    return IdealHandle.unit(curve)


def _require_nonzero(ideal: IdealHandle):
    if ideal.is_zero():
        raise ZeroIdeal("The zero ideal has no class")


def product(J: IdealHandle, K: IdealHandle) -> IdealHandle:
    """The ideal product J*K, unreduced"""
    J.check_curve(K)
    curve = J.curve
    gens = [f * g for f in J.generators for g in K.generators]
    return IdealHandle(curve, gens)


def colon(J: IdealHandle, K: IdealHandle) -> IdealHandle:
    """J : K, computed on preimages (both contain the curve ideal)"""
    J.check_curve(K)
    if K.is_zero():
        raise ZeroDivisorIdeal("Colon by the zero ideal")
    return IdealHandle.from_basis(J.curve, ideal_colon(J.preimage_gb, K.preimage_gb))


def min_element(I: IdealHandle) -> Polynomial:
    """
    A monic element of I of minimum pole order

    This is the preimage basis element with the smallest leading monomial among
    those that do not vanish on the curve.
    """
    _require_nonzero(I)
    if I.is_unit():
        return I.ring.one()
    for g in I.preimage_gb:
        if normal_form(g, I.curve.basis):
            return g
    raise ZeroIdeal("Every basis element vanishes on the curve")


def inv(I: IdealHandle) -> IdealHandle:
    """The reduced ideal of the inverse class: <min_element(I)> : I"""
    _require_nonzero(I)
    if I.is_unit():
        return I
    f = min_element(I)
    principal = groebner_basis([f] + list(I.curve.generators), I.ring)
    result = IdealHandle.from_basis(I.curve, ideal_colon(principal, I.preimage_gb))
    logger.debug(f"inv: min element {f} (pole order {f.pole_order()}), {len(result.generators)} generators out")
    return result


def reduce_class(I: IdealHandle) -> IdealHandle:
    """The unique reduced ideal in the class of I"""
    return inv(inv(I))


def add(J: IdealHandle, K: IdealHandle) -> IdealHandle:
    J.check_curve(K)
    _require_nonzero(J)
    _require_nonzero(K)
    result = reduce_class(product(J, K))
    logger.info(f"add: reduced ideal with {len(result.preimage_gb)} basis elements")
    return result


def double(J: IdealHandle) -> IdealHandle:
    return add(J, J)


def multi(J: IdealHandle, m: int) -> IdealHandle:
    """
    Reduced ideal of the class of J^m by recursive doubling

    Args:
        J (IdealHandle): a nonzero ideal
        m (int): the multiplier; negative values go through inv(J)

    Returns:
        IdealHandle: the reduced ideal, the unit ideal for m == 0
    """
    _require_nonzero(J)
    logger.info(f"multi: m = {m}")
    if m < 0:
        return multi(inv(J), -m)
    if m == 0:
        return unit_ideal(J.curve)
    if m % 2 == 0:
        return double(multi(J, m // 2))
    return add(double(multi(J, (m - 1) // 2)), J)


def class_eq(J: IdealHandle, K: IdealHandle) -> bool:
    J.check_curve(K)
    return reduce_class(J) == reduce_class(K)


def is_identity(J: IdealHandle) -> bool:
    return reduce_class(J).is_unit()
