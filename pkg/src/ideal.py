"""Ideals of a curve's coordinate ring, held through their preimage"""
from __future__ import annotations

from typing import TYPE_CHECKING, Iterable

from src.errors import CurveMismatch
from src.groebner import Basis, groebner_basis, ideal_member, normal_form
from src.polyring import Polynomial

if TYPE_CHECKING:
    from src.curve import CurveRing


class IdealHandle:
    """
    An ideal of K[x_1..x_t] / <curve generators>

    The ideal is stored as the reduced Groebner basis of its preimage in the
    polynomial ring, i.e. of the given generators together with the curve
    generators. Handles are immutable; every operation builds a new one.

    Args:
        curve (CurveRing): the curve whose coordinate ring holds the ideal
        gens: generators in the curve's polynomial ring
    """

    def __init__(self, curve: "CurveRing", gens: Iterable[Polynomial] = (), basis: Basis | None = None):
        self.curve = curve
        self.gens = tuple(gens)
        if basis is None:
            basis = groebner_basis(list(self.gens) + list(curve.generators), curve.ring)
        self.preimage_gb = basis
        self._generators = None
        self._minimal = None

    @classmethod
    def from_basis(cls, curve: "CurveRing", basis: Basis) -> "IdealHandle":
        """Wrap a reduced basis that already contains the curve ideal"""
        gens = [g for g in basis if normal_form(g, curve.basis)]
        return cls(curve, gens, basis)

    @classmethod
    def unit(cls, curve: "CurveRing") -> "IdealHandle":
        return cls(curve, [curve.ring.one()])

    @property
    def ring(self):
        return self.curve.ring

    def is_unit(self) -> bool:
        return self.preimage_gb.is_unit()

    def is_zero(self) -> bool:
        """True if the preimage is just the curve ideal"""
        return self.preimage_gb.elements == self.curve.basis.elements

    @property
    def generators(self) -> tuple:
        """Preimage basis elements that are nonzero on the curve, ascending"""
        if self._generators is None:
            self._generators = tuple(g for g in self.preimage_gb if normal_form(g, self.curve.basis))
        return self._generators

    @property
    def minimal_generators(self) -> tuple:
        """
        Generators with redundant ones dropped

        Walking up the basis, an element is dropped when it already lies in the
        ideal spanned by the curve and the elements kept so far.
        """
        if self._minimal is None:
            kept = []
            span = self.curve.basis
            for g in self.generators:
                if ideal_member(g, span):
                    continue
                kept.append(g)
                span = groebner_basis(kept + list(self.curve.generators), self.ring)
            self._minimal = tuple(kept)
        return self._minimal

    def check_curve(self, other: "IdealHandle"):
        if self.curve != other.curve:
            raise CurveMismatch("Ideals belong to different curves")

    def __eq__(self, other) -> bool:
        if not isinstance(other, IdealHandle):
            return NotImplemented
        return self.curve == other.curve and self.preimage_gb.elements == other.preimage_gb.elements

    def __hash__(self) -> int:
        return hash(self.preimage_gb.elements)

    def __repr__(self) -> str:
        if self.is_unit():
            return "IdealHandle(1)"
        return f"IdealHandle({', '.join(str(g) for g in self.generators)})"
