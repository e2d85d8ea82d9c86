"""Buchberger's algorithm and the ideal operations built on it"""
from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from config.settings import ELIMINATION_VARIABLE, PAIR_SELECTION, logger
from src.errors import NotZeroDimensional, RingMismatch, ZeroDivisorIdeal, ZeroPolynomial
from src.polyring import (
    PolyRing, Polynomial, mono_coprime, mono_div, mono_divides, mono_lcm, mono_mul,
)


@dataclass(frozen=True)
class Basis:
    """
    An ordered list of nonzero polynomials generating an ideal

    When reduced, the elements are monic, inter-reduced and sorted ascending
    by leading monomial, so two reduced bases of one ideal are identical.
    """
    ring: PolyRing
    elements: tuple
    reduced: bool = False

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        for g in self.elements:
            if g.ring != self.ring:
                raise RingMismatch(f"Basis element in {g.ring}, basis in {self.ring}")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def is_zero(self) -> bool:
        return not self.elements

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.elements)

    @property
    def leading_monomials(self) -> list:
        return [g.leading_monomial for g in self.elements]

    def __str__(self) -> str:
        return "{" + ", ".join(str(g) for g in self.elements) + "}"


def _check_same_ring(*bases: Basis):
    rings = {b.ring for b in bases}
    if len(rings) > 1:
        raise RingMismatch(f"Ideals live in different rings: {sorted(map(str, rings))}")


def _divisor_entries(polys: Iterable[Polynomial]) -> list:
    """(key, leading monomial, inverse leading coefficient, polynomial), ascending"""
    entries = []
    for g in polys:
        if not g:
            continue
        field = g.ring.field
        lm = g.leading_monomial
        entries.append((g.ring.order.key(lm), lm, field.inv(g.terms[lm]), g))
    entries.sort(key=lambda e: e[0])
    return entries


def _reduce_terms(terms: dict, entries: list, ring: PolyRing) -> dict:
    """Full reduction of a term map; the greatest reducible monomial goes first"""
    field = ring.field
    key = ring.order.key
    work = dict(terms)
    remainder = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for _, lm, lc_inv, g in entries:
            if mono_divides(lm, m):
                factor = field.mul(c, lc_inv)
                shift = mono_div(m, lm)
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    nm = mono_mul(gm, shift)
                    v = field.sub(work.get(nm, field.zero), field.mul(factor, gc))
                    if v:
                        work[nm] = v
                    else:
                        work.pop(nm, None)
                break
        else:
            remainder[m] = c
    return remainder


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """(lcm/LT(f))*f - (lcm/LT(g))*g for the lcm of the leading monomials"""
    if not f or not g:
        raise ZeroPolynomial("S-polynomial of the zero polynomial")
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    field = f.ring.field
    lmf, lmg = f.leading_monomial, g.leading_monomial
    lcm = mono_lcm(lmf, lmg)
    left = f.mul_term(mono_div(lcm, lmf), field.inv(f.leading_coefficient))
    right = g.mul_term(mono_div(lcm, lmg), field.inv(g.leading_coefficient))
    return left - right


def normal_form(f: Polynomial, basis: Basis | Sequence[Polynomial]) -> Polynomial:
    """
    Remainder of f on multivariate division by the basis

    Among the elements whose leading monomial divides the monomial being
    reduced, the one with the smallest leading monomial is used.
    """
    if not f:
        return f
    entries = _divisor_entries(basis)
    return Polynomial(f.ring, _reduce_terms(f.terms, entries, f.ring))


def exact_divide(h: Polynomial, b: Polynomial) -> Polynomial:
    """The quotient h / b, which must be exact"""
    if not b:
        raise ZeroPolynomial("Division by the zero polynomial")
    field = h.ring.field
    lm, lc_inv = b.leading_monomial, field.inv(b.leading_coefficient)
    quotient = {}
    rest = h
    while rest:
        m = rest.leading_monomial
        assert mono_divides(lm, m), f"{b} does not divide {h}"
        shift = mono_div(m, lm)
        c = field.mul(rest.terms[m], lc_inv)
        quotient[shift] = c
        rest = rest - b.mul_term(shift, c)
    return Polynomial(h.ring, quotient)


def _minimalize(polys: list) -> list:
    kept = []
    for _, lm, _, g in _divisor_entries(polys):
        if not any(mono_divides(k.leading_monomial, lm) for k in kept):
            kept.append(g)
    return kept


def _interreduce(polys: list) -> list:
    reduced = []
    for i, g in enumerate(polys):
        others = _divisor_entries(polys[:i] + polys[i + 1:])
        reduced.append(Polynomial(g.ring, _reduce_terms(g.terms, others, g.ring)).monic())
    return sorted(reduced, key=lambda p: p.ring.order.key(p.leading_monomial))


def groebner_basis(gens: Iterable[Polynomial], ring: PolyRing) -> Basis:
    """
    Reduced Groebner basis of the ideal generated by gens

    Args:
        gens: generators; zero polynomials are dropped
        ring (PolyRing): the ambient ring, needed when gens is empty

    Returns:
        Basis: reduced basis, empty for the zero ideal and {1} for the unit ideal
    """
    basis = []
    for g in gens:
        if g.ring != ring:
            raise RingMismatch(f"Generator in {g.ring}, expected {ring}")
        if g:
            basis.append(g.content_free())
    if not basis:
        return Basis(ring, (), reduced=True)
    if any(g.is_constant() for g in basis):
        return Basis(ring, (ring.one(),), reduced=True)

    key = ring.order.key
    leads = [g.leading_monomial for g in basis]
    entries = _divisor_entries(basis)
    pending = {(i, j) for j in range(len(basis)) for i in range(j)}

    def pair_key(pair):
        if PAIR_SELECTION == "first":
            return (pair[1], pair[0])
        return (key(mono_lcm(leads[pair[0]], leads[pair[1]])), pair)

    processed = 0
    while pending:
        pair = min(pending, key=pair_key)
        pending.remove(pair)
        i, j = pair
        if mono_coprime(leads[i], leads[j]):
            continue
        lcm = mono_lcm(leads[i], leads[j])
        if _chain_criterion(i, j, lcm, leads, pending):
            continue
        processed += 1
        s = s_polynomial(basis[i], basis[j])
        r = Polynomial(ring, _reduce_terms(s.terms, entries, ring))
        if not r:
            continue
        r = r.content_free()
        if r.is_constant():
            logger.debug(f"Unit ideal detected after {processed} S-pairs")
            return Basis(ring, (ring.one(),), reduced=True)
        n = len(basis)
        basis.append(r)
        leads.append(r.leading_monomial)
        entry = _divisor_entries([r])[0]
        entries.insert(bisect.bisect_right([e[0] for e in entries], entry[0]), entry)
        pending.update((k, n) for k in range(n))

    logger.debug(f"Buchberger finished: {processed} S-pairs reduced, {len(basis)} elements")
    return Basis(ring, _interreduce(_minimalize(basis)), reduced=True)


def _chain_criterion(i: int, j: int, lcm: tuple, leads: list, pending: set) -> bool:
    """Skip (i, j) when some k has LM_k | lcm(i, j) and both (i, k), (j, k) are done"""
    for k, lm in enumerate(leads):
        if k in (i, j) or not mono_divides(lm, lcm):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def is_groebner(basis: Basis) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero"""
    elements = list(basis)
    for j in range(len(elements)):
        for i in range(j):
            if normal_form(s_polynomial(elements[i], elements[j]), elements):
                return False
    return True


def ideal_sum(a: Basis, b: Basis) -> Basis:
    _check_same_ring(a, b)
    return groebner_basis(list(a) + list(b), a.ring)


def ideal_product(a: Basis, b: Basis) -> Basis:
    """Reduced basis of the ideal generated by all pairwise products"""
    _check_same_ring(a, b)
    return groebner_basis([f * g for f in a for g in b], a.ring)


def ideal_intersect(a: Basis, b: Basis) -> Basis:
    """
    Reduced basis of the intersection, by eliminating an auxiliary variable u
    from u*A + (1 - u)*B
    """
    _check_same_ring(a, b)
    ring = a.ring
    if a.is_zero() or b.is_zero():
        return Basis(ring, (), reduced=True)
    extended = ring.with_elimination_variable(ELIMINATION_VARIABLE)
    u = extended.gen(ELIMINATION_VARIABLE)
    one_minus_u = extended.one() - u
    gens = [u * f.embed(extended) for f in a] + [one_minus_u * g.embed(extended) for g in b]
    eliminated = groebner_basis(gens, extended)
    kept = [g.restrict(ring) for g in eliminated if not g.involves_prefix(1)]
    logger.debug(f"Intersection: {len(a)} x {len(b)} generators -> {len(kept)}")
    return Basis(ring, kept, reduced=True)


def ideal_member(f: Polynomial, a: Basis) -> bool:
    if f.ring != a.ring:
        raise RingMismatch(f"{f.ring} vs {a.ring}")
    return not normal_form(f, a)


def ideal_colon(a: Basis, b: Basis) -> Basis:
    """
    Reduced basis of A : B, the intersection over generators b of A : <b>

    A : <b> is obtained by dividing the generators of A ∩ <b> by b.
    """
    _check_same_ring(a, b)
    ring = a.ring
    gens = [g for g in b if g]
    if not gens:
        raise ZeroDivisorIdeal("Colon by the zero ideal")
    result = None
    for g in gens:
        if ideal_member(g, a):
            continue
        principal = Basis(ring, (g.monic(),))
        meet = ideal_intersect(a, principal)
        part = groebner_basis([exact_divide(h, g) for h in meet], ring)
        result = part if result is None else ideal_intersect(result, part)
    if result is None:
        return Basis(ring, (ring.one(),), reduced=True)
    return result


def ideal_equal(a: Basis, b: Basis) -> bool:
    """Equality of ideals given by reduced bases"""
    _check_same_ring(a, b)
    return a.elements == b.elements


def is_unit(a: Basis) -> bool:
    return len(a) == 1 and a[0].is_constant()


def standard_monomials(basis: Basis) -> list:
    """
    Monomials divisible by no leading monomial of the basis, ascending

    Raises NotZeroDimensional when some variable has no pure power among the
    leading monomials, so that the staircase would be infinite.
    """
    if basis.is_unit():
        return []
    leads = basis.leading_monomials
    bounds = []
    for i in range(basis.ring.nvars):
        pure = [lm[i] for lm in leads if lm[i] and not any(e for j, e in enumerate(lm) if j != i)]
        if not pure:
            name = basis.ring.variables[i]
            raise NotZeroDimensional(f"No pure power of {name} among the leading monomials")
        bounds.append(min(pure))
    staircase = [
        m for m in itertools.product(*(range(b) for b in bounds))
        if not any(mono_divides(lm, m) for lm in leads)
    ]
    return sorted(staircase, key=basis.ring.order.key)
