"""Multivariate polynomials under the weighted Miura order

Monomials are exponent tuples. The order compares, in turn: the exponents of
any auxiliary elimination variables (a leading block), the weight
Psi(N) = sum n_i * a_i of the remaining coordinates, and finally the first
differing exponent, where the larger exponent is the smaller monomial.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import reduce
from typing import Iterable, Iterator, Sequence

from src.errors import (
    ArityMismatch, PolynomialSyntaxError, RingMismatch, UnknownVariable,
    WeightsNotCoprime, ZeroPolynomial,
)
from src.field import FieldSpec, FieldValue, Raw

Monomial = tuple


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def mono_mul(m: Monomial, n: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(m, n))


def mono_div(m: Monomial, n: Monomial) -> Monomial:
    """m / n, assuming n divides m"""
    return tuple(a - b for a, b in zip(m, n))


def mono_divides(n: Monomial, m: Monomial) -> bool:
    """True if n divides m"""
    return all(a <= b for a, b in zip(n, m))


def mono_lcm(m: Monomial, n: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(m, n))


def mono_coprime(m: Monomial, n: Monomial) -> bool:
    return all(not (a and b) for a, b in zip(m, n))


@dataclass(frozen=True)
class MiuraOrder:
    """
    The weighted order on exponent vectors

    Args:
        weights (tuple): pole orders (a_1, ..., a_t) of the coordinate functions
        elimination_prefix (int): number of leading auxiliary variables, compared
            first by plain exponent and carrying no weight
    """
    weights: tuple
    elimination_prefix: int = 0

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(a) for a in self.weights))
        if not self.weights or any(a < 1 for a in self.weights):
            raise ValueError(f"Weights must be positive integers, got {self.weights}")
        if self.elimination_prefix < 0:
            raise ValueError("elimination_prefix must be nonnegative")
        if self.elimination_prefix == 0 and reduce(math.gcd, self.weights) != 1:
            raise WeightsNotCoprime(f"gcd of weights {self.weights} is not 1")

    @property
    def arity(self) -> int:
        return self.elimination_prefix + len(self.weights)

    def _check(self, m: Monomial):
        if len(m) != self.arity:
            raise ArityMismatch(f"Monomial {m} has arity {len(m)}, expected {self.arity}")

    def psi(self, m: Monomial) -> int:
        self._check(m)
        k = self.elimination_prefix
        return sum(n * a for n, a in zip(m[k:], self.weights))

    def key(self, m: Monomial) -> tuple:
        """Sort key: key(M) < key(N) iff M precedes N"""
        k = self.elimination_prefix
        rest = m[k:]
        return (m[:k], sum(n * a for n, a in zip(rest, self.weights)), tuple(-n for n in rest))

    def compare(self, m: Monomial, n: Monomial) -> Ordering:
        self._check(m)
        self._check(n)
        km, kn = self.key(m), self.key(n)
        if km == kn:
            return Ordering.EQUAL
        return Ordering.LESS if km < kn else Ordering.GREATER

    def with_elimination(self, extra: int = 1) -> "MiuraOrder":
        return MiuraOrder(self.weights, self.elimination_prefix + extra)


@dataclass(frozen=True)
class PolyRing:
    """
    A polynomial ring K[X_1..X_t] with a Miura order

    Args:
        field (FieldSpec): coefficient field
        variables (tuple): variable names, auxiliary ones first
        order (MiuraOrder): the monomial order
    """
    field: FieldSpec
    variables: tuple
    order: MiuraOrder

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(self.variables) != self.order.arity:
            raise ArityMismatch(
                f"{len(self.variables)} variables for an order of arity {self.order.arity}"
            )
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"Duplicate variable names in {self.variables}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __str__(self) -> str:
        return f"{self.field}[{', '.join(self.variables)}]"

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return self.monomial((0,) * self.nvars, c)

    def monomial(self, exponents: Sequence[int], c=1) -> "Polynomial":
        exponents = tuple(exponents)
        self.order._check(exponents)
        raw = self.field.canon(c)
        return Polynomial(self, {exponents: raw} if raw else {})

    def gen(self, name: str) -> "Polynomial":
        if name not in self.variables:
            raise UnknownVariable(f"Unknown variable {name!r}", 0)
        exps = [0] * self.nvars
        exps[self.variables.index(name)] = 1
        return self.monomial(exps)

    def gens(self) -> list:
        return [self.gen(v) for v in self.variables]

    def from_terms(self, terms: dict) -> "Polynomial":
        """Build a polynomial from {exponents: coefficient}, dropping zeros"""
        clean = {}
        for m, c in terms.items():
            m = tuple(m)
            self.order._check(m)
            raw = self.field.canon(c)
            if raw:
                clean[m] = raw
        return Polynomial(self, clean)

    def parse(self, text: str) -> "Polynomial":
        return _PolyParser(text, self).parse()

    def with_elimination_variable(self, name: str) -> "PolyRing":
        return PolyRing(self.field, (name,) + self.variables, self.order.with_elimination())


class Polynomial:
    """
    A polynomial as a map from exponent tuples to nonzero raw coefficients

    Instances are treated as immutable; every operation returns a new object.
    """
    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lead = None

    # Structure

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    @property
    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ZeroPolynomial("The zero polynomial has no leading monomial")
        if self._lead is None:
            self._lead = max(self.terms, key=self.ring.order.key)
        return self._lead

    @property
    def leading_coefficient(self) -> Raw:
        return self.terms[self.leading_monomial]

    def leading_term(self) -> tuple:
        m = self.leading_monomial
        return m, FieldValue(self.ring.field, self.terms[m])

    def pole_order(self) -> int:
        return self.ring.order.psi(self.leading_monomial)

    def sorted_terms(self) -> list:
        """Terms in descending order"""
        return sorted(self.terms.items(), key=lambda t: self.ring.order.key(t[0]), reverse=True)

    def coefficient(self, exponents: Sequence[int]) -> FieldValue:
        return FieldValue(self.ring.field, self.terms.get(tuple(exponents), self.ring.field.zero))

    # Arithmetic

    def _check_ring(self, other: "Polynomial"):
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def _combine(self, other: "Polynomial", subtract: bool) -> "Polynomial":
        self._check_ring(other)
        field = self.ring.field
        op = field.sub if subtract else field.add
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = op(terms.get(m, field.zero), c)
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial(self.ring, terms)

    def _as_poly(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction, FieldValue)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._as_poly(other)
        return NotImplemented if other is NotImplemented else self._combine(other, False)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._as_poly(other)
        return NotImplemented if other is NotImplemented else self._combine(other, True)

    def __rsub__(self, other):
        other = self._as_poly(other)
        return NotImplemented if other is NotImplemented else other._combine(self, True)

    def __neg__(self) -> "Polynomial":
        neg = self.ring.field.neg
        return Polynomial(self.ring, {m: neg(c) for m, c in self.terms.items()})

    def scale(self, c) -> "Polynomial":
        field = self.ring.field
        raw = field.canon(c)
        if not raw:
            return self.ring.zero()
        return Polynomial(self.ring, {m: field.mul(raw, v) for m, v in self.terms.items()})

    def mul_term(self, shift: Monomial, c: Raw) -> "Polynomial":
        """Multiply by the term c * X^shift (c raw and nonzero)"""
        mul = self.ring.field.mul
        return Polynomial(self.ring, {mono_mul(m, shift): mul(c, v) for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldValue)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        field = self.ring.field
        terms = {}
        for m, c in self.terms.items():
            for n, d in other.terms.items():
                k = mono_mul(m, n)
                v = field.add(terms.get(k, field.zero), field.mul(c, d))
                if v:
                    terms[k] = v
                else:
                    terms.pop(k, None)
        return Polynomial(self.ring, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, FieldValue)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "Polynomial":
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self
        return result

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        field = self.ring.field
        return self.scale(field.inv(self.leading_coefficient))

    def content_free(self) -> "Polynomial":
        """
        Remove the content of the coefficients

        Over the rationals the coefficients become coprime integers with a positive
        leading coefficient; over GF(p) the polynomial is made monic.
        """
        if not self.terms or self.ring.field.is_prime_field:
            return self.monic()
        coeffs = list(self.terms.values())
        numerators = reduce(math.gcd, (c.numerator for c in coeffs))
        denominators = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in coeffs))
        factor = Fraction(denominators, numerators)
        if self.leading_coefficient < 0:
            factor = -factor
        return self.scale(factor)

    # Calculus and evaluation

    def derivative(self, variable: int | str) -> "Polynomial":
        i = self.ring.variables.index(variable) if isinstance(variable, str) else variable
        field = self.ring.field
        terms = {}
        for m, c in self.terms.items():
            if m[i]:
                v = field.mul(c, field.canon(m[i]))
                if v:
                    terms[m[:i] + (m[i] - 1,) + m[i + 1:]] = v
        return Polynomial(self.ring, terms)

    def evaluate(self, point: Sequence) -> FieldValue:
        """Value at a point given as FieldValues, ints or Fractions"""
        field = self.ring.field
        values = [field.canon(v) for v in point]
        if len(values) != self.ring.nvars:
            raise ArityMismatch(f"Point of length {len(values)} for {self.ring}")
        total = field.zero
        for m, c in self.terms.items():
            term = c
            for v, e in zip(values, m):
                for _ in range(e):
                    term = field.mul(term, v)
            total = field.add(total, term)
        return FieldValue(field, total)

    # Changing rings

    def embed(self, ring: PolyRing) -> "Polynomial":
        """Image in a ring with extra leading (auxiliary) variables"""
        pad = (0,) * (ring.nvars - self.ring.nvars)
        return Polynomial(ring, {pad + m: c for m, c in self.terms.items()})

    def restrict(self, ring: PolyRing) -> "Polynomial":
        """Drop leading auxiliary variables, which must not occur"""
        k = self.ring.nvars - ring.nvars
        if any(any(m[:k]) for m in self.terms):
            raise ValueError("Polynomial involves auxiliary variables")
        return Polynomial(ring, {m[k:]: c for m, c in self.terms.items()})

    def involves_prefix(self, k: int) -> bool:
        return any(any(m[:k]) for m in self.terms)

    # Comparison and display

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def __iter__(self) -> Iterator:
        return iter(self.sorted_terms())

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r} in {self.ring})"


# Parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _PolyParser:
    """Recursive descent over: poly := [sign] term (sign term)*"""

    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = []
        for match in _TOKEN.finditer(text):
            number, ident, symbol = match.groups()
            if number is not None:
                self.tokens.append(("num", number, match.start(1)))
            elif ident is not None:
                self.tokens.append(("ident", ident, match.start(2)))
            elif symbol is not None:
                self.tokens.append(("sym", symbol, match.start(3)))
        self.index = 0

    def _peek(self):
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _next(self):
        token = self._peek()
        self.index += 1
        return token

    def _error(self, expected: str):
        token = self._peek()
        position = token[2] if token else len(self.text)
        found = repr(token[1]) if token else "end of input"
        raise PolynomialSyntaxError(f"Expected {expected}, found {found}", position)

    def parse(self) -> Polynomial:
        result = self.ring.zero()
        first = True
        while True:
            token = self._peek()
            negative = False
            if token and token[0] == "sym" and token[1] in "+-":
                negative = token[1] == "-"
                self._next()
            elif not first:
                self._error("'+' or '-'")
            term = self._term()
            result = result - term if negative else result + term
            first = False
            if self._peek() is None:
                return result

    def _term(self) -> Polynomial:
        field = self.ring.field
        coeff = Fraction(1)
        exps = [0] * self.ring.nvars
        previous = self._factor(exps)
        if isinstance(previous, Fraction):
            coeff *= previous
        while True:
            token = self._peek()
            if token and token[0] == "sym" and token[1] == "*":
                self._next()
            elif not (token and token[0] == "ident" and isinstance(previous, Fraction)):
                break
            previous = self._factor(exps)
            if isinstance(previous, Fraction):
                coeff *= previous
        return self.ring.monomial(exps, field.canon(coeff))

    def _factor(self, exps: list):
        """Parse a number (returned) or a power (accumulated into exps)"""
        token = self._next()
        if token is None:
            self.index -= 1
            self._error("a term")
        kind, value, position = token
        if kind == "num":
            num = int(value)
            following = self._peek()
            if following and following[0] == "sym" and following[1] == "/":
                self._next()
                den = self._next()
                if den is None or den[0] != "num":
                    self.index -= 1
                    self._error("a denominator")
                if int(den[1]) == 0:
                    raise PolynomialSyntaxError("Zero denominator", den[2])
                return Fraction(num, int(den[1]))
            return Fraction(num)
        if kind == "ident":
            if value not in self.ring.variables:
                raise UnknownVariable(f"Unknown variable {value!r}", position)
            power = 1
            following = self._peek()
            if following and following[0] == "sym" and following[1] == "^":
                self._next()
                exponent = self._next()
                if exponent is None or exponent[0] != "num":
                    self.index -= 1
                    self._error("an exponent")
                power = int(exponent[1])
            exps[self.ring.variables.index(value)] += power
            return None
        self.index -= 1
        self._error("a term")


# Formatting

def _format_monomial(ring: PolyRing, m: Monomial) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(ring.variables, m) if e)


def format_poly(f: Polynomial) -> str:
    """Render terms in descending order, e.g. 'y^2 - x^3 - 3*x'"""
    if not f.terms:
        return "0"
    field = f.ring.field
    parts = []
    for m, c in f.sorted_terms():
        negative = not field.is_prime_field and c < 0
        magnitude = -c if negative else c
        mono = _format_monomial(f.ring, m)
        if not mono:
            body = field.format(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{field.format(magnitude)}*{mono}"
        if parts:
            parts.append((" - " if negative else " + ") + body)
        else:
            parts.append(("-" if negative else "") + body)
    return "".join(parts)


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    return ring.parse(text)


# Operation-style entry points

def psi(m: Monomial, order: MiuraOrder) -> int:
    return order.psi(tuple(m))


def mono_cmp(m: Monomial, n: Monomial, order: MiuraOrder) -> Ordering:
    return order.compare(tuple(m), tuple(n))


def p_arith(op: str, f: Polynomial, g) -> Polynomial:
    """Apply add, sub, mul or scale to a polynomial"""
    if op == "scale":
        return f.scale(g)
    if not isinstance(g, Polynomial):
        raise TypeError(f"Operation {op} needs a polynomial operand")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"Unknown polynomial operation: {op}")


def leading_term(f: Polynomial, order: MiuraOrder | None = None) -> tuple:
    if order is not None and order != f.ring.order:
        f = Polynomial(PolyRing(f.ring.field, f.ring.variables, order), f.terms)
    return f.leading_term()


def pole_order(f: Polynomial, order: MiuraOrder | None = None) -> int:
    monomial, _ = leading_term(f, order)
    return (order or f.ring.order).psi(monomial)


def monomials_up_to(weights: Sequence[int], bound: int) -> Iterable[Monomial]:
    """All exponent vectors with Psi <= bound, lexicographically"""
    def walk(i: int, remaining: int):
        if i == len(weights):
            yield ()
            return
        for e in range(remaining // weights[i] + 1):
            for rest in walk(i + 1, remaining - e * weights[i]):
                yield (e,) + rest
    return walk(0, bound)
