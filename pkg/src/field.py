"""Exact scalar arithmetic over prime fields GF(p) and the rationals

A FieldSpec is both the description of a field and the "domain" that performs
arithmetic on raw canonical values (an int in [0, p) or a reduced Fraction).
Polynomials store raw values for speed; FieldValue wraps a raw value together
with its FieldSpec for the public API.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from src.errors import DivisionByZero, FieldMismatch, NotPrime, ScalarSyntaxError

PRIME = "prime"
RATIONALS = "rationals"

Raw = Union[int, Fraction]

_SCALAR_PATTERN = re.compile(r"\s*([+-]?)\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test"""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """
    An exact coefficient field

    Args:
        kind (str): PRIME or RATIONALS
        p (int, optional): the characteristic of a prime field
    """
    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == PRIME:
            if self.p is None or not is_prime(self.p):
                raise NotPrime(f"GF(p) needs a prime modulus, got {self.p}")
        elif self.kind == RATIONALS:
            if self.p is not None:
                raise ValueError("The rational field takes no modulus")
        else:
            raise ValueError(f"Unknown field kind: {self.kind}")

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls(PRIME, p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(RATIONALS)

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == PRIME else 0

    def __str__(self) -> str:
        return f"GF({self.p})" if self.kind == PRIME else "QQ"

    # Raw arithmetic. Inputs are assumed canonical; outputs always are.

    @property
    def zero(self) -> Raw:
        return 0 if self.kind == PRIME else Fraction(0)

    @property
    def one(self) -> Raw:
        return 1 if self.kind == PRIME else Fraction(1)

    def canon(self, x) -> Raw:
        """Canonical raw value of an int, Fraction or FieldValue"""
        if isinstance(x, FieldValue):
            if x.spec != self:
                raise FieldMismatch(f"{x.spec} value used in {self}")
            return x.value
        if self.kind == RATIONALS:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise DivisionByZero(f"{x} has no image in {self}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def add(self, a: Raw, b: Raw) -> Raw:
        return (a + b) % self.p if self.kind == PRIME else a + b

    def sub(self, a: Raw, b: Raw) -> Raw:
        return (a - b) % self.p if self.kind == PRIME else a - b

    def mul(self, a: Raw, b: Raw) -> Raw:
        return a * b % self.p if self.kind == PRIME else a * b

    def neg(self, a: Raw) -> Raw:
        return -a % self.p if self.kind == PRIME else -a

    def inv(self, a: Raw) -> Raw:
        if not a:
            raise DivisionByZero(f"Inverse of zero in {self}")
        return pow(a, -1, self.p) if self.kind == PRIME else 1 / a

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def parse(self, text: str) -> Raw:
        """Parse an optionally signed integer or num/den literal"""
        match = _SCALAR_PATTERN.match(text)
        if not match:
            raise ScalarSyntaxError(f"Not a scalar literal: {text!r}")
        sign, num, den = match.groups()
        if den is not None and int(den) == 0:
            raise DivisionByZero(f"Zero denominator in {text!r}")
        value = Fraction(int(num), int(den) if den else 1)
        return self.canon(-value if sign == "-" else value)

    def format(self, a: Raw) -> str:
        return str(a)


@dataclass(frozen=True)
class FieldValue:
    """An element of a FieldSpec in canonical form"""
    spec: FieldSpec
    value: Raw

    def __post_init__(self):
        object.__setattr__(self, "value", self.spec.canon(self.value))

    def _coerce(self, other) -> Raw:
        if isinstance(other, FieldValue):
            if other.spec != self.spec:
                raise FieldMismatch(f"Cannot combine {self.spec} and {other.spec}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.spec.canon(other)
        return NotImplemented

    def _wrap(self, raw: Raw) -> "FieldValue":
        return FieldValue(self.spec, raw)

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.div(self.value, b))

    def __neg__(self):
        return self._wrap(self.spec.neg(self.value))

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.spec.one
        for _ in range(exponent):
            result = self.spec.mul(result, self.value)
        return self._wrap(result)

    def inverse(self) -> "FieldValue":
        return self._wrap(self.spec.inv(self.value))

    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self) -> bool:
        return bool(self.value)

    def __str__(self) -> str:
        return self.spec.format(self.value)


def f_arith(op: str, a: FieldValue, b: FieldValue | None = None) -> FieldValue:
    """
    Apply a field operation by name

    Args:
        op (str): one of add, sub, mul, div, neg, inv
        a (FieldValue): first operand
        b (FieldValue, optional): second operand for binary operations

    Returns:
        FieldValue: the canonical result
    """
    if op in ("neg", "inv"):
        if b is not None:
            raise ValueError(f"Operation {op} takes one operand")
        return -a if op == "neg" else a.inverse()
    if b is None:
        raise ValueError(f"Operation {op} needs two operands")
    if a.spec != b.spec:
        raise FieldMismatch(f"Cannot combine {a.spec} and {b.spec}")
    operations = {
        "add": lambda: a + b,
        "sub": lambda: a - b,
        "mul": lambda: a * b,
        "div": lambda: a / b,
    }
    if op not in operations:
        raise ValueError(f"Unknown field operation: {op}")
    return operations[op]()


def f_from_integer(n: int, spec: FieldSpec) -> FieldValue:
    """Canonical image of an integer in the field"""
    return FieldValue(spec, n)
