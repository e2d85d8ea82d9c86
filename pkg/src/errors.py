"""Exceptions raised by the Miura toolkit"""


class MiuraError(Exception):
    """Base class for every error raised by the library"""


# Field arithmetic

class DivisionByZero(MiuraError, ZeroDivisionError):
    """Division by, or inversion of, the zero field element"""


class FieldMismatch(MiuraError):
    """Operands live in different fields"""


class NotPrime(MiuraError):
    """A prime field was requested with a composite modulus"""


class ScalarSyntaxError(MiuraError):
    """A scalar literal could not be parsed"""


# Polynomials

class ArityMismatch(MiuraError):
    """A monomial does not have the ring's number of variables"""


class RingMismatch(MiuraError):
    """Operands belong to different polynomial rings"""


class ZeroPolynomial(MiuraError):
    """An operation needing a nonzero polynomial received zero"""


class PolynomialSyntaxError(MiuraError):
    """A polynomial string does not follow the grammar"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class UnknownVariable(PolynomialSyntaxError):
    """A polynomial string names a variable the ring does not declare"""


# Ideals

class ZeroDivisorIdeal(MiuraError):
    """Colon by the zero ideal"""


class ZeroIdeal(MiuraError):
    """A class-group operation received the zero ideal"""


class CurveMismatch(MiuraError):
    """Ideals live on different curves"""


class NotZeroDimensional(MiuraError):
    """The ideal has infinitely many standard monomials"""


# Curves

class WeightsNotCoprime(MiuraError):
    """The pole-order weights have a common factor"""


class WrongGeneratorCount(MiuraError):
    """A curve in t variables needs exactly t - 1 generators"""


class NotMonic(MiuraError):
    """A curve generator's leading coefficient is not 1"""


class LeadingExponentInB(MiuraError):
    """A curve generator's leading exponent is canonical"""


class BodyMonomialNotInB(MiuraError):
    """A non-leading monomial of a curve generator is not canonical"""


class UnitCurveIdeal(MiuraError):
    """The curve generators generate the whole ring"""


class PointNotOnCurve(MiuraError):
    """A point does not satisfy the curve equations"""


class SingularCurve(MiuraError):
    """The curve has a singular point"""


class WrongCurveShape(MiuraError):
    """The curve does not have the shape an operation requires"""


# Scripts

class ScriptSyntaxError(MiuraError):
    """A script line does not follow the script grammar"""

    def __init__(self, line: int, col: int, expected: str):
        super().__init__(f"line {line}, column {col}: expected {expected}")
        self.line = line
        self.col = col
        self.expected = expected


class ScriptNameError(MiuraError):
    """A script refers to an undefined name"""


class ScriptEvaluationError(MiuraError):
    """A statement failed while being evaluated"""

    def __init__(self, line: int, col: int, cause: Exception):
        super().__init__(f"line {line}, column {col}: {type(cause).__name__}: {cause}")
        self.line = line
        self.col = col
        self.cause = cause


class ScriptTypeError(MiuraError):
    """An operation received a value of the wrong kind, e.g. an integer where an ideal is needed"""


class ScriptStateError(MiuraError):
    """A statement needs a ring or curve that has not been declared"""
