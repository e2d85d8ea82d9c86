"""Evaluation of session scripts against the class group operations"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterable

from config.settings import (
    EXIT_ASSERTION_FAILED, EXIT_OK, OUTPUT_FORMAT, OUTPUT_FORMATS, REPL_PROMPT, logger,
)
from src import jacobian
from src.curve import CurveRing, ideal_degree, is_nonsingular_affine, make_curve, point_ideal
from src.errors import (
    MiuraError, ScriptEvaluationError, ScriptNameError, ScriptStateError, ScriptTypeError,
    SingularCurve,
)
from src.field import FieldSpec
from src.ideal import IdealHandle
from src.polyring import MiuraOrder, PolyRing, Polynomial
from src.script_parser import (
    Assert, CallExpr, CurveDecl, GenusExpr, IdealExpr, Let, MultiExpr, NameExpr, PointExpr,
    Print, ProductExpr, Quit, RingDecl, UnitExpr, parse_line,
)


def format_ideal(ideal: IdealHandle) -> str:
    """Canonical one-line rendering, e.g. 'ideal (x + 1, y)'"""
    if ideal.is_unit():
        return "ideal 1"
    if ideal.is_zero():
        return "ideal 0"
    return "ideal (" + ", ".join(str(g) for g in ideal.minimal_generators) + ")"


def render_value(value) -> str:
    if isinstance(value, IdealHandle):
        return format_ideal(value)
    return str(value)


def _value_payload(value) -> dict:
    if isinstance(value, IdealHandle):
        if value.is_unit():
            generators = ["1"]
        elif value.is_zero():
            generators = []
        else:
            generators = [str(g) for g in value.minimal_generators]
        return {"generators": generators, "curve": str(value.curve), "field": str(value.curve.field)}
    if isinstance(value, Polynomial):
        return {"polynomial": str(value)}
    return {"value": value}


@dataclass(frozen=True)
class TranscriptEntry:
    """One printed value or assertion outcome"""
    line: int
    text: str
    payload: dict
    passed: bool | None = None

    def render(self, output_format: str = "text") -> str:
        if output_format == "json":
            return json.dumps(self.payload)
        return self.text


@dataclass
class Transcript:
    entries: list = dc_field(default_factory=list)

    @property
    def failures(self) -> list:
        return [e for e in self.entries if e.passed is False]

    @property
    def exit_code(self) -> int:
        return EXIT_ASSERTION_FAILED if self.failures else EXIT_OK

    def render(self, output_format: str = "text") -> str:
        return "\n".join(e.render(output_format) for e in self.entries)


class Interpreter:
    """
    Executes statements one at a time in a single environment

    A ring declaration resets the curve; a curve declaration must come before
    any expression that builds an ideal.
    """

    def __init__(self, check_nonsingular: bool = False):
        self.check_nonsingular = check_nonsingular
        self.ring: PolyRing | None = None
        self.curve: CurveRing | None = None
        self.env: dict = {}
        self.finished = False

    def execute(self, statement) -> TranscriptEntry | None:
        """Run one statement; errors are re-raised with its location"""
        try:
            return self._execute(statement)
        except ScriptEvaluationError:
            raise
        except (MiuraError, ValueError) as e:
            raise ScriptEvaluationError(statement.line, statement.col, e) from e

    def _execute(self, statement) -> TranscriptEntry | None:
        logger.info(f"line {statement.line}: {type(statement).__name__}")
        if isinstance(statement, RingDecl):
            self._declare_ring(statement)
        elif isinstance(statement, CurveDecl):
            self._declare_curve(statement)
        elif isinstance(statement, Let):
            self.env[statement.name] = self.evaluate(statement.expr)
        elif isinstance(statement, Print):
            value = self.evaluate(statement.expr)
            return TranscriptEntry(statement.line, render_value(value), _value_payload(value))
        elif isinstance(statement, Assert):
            return self._assert(statement)
        elif isinstance(statement, Quit):
            self.finished = True
        return None

    def _declare_ring(self, statement: RingDecl):
        field = FieldSpec.gf(statement.p) if statement.kind == "gf" else FieldSpec.rationals()
        names = tuple(name for name, _ in statement.variables)
        weights = tuple(weight for _, weight in statement.variables)
        self.ring = PolyRing(field, names, MiuraOrder(weights))
        self.curve = None

    def _declare_curve(self, statement: CurveDecl):
        if self.ring is None:
            raise ScriptStateError("curve declared before ring")
        curve = make_curve(self.ring.field, self.ring.variables, self.ring.order.weights, list(statement.polys))
        if self.check_nonsingular and not is_nonsingular_affine(curve):
            raise SingularCurve(f"{curve} is singular in the affine plane")
        self.curve = curve

    def _assert(self, statement: Assert) -> TranscriptEntry:
        left = self.evaluate(statement.left)
        right = self.evaluate(statement.right)
        if statement.relation == "~":
            passed = jacobian.class_eq(self._ideal(left), self._ideal(right))
        else:
            if type(left) is not type(right):
                raise ScriptTypeError(f"Cannot compare {render_value(left)} with {render_value(right)}")
            passed = left == right
        if passed:
            text = f"ok: line {statement.line}"
        else:
            text = f"FAILED: line {statement.line}: {render_value(left)} {statement.relation} {render_value(right)}"
            logger.warning(f"Assertion failed at line {statement.line}")
        payload = {"assert": statement.line, "relation": statement.relation, "passed": passed}
        return TranscriptEntry(statement.line, text, payload, passed)

    # Expressions

    def _require_curve(self) -> CurveRing:
        if self.curve is None:
            raise ScriptStateError("no curve declared")
        return self.curve

    @staticmethod
    def _ideal(value) -> IdealHandle:
        if not isinstance(value, IdealHandle):
            raise ScriptTypeError(f"Expected an ideal, got {render_value(value)}")
        return value

    def evaluate(self, expr):
        """Value of an expression: an IdealHandle, an int or a Polynomial"""
        if isinstance(expr, NameExpr):
            if expr.name not in self.env:
                raise ScriptNameError(f"Undefined name {expr.name!r}")
            return self.env[expr.name]
        if isinstance(expr, UnitExpr):
            return jacobian.unit_ideal(self._require_curve())
        if isinstance(expr, GenusExpr):
            return self._require_curve().genus
        if isinstance(expr, PointExpr):
            curve = self._require_curve()
            return point_ideal(curve, [curve.field.parse(c) for c in expr.coords])
        if isinstance(expr, IdealExpr):
            curve = self._require_curve()
            return IdealHandle(curve, [curve.parse(p) for p in expr.polys])
        if isinstance(expr, ProductExpr):
            left = self._ideal(self.evaluate(expr.left))
            return jacobian.product(left, self._ideal(self.evaluate(expr.right)))
        if isinstance(expr, MultiExpr):
            return jacobian.multi(self._ideal(self.evaluate(expr.arg)), expr.m)
        if isinstance(expr, CallExpr):
            return self._call(expr.func, [self._ideal(self.evaluate(a)) for a in expr.args])
        raise ScriptTypeError(f"Unknown expression {expr!r}")

    def _call(self, func: str, args: list):
        if func == "add":
            return jacobian.add(*args)
        if func == "colon":
            return jacobian.colon(*args)
        if func == "double":
            return jacobian.double(*args)
        if func == "inv":
            return jacobian.inv(*args)
        if func == "reduce":
            return jacobian.reduce_class(*args)
        if func == "min":
            return jacobian.min_element(*args)
        if func == "degree":
            return ideal_degree(args[0].curve, args[0])
        raise ScriptTypeError(f"Unknown function {func!r}")


def _check_format(output_format: str):
    if output_format not in OUTPUT_FORMATS:
        raise ValueError(f"Output format must be one of {OUTPUT_FORMATS}, got {output_format!r}")


def run_script(statements: Iterable, output_format: str = OUTPUT_FORMAT, check_nonsingular: bool = False,
               echo: Callable[[str], None] | None = None) -> Transcript:
    """
    Evaluate statements in order

    Args:
        statements: parsed statements
        output_format (str): "text" or "json", used for echoed lines
        check_nonsingular (bool): verify each declared curve with the Jacobian criterion
        echo: called with each rendered entry as soon as it is produced

    Returns:
        Transcript: printed values and assertion outcomes

    Raises:
        ScriptEvaluationError: on the first failing statement
    """
    _check_format(output_format)
    interpreter = Interpreter(check_nonsingular)
    transcript = Transcript()
    for statement in statements:
        entry = interpreter.execute(statement)
        if entry is not None:
            transcript.entries.append(entry)
            if echo is not None:
                echo(entry.render(output_format))
        if interpreter.finished:
            break
    return transcript


def repl(read: Callable[[str], str] = input, write: Callable[[str], None] = print,
         output_format: str = OUTPUT_FORMAT, check_nonsingular: bool = False) -> int:
    """Interactive loop; errors are reported and the session goes on"""
    _check_format(output_format)
    interpreter = Interpreter(check_nonsingular)
    transcript = Transcript()
    number = 0
    while not interpreter.finished:
        try:
            text = read(REPL_PROMPT)
        except EOFError:
            break
        number += 1
        try:
            statement = parse_line(text, number)
            if statement is None:
                continue
            entry = interpreter.execute(statement)
        except MiuraError as e:
            logger.error(f"{e}")
            write(f"error: {e}")
            continue
        if entry is not None:
            transcript.entries.append(entry)
            write(entry.render(output_format))
    return transcript.exit_code
