"""Statements and expressions of the session script language, and their parser

One statement per line; `#` starts a comment. Polynomial and scalar literals
are kept as text here and parsed against the ring when they are evaluated.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from src.errors import ScriptSyntaxError

KEYWORDS = frozenset({
    "ring", "curve", "let", "print", "assert", "quit", "vars", "q", "gf",
    "point", "ideal", "unit", "genus",
    "add", "double", "inv", "reduce", "multi", "degree", "min", "colon",
})
UNARY_CALLS = ("double", "inv", "reduce", "degree", "min")
BINARY_CALLS = ("add", "colon")

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"[+-]?\d+")
_BLANK = re.compile(r"\s*")


# Expressions

@dataclass(frozen=True)
class PointExpr:
    coords: tuple


@dataclass(frozen=True)
class IdealExpr:
    polys: tuple


@dataclass(frozen=True)
class UnitExpr:
    pass


@dataclass(frozen=True)
class GenusExpr:
    pass


@dataclass(frozen=True)
class NameExpr:
    name: str


@dataclass(frozen=True)
class CallExpr:
    func: str
    args: tuple


@dataclass(frozen=True)
class MultiExpr:
    arg: object
    m: int


@dataclass(frozen=True)
class ProductExpr:
    left: object
    right: object


# Statements

@dataclass(frozen=True)
class RingDecl:
    kind: str
    p: int | None
    variables: tuple
    line: int = 0
    col: int = 1


@dataclass(frozen=True)
class CurveDecl:
    polys: tuple
    line: int = 0
    col: int = 1


@dataclass(frozen=True)
class Let:
    name: str
    expr: object
    line: int = 0
    col: int = 1


@dataclass(frozen=True)
class Print:
    expr: object
    line: int = 0
    col: int = 1


@dataclass(frozen=True)
class Assert:
    left: object
    relation: str
    right: object
    line: int = 0
    col: int = 1


@dataclass(frozen=True)
class Quit:
    line: int = 0
    col: int = 1


class _LineParser:
    """Recursive descent over a single script line"""

    def __init__(self, text: str, line: int):
        self.text = text
        self.line = line
        self.pos = 0

    # Scanning

    def _skip(self):
        self.pos = _BLANK.match(self.text, self.pos).end()

    def _at_end(self) -> bool:
        self._skip()
        return self.pos >= len(self.text)

    def _error(self, expected: str):
        self._skip()
        raise ScriptSyntaxError(self.line, self.pos + 1, expected)

    def _peek_word(self) -> str | None:
        self._skip()
        match = _IDENT.match(self.text, self.pos)
        return match.group() if match else None

    def _word(self, expected: str = "an identifier") -> str:
        word = self._peek_word()
        if word is None:
            self._error(expected)
        self.pos += len(word)
        return word

    def _keyword(self, keyword: str):
        self._skip()
        match = _IDENT.match(self.text, self.pos)
        if not match or match.group() != keyword:
            self._error(repr(keyword))
        self.pos = match.end()

    def _accept(self, symbol: str) -> bool:
        self._skip()
        if self.text.startswith(symbol, self.pos):
            self.pos += len(symbol)
            return True
        return False

    def _expect(self, symbol: str):
        if not self._accept(symbol):
            self._error(repr(symbol))

    def _int(self, expected: str = "an integer") -> int:
        self._skip()
        match = _INT.match(self.text, self.pos)
        if not match:
            self._error(expected)
        self.pos = match.end()
        return int(match.group())

    def _span(self, stops: str, expected: str) -> str:
        """Raw text up to the next stop character, which is left unread"""
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in stops:
            self.pos += 1
        span = self.text[start:self.pos].strip()
        if not span:
            self.pos = start
            self._error(expected)
        return span

    def _finish(self):
        if not self._at_end():
            self._error("end of line")

    # Statements

    def statement(self):
        self._skip()
        col = self.pos + 1
        head = self._word("a statement")
        if head == "ring":
            result = self._ring(col)
        elif head == "curve":
            result = self._curve(col)
        elif head == "let":
            name = self._word("a name")
            if name in KEYWORDS:
                self.pos -= len(name)
                self._error("a name that is not a keyword")
            self._expect("=")
            result = Let(name, self.expr(), self.line, col)
        elif head == "print":
            result = Print(self.expr(), self.line, col)
        elif head == "assert":
            left = self.expr()
            if self._accept("=="):
                relation = "=="
            elif self._accept("~"):
                relation = "~"
            else:
                self._error("'==' or '~'")
            result = Assert(left, relation, self.expr(), self.line, col)
        elif head == "quit":
            result = Quit(self.line, col)
        else:
            self.pos -= len(head)
            self._error("a statement")
        self._finish()
        return result

    def _ring(self, col: int) -> RingDecl:
        kind = self._word("'q' or 'gf'")
        p = None
        if kind == "gf":
            p = self._int("a characteristic")
        elif kind != "q":
            self.pos -= len(kind)
            self._error("'q' or 'gf'")
        self._keyword("vars")
        variables = []
        while not self._at_end():
            name = self._word("a variable")
            self._expect(":")
            variables.append((name, self._int("a weight")))
        if not variables:
            self._error("a variable")
        return RingDecl(kind, p, tuple(variables), self.line, col)

    def _curve(self, col: int) -> CurveDecl:
        polys = [self._span(";", "a polynomial")]
        while self._accept(";"):
            polys.append(self._span(";", "a polynomial"))
        return CurveDecl(tuple(polys), self.line, col)

    # Expressions

    def expr(self):
        result = self._primary()
        while self._accept("*"):
            result = ProductExpr(result, self._primary())
        return result

    def _primary(self):
        if self._accept("("):
            inner = self.expr()
            self._expect(")")
            return inner
        word = self._word("an expression")
        if word == "unit":
            return UnitExpr()
        if word == "genus":
            return GenusExpr()
        if word in ("point", "ideal"):
            self._expect("(")
            items = [self._span(",)", "a scalar" if word == "point" else "a polynomial")]
            while self._accept(","):
                items.append(self._span(",)", "a scalar" if word == "point" else "a polynomial"))
            self._expect(")")
            return PointExpr(tuple(items)) if word == "point" else IdealExpr(tuple(items))
        if word in UNARY_CALLS:
            self._expect("(")
            arg = self.expr()
            self._expect(")")
            return CallExpr(word, (arg,))
        if word in BINARY_CALLS:
            self._expect("(")
            left = self.expr()
            self._expect(",")
            right = self.expr()
            self._expect(")")
            return CallExpr(word, (left, right))
        if word == "multi":
            self._expect("(")
            arg = self.expr()
            self._expect(",")
            m = self._int("a multiplier")
            self._expect(")")
            return MultiExpr(arg, m)
        if word in KEYWORDS:
            self.pos -= len(word)
            self._error("an expression")
        return NameExpr(word)


def parse_line(text: str, line: int = 1):
    """Parse one line; returns None for blank and comment-only lines"""
    code = text.split("#", 1)[0]
    if not code.strip():
        return None
    return _LineParser(code, line).statement()


def parse_script(text: str) -> list:
    """
    Parse a whole script into statements

    Raises:
        ScriptSyntaxError: with the 1-based line and column of the first problem
    """
    statements = []
    for number, raw in enumerate(text.splitlines(), start=1):
        statement = parse_line(raw, number)
        if statement is not None:
            statements.append(statement)
    return statements
