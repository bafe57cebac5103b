"""A small expression language for user-supplied transform functions.

Grammar, which is a public contract of the CLI:

* binary operators ``+ - * / ^`` with standard precedence
  (``^`` above unary minus above ``* /`` above ``+ -``), ``^``
  right-associative;
* parentheses and single-argument function calls ``f(expr)``;
* built-in functions ``exp log sqrt sin cos sinh cosh gamma zeta``,
  constants ``pi e i``;
* decimal number literals with optional fraction and exponent;
* identifiers are ASCII words; implicit multiplication is not supported
  ("2k" is a syntax error).

Evaluation is over complex numbers with principal branches throughout.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from . import numerics
from .errors import DomainError, EvaluationError, ParseError

__all__ = [
    "ExprAst",
    "Number",
    "Constant",
    "Variable",
    "Negate",
    "Binary",
    "Call",
    "parse",
    "evaluate",
    "to_string",
    "variables",
    "FUNCTIONS",
    "CONSTANTS",
]


@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Constant:
    name: str  # pi | e | i


@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class Negate:
    operand: "ExprAst"


@dataclass(frozen=True)
class Binary:
    op: str  # + - * / ^
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "ExprAst"


ExprAst = Union[Number, Constant, Variable, Negate, Binary, Call]

FUNCTIONS = {
    "exp": cmath.exp,
    "log": cmath.log,
    "sqrt": cmath.sqrt,
    "sin": cmath.sin,
    "cos": cmath.cos,
    "sinh": cmath.sinh,
    "cosh": cmath.cosh,
    "gamma": numerics.gamma,
    "zeta": numerics.zeta,
}

CONSTANTS = {
    "pi": complex(math.pi),
    "e": complex(math.e),
    "i": 1j,
}

_NUMBER_RE = re.compile(r"[0-9]+(?:\.[0-9]*)?(?:[eE][+-]?[0-9]+)?|\.[0-9]+(?:[eE][+-]?[0-9]+)?")
_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_ASCII_DIGITS = "0123456789"
_ASCII_LETTERS = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"

# binding powers; ^ binds tighter than unary minus, which binds tighter
# than * and /
_PREC = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 30}
_UNARY_PREC = 25
_RIGHT_ASSOC = {"^"}


@dataclass(frozen=True)
class _Token:
    kind: str  # number | ident | op | lparen | rparen | end
    text: str
    offset: int


def _tokenize(source: str) -> Iterator[_Token]:
    pos = 0
    n = len(source)
    while pos < n:
        ch = source[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in _ASCII_DIGITS or ch == ".":
            m = _NUMBER_RE.match(source, pos)
            if not m:
                raise ParseError(f"malformed number starting with {ch!r}", pos)
            yield _Token("number", m.group(), pos)
            pos = m.end()
            continue
        if ch in _ASCII_LETTERS:
            m = _IDENT_RE.match(source, pos)
            yield _Token("ident", m.group(), pos)
            pos = m.end()
            continue
        if ch in _PREC:
            yield _Token("op", ch, pos)
            pos += 1
            continue
        if ch == "(":
            yield _Token("lparen", ch, pos)
            pos += 1
            continue
        if ch == ")":
            yield _Token("rparen", ch, pos)
            pos += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", pos)
    yield _Token("end", "", n)


class _Parser:
    def __init__(self, source: str):
        self.tokens = list(_tokenize(source))
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            found = repr(tok.text) if tok.kind != "end" else "end of input"
            raise ParseError(f"expected {what}, found {found}", tok.offset)
        return self.advance()

    def parse_expression(self, min_prec: int) -> ExprAst:
        left = self.parse_atom()
        while True:
            tok = self.peek()
            if tok.kind != "op" or tok.text not in _PREC:
                return left
            prec = _PREC[tok.text]
            if prec < min_prec:
                return left
            self.advance()
            next_min = prec if tok.text in _RIGHT_ASSOC else prec + 1
            right = self.parse_expression(next_min)
            left = Binary(tok.text, left, right)

    def parse_atom(self) -> ExprAst:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return Negate(self.parse_expression(_UNARY_PREC))
        if tok.kind == "op" and tok.text == "+":
            # unary plus is a no-op but accepted for symmetry
            self.advance()
            return self.parse_expression(_UNARY_PREC)
        if tok.kind == "number":
            self.advance()
            return Number(float(tok.text))
        if tok.kind == "ident":
            self.advance()
            if self.peek().kind == "lparen":
                if tok.text not in FUNCTIONS:
                    raise ParseError(f"unknown function {tok.text!r}", tok.offset)
                self.advance()
                arg = self.parse_expression(0)
                self.expect("rparen", "')' closing the call")
                return Call(tok.text, arg)
            if tok.text in CONSTANTS:
                return Constant(tok.text)
            return Variable(tok.text)
        if tok.kind == "lparen":
            self.advance()
            inner = self.parse_expression(0)
            self.expect("rparen", "')'")
            return inner
        found = repr(tok.text) if tok.kind != "end" else "end of input"
        raise ParseError(f"expected an operand, found {found}", tok.offset)


def parse(source: str) -> ExprAst:
    """Parse ``source`` into an AST; raises ParseError with a byte offset."""
    parser = _Parser(source)
    ast = parser.parse_expression(0)
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected trailing input {tok.text!r}", tok.offset)
    return ast


def evaluate(ast: ExprAst, bindings: Mapping[str, complex]) -> complex:
    """Evaluate an AST over complex numbers.

    Unbound variables raise EvaluationError; domain errors from the
    numerics layer (gamma/zeta poles, powers of zero) propagate as is.
    """
    if isinstance(ast, Number):
        return complex(ast.value)
    if isinstance(ast, Constant):
        return CONSTANTS[ast.name]
    if isinstance(ast, Variable):
        try:
            return complex(bindings[ast.name])
        except KeyError:
            raise EvaluationError(f"unbound variable {ast.name!r}") from None
    if isinstance(ast, Negate):
        return -evaluate(ast.operand, bindings)
    if isinstance(ast, Binary):
        left = evaluate(ast.left, bindings)
        right = evaluate(ast.right, bindings)
        if ast.op == "+":
            return left + right
        if ast.op == "-":
            return left - right
        if ast.op == "*":
            return left * right
        if ast.op == "/":
            if right == 0:
                raise EvaluationError("division by zero")
            return left / right
        if ast.op == "^":
            return numerics.cpow(left, right)
        raise EvaluationError(f"unknown operator {ast.op!r}")
    if isinstance(ast, Call):
        value = evaluate(ast.arg, bindings)
        fn = FUNCTIONS[ast.func]
        try:
            return complex(fn(value))
        except (ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, DomainError):
                raise
            raise DomainError(f"{ast.func}({value!r}): {exc}") from exc
    raise EvaluationError(f"unknown AST node {ast!r}")


def to_string(ast: ExprAst) -> str:
    """Canonical fully parenthesized rendering; parse(to_string(a)) == a."""
    if isinstance(ast, Number):
        return repr(ast.value)
    if isinstance(ast, (Constant, Variable)):
        return ast.name
    if isinstance(ast, Negate):
        return f"(-{to_string(ast.operand)})"
    if isinstance(ast, Binary):
        return f"({to_string(ast.left)}{ast.op}{to_string(ast.right)})"
    if isinstance(ast, Call):
        return f"{ast.func}({to_string(ast.arg)})"
    raise EvaluationError(f"unknown AST node {ast!r}")


def variables(ast: ExprAst) -> set[str]:
    """Names of all free variables in the expression."""
    if isinstance(ast, Variable):
        return {ast.name}
    if isinstance(ast, Negate):
        return variables(ast.operand)
    if isinstance(ast, Binary):
        return variables(ast.left) | variables(ast.right)
    if isinstance(ast, Call):
        return variables(ast.arg)
    return set()
