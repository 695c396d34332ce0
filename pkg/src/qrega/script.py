"""Interpreter for a small GAALOP-style script dialect.

A script is a sequence of ``name = expr;`` statements, optionally prefixed
with ``?`` to request output. Expressions use ``+ - * ^``, unary minus,
parentheses, decimal literals and identifiers. ``*`` is the geometric
product and ``^`` the outer product; both bind tighter than ``+``/``-``.
Generator names come from a Definition.csv file.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Union

from .ga import Algebra, Multivector, format_blade, make_algebra, outer_product


class ScriptError(Exception):
    """Lexical, syntax or evaluation error with a 1-based source position."""

    kind = "error"

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{self.kind} at line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class LexError(ScriptError):
    kind = "lexical error"


class ParseError(ScriptError):
    kind = "syntax error"


class EvalError(ScriptError):
    kind = "evaluation error"


class DefinitionError(ValueError):
    pass


# --- definition files ------------------------------------------------------


@dataclass(frozen=True)
class AlgebraDefinition:
    basis_names: tuple[str, ...]
    squares: Mapping[str, int]

    def __post_init__(self) -> None:
        if set(self.basis_names) != set(self.squares):
            raise DefinitionError(
                "generator squares must be given for exactly the basis names"
            )
        object.__setattr__(self, "squares", MappingProxyType(dict(self.squares)))

    def to_algebra(self) -> Algebra:
        return make_algebra([self.squares[n] for n in self.basis_names], self.basis_names)


def _basis_line(line: str, lineno: int) -> list[str]:
    items = [s.strip() for s in line.split(",")]
    if not items or items[0] != "1":
        raise DefinitionError(f"line {lineno}: basis list must start with '1'")
    names = items[1:]
    for name in names:
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name):
            raise DefinitionError(f"line {lineno}: invalid basis name {name!r}")
    if len(set(names)) != len(names):
        raise DefinitionError(f"line {lineno}: duplicate basis names")
    if not names:
        raise DefinitionError(f"line {lineno}: no basis vectors listed")
    return names


def parse_definition(text: str) -> AlgebraDefinition:
    """Read the five-line Definition.csv format.

    Line 1 is the used basis, line 3 the standard basis, line 4 the squares.
    Lines 2 and 5 hold basis transformations, which are not supported, so
    they must be blank and lines 1 and 3 must agree.
    """
    lines = text.splitlines()
    if len(lines) < 4:
        raise DefinitionError(f"definition needs at least 4 lines, got {len(lines)}")
    used = _basis_line(lines[0], 1)
    if lines[1].strip():
        raise DefinitionError("line 2: basis transformations are not supported")
    standard = _basis_line(lines[2], 3)
    if standard != used:
        raise DefinitionError(
            "lines 1 and 3 differ; transformations between bases are not supported"
        )
    squares: dict[str, int] = {}
    for entry in lines[3].split(","):
        name, eq, value = entry.partition("=")
        name, value = name.strip(), value.strip()
        if not eq or not name or not value:
            raise DefinitionError(f"line 4: malformed square entry {entry.strip()!r}")
        if name not in used:
            raise DefinitionError(f"line 4: unknown basis name {name!r}")
        if name in squares:
            raise DefinitionError(f"line 4: square of {name!r} given twice")
        try:
            sq = float(value)
        except ValueError:
            raise DefinitionError(f"line 4: square of {name!r} is not a number") from None
        if sq not in (1.0, -1.0):
            raise DefinitionError(f"line 4: square of {name!r} must be 1 or -1")
        squares[name] = int(sq)
    missing = [n for n in used if n not in squares]
    if missing:
        raise DefinitionError(f"line 4: no square given for {', '.join(missing)}")
    for k, extra in enumerate(lines[4:], start=5):
        if extra.strip():
            raise DefinitionError(f"line {k}: expected a blank line")
    return AlgebraDefinition(tuple(used), squares)


def format_definition(d: AlgebraDefinition) -> str:
    basis = ",".join(["1", *d.basis_names])
    squares = ",".join(f"{n}={d.squares[n]}" for n in d.basis_names)
    return f"{basis}\n\n{basis}\n{squares}\n\n"


def qra_definition(n: int) -> AlgebraDefinition:
    """Definition for an ``n``-qubit register: e1..e{2n}, er1, er2, all +1."""
    if n < 1:
        raise ValueError("need at least one qubit")
    names = [f"e{k}" for k in range(1, 2 * n + 1)] + ["er1", "er2"]
    return AlgebraDefinition(tuple(names), {name: 1 for name in names})


# --- lexing ----------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # 'ident', 'number', 'eof', or the punctuation character itself
    text: str
    offset: int
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+)"
    r"|(?P<comment>//[^\n]*)"
    r"|(?P<number>[0-9]+(?:\.[0-9]+)?)"
    r"|(?P<ident>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<punct>[=?+\-*^();])"
)


def _position(source: str, offset: int) -> tuple[int, int]:
    line = source.count("\n", 0, offset) + 1
    column = offset - (source.rfind("\n", 0, offset) + 1) + 1
    return line, column


def tokenize(source: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            line, col = _position(source, pos)
            raise LexError(f"unexpected character {source[pos]!r}", line, col)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            text = m.group()
            line, col = _position(source, pos)
            tokens.append(Token(text if kind == "punct" else kind, text, pos, line, col))
        pos = m.end()
    # eof sits just past the last non-whitespace character
    end = len(source.rstrip())
    line, col = _position(source, end)
    tokens.append(Token("eof", "", end, line, col))
    return tokens


# --- syntax tree -----------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: float
    line: int
    column: int


@dataclass(frozen=True)
class Name:
    name: str
    line: int
    column: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    line: int
    column: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    line: int
    column: int


Expr = Union[Num, Name, Neg, BinOp]


@dataclass(frozen=True)
class Statement:
    target: str
    output: bool
    expr: Expr
    line: int
    column: int


@dataclass(frozen=True)
class Ast:
    statements: tuple[Statement, ...]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, what: str | None = None) -> Token:
        if self.tok.kind != kind:
            self.fail(f"expected {what or repr(kind)}")
        return self.advance()

    def fail(self, message: str):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"{message}, found {found}", t.line, t.column)

    def program(self) -> Ast:
        stmts = []
        while self.tok.kind != "eof":
            stmts.append(self.statement())
        return Ast(tuple(stmts))

    def statement(self) -> Statement:
        start = self.tok
        output = False
        if self.tok.kind == "?":
            self.advance()
            output = True
        target = self.expect("ident", "a variable name")
        self.expect("=")
        expr = self.expr()
        self.expect(";")
        return Statement(target.text, output, expr, start.line, start.column)

    def expr(self) -> Expr:
        left = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.advance()
            left = BinOp(op.kind, left, self.term(), op.line, op.column)
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self.tok.kind in ("*", "^"):
            op = self.advance()
            left = BinOp(op.kind, left, self.unary(), op.line, op.column)
        return left

    def unary(self) -> Expr:
        if self.tok.kind == "-":
            op = self.advance()
            return Neg(self.unary(), op.line, op.column)
        return self.primary()

    def primary(self) -> Expr:
        t = self.tok
        if t.kind == "number":
            self.advance()
            return Num(float(t.text), t.line, t.column)
        if t.kind == "ident":
            self.advance()
            return Name(t.text, t.line, t.column)
        if t.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        self.fail("expected an expression")


def parse_script(source: str) -> Ast:
    return _Parser(tokenize(source)).program()


# --- evaluation ------------------------------------------------------------


@dataclass(frozen=True)
class Evaluation:
    environment: Mapping[str, Multivector]
    outputs: tuple[tuple[str, Multivector], ...] = field(default=())


def eval_expr(expr: Expr, env: Mapping[str, Multivector], algebra: Algebra) -> Multivector:
    if isinstance(expr, Num):
        return algebra.scalar(expr.value)
    if isinstance(expr, Name):
        try:
            return env[expr.name]
        except KeyError:
            raise EvalError(f"unbound name {expr.name!r}", expr.line, expr.column) from None
    if isinstance(expr, Neg):
        return -eval_expr(expr.operand, env, algebra)
    left = eval_expr(expr.left, env, algebra)
    right = eval_expr(expr.right, env, algebra)
    if expr.op == "+":
        return left + right
    if expr.op == "-":
        return left - right
    if expr.op == "*":
        return left * right
    return outer_product(left, right)


def evaluate(ast: Ast, definition: AlgebraDefinition | Algebra) -> Evaluation:
    algebra = definition if isinstance(definition, Algebra) else definition.to_algebra()
    generators = dict(zip(algebra.names, algebra.generators()))
    env: dict[str, Multivector] = dict(generators)
    outputs = []
    for st in ast.statements:
        if st.target in generators:
            raise EvalError(
                f"cannot redefine generator {st.target!r}", st.line, st.column
            )
        value = eval_expr(st.expr, env, algebra)
        env[st.target] = value
        if st.output:
            outputs.append((st.target, value))
    return Evaluation(MappingProxyType(env), tuple(outputs))


def run_source(source: str, definition: AlgebraDefinition | Algebra) -> Evaluation:
    return evaluate(parse_script(source), definition)


# --- output ----------------------------------------------------------------


def format_value(x: float) -> str:
    # repr is the shortest round-tripping decimal and keeps ".0" on integers
    return repr(float(x))


def output_rows(ev: Evaluation, tol: float = 0.0):
    """Yield ``(name, index, value, blade text)`` for every printed coordinate."""
    for name, mv in ev.outputs:
        for index, value, blade in mv.pruned(tol).coordinates():
            yield name, index, value, format_blade(blade, mv.algebra)


def format_outputs(ev: Evaluation, tol: float = 0.0) -> str:
    lines = [
        f"{name}[{index}] = {format_value(value)}; // {blade}"
        for name, index, value, blade in output_rows(ev, tol)
    ]
    return "".join(line + "\n" for line in lines)


def outputs_to_json(ev: Evaluation, tol: float = 0.0) -> str:
    doc = [
        {
            "name": name,
            "coords": [
                {"index": i, "value": v, "blade": format_blade(b, mv.algebra)}
                for i, v, b in mv.pruned(tol).coordinates()
            ],
        }
        for name, mv in ev.outputs
    ]
    return json.dumps(doc, indent=2) + "\n"
