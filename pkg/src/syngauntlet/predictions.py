"""Prediction formula language: lexer, parser, evaluator.

Grammar (whitespace insignificant)::

    target   := "(" INT ";" IDENT ")"
    arith    := arith_atom (("+" | "-") arith_atom)*      left-associative
    arith_atom := target | NUMBER | "(" arith ")"
    cmp      := arith ("<" | ">") arith                   strict comparisons
    formula  := and_expr ("|" and_expr)*
    and_expr := atom ("&" atom)*
    atom     := cmp | "(" formula ")"

``+``/``-`` bind tighter than ``<``/``>``, which bind tighter than ``&``,
which binds tighter than ``|``. Surprisal values are in bits throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from .errors import MissingTarget, ParseError

__all__ = [
    "Target", "Literal", "Add", "Sub", "Less", "Greater", "And", "Or",
    "PredictionAst", "SurprisalTable",
    "parse_prediction", "evaluate_prediction", "referenced_targets", "pretty",
]


# --- AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class Target:
    region: int
    condition: str


@dataclass(frozen=True)
class Literal:
    value: float


@dataclass(frozen=True)
class Add:
    left: "ArithNode"
    right: "ArithNode"


@dataclass(frozen=True)
class Sub:
    left: "ArithNode"
    right: "ArithNode"


@dataclass(frozen=True)
class Less:
    left: "ArithNode"
    right: "ArithNode"


@dataclass(frozen=True)
class Greater:
    left: "ArithNode"
    right: "ArithNode"


@dataclass(frozen=True)
class And:
    left: "BoolNode"
    right: "BoolNode"


@dataclass(frozen=True)
class Or:
    left: "BoolNode"
    right: "BoolNode"


ArithNode = Union[Target, Literal, Add, Sub]
BoolNode = Union[Less, Greater, And, Or]
PredictionAst = BoolNode


class SurprisalTable:
    """Map (condition, 1-based region index) -> summed surprisal in bits."""

    def __init__(self, entries: Mapping[tuple[str, int], float]):
        self._entries = dict(entries)

    def lookup(self, condition: str, region: int) -> float:
        try:
            return self._entries[(condition, region)]
        except KeyError:
            raise MissingTarget(condition, region) from None

    def is_total(self, condition_names, region_count: int) -> bool:
        return all(
            (c, r) in self._entries
            for c in condition_names
            for r in range(1, region_count + 1)
        )

    def scaled(self, k: float) -> "SurprisalTable":
        return SurprisalTable({key: v * k for key, v in self._entries.items()})

    def items(self):
        return self._entries.items()

    def __contains__(self, key) -> bool:
        return key in self._entries

    def __eq__(self, other) -> bool:
        return isinstance(other, SurprisalTable) and self._entries == other._entries

    def __repr__(self) -> str:
        return f"SurprisalTable({self._entries!r})"


# --- lexer ----------------------------------------------------------------------

_PUNCT = {
    "(": "LPAREN", ")": "RPAREN", ";": "SEMI",
    "+": "PLUS", "-": "MINUS", "<": "LT", ">": "GT",
    "&": "AND", "|": "OR",
}


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    col: int  # 1-based column of the first character


def _lex(source: str) -> list[_Tok]:
    tokens: list[_Tok] = []
    i, n = 0, len(source)
    while i < n:
        c = source[i]
        if c.isspace():
            i += 1
            continue
        col = i + 1
        if c in _PUNCT:
            tokens.append(_Tok(_PUNCT[c], c, col))
            i += 1
        elif c.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            if j < n and source[j] == ".":
                if j + 1 >= n or not source[j + 1].isdigit():
                    raise ParseError("malformed number", j + 2)
                j += 1
                while j < n and source[j].isdigit():
                    j += 1
            tokens.append(_Tok("NUMBER", source[i:j], col))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            tokens.append(_Tok("IDENT", source[i:j], col))
            i = j
        else:
            raise ParseError(f"unexpected character {c!r}", col)
    return tokens


# --- parser ----------------------------------------------------------------------

class _Failure(Exception):
    """Internal backtracking signal; the real error is the furthest one seen."""


class _Parser:
    def __init__(self, source: str, tokens: list[_Tok]):
        self.source = source
        self.tokens = tokens
        self.pos = 0
        self.err_col = 0
        self.err_msg = "empty formula"

    def _peek(self, k: int = 0) -> _Tok | None:
        idx = self.pos + k
        return self.tokens[idx] if idx < len(self.tokens) else None

    def _col_here(self) -> int:
        tok = self._peek()
        return tok.col if tok else len(self.source) + 1

    def _fail(self, message: str, col: int | None = None):
        col = self._col_here() if col is None else col
        if col >= self.err_col:
            self.err_col, self.err_msg = col, message
        raise _Failure

    def _take(self, kind: str, what: str) -> _Tok:
        tok = self._peek()
        if tok is None or tok.kind != kind:
            self._fail(f"expected {what}")
        self.pos += 1
        return tok

    def formula(self) -> BoolNode:
        node = self._and_expr()
        while (tok := self._peek()) and tok.kind == "OR":
            self.pos += 1
            node = Or(node, self._and_expr())
        return node

    def _and_expr(self) -> BoolNode:
        node = self._formula_atom()
        while (tok := self._peek()) and tok.kind == "AND":
            self.pos += 1
            node = And(node, self._formula_atom())
        return node

    def _formula_atom(self) -> BoolNode:
        saved = self.pos
        try:
            return self._cmp()
        except _Failure:
            self.pos = saved
        tok = self._peek()
        if tok and tok.kind == "LPAREN":
            self.pos += 1
            node = self.formula()
            self._take("RPAREN", "')'")
            return node
        self._fail("expected a comparison or a parenthesized formula")

    def _cmp(self) -> BoolNode:
        left = self._arith()
        tok = self._peek()
        if tok and tok.kind == "LT":
            self.pos += 1
            return Less(left, self._arith())
        if tok and tok.kind == "GT":
            self.pos += 1
            return Greater(left, self._arith())
        self._fail("expected '<' or '>'")

    def _arith(self) -> ArithNode:
        node = self._arith_atom()
        while (tok := self._peek()) and tok.kind in ("PLUS", "MINUS"):
            self.pos += 1
            right = self._arith_atom()
            node = Add(node, right) if tok.kind == "PLUS" else Sub(node, right)
        return node

    def _arith_atom(self) -> ArithNode:
        tok = self._peek()
        if tok is None:
            self._fail("expected a number, a region target, or '('")
        if tok.kind == "NUMBER":
            self.pos += 1
            return Literal(float(tok.text))
        if tok.kind == "LPAREN":
            nxt, nxt2 = self._peek(1), self._peek(2)
            if nxt and nxt.kind == "NUMBER" and nxt2 and nxt2.kind == "SEMI":
                self.pos += 1
                num = self._take("NUMBER", "a region index")
                if "." in num.text:
                    self._fail("region index must be an integer", num.col)
                region = int(num.text)
                if region < 1:
                    self._fail("region index must be >= 1", num.col)
                self._take("SEMI", "';'")
                ident = self._take("IDENT", "a condition name")
                self._take("RPAREN", "')'")
                return Target(region, ident.text)
            self.pos += 1
            node = self._arith()
            self._take("RPAREN", "')'")
            return node
        self._fail("expected a number, a region target, or '('")


def parse_prediction(source: str) -> PredictionAst:
    """Parse a prediction formula; raises ParseError with a 1-based column."""
    tokens = _lex(source)
    parser = _Parser(source, tokens)
    try:
        ast = parser.formula()
        if parser.pos != len(tokens):
            parser._fail("unexpected trailing input")
    except _Failure:
        raise ParseError(parser.err_msg, parser.err_col) from None
    return ast


# --- evaluation ----------------------------------------------------------------------

def _eval_arith(node: ArithNode, table: SurprisalTable) -> float:
    if isinstance(node, Target):
        return table.lookup(node.condition, node.region)
    if isinstance(node, Literal):
        return node.value
    if isinstance(node, Add):
        return _eval_arith(node.left, table) + _eval_arith(node.right, table)
    if isinstance(node, Sub):
        return _eval_arith(node.left, table) - _eval_arith(node.right, table)
    raise TypeError(f"not an arithmetic node: {node!r}")


def evaluate_prediction(ast: PredictionAst, table: SurprisalTable) -> bool:
    """Evaluate a formula; comparisons are strict (ties fail) and boolean
    connectives are total — both sides always evaluate."""
    if isinstance(ast, Less):
        return _eval_arith(ast.left, table) < _eval_arith(ast.right, table)
    if isinstance(ast, Greater):
        return _eval_arith(ast.left, table) > _eval_arith(ast.right, table)
    if isinstance(ast, And):
        left = evaluate_prediction(ast.left, table)
        right = evaluate_prediction(ast.right, table)
        return left and right
    if isinstance(ast, Or):
        left = evaluate_prediction(ast.left, table)
        right = evaluate_prediction(ast.right, table)
        return left or right
    raise TypeError(f"not a boolean node: {ast!r}")


def _walk(node) -> Iterator:
    yield node
    for attr in ("left", "right"):
        child = getattr(node, attr, None)
        if child is not None:
            yield from _walk(child)


def referenced_targets(ast: PredictionAst) -> set[tuple[int, str]]:
    """All (region_index, condition) pairs mentioned by the formula."""
    return {(n.region, n.condition) for n in _walk(ast) if isinstance(n, Target)}


def pretty(node) -> str:
    """Render an AST back to concrete syntax (reparses to an equal AST)."""
    if isinstance(node, Target):
        return f"({node.region};{node.condition})"
    if isinstance(node, Literal):
        return repr(node.value)
    if isinstance(node, Add):
        return f"({pretty(node.left)} + {pretty(node.right)})"
    if isinstance(node, Sub):
        return f"({pretty(node.left)} - {pretty(node.right)})"
    if isinstance(node, Less):
        return f"{pretty(node.left)} < {pretty(node.right)}"
    if isinstance(node, Greater):
        return f"{pretty(node.left)} > {pretty(node.right)}"
    if isinstance(node, And):
        return f"({pretty(node.left)} & {pretty(node.right)})"
    if isinstance(node, Or):
        return f"({pretty(node.left)} | {pretty(node.right)})"
    raise TypeError(f"not an AST node: {node!r}")
