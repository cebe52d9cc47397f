"""Exact-rational truncated power series and polynomial expressions.

A ``TruncatedSeries`` keeps coefficients of t^0 .. t^(T-1); all arithmetic
truncates at T.  A series that vanishes up to T has unknown order
("zero to T"): ``order`` is None and callers must treat the component as
zero with a recorded caveat.

Expressions use the grammar (whitespace-insensitive)

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | power
    power  := atom ('^' INT)?
    atom   := INT ('/' INT)? | IDENT | '(' expr ')'

so '^' binds tighter than unary minus, which binds tighter than '*', which
binds tighter than '+'/'-'.  Exponents are nonnegative integer literals and
'/' only forms rational literals p/q.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .errors import ExpressionError


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: Tuple[Fraction, ...]

    @property
    def truncation(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, T: int) -> "TruncatedSeries":
        return cls(coeffs=(Fraction(0),) * T)

    @classmethod
    def constant(cls, value, T: int) -> "TruncatedSeries":
        c = [Fraction(0)] * T
        c[0] = Fraction(value)
        return cls(coeffs=tuple(c))

    @classmethod
    def variable(cls, T: int) -> "TruncatedSeries":
        c = [Fraction(0)] * T
        if T > 1:
            c[1] = Fraction(1)
        return cls(coeffs=tuple(c))

    @classmethod
    def from_coeffs(cls, coeffs, T: int) -> "TruncatedSeries":
        c = [Fraction(x) for x in coeffs[:T]]
        c.extend([Fraction(0)] * (T - len(c)))
        return cls(coeffs=tuple(c))

    def _check(self, other: "TruncatedSeries") -> None:
        if self.truncation != other.truncation:
            raise ExpressionError("mixed truncation orders")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        T = self.truncation
        out = [Fraction(0)] * T
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= T:
                    break
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    def scale(self, factor) -> "TruncatedSeries":
        f = Fraction(factor)
        return TruncatedSeries(tuple(f * a for a in self.coeffs))

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            raise ExpressionError("negative exponent")
        out = TruncatedSeries.constant(1, self.truncation)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    @property
    def order(self) -> Optional[int]:
        """Index of the first nonzero coefficient, or None if zero to T."""
        for i, a in enumerate(self.coeffs):
            if a != 0:
                return i
        return None

    @property
    def is_zero(self) -> bool:
        return self.order is None

    def leading_coefficient(self) -> Fraction:
        o = self.order
        if o is None:
            raise ExpressionError("zero series has no leading coefficient")
        return self.coeffs[o]

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k (k >= 0), truncating."""
        if k < 0:
            raise ExpressionError("shift must be nonnegative")
        T = self.truncation
        out = [Fraction(0)] * T
        for i, a in enumerate(self.coeffs):
            if i + k < T:
                out[i + k] = a
        return TruncatedSeries(tuple(out))

    def retruncate(self, T: int) -> "TruncatedSeries":
        return TruncatedSeries.from_coeffs(self.coeffs, T)

    def __str__(self) -> str:
        parts = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if i == 0:
                parts.append(str(a))
            elif i == 1:
                parts.append(f"{a}*t" if a != 1 else "t")
            else:
                parts.append(f"{a}*t^{i}" if a != 1 else f"t^{i}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


# ---------------------------------------------------------------------------
# expression parsing

Node = Union[Tuple[str, "Node", "Node"], Tuple[str, "Node"], Tuple[str, object]]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^|\*|\+|-|/|\(|\)))")


def tokenize(text: str) -> List[Tuple[str, object]]:
    tokens: List[Tuple[str, object]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionError(f"unexpected character at {text[pos:]!r}")
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1))))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: List[Tuple[str, object]], source: str):
        self.tokens = tokens
        self.pos = 0
        self.source = source

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ExpressionError(f"expected {op!r} in {self.source!r}")

    def parse(self) -> Node:
        node = self.expr()
        if self.pos != len(self.tokens):
            raise ExpressionError(f"trailing input in {self.source!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in ("+", "-"):
                self.take()
                rhs = self.term()
                node = ("add" if val == "+" else "sub", node, rhs)
            else:
                return node

    def term(self) -> Node:
        node = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                node = ("mul", node, self.factor())
            else:
                return node

    def factor(self) -> Node:
        kind, val = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return ("neg", self.factor())
        return self.power()

    def power(self) -> Node:
        node = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            ekind, eval_ = self.take()
            if ekind != "num":
                raise ExpressionError(
                    f"exponent must be a nonnegative integer in {self.source!r}"
                )
            return ("pow", node, eval_)
        return node

    def atom(self) -> Node:
        kind, val = self.take()
        if kind == "num":
            nkind, nval = self.peek()
            if nkind == "op" and nval == "/":
                self.take()
                dkind, dval = self.take()
                if dkind != "num" or dval == 0:
                    raise ExpressionError(
                        f"rational literal needs a nonzero integer denominator "
                        f"in {self.source!r}"
                    )
                return ("const", Fraction(val, dval))
            return ("const", Fraction(val))
        if kind == "name":
            return ("var", val)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ExpressionError(f"unexpected token {val!r} in {self.source!r}")


def parse_expression(text: str) -> Node:
    return _Parser(tokenize(text), text).parse()


def evaluate_node(node: Node, env: Dict[str, TruncatedSeries], T: int) -> TruncatedSeries:
    op = node[0]
    if op == "const":
        return TruncatedSeries.constant(node[1], T)
    if op == "var":
        name = node[1]
        if name not in env:
            raise ExpressionError(f"unknown name {name!r}")
        return env[name]
    if op == "neg":
        return -evaluate_node(node[1], env, T)
    if op == "add":
        return evaluate_node(node[1], env, T) + evaluate_node(node[2], env, T)
    if op == "sub":
        return evaluate_node(node[1], env, T) - evaluate_node(node[2], env, T)
    if op == "mul":
        return evaluate_node(node[1], env, T) * evaluate_node(node[2], env, T)
    if op == "pow":
        return evaluate_node(node[1], env, T) ** node[2]
    raise ExpressionError(f"bad node {node!r}")


def evaluate_expression(text: str, env: Dict[str, TruncatedSeries], T: int) -> TruncatedSeries:
    return evaluate_node(parse_expression(text), env, T)
