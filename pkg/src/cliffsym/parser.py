"""Recursive-descent parser for multivector expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | scalar | blade | '(' expr ')'
    blade  := 'e' digit*          (digits strictly increasing; bare 'e' is the identity)
    scalar := real | '(' real ',' real ')'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .clifford import Multivector, Signature, mv_add, mv_mul, mv_scale


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_BLADE = re.compile(r"e(\d*)")


@dataclass(frozen=True)
class Num:
    value: complex


@dataclass(frozen=True)
class BladeRef:
    name: str
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


Expr = Union[Num, BladeRef, BinOp, Neg]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, pos: int | None = None):
        raise ParseError(msg, self.pos if pos is None else pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self) -> Expr:
        if not self.text.strip():
            self.error("empty expression")
        node = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek() == "*":
            self.pos += 1
            node = BinOp("*", node, self.factor())
        return node

    def real(self) -> float:
        self.skip_ws()
        m = _NUMBER.match(self.text, self.pos)
        if not m:
            self.error("expected a real number")
        self.pos = m.end()
        return float(m.group())

    def factor(self) -> Expr:
        ch = self.peek()
        start = self.pos
        if ch == "-":
            self.pos += 1
            return Neg(self.factor())
        if ch == "(":
            # '(' real ',' ... is a complex literal, anything else a group
            self.pos += 1
            save = self.pos
            self.skip_ws()
            m = _NUMBER.match(self.text, self.pos)
            if m:
                self.pos = m.end()
                if self.peek() == ",":
                    self.pos = save
                    re_part = self.real()
                    self.expect(",")
                    im_part = self.real()
                    self.expect(")")
                    return Num(complex(re_part, im_part))
            self.pos = save
            node = self.expr()
            self.expect(")")
            return node
        if ch == "e":
            m = _BLADE.match(self.text, self.pos)
            digits = m.group(1)
            if any(b <= a for a, b in zip(digits, digits[1:])):
                self.error(f"blade digits must be strictly increasing in 'e{digits}'", start)
            self.pos = m.end()
            return BladeRef(digits, start)
        if ch and (ch.isdigit() or ch == "."):
            return Num(complex(self.real()))
        if not ch:
            self.error("unexpected end of input")
        self.error(f"unexpected {ch!r}")


def parse(text: str) -> Expr:
    return _Parser(text).parse()


def evaluate(node: Expr, sig: Signature) -> Multivector:
    if isinstance(node, Num):
        return Multivector.scalar(sig, node.value)
    if isinstance(node, BladeRef):
        return Multivector.blade(sig, _blade_mask(node, sig))
    if isinstance(node, Neg):
        return mv_scale(-1, evaluate(node.operand, sig))
    if node.op == "*" and isinstance(node.left, Num) and isinstance(node.right, BladeRef):
        # literal coefficient: store it as written, no complex multiply
        return Multivector.blade(sig, _blade_mask(node.right, sig), node.left.value)
    left, right = evaluate(node.left, sig), evaluate(node.right, sig)
    if node.op == "+":
        return mv_add(left, right)
    if node.op == "-":
        return mv_add(left, mv_scale(-1, right))
    return mv_mul(left, right)


def parse_multivector(text: str, sig: Signature) -> Multivector:
    return evaluate(parse(text), sig)


def _blade_mask(node: BladeRef, sig: Signature) -> int:
    labels = [int(c) for c in node.name]
    if any(a >= sig.n for a in labels):
        raise ParseError(f"generator label out of range for {sig} in 'e{node.name}'", node.pos)
    return sum(1 << a for a in labels)
