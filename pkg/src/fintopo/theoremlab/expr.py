"""Boolean formulas over named atoms.

Grammar, loosest first::

    iff  := imp ("<->" imp)*
    imp  := or ("->" imp)?          right associative
    or   := and ("|" and)*
    and  := not ("&" not)*
    not  := "!" not | atom | "(" iff ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Union

_TOKEN = re.compile(r"\s*(<->|->|[!&|()]|[A-Za-z_][A-Za-z0-9_]*)")


class ExprError(ValueError):
    pass


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Not:
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


Expr = Union[Atom, Not, BinOp]


def tokenize(text: str) -> list[str]:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprError(f"bad character at {pos} in {text!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, tok: str | None = None) -> str:
        got = self.peek()
        if got is None or (tok is not None and got != tok):
            raise ExprError(f"expected {tok or 'token'}, got {got!r}")
        self.i += 1
        return got

    def iff(self) -> Expr:
        node = self.imp()
        while self.peek() == "<->":
            self.take()
            node = BinOp("<->", node, self.imp())
        return node

    def imp(self) -> Expr:
        node = self.or_()
        if self.peek() == "->":
            self.take()
            node = BinOp("->", node, self.imp())
        return node

    def or_(self) -> Expr:
        node = self.and_()
        while self.peek() == "|":
            self.take()
            node = BinOp("|", node, self.and_())
        return node

    def and_(self) -> Expr:
        node = self.not_()
        while self.peek() == "&":
            self.take()
            node = BinOp("&", node, self.not_())
        return node

    def not_(self) -> Expr:
        tok = self.peek()
        if tok == "!":
            self.take()
            return Not(self.not_())
        if tok == "(":
            self.take()
            node = self.iff()
            self.take(")")
            return node
        if tok is None or not (tok[0].isalpha() or tok[0] == "_"):
            raise ExprError(f"expected atom, got {tok!r}")
        self.take()
        return Atom(tok)


def parse(text: str) -> Expr:
    p = _Parser(tokenize(text))
    node = p.iff()
    if p.peek() is not None:
        raise ExprError(f"trailing input {p.peek()!r}")
    return node


def atoms(node: Expr) -> list[str]:
    """Atom names in first-appearance order, without repeats."""
    seen: list[str] = []

    def walk(e: Expr) -> None:
        if isinstance(e, Atom):
            if e.name not in seen:
                seen.append(e.name)
        elif isinstance(e, Not):
            walk(e.arg)
        else:
            walk(e.left)
            walk(e.right)

    walk(node)
    return seen


def evaluate(node: Expr, value: Callable[[str], bool]) -> bool:
    """Short-circuit evaluation; ``value`` is only called for atoms it needs."""
    if isinstance(node, Atom):
        return bool(value(node.name))
    if isinstance(node, Not):
        return not evaluate(node.arg, value)
    if node.op == "&":
        return evaluate(node.left, value) and evaluate(node.right, value)
    if node.op == "|":
        return evaluate(node.left, value) or evaluate(node.right, value)
    if node.op == "->":
        return (not evaluate(node.left, value)) or evaluate(node.right, value)
    return evaluate(node.left, value) == evaluate(node.right, value)


def to_text(node: Expr) -> str:
    if isinstance(node, Atom):
        return node.name
    if isinstance(node, Not):
        return "!" + to_text(node.arg)
    return f"({to_text(node.left)} {node.op} {to_text(node.right)})"
