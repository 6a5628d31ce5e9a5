"""Formula trees and a text syntax shared by the modal and first-order
evaluators.

Grammar (binding loosest to tightest): quantifiers and implication, then
`|`, then `&`, then the prefixes `!`, `box`, `dia`.  Atoms are bare names
for propositional use, or `R(v1,v2)` with numbered variables for
first-order use.  Quantifiers are written `forall vK. ...` / `exists vK. ...`
and extend as far right as possible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import ParseError


@dataclass(frozen=True)
class Atom:
    """`p` (propositional, no args) or `R(v1,...,vk)` (first-order)."""

    name: str
    args: tuple[int, ...] = ()


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Box:
    body: "Formula"


@dataclass(frozen=True)
class Dia:
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    var: int
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: int
    body: "Formula"


Formula = Union[Atom, Not, And, Or, Implies, Box, Dia, Forall, Exists]

_KEYWORDS = {"box", "dia", "forall", "exists"}

_TOKEN = re.compile(
    r"\s*(?:(?P<arrow>->)|(?P<punct>[()!&|,.])|(?P<name>[A-Za-z_][A-Za-z_0-9]*))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos}")
        if match.lastgroup == "arrow":
            tokens.append(("->", "->", match.start()))
        elif match.lastgroup == "punct":
            tok = match.group("punct")
            tokens.append((tok, tok, match.start()))
        else:
            name = match.group("name")
            kind = name if name in _KEYWORDS else "name"
            tokens.append((kind, name, match.start()))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def next(self) -> tuple[str, str, int]:
        if self.pos >= len(self.tokens):
            raise ParseError("unexpected end of formula")
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(
                f"expected {kind!r} but found {tok[1]!r} at position {tok[2]}"
            )
        return tok

    def parse(self) -> Formula:
        formula = self.implies()
        if self.pos != len(self.tokens):
            tok = self.tokens[self.pos]
            raise ParseError(f"trailing input {tok[1]!r} at position {tok[2]}")
        return formula

    def implies(self) -> Formula:
        left = self.disjunction()
        if self.peek() == "->":
            self.next()
            return Implies(left, self.implies())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.peek() == "|":
            self.next()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        while self.peek() == "&":
            self.next()
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        kind = self.peek()
        if kind == "!":
            self.next()
            return Not(self.unary())
        if kind == "box":
            self.next()
            return Box(self.unary())
        if kind == "dia":
            self.next()
            return Dia(self.unary())
        if kind in ("forall", "exists"):
            _, word, _ = self.next()
            var = self.variable()
            self.expect(".")
            body = self.implies()
            return Forall(var, body) if word == "forall" else Exists(var, body)
        return self.primary()

    def variable(self) -> int:
        tok = self.expect("name")
        match = re.fullmatch(r"v([0-9]+)", tok[1])
        if match is None:
            raise ParseError(
                f"expected a variable like v1 but found {tok[1]!r} at position {tok[2]}"
            )
        index = int(match.group(1))
        if index == 0:
            raise ParseError("variables are numbered from v1")
        return index

    def primary(self) -> Formula:
        kind = self.peek()
        if kind == "(":
            self.next()
            inner = self.implies()
            self.expect(")")
            return inner
        tok = self.expect("name")
        if self.peek() == "(":
            self.next()
            args = [self.variable()]
            while self.peek() == ",":
                self.next()
                args.append(self.variable())
            self.expect(")")
            return Atom(tok[1], tuple(args))
        return Atom(tok[1])


def parse_formula(text: str) -> Formula:
    """Parse the documented syntax into a formula tree."""
    return _Parser(text).parse()


def formula_to_text(formula: Formula) -> str:
    """Render a tree in the same syntax (fully parenthesized where needed)."""
    if isinstance(formula, Atom):
        if formula.args:
            return f"{formula.name}({','.join(f'v{i}' for i in formula.args)})"
        return formula.name
    if isinstance(formula, Not):
        return f"!{_wrap(formula.body)}"
    if isinstance(formula, Box):
        return f"box {_wrap(formula.body)}"
    if isinstance(formula, Dia):
        return f"dia {_wrap(formula.body)}"
    if isinstance(formula, And):
        return f"{_wrap(formula.left)} & {_wrap(formula.right)}"
    if isinstance(formula, Or):
        return f"{_wrap(formula.left)} | {_wrap(formula.right)}"
    if isinstance(formula, Implies):
        return f"{_wrap(formula.left)} -> {_wrap(formula.right)}"
    if isinstance(formula, Forall):
        return f"forall v{formula.var}. {formula_to_text(formula.body)}"
    if isinstance(formula, Exists):
        return f"exists v{formula.var}. {formula_to_text(formula.body)}"
    raise TypeError(f"not a formula: {formula!r}")


def _wrap(formula: Formula) -> str:
    text = formula_to_text(formula)
    if isinstance(formula, Atom):
        return text
    return f"({text})"


def formula_depth(formula: Formula) -> int:
    """Tree depth with atoms at depth 1."""
    if isinstance(formula, Atom):
        return 1
    if isinstance(formula, (Not, Box, Dia)):
        return 1 + formula_depth(formula.body)
    if isinstance(formula, (Forall, Exists)):
        return 1 + formula_depth(formula.body)
    return 1 + max(formula_depth(formula.left), formula_depth(formula.right))


def max_variable_index(formula: Formula) -> int:
    """Largest variable index mentioned anywhere (0 for propositional trees)."""
    if isinstance(formula, Atom):
        return max(formula.args, default=0)
    if isinstance(formula, (Not, Box, Dia)):
        return max_variable_index(formula.body)
    if isinstance(formula, (Forall, Exists)):
        return max(formula.var, max_variable_index(formula.body))
    return max(max_variable_index(formula.left), max_variable_index(formula.right))
