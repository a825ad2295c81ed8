"""Propositional syntax: immutable formula trees, a parser and a printer.

Formulas are built over variables ``x1, x2, ...`` and the constants ``0``
(falsum) and ``1`` (verum).  The connectives, tightest binding first:

    a^2     self-fusion           (sugar for  a * a)
    ~a      involutive negation   (sugar for  a -> 0)
    a * b   strong conjunction (monoidal fusion)
    a & b   lattice conjunction
    a | b   lattice disjunction   (sugar, definable from & and ->)
    a -> b  residuated implication, right associative
    a <-> b bi-implication        (sugar for  (a -> b) * (b -> a))

Concrete grammar (EBNF), loosest binding first::

    formula := iff
    iff     := imp { "<->" imp }
    imp     := or [ "->" imp ]
    or      := and { "|" and }
    and     := strong { "&" strong }
    strong  := unary { "*" unary }
    unary   := "~" unary | postfix
    postfix := atom { "^2" }
    atom    := "0" | "1" | VAR | "(" formula ")"
    VAR     := "x" DIGITS            (index >= 1)

Whitespace is insignificant.  All binary connectives are left associative
except ``->``.  The sugar connectives (``|``, ``~``, ``1``, ``<->``, ``^2``)
are kept as explicit tree nodes; :func:`desugar` rewrites them into the
core fragment {Var, Bot, And, Strong, Implies}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from random import Random
from typing import Iterator, Union


@dataclass(frozen=True)
class Var:
    """Propositional variable; indices are 1-based."""

    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"variable index must be >= 1, got {self.index}")


@dataclass(frozen=True)
class Bot:
    """The constant falsum, written ``0``."""


@dataclass(frozen=True)
class Top:
    """The constant verum, written ``1`` (sugar for ``0 -> 0``)."""


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Strong:
    """Strong (monoidal) conjunction, written ``*``."""

    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Not:
    child: "Formula"


@dataclass(frozen=True)
class Square:
    """Self-fusion ``a^2``, sugar for ``a * a``."""

    child: "Formula"


Formula = Union[Var, Bot, Top, And, Or, Strong, Implies, Iff, Not, Square]

BOT = Bot()
TOP = Top()


class ParseError(ValueError):
    """Raised on malformed input; carries the offending position.

    ``position`` is a 0-based character offset into the source text and
    ``expected`` names the token classes that would have been accepted.
    """

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        self.position = position
        self.expected = expected
        detail = f"{message} at position {position}"
        if expected:
            detail += " (expected " + ", ".join(expected) + ")"
        super().__init__(detail)


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<var>x(?P<digits>\d+))
  | (?P<iff><->)
  | (?P<arrow>->)
  | (?P<square>\^2)
  | (?P<char>[~*&|()01])
    """,
    re.VERBOSE,
)

_ATOM_EXPECTED = ("'~'", "'0'", "'1'", "a variable 'xN'", "'('")


def _tokenize(text: str) -> list[tuple[str, int, int]]:
    """Return (kind, position, payload) triples, closed by an 'end' token."""
    tokens: list[tuple[str, int, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            if m.lastgroup == "var":
                index = int(m.group("digits"))
                if index < 1:
                    raise ParseError("variable index must be >= 1", pos)
                tokens.append(("var", pos, index))
            elif m.lastgroup == "char":
                tokens.append((m.group("char"), pos, 0))
            else:
                assert m.lastgroup is not None
                tokens.append((m.lastgroup, pos, 0))
        pos = m.end()
    tokens.append(("end", len(text), 0))
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, int, int]]):
        self.tokens = tokens
        self.at = 0

    def peek(self) -> str:
        return self.tokens[self.at][0]

    def pos(self) -> int:
        return self.tokens[self.at][1]

    def advance(self) -> tuple[str, int, int]:
        tok = self.tokens[self.at]
        self.at += 1
        return tok

    def formula(self) -> Formula:
        node = self.imp()
        while self.peek() == "iff":
            self.advance()
            node = Iff(node, self.imp())
        return node

    def imp(self) -> Formula:
        node = self.disjunction()
        if self.peek() == "arrow":
            self.advance()
            return Implies(node, self.imp())
        return node

    def disjunction(self) -> Formula:
        node = self.conjunction()
        while self.peek() == "|":
            self.advance()
            node = Or(node, self.conjunction())
        return node

    def conjunction(self) -> Formula:
        node = self.strong()
        while self.peek() == "&":
            self.advance()
            node = And(node, self.strong())
        return node

    def strong(self) -> Formula:
        node = self.unary()
        while self.peek() == "*":
            self.advance()
            node = Strong(node, self.unary())
        return node

    def unary(self) -> Formula:
        if self.peek() == "~":
            self.advance()
            return Not(self.unary())
        return self.postfix()

    def postfix(self) -> Formula:
        node = self.atom()
        while self.peek() == "square":
            self.advance()
            node = Square(node)
        return node

    def atom(self) -> Formula:
        kind, pos, payload = self.advance()
        if kind == "0":
            return BOT
        if kind == "1":
            return TOP
        if kind == "var":
            return Var(payload)
        if kind == "(":
            node = self.formula()
            kind, pos, _ = self.advance()
            if kind != ")":
                raise ParseError("unclosed parenthesis", pos, ("')'",))
            return node
        raise ParseError("expected a formula", pos, _ATOM_EXPECTED)


def parse(text: str) -> Formula:
    """Parse ``text`` into a formula tree.

    Raises :class:`ParseError` on malformed input, reporting the character
    position and the expected token classes.
    """
    parser = _Parser(_tokenize(text))
    node = parser.formula()
    if parser.peek() != "end":
        raise ParseError(
            "trailing input", parser.pos(),
            ("a binary connective", "end of input"),
        )
    return node


# Precedence levels used by the printer; atoms sit above every connective.
_LEVEL_IFF = 1
_LEVEL_IMP = 2
_LEVEL_OR = 3
_LEVEL_AND = 4
_LEVEL_STRONG = 5
_LEVEL_NOT = 6
_LEVEL_SQUARE = 7
_LEVEL_ATOM = 8

_BINARY = {
    Iff: (_LEVEL_IFF, "<->"),
    Implies: (_LEVEL_IMP, "->"),
    Or: (_LEVEL_OR, "|"),
    And: (_LEVEL_AND, "&"),
    Strong: (_LEVEL_STRONG, "*"),
}


def format_formula(f: Formula) -> str:
    """Render ``f`` with the fewest parentheses that still reparse to ``f``."""
    return _format(f, _LEVEL_IFF)


def _format(f: Formula, minimum: int) -> str:
    if isinstance(f, Var):
        return f"x{f.index}"
    if isinstance(f, Bot):
        return "0"
    if isinstance(f, Top):
        return "1"
    if isinstance(f, Not):
        text = "~" + _format(f.child, _LEVEL_NOT)
        level = _LEVEL_NOT
    elif isinstance(f, Square):
        text = _format(f.child, _LEVEL_SQUARE) + "^2"
        level = _LEVEL_SQUARE
    else:
        level, symbol = _BINARY[type(f)]
        # -> associates to the right; every other binary to the left.
        if isinstance(f, Implies):
            left, right = _format(f.left, level + 1), _format(f.right, level)
        else:
            left, right = _format(f.left, level), _format(f.right, level + 1)
        text = f"{left} {symbol} {right}"
    return text if level >= minimum else f"({text})"


def desugar(f: Formula) -> Formula:
    """Rewrite ``f`` into the core fragment {Var, Bot, And, Strong, Implies}.

    The rewrites are the standard definitions: ``~a = a -> 0``,
    ``1 = 0 -> 0``, ``a | b = ((a -> b) -> b) & ((b -> a) -> a)``,
    ``a <-> b = (a -> b) * (b -> a)`` and ``a^2 = a * a``.  Evaluation is
    preserved under every assignment.
    """
    if isinstance(f, (Var, Bot)):
        return f
    if isinstance(f, Top):
        return Implies(BOT, BOT)
    if isinstance(f, Not):
        return Implies(desugar(f.child), BOT)
    if isinstance(f, Square):
        child = desugar(f.child)
        return Strong(child, child)
    if isinstance(f, Or):
        a, b = desugar(f.left), desugar(f.right)
        return And(Implies(Implies(a, b), b), Implies(Implies(b, a), a))
    if isinstance(f, Iff):
        a, b = desugar(f.left), desugar(f.right)
        return Strong(Implies(a, b), Implies(b, a))
    if isinstance(f, And):
        return And(desugar(f.left), desugar(f.right))
    if isinstance(f, Strong):
        return Strong(desugar(f.left), desugar(f.right))
    if isinstance(f, Implies):
        return Implies(desugar(f.left), desugar(f.right))
    raise TypeError(f"not a formula node: {f!r}")


def subformulas(f: Formula) -> Iterator[Formula]:
    """Yield each distinct node of ``f`` once, children before parents.

    Shared subtrees (formulas can be DAG-shaped) are visited a single time,
    so the traversal is linear in the number of distinct nodes.
    """
    seen: set[int] = set()
    stack: list[tuple[Formula, bool]] = [(f, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            yield node
            continue
        if id(node) in seen:
            continue
        seen.add(id(node))
        stack.append((node, True))
        if isinstance(node, (And, Or, Strong, Implies, Iff)):
            stack.append((node.right, False))
            stack.append((node.left, False))
        elif isinstance(node, (Not, Square)):
            stack.append((node.child, False))


def variables(f: Formula) -> set[int]:
    """The exact set of variable indices occurring in ``f``."""
    return {node.index for node in subformulas(f) if isinstance(node, Var)}


_CONNECTIVES = (And, Or, Strong, Implies, Iff, Not, Square)


def random_formula(rng: Random, n: int, depth: int) -> Formula:
    """Draw a random formula over ``x1..xn`` of exactly the given depth.

    Connectives are chosen uniformly while depth remains; leaves are chosen
    uniformly among the variables and both constants.  Deterministic for a
    seeded ``rng``, which keeps generated test suites reproducible.
    """
    if depth <= 0:
        leaf = rng.randrange(n + 2)
        if leaf == 0:
            return BOT
        if leaf == 1:
            return TOP
        return Var(leaf - 1)
    kind = _CONNECTIVES[rng.randrange(len(_CONNECTIVES))]
    if kind in (Not, Square):
        return kind(random_formula(rng, n, depth - 1))
    return kind(random_formula(rng, n, depth - 1), random_formula(rng, n, depth - 1))
