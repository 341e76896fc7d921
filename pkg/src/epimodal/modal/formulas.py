"""Multi-modal formula language: AST, parser and printer.

Concrete grammar (an artifact of this package; the logic itself only fixes
the connectives):

    variables   [a-z][a-z0-9_]*
    unary       !  K{i}  E{i,j,...}  D{i,j,...}  box{i}  dia{i}
    binary      &  |  ->  <->        (precedence ! /modal > & > | > -> > <->,
                                      -> and <-> associate to the right)

``box{i}`` is a synonym for ``K{i}``; ``dia{i} p`` is normalized structurally
to ``!K{i}!p`` at parse time, so the AST only carries Var, Not, And, Or,
Implies, Iff, K, E and D nodes.  Printing emits minimal parentheses and
round-trips: parse(print(f)) == f for every normalized AST.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import EmptyAgentSet, FormulaSyntaxError


class Formula:
    """Base class for AST nodes; subclasses are frozen dataclasses."""

    __slots__ = ()


@dataclass(frozen=True)
class Var(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class K(Formula):
    agent: str
    operand: Formula


@dataclass(frozen=True)
class E(Formula):
    agents: frozenset[str]
    operand: Formula

    def __post_init__(self):
        if not self.agents:
            raise EmptyAgentSet("E needs at least one agent")


@dataclass(frozen=True)
class D(Formula):
    agents: frozenset[str]
    operand: Formula

    def __post_init__(self):
        if not self.agents:
            raise EmptyAgentSet("D needs at least one agent")


def diamond(agent: str, operand: Formula) -> Formula:
    """dia{i} p as its structural normal form !K{i}!p."""
    return Not(K(agent, Not(operand)))


_TOKEN = re.compile(
    r"\s*(?:(?P<lparen>\()|(?P<rparen>\))|(?P<iff><->)|(?P<implies>->)"
    r"|(?P<not>!)|(?P<and>&)|(?P<or>\|)"
    r"|(?P<modal>(?:K|E|D|box|dia)\{[^}]*\})"
    r"|(?P<var>[a-z][a-z0-9_]*)"
    r"|(?P<bad>\S))"
)

_AGENT = re.compile(r"[A-Za-z0-9_]+\Z")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            break
        kind = match.lastgroup
        if kind == "bad":
            raise FormulaSyntaxError(
                f"unexpected character {match.group('bad')!r}", match.start("bad")
            )
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _modal_parts(token: str, position: int) -> tuple[str, tuple[str, ...]]:
    head, _, rest = token.partition("{")
    body = rest[:-1]
    agents = tuple(a.strip() for a in body.split(","))
    if not body.strip() or any(not _AGENT.match(a) for a in agents):
        raise FormulaSyntaxError(f"bad agent list in {token!r}", position)
    return head, agents


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.at = 0

    def peek(self):
        return self.tokens[self.at]

    def take(self):
        token = self.tokens[self.at]
        self.at += 1
        return token

    def parse(self) -> Formula:
        formula = self.iff()
        kind, value, pos = self.peek()
        if kind != "end":
            raise FormulaSyntaxError(f"unexpected {value!r}", pos)
        return formula

    def iff(self) -> Formula:
        left = self.implies()
        if self.peek()[0] == "iff":
            self.take()
            return Iff(left, self.iff())
        return left

    def implies(self) -> Formula:
        left = self.or_()
        if self.peek()[0] == "implies":
            self.take()
            return Implies(left, self.implies())
        return left

    def or_(self) -> Formula:
        left = self.and_()
        while self.peek()[0] == "or":
            self.take()
            left = Or(left, self.and_())
        return left

    def and_(self) -> Formula:
        left = self.unary()
        while self.peek()[0] == "and":
            self.take()
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        kind, value, pos = self.peek()
        if kind == "not":
            self.take()
            return Not(self.unary())
        if kind == "modal":
            self.take()
            head, agents = _modal_parts(value, pos)
            operand = self.unary()
            if head in ("K", "box"):
                if len(agents) != 1:
                    raise FormulaSyntaxError(
                        f"{head} takes exactly one agent", pos
                    )
                return K(agents[0], operand)
            if head == "dia":
                if len(agents) != 1:
                    raise FormulaSyntaxError("dia takes exactly one agent", pos)
                return diamond(agents[0], operand)
            node = E if head == "E" else D
            return node(frozenset(agents), operand)
        return self.atom()

    def atom(self) -> Formula:
        kind, value, pos = self.take()
        if kind == "var":
            return Var(value)
        if kind == "lparen":
            inner = self.iff()
            kind, value, pos = self.take()
            if kind != "rparen":
                raise FormulaSyntaxError("expected ')'", pos)
            return inner
        raise FormulaSyntaxError(
            f"expected a formula, found {value!r}" if value else "unexpected end",
            pos,
        )


def parse(text: str) -> Formula:
    """Parse the grammar above into a normalized AST."""
    return _Parser(text).parse()


_LEVEL = {Iff: 1, Implies: 2, Or: 3, And: 4}


def to_text(formula: Formula) -> str:
    """Print with minimal parentheses; inverse of :func:`parse`."""

    def agents(group: frozenset[str]) -> str:
        return ",".join(sorted(group))

    def go(node: Formula, level: int) -> str:
        if isinstance(node, Var):
            return node.name
        if isinstance(node, Not):
            return "!" + go(node.operand, 5)
        if isinstance(node, K):
            return f"K{{{node.agent}}} " + go(node.operand, 5)
        if isinstance(node, E):
            return f"E{{{agents(node.agents)}}} " + go(node.operand, 5)
        if isinstance(node, D):
            return f"D{{{agents(node.agents)}}} " + go(node.operand, 5)
        own = _LEVEL[type(node)]
        symbol = {Iff: "<->", Implies: "->", Or: "|", And: "&"}[type(node)]
        if isinstance(node, (Iff, Implies)):  # right associative
            text = f"{go(node.left, own + 1)} {symbol} {go(node.right, own)}"
        else:  # left associative
            text = f"{go(node.left, own)} {symbol} {go(node.right, own + 1)}"
        return f"({text})" if own < level else text

    return go(formula, 0)


def subformulas(formula: Formula):
    """Yield every node of the AST (preorder)."""
    yield formula
    if isinstance(formula, (Not, K, E, D)):
        yield from subformulas(formula.operand)
    elif isinstance(formula, (And, Or, Implies, Iff)):
        yield from subformulas(formula.left)
        yield from subformulas(formula.right)
