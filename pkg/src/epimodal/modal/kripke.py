"""Finite S4 Kripke structures and their Alexandrov topologies.

A TopoModel is a finite world set with one preorder per agent (reflexivity
and transitivity are the S4 frame conditions, enforced at construction) and
a propositional valuation.  Knowledge is evaluated relationally:

    K(i) p  holds at w  iff  R_i(w) is contained in [[p]]
    E(G)    uses the union of the members' relations
    D(G)    uses their intersection

The same model can be read topologically: each preorder induces an
Alexandrov topology whose minimal neighborhoods are the successor sets, and
K(i) becomes the interior operator.  ``topology_of`` / ``relation_of``
implement the two directions of that equivalence; ``eval_topological``
recomputes formulas through the open-set lattice as an independent route.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import reduce

from ..errors import (
    EmptyAgentSet,
    NotAlexandrov,
    NotS4,
    UnknownAgent,
    UnknownVariable,
)
from .formulas import And, D, E, Formula, Iff, Implies, K, Not, Or, Var

Worlds = frozenset[str]
Relation = frozenset[tuple[str, str]]


def is_preorder(worlds: Iterable[str], relation: Relation) -> bool:
    ws = set(worlds)
    if any((w, w) not in relation for w in ws):
        return False
    succ = {w: {v for (a, v) in relation if a == w} for w in ws}
    return all(
        succ[v] <= succ[w] for w in ws for v in succ[w]
    )


@dataclass(frozen=True, eq=False)
class TopoModel:
    """Worlds, per-agent S4 accessibility relations, and a valuation."""

    worlds: tuple[str, ...]
    agents: tuple[str, ...]
    relations: Mapping[str, Relation]
    valuation: Mapping[str, Worlds]
    _successors: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        for agent in self.agents:
            relation = self.relations[agent]
            self._successors[agent] = {
                w: frozenset(v for (a, v) in relation if a == w)
                for w in self.worlds
            }

    @classmethod
    def make(
        cls,
        worlds: Iterable[str],
        agents: Iterable[str],
        relations: Mapping[str, Iterable[tuple[str, str]]],
        valuation: Mapping[str, Iterable[str]],
        require_s4: bool = True,
    ) -> "TopoModel":
        """Validate and build.  ``require_s4=False`` admits arbitrary
        relations; tests use it to construct counterexample frames."""
        ws = tuple(worlds)
        ags = tuple(agents)
        if len(set(ws)) != len(ws) or not ws:
            raise NotS4("worlds must be nonempty and distinct")
        rel = {}
        for agent in ags:
            if agent not in relations:
                raise UnknownAgent(agent)
            pairs = frozenset((str(a), str(b)) for a, b in relations[agent])
            for a, b in pairs:
                if a not in ws or b not in ws:
                    raise NotS4(f"relation of {agent} mentions unknown world")
            if require_s4 and not is_preorder(ws, pairs):
                raise NotS4(f"relation of {agent} is not reflexive-transitive")
            rel[agent] = pairs
        val = {
            str(p): frozenset(str(w) for w in where)
            for p, where in valuation.items()
        }
        for p, where in val.items():
            if not where <= set(ws):
                raise UnknownVariable(f"valuation of {p} mentions unknown world")
        return cls(ws, ags, rel, val)

    def successors(self, agent: str, world: str) -> Worlds:
        if agent not in self._successors:
            raise UnknownAgent(agent)
        return self._successors[agent][world]

    def group_successors(self, agents: frozenset[str], mode: str):
        """Successor map of R_E (union, mode 'E') or R_D (intersection, 'D')."""
        if not agents:
            raise EmptyAgentSet("knowledge of the empty agent set")
        maps = []
        for agent in sorted(agents):
            if agent not in self._successors:
                raise UnknownAgent(agent)
            maps.append(self._successors[agent])
        op = frozenset.union if mode == "E" else frozenset.intersection
        return {w: reduce(op, (m[w] for m in maps)) for w in self.worlds}


def eval_formula(model: TopoModel, formula: Formula) -> Worlds:
    """The set of worlds where the formula holds (Kripke semantics)."""
    universe = frozenset(model.worlds)

    def go(node: Formula) -> Worlds:
        if isinstance(node, Var):
            try:
                return model.valuation[node.name]
            except KeyError:
                raise UnknownVariable(node.name) from None
        if isinstance(node, Not):
            return universe - go(node.operand)
        if isinstance(node, And):
            return go(node.left) & go(node.right)
        if isinstance(node, Or):
            return go(node.left) | go(node.right)
        if isinstance(node, Implies):
            return (universe - go(node.left)) | go(node.right)
        if isinstance(node, Iff):
            left, right = go(node.left), go(node.right)
            return universe - (left ^ right)
        if isinstance(node, K):
            target = go(node.operand)
            if node.agent not in model._successors:
                raise UnknownAgent(node.agent)
            succ = model._successors[node.agent]
            return frozenset(w for w in model.worlds if succ[w] <= target)
        if isinstance(node, (E, D)):
            target = go(node.operand)
            succ = model.group_successors(
                node.agents, "E" if isinstance(node, E) else "D"
            )
            return frozenset(w for w in model.worlds if succ[w] <= target)
        raise TypeError(f"not a formula node: {node!r}")

    return go(formula)


@dataclass(frozen=True)
class Topology:
    """A finite topology given by its full family of open sets."""

    worlds: tuple[str, ...]
    opens: frozenset[Worlds]

    def interior(self, subset: Worlds) -> Worlds:
        inside = [o for o in self.opens if o <= subset]
        return frozenset().union(*inside) if inside else frozenset()

    def minimal_neighborhood(self, world: str) -> Worlds:
        containing = [o for o in self.opens if world in o]
        return frozenset(self.worlds).intersection(*containing)


def topology_of(worlds: Iterable[str], relation: Relation) -> Topology:
    """Alexandrov topology of a preorder: opens are successor-closed sets.

    The minimal neighborhood of w is its successor set R(w); every open is
    a union of such basis sets.  Raises NotS4 for a non-preorder.
    """
    ws = tuple(worlds)
    if not is_preorder(ws, relation):
        raise NotS4("relation is not reflexive-transitive")
    succ = {w: frozenset(v for (a, v) in relation if a == w) for w in ws}
    basis = sorted({succ[w] for w in ws}, key=sorted)
    opens = {frozenset()}
    for r in range(1, len(basis) + 1):
        for combo in itertools.combinations(basis, r):
            opens.add(frozenset().union(*combo))
    return Topology(ws, frozenset(opens))


def relation_of(topology: Topology) -> Relation:
    """Specialization preorder of an Alexandrov topology.

    w reaches u exactly when u belongs to every open set containing w.
    Validates that the family is a topology (contains the empty set and the
    whole space, closed under union and intersection; finite families are
    then automatically Alexandrov).
    """
    universe = frozenset(topology.worlds)
    opens = topology.opens
    if frozenset() not in opens or universe not in opens:
        raise NotAlexandrov("missing empty set or whole space")
    for a, b in itertools.combinations(opens, 2):
        if (a | b) not in opens or (a & b) not in opens:
            raise NotAlexandrov("family is not closed under union/intersection")
    return frozenset(
        (w, u)
        for w in topology.worlds
        for u in topology.minimal_neighborhood(w)
    )


def eval_topological(model: TopoModel, formula: Formula) -> Worlds:
    """Evaluate through the open-set lattice: K is topological interior.

    Boolean connectives are the set operations; ``K(i)`` is interior in the
    agent's Alexandrov topology, computed as the union of open subsets
    rather than through successor sets, so this is an independent route to
    :func:`eval_formula`.  ``D(G)`` is interior in the topology of the
    intersection relation (itself a preorder).  ``E(G)`` is the finite
    conjunction of the members' knowledge, so it evaluates as the
    intersection of per-agent interiors; its union relation need not be
    transitive and induces no topology of its own.
    """
    universe = frozenset(model.worlds)
    cache: dict[tuple, Topology] = {}

    def topo_for(agents: frozenset[str], mode: str) -> Topology:
        key = (mode, tuple(sorted(agents)))
        if key not in cache:
            succ = model.group_successors(agents, mode)
            relation = frozenset(
                (w, v) for w in model.worlds for v in succ[w]
            )
            cache[key] = topology_of(model.worlds, relation)
        return cache[key]

    def go(node: Formula) -> Worlds:
        if isinstance(node, Var):
            try:
                return model.valuation[node.name]
            except KeyError:
                raise UnknownVariable(node.name) from None
        if isinstance(node, Not):
            return universe - go(node.operand)
        if isinstance(node, And):
            return go(node.left) & go(node.right)
        if isinstance(node, Or):
            return go(node.left) | go(node.right)
        if isinstance(node, Implies):
            return (universe - go(node.left)) | go(node.right)
        if isinstance(node, Iff):
            left, right = go(node.left), go(node.right)
            return universe - (left ^ right)
        if isinstance(node, K):
            if node.agent not in model._successors:
                raise UnknownAgent(node.agent)
            return topo_for(frozenset([node.agent]), "D").interior(
                go(node.operand)
            )
        if isinstance(node, E):
            target = go(node.operand)
            parts = [
                topo_for(frozenset([agent]), "D").interior(target)
                for agent in sorted(node.agents)
            ]
            return frozenset.intersection(*parts)
        if isinstance(node, D):
            return topo_for(node.agents, "D").interior(go(node.operand))
        raise TypeError(f"not a formula node: {node!r}")

    return go(formula)
