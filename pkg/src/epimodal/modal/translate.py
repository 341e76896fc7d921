"""Turn an empirical model into a multi-agent epistemic scenario.

The dictionary: measurements become agents (each agent owns exactly one
measurement); maximal contexts become sets of agents whose subsets all
trust one another; global sections become the worlds induced by mutual
knowledge; supported (context, section) pairs become the worlds induced by
distributed knowledge.

With mutual-knowledge worlds, a supported local event can fail to be
entailed by any world consistent with the model: those events are exactly
the non-extendable sections, i.e. the soundness violations that make the
scenario paradoxical.  With distributed-knowledge worlds every supported
local event is itself a world, so no violation survives; the price is that
worlds now carry their context (lambda-dependence).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .. import scenario as sc
from ..empirical import EmpiricalModel, require_no_disturbance, support
from ..errors import Disconnected, Mismatch
from ..scenario import Context, GlobalSection, Section


@dataclass(frozen=True)
class MultiAgentScenario:
    """Agents, trust pairs and the two world bases of a translated model."""

    agents: tuple[str, ...]
    trust_pairs: frozenset[tuple[frozenset[str], frozenset[str]]]
    mutual_worlds: tuple[GlobalSection, ...]
    distributed_worlds: tuple[tuple[Context, Section], ...]


class WorldBasis(enum.Enum):
    MUTUAL = "mutual"
    DISTRIBUTED = "distributed"


def translate(model: EmpiricalModel) -> MultiAgentScenario:
    """Build the multi-agent scenario of a non-disturbing connected model.

    Trust pairs are all ordered pairs of nonempty subsets living inside a
    common maximal context (trust within a context is an equivalence).
    Mutual worlds are all global outcome assignments; distributed worlds
    are the supported sections, indexed by their maximal context.
    """
    require_no_disturbance(model)
    scen = model.scenario
    if not sc.is_connected(scen):
        raise Disconnected(
            "translation needs a connected scenario: the mutual-knowledge "
            "basis is defined through overlapping contexts"
        )
    trust = set()
    for ctx in scen.maximal_contexts:
        subsets = [
            frozenset(c)
            for r in range(1, len(ctx) + 1)
            for c in itertools.combinations(ctx, r)
        ]
        trust.update(itertools.product(subsets, repeat=2))
    mutual = tuple(sc.global_section_space(scen))
    distributed = tuple(
        (ctx, section)
        for ctx in scen.maximal_contexts
        for section in sorted(support(model, ctx), key=lambda s: s.values)
    )
    return MultiAgentScenario(
        agents=scen.measurements,
        trust_pairs=frozenset(trust),
        mutual_worlds=mutual,
        distributed_worlds=distributed,
    )


def soundness_violations(
    scenario: MultiAgentScenario,
    model: EmpiricalModel,
    worlds: WorldBasis,
) -> list[tuple[Context, Section]]:
    """Supported local events not entailed by any world consistent with m.

    MUTUAL: a world is consistent when each of its context restrictions is
    supported; a supported event with no consistent world above it is a
    violation.  DISTRIBUTED: each supported event is itself a world, so the
    computation returns an empty list for every non-disturbing model.
    """
    if scenario != translate(model):
        raise Mismatch("scenario was not derived from this model")
    supports = {
        ctx: support(model, ctx) for ctx in model.scenario.maximal_contexts
    }
    violations = []
    if worlds is WorldBasis.MUTUAL:
        consistent = [
            g
            for g in scenario.mutual_worlds
            if all(sc.restrict(g, ctx) in supports[ctx] for ctx in supports)
        ]
        for ctx in model.scenario.maximal_contexts:
            for section in sorted(supports[ctx], key=lambda s: s.values):
                if not any(
                    sc.restrict(g, ctx) == section for g in consistent
                ):
                    violations.append((ctx, section))
    else:
        available = set(scenario.distributed_worlds)
        for ctx in model.scenario.maximal_contexts:
            for section in sorted(supports[ctx], key=lambda s: s.values):
                if (ctx, section) not in available:
                    violations.append((ctx, section))
    return violations
