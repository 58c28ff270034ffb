"""Divisive clustering loop: repeatedly cut the highest-betweenness edge.

Three flavors share the loop and differ only in edge scoring:

* GN     - unit pair weights, every node a source
* GICE   - min-power pair weights, every node a source, power refreshed
           from the current graph after each removal
* GICEF  - like GICE but within each component only the ceil(ln n_c)
           highest-power nodes (n_c = component size) act as sources,
           reselected from the refreshed power after each removal
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

from .betweenness import node_game_betweenness, sp_edge_betweenness
from .graph import Graph, Partition, component_nodes, connected_components
from .power import GameParams, PowerVector, power_vector

ALGORITHMS = ("GN", "GICE", "GICEF")

# edges whose score is within this relative slack of the maximum count as tied
TIE_REL_TOL = 1e-9


class ReplayError(ValueError):
    """Event list does not reproduce against the given graph."""


@dataclass
class Dendrogram:
    algorithm: str
    seed: int
    n: int
    m: int
    k0: int
    partitions: list[Partition]
    events: list[tuple[int, int, bool]]
    complete: bool = True

    def partition_with_k(self, k: int) -> Partition | None:
        for p in self.partitions:
            if p.k == k:
                return p
        return None


def select_sources(phi: PowerVector, n: int, within: set[int] | None = None) -> list[int]:
    """The ceil(ln n) nodes of highest power (at least one), ties by smallest id.

    ``within`` restricts the candidate pool (used per component); the count
    is still derived from ``n``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    count = max(1, math.ceil(math.log(n)))
    ranked = phi.ranking()
    if within is not None:
        ranked = [v for v in ranked if v in within]
    return ranked[:count]


def _pick_tied(tied: list[tuple[int, int]], rng: random.Random | None) -> tuple[int, int]:
    # deterministic mode: smallest first endpoint, then LARGEST second endpoint
    if rng is None:
        return min(tied, key=lambda e: (e[0], -e[1]))
    return rng.choice(sorted(tied))


@dataclass
class _Comp:
    nodes: set[int]
    scores: dict = field(default_factory=dict)
    m_at: int = 0
    dirty: bool = True


def run_divisive(
    g: Graph,
    algorithm: str,
    params: GameParams | None = None,
    seed: int = 0,
    stop_at_k: int | None = None,
    power_override=None,
) -> Dendrogram:
    """Full divisive run; returns the dendrogram of recorded split partitions.

    ``seed=0`` breaks score ties deterministically; any other seed picks
    uniformly among the tied edges.  ``stop_at_k`` truncates the run right
    after the partition with that many communities is recorded.
    ``power_override`` (tests only) replaces the power computation with a
    callable ``graph -> array``.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    if g.n == 0 or g.m == 0:
        raise ValueError("divisive run needs at least one edge")
    params = params or GameParams()
    rng = random.Random(seed) if seed != 0 else None

    work = g.copy()
    comps = [_Comp(set(c)) for c in connected_components(work).communities]
    comp_of: dict[int, int] = {}
    for ci, comp in enumerate(comps):
        for v in comp.nodes:
            comp_of[v] = ci
    k0 = len(comps)
    partitions: list[Partition] = []
    events: list[tuple[int, int, bool]] = []
    complete = True

    while work.m > 0:
        if algorithm == "GN":
            phi_arr = None
        elif power_override is not None:
            phi_arr = np.asarray(power_override(work), dtype=np.float64)
            # an arbitrary override need not scale as 1/(2m), so retained
            # component scores cannot be rescaled -- recompute everything
            for comp in comps:
                comp.dirty = True
        else:
            phi_arr = power_vector(work, params).phi

        for comp in comps:
            # untouched components keep their scores: pair weights scale as
            # 1/(2m) while degrees there are unchanged, so a uniform power
            # rescale leaves the within-component ranking (and hence the
            # GICEF source set) intact
            if not comp.dirty:
                continue
            comp_edges = [
                (u, v) for u, v in work.edges() if u in comp.nodes and v in comp.nodes
            ]
            if not comp_edges:
                comp.scores = {}
            elif algorithm == "GN":
                full = sp_edge_betweenness(work, sources=sorted(comp.nodes))
                comp.scores = {e: full[e] for e in comp_edges}
            else:
                if algorithm == "GICEF":
                    src = select_sources(
                        PowerVector(phi_arr), len(comp.nodes), within=comp.nodes
                    )
                else:
                    src = sorted(comp.nodes)
                full = node_game_betweenness(work, phi_arr, sources=src)
                comp.scores = {e: full[e] for e in comp_edges}
            comp.m_at = work.m
            comp.dirty = False

        # argmax over all edges; retained scores of untouched components are
        # exact for GN and rescale by m_at/m for the power-weighted flavors
        # (pair weights scale as 1/(2m) while degrees there are unchanged)
        best = -math.inf
        scored: list[tuple[float, tuple[int, int]]] = []
        for comp in comps:
            if not comp.scores:
                continue
            factor = 1.0 if algorithm == "GN" else comp.m_at / work.m
            for e, s in comp.scores.items():
                eff = s * factor
                scored.append((eff, e))
                if eff > best:
                    best = eff
        slack = abs(best) * TIE_REL_TOL
        tied = [e for eff, e in scored if eff >= best - slack]
        u, v = _pick_tied(tied, rng)

        work.remove_edge(u, v)
        ci = comp_of[u]
        comp = comps[ci]
        reachable = component_nodes(work, u)
        if v in reachable:
            comp.dirty = True
            events.append((u, v, False))
        else:
            rest = comp.nodes - reachable
            comps[ci] = _Comp(set(reachable))
            comps.append(_Comp(set(rest)))
            for w in reachable:
                comp_of[w] = ci
            for w in rest:
                comp_of[w] = len(comps) - 1
            events.append((u, v, True))
            partitions.append(Partition(tuple(frozenset(c.nodes) for c in comps)))
            if stop_at_k is not None and len(comps) >= stop_at_k:
                complete = work.m == 0
                break

    return Dendrogram(
        algorithm=algorithm,
        seed=seed,
        n=g.n,
        m=g.m,
        k0=k0,
        partitions=partitions,
        events=events,
        complete=complete,
    )


def replay(g: Graph, events: list[tuple[int, int, bool]]) -> list[Partition]:
    """Re-apply an event list to a fresh copy of ``g`` and collect partitions.

    Raises :class:`ReplayError` if any split flag disagrees with what the
    removals actually do.
    """
    work = g.copy()
    comps = [set(c) for c in connected_components(work).communities]
    comp_of = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    partitions = []
    for u, v, split in events:
        if not work.has_edge(u, v):
            raise ReplayError(f"edge ({u}, {v}) not present at replay time")
        work.remove_edge(u, v)
        reachable = component_nodes(work, u)
        did_split = v not in reachable
        if did_split != split:
            raise ReplayError(f"split flag mismatch at edge ({u}, {v})")
        if did_split:
            ci = comp_of[u]
            rest = comps[ci] - reachable
            comps[ci] = set(reachable)
            comps.append(set(rest))
            for w in rest:
                comp_of[w] = len(comps) - 1
            partitions.append(Partition(tuple(frozenset(c) for c in comps)))
    return partitions
