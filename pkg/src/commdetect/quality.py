"""Partition quality: modularity (three equivalent forms), size homogeneity,
per-step metric vectors and NMI against a reference partition."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .divisive import Dendrogram
from .graph import Graph, Partition

MODULARITY_FORMS = ("pairwise", "clusterwise", "inout")


@dataclass
class MetricsVector:
    q: list[float]
    cv: list[float]
    k_at_step: list[int]

    def __len__(self) -> int:
        return len(self.q)


def _check_cover(g: Graph, p: Partition) -> None:
    if p.node_set() != frozenset(range(g.n)):
        raise ValueError("partition does not cover the graph's node set")


def modularity(g: Graph, p: Partition, form: str = "inout") -> float:
    """Modularity of ``p`` evaluated against ``g`` (always the original graph)."""
    _check_cover(g, p)
    if g.m == 0:
        raise ValueError("modularity undefined on an edgeless graph")
    if form not in MODULARITY_FORMS:
        raise ValueError(f"unknown form {form!r}")
    m = g.m
    deg = g.degrees()
    if form == "pairwise":
        assign = p.assignment()
        total = 0.0
        for i in range(g.n):
            for j in range(g.n):
                if assign[i] != assign[j]:
                    continue
                a = 1.0 if g.has_edge(i, j) else 0.0
                total += a - deg[i] * deg[j] / (2.0 * m)
        return total / (2.0 * m)
    if form == "clusterwise":
        total = 0.0
        for comm in p.communities:
            members = sorted(comm)
            for i in members:
                for j in members:
                    a = 1.0 if g.has_edge(i, j) else 0.0
                    total += a - deg[i] * deg[j] / (2.0 * m)
        return total / (2.0 * m)
    # inout
    total = 0.0
    for comm in p.communities:
        l_in = 0
        l_out = 0
        for v in comm:
            for w in g.adjacency(v):
                if w in comm:
                    l_in += 1
                else:
                    l_out += 1
        l_in //= 2
        total += l_in / m - (l_in / m + l_out / (2.0 * m)) ** 2
    return total


def coefficient_of_variation(sizes) -> float:
    """Population standard deviation of community sizes over their mean."""
    sizes = list(sizes)
    mean = sum(sizes) / len(sizes)
    var = sum((s - mean) ** 2 for s in sizes) / len(sizes)
    return math.sqrt(var) / mean


def metrics_vector(g: Graph, d: Dendrogram) -> MetricsVector:
    if d.n != g.n:
        raise ValueError("dendrogram does not match the graph")
    q = []
    cv = []
    ks = []
    for p in d.partitions:
        q.append(modularity(g, p, "inout"))
        cv.append(coefficient_of_variation(p.sizes()))
        ks.append(p.k)
    return MetricsVector(q=q, cv=cv, k_at_step=ks)


def nmi(p: Partition, reference: Partition, normalization: str = "sum") -> float:
    """Normalized mutual information between two partitions of one node set."""
    if p.node_set() != reference.node_set():
        raise ValueError("partitions cover different node sets")
    n = len(p.node_set())
    if n == 0:
        raise ValueError("empty partitions")
    a = p.assignment()
    b = reference.assignment()
    joint: dict[tuple[int, int], int] = {}
    for v in a:
        key = (a[v], b[v])
        joint[key] = joint.get(key, 0) + 1
    pa = [len(c) / n for c in p.communities]
    pb = [len(c) / n for c in reference.communities]
    h_a = -sum(x * math.log(x) for x in pa if x > 0)
    h_b = -sum(x * math.log(x) for x in pb if x > 0)
    info = 0.0
    for (i, j), cnt in joint.items():
        pij = cnt / n
        info += pij * math.log(pij / (pa[i] * pb[j]))
    if h_a == 0.0 and h_b == 0.0:
        return 1.0
    if normalization == "sum":
        denom = h_a + h_b
        return 2.0 * info / denom if denom > 0 else 0.0
    if normalization == "max":
        denom = max(h_a, h_b)
        return info / denom if denom > 0 else 0.0
    raise ValueError(f"unknown normalization {normalization!r}")
