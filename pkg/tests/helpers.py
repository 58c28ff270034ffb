"""Shared test fixtures: example graphs and independent oracle implementations.

The oracles here deliberately avoid the package's own algorithms so that
agreement between the two is meaningful.
"""

import itertools
import math
import random
import statistics

import networkx as nx

from commdetect.graph import Graph, Partition

# 4-cycle: 1-2, 1-3, 3-4, 2-4 (0-based ids below, label i+1)
CYCLE4_EDGES = [(0, 1), (0, 2), (2, 3), (1, 3)]

# 6-node graph with two pendant nodes and a middle square
CHAIN6_EDGES = [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)]

# 7-node graph: a 4-clique bridged to a triangle
TOY7_EDGES = [
    (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
    (3, 4), (4, 5), (4, 6), (5, 6),
]

# 4 nodes: triangle 1-2-3 plus pendant 4 on node 1
SK4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2)]

CHAIN12_EDGES = [(i, i + 1) for i in range(11)]


def build(n, edges):
    return Graph(n, edges=edges)


def to_nx(g):
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def random_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges=edges)


def random_connected_graph(rng, n, extra_p=0.2):
    """Random spanning tree plus extra random edges."""
    nodes = list(range(n))
    rng.shuffle(nodes)
    edges = set()
    for i in range(1, n):
        a = nodes[i]
        b = nodes[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra_p:
                edges.add((u, v))
    return Graph(n, edges=sorted(edges))


def random_partition(rng, n, k):
    """Random assignment of n nodes to at most k groups (every group non-empty)."""
    while True:
        assign = {v: rng.randrange(k) for v in range(n)}
        if len(set(assign.values())) >= 1:
            return Partition.from_assignment(assign)


def modularity_oracle(g, p):
    """Direct double-sum definition of modularity."""
    m = g.m
    deg = g.degrees()
    assign = p.assignment()
    total = 0.0
    for i in range(g.n):
        for j in range(g.n):
            if assign[i] != assign[j]:
                continue
            a = 1.0 if g.has_edge(i, j) else 0.0
            total += a - deg[i] * deg[j] / (2.0 * m)
    return total / (2.0 * m)


def betweenness_oracle(g, h=None):
    """Ordered-pair SP betweenness via explicit path enumeration (networkx)."""
    gx = to_nx(g)
    scores = {e: 0.0 for e in g.edges()}
    for r in range(g.n):
        lengths = nx.single_source_shortest_path_length(gx, r)
        for s in lengths:
            if s == r:
                continue
            paths = list(nx.all_shortest_paths(gx, r, s))
            w = 1.0 if h is None else h(r, s)
            credit = w / len(paths)
            for path in paths:
                for a, b in zip(path, path[1:]):
                    key = (a, b) if a < b else (b, a)
                    scores[key] += credit
    return scores


def semivalue_oracle(g, i, alpha, beta, kind):
    """Semivalue of one node by direct subset enumeration (itertools)."""
    others = [v for v in range(g.n) if v != i]

    def worth(members):
        if not members or g.m == 0:
            return 0.0
        l_in = l_out = 0
        for u, v in g.edges():
            inside = (u in members) + (v in members)
            if inside == 2:
                l_in += 1
            elif inside == 1:
                l_out += 1
        return alpha * l_in / g.m - beta * l_out / g.m

    n = g.n
    total = 0.0
    for size in range(len(others) + 1):
        if kind == "shapley":
            coeff = math.factorial(size) * math.factorial(n - 1 - size) / math.factorial(n)
        else:
            coeff = 1.0 / 2 ** (n - 1)
        for combo in itertools.combinations(others, size):
            s = set(combo)
            total += coeff * (worth(s | {i}) - worth(s))
    return total


def nmi_oracle(p, r):
    """NMI (2I/(H+H), natural log) from an explicitly built contingency table."""
    nodes = sorted(p.node_set())
    n = len(nodes)
    a = p.assignment()
    b = r.assignment()
    table = {}
    for v in nodes:
        table[(a[v], b[v])] = table.get((a[v], b[v]), 0) + 1
    row = {}
    col = {}
    for (i, j), c in table.items():
        row[i] = row.get(i, 0) + c
        col[j] = col.get(j, 0) + c
    h_a = -sum((c / n) * math.log(c / n) for c in row.values())
    h_b = -sum((c / n) * math.log(c / n) for c in col.values())
    if h_a == 0.0 and h_b == 0.0:
        return 1.0
    if h_a + h_b == 0.0:
        return 0.0
    info = sum(
        (c / n) * math.log(n * c / (row[i] * col[j]))
        for (i, j), c in table.items()
    )
    return 2.0 * info / (h_a + h_b)


def cv_oracle(sizes):
    return statistics.pstdev(sizes) / statistics.mean(sizes)


def is_refinement(finer, coarser):
    """Every community of ``finer`` is contained in some community of ``coarser``."""
    return all(
        any(c <= d for d in coarser.communities) for c in finer.communities
    )
