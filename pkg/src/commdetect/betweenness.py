"""Shortest-path edge betweenness: fast single-source accumulation and a
brute-force all-paths oracle.

All scores follow the ordered-pair convention: each ordered pair (r, s) with
r in the source set and s reachable contributes once, so with all sources
every unordered score is doubled uniformly.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, bfs_sssp
from .power import PowerVector

BRUTE_MAX_NODES = 60


class CapacityError(ValueError):
    pass


try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a hard dep, but stay usable
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


EdgeScores = dict


def _csr(g: Graph):
    """CSR adjacency plus an arc -> undirected-edge-index map."""
    edges = g.edges()
    edge_index = {e: i for i, e in enumerate(edges)}
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    total = sum(g.degrees())
    indices = np.empty(total, dtype=np.int64)
    eids = np.empty(total, dtype=np.int64)
    pos = 0
    for v in range(g.n):
        for w in g.neighbors(v):
            indices[pos] = w
            key = (v, w) if v < w else (w, v)
            eids[pos] = edge_index[key]
            pos += 1
        indptr[v + 1] = pos
    return indptr, indices, eids, edges


@njit(cache=True)
def _accumulate(indptr, indices, eids, sources, phi, n_edges):
    n = indptr.shape[0] - 1
    scores = np.zeros(n_edges, dtype=np.float64)
    dist = np.empty(n, dtype=np.int64)
    sigma = np.empty(n, dtype=np.float64)
    delta = np.empty(n, dtype=np.float64)
    order = np.empty(n, dtype=np.int64)
    for si in range(sources.shape[0]):
        r = sources[si]
        for v in range(n):
            dist[v] = -1
            sigma[v] = 0.0
            delta[v] = 0.0
        dist[r] = 0
        sigma[r] = 1.0
        order[0] = r
        head = 0
        tail = 1
        while head < tail:
            v = order[head]
            head += 1
            dv = dist[v]
            for p in range(indptr[v], indptr[v + 1]):
                w = indices[p]
                if dist[w] < 0:
                    dist[w] = dv + 1
                    order[tail] = w
                    tail += 1
                if dist[w] == dv + 1:
                    sigma[w] += sigma[v]
        # backward pass: seed each target with the pair weight min(phi_r, phi_s)
        for idx in range(tail - 1, 0, -1):
            v = order[idx]
            w_rv = phi[r] if phi[r] < phi[v] else phi[v]
            coeff = (w_rv + delta[v]) / sigma[v]
            dv = dist[v]
            for p in range(indptr[v], indptr[v + 1]):
                u = indices[p]
                if dist[u] == dv - 1:
                    c = sigma[u] * coeff
                    delta[u] += c
                    scores[eids[p]] += c
    return scores


def _run(g: Graph, phi: np.ndarray, sources) -> EdgeScores:
    if sources is None:
        source_ids = np.arange(g.n, dtype=np.int64)
    else:
        source_ids = np.asarray(sorted(sources), dtype=np.int64)
        if source_ids.size == 0:
            raise ValueError("empty source list")
        for s in source_ids:
            g._check_node(int(s))
    indptr, indices, eids, edges = _csr(g)
    raw = _accumulate(indptr, indices, eids, source_ids, phi, len(edges))
    return {e: float(raw[i]) for i, e in enumerate(edges)}


def sp_edge_betweenness(g: Graph, sources=None) -> EdgeScores:
    """Classical SP edge betweenness; every pair weighs 1."""
    return _run(g, np.ones(g.n, dtype=np.float64), sources)


def node_game_betweenness(g: Graph, phi: PowerVector, sources=None) -> EdgeScores:
    """SP betweenness where pair (r, s) contributes min(phi_r, phi_s)."""
    arr = np.asarray(phi.phi if isinstance(phi, PowerVector) else phi, dtype=np.float64)
    if arr.shape[0] != g.n:
        raise ValueError("power vector size does not match graph")
    return _run(g, arr, sources)


def brute_betweenness(g: Graph, h=None) -> EdgeScores:
    """Oracle: enumerate every shortest path of every ordered pair explicitly.

    ``h`` is a pair-weight function or None for unit weights.
    """
    if g.n > BRUTE_MAX_NODES:
        raise CapacityError(f"n={g.n} exceeds {BRUTE_MAX_NODES}")
    if h is None:
        h = lambda r, s: 1.0
    scores: EdgeScores = {e: 0.0 for e in g.edges()}

    def paths_to(preds, v):
        if not preds[v]:
            return [[v]]
        out = []
        for p in preds[v]:
            for path in paths_to(preds, p):
                out.append(path + [v])
        return out

    for r in range(g.n):
        res = bfs_sssp(g, r)
        for s in range(g.n):
            if s == r or res.sigma[s] == 0:
                continue
            all_paths = paths_to(res.preds, s)
            credit = h(r, s) / len(all_paths)
            for path in all_paths:
                for a, b in zip(path, path[1:]):
                    key = (a, b) if a < b else (b, a)
                    scores[key] += credit
    return scores
