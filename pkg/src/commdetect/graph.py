"""Undirected simple graph, edge-list ingestion and BFS shortest-path counts."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field


class ParseError(ValueError):
    """Malformed edge-list input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoopError(ParseError):
    """Self-loops are not allowed."""


@dataclass(frozen=True)
class Partition:
    """Disjoint cover of the node set, canonicalized by smallest member."""

    communities: tuple[frozenset[int], ...]

    def __post_init__(self):
        ordered = tuple(sorted((frozenset(c) for c in self.communities), key=min))
        object.__setattr__(self, "communities", ordered)

    @property
    def k(self) -> int:
        return len(self.communities)

    def node_set(self) -> frozenset[int]:
        out: set[int] = set()
        for c in self.communities:
            out |= c
        return frozenset(out)

    def assignment(self) -> dict[int, int]:
        out = {}
        for idx, c in enumerate(self.communities):
            for v in c:
                out[v] = idx
        return out

    def sizes(self) -> list[int]:
        return [len(c) for c in self.communities]

    @classmethod
    def from_assignment(cls, assignment: dict[int, int]) -> "Partition":
        groups: dict[int, set[int]] = {}
        for v, c in assignment.items():
            groups.setdefault(c, set()).add(v)
        return cls(tuple(frozenset(g) for g in groups.values()))


@dataclass
class SsspResult:
    """Single-source BFS: hop distances, shortest-path counts, predecessors."""

    source: int
    dist: list[float]
    sigma: list[int]
    preds: list[list[int]]
    order: list[int]


class Graph:
    """Undirected simple graph over dense ids 0..n-1 with external string labels.

    Mutable only through :meth:`remove_edge`; everything else treats the
    graph as a read-only snapshot.
    """

    def __init__(self, n: int, edges=(), labels: list[str] | None = None):
        if labels is None:
            labels = [str(i + 1) for i in range(n)]
        if len(labels) != n:
            raise ValueError("labels/size mismatch")
        self.n = n
        self.labels = list(labels)
        self.label_to_id = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.label_to_id) != n:
            raise ValueError("duplicate labels")
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._edges: set[tuple[int, int]] = set()
        self.duplicate_count = 0
        for u, v in edges:
            self.add_edge(u, v)

    # construction ----------------------------------------------------

    def add_edge(self, u: int, v: int) -> None:
        self._check_node(u)
        self._check_node(v)
        if u == v:
            raise SelfLoopError(f"self-loop on node {self.labels[u]}")
        key = (u, v) if u < v else (v, u)
        if key in self._edges:
            self.duplicate_count += 1
            return
        self._edges.add(key)
        self._adj[u].add(v)
        self._adj[v].add(u)

    @classmethod
    def from_edge_list(cls, text: str | bytes) -> "Graph":
        """Parse lines "u v"; '#' comments and blank lines are ignored.

        Labels are mapped to dense ids in first-appearance order.
        Duplicate edges collapse silently (counted); self-loops are rejected.
        """
        if isinstance(text, bytes):
            text = text.decode("utf-8")
        labels: list[str] = []
        ids: dict[str, int] = {}
        raw_edges: list[tuple[int, int, int]] = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            tokens = stripped.split()
            if len(tokens) != 2:
                raise ParseError(
                    f"expected two node labels, got {len(tokens)} tokens", lineno
                )
            pair = []
            for tok in tokens:
                if tok not in ids:
                    ids[tok] = len(labels)
                    labels.append(tok)
                pair.append(ids[tok])
            if pair[0] == pair[1]:
                raise SelfLoopError(f"self-loop on node {tokens[0]}", lineno)
            raw_edges.append((pair[0], pair[1], lineno))
        g = cls(len(labels), labels=labels)
        for u, v, _ in raw_edges:
            g.add_edge(u, v)
        return g

    # accessors -------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._edges)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def adjacency(self, v: int) -> set[int]:
        return self._adj[v]

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._edges

    def nodes(self) -> range:
        return range(self.n)

    def _check_node(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"node id {v} outside 0..{self.n - 1}")

    # mutation --------------------------------------------------------

    def remove_edge(self, u: int, v: int) -> None:
        key = (u, v) if u < v else (v, u)
        if key not in self._edges:
            raise ValueError(f"no edge {key}")
        self._edges.discard(key)
        self._adj[u].discard(v)
        self._adj[v].discard(u)

    def copy(self) -> "Graph":
        g = Graph(self.n, labels=self.labels)
        g._edges = set(self._edges)
        g._adj = [set(a) for a in self._adj]
        return g

    def to_edge_list_text(self) -> str:
        lines = [f"{self.labels[u]} {self.labels[v]}" for u, v in self.edges()]
        return "\n".join(lines) + ("\n" if lines else "")


def connected_components(g: Graph) -> Partition:
    """Partition of the node set into maximal connected components."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency(v):
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return Partition(tuple(comps))


def component_nodes(g: Graph, start: int) -> set[int]:
    """Nodes reachable from ``start``."""
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.adjacency(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def bfs_sssp(g: Graph, source: int) -> SsspResult:
    """BFS from ``source``: hop distance, number of shortest paths, predecessors."""
    g._check_node(source)
    dist: list[float] = [math.inf] * g.n
    sigma = [0] * g.n
    preds: list[list[int]] = [[] for _ in range(g.n)]
    order: list[int] = []
    dist[source] = 0
    sigma[source] = 1
    queue = deque([source])
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in g.neighbors(v):
            if dist[w] == math.inf:
                dist[w] = dist[v] + 1
                queue.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
                preds[w].append(v)
    return SsspResult(source, dist, sigma, preds, order)
