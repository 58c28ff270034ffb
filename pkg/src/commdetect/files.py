"""Dendrogram and metrics file formats."""

from __future__ import annotations

from .divisive import Dendrogram, ReplayError, replay
from .graph import Graph, Partition, component_nodes, connected_components
from .quality import coefficient_of_variation, modularity

METRICS_HEADER = "step,k,Q,CV,removed_u,removed_v,split"


def dendrogram_text(d: Dendrogram, g: Graph) -> str:
    lines = [
        "# commdetect dendrogram",
        f"algorithm {d.algorithm}",
        f"seed {d.seed}",
        f"n {d.n}",
        f"m {d.m}",
        f"complete {1 if d.complete else 0}",
        "events",
    ]
    for u, v, split in d.events:
        lines.append(f"{g.labels[u]} {g.labels[v]} {1 if split else 0}")
    return "\n".join(lines) + "\n"


def parse_dendrogram(text: str) -> tuple[dict, list[tuple[str, str, bool]]]:
    """Returns the header fields and label-level events."""
    header: dict[str, str] = {}
    events: list[tuple[str, str, bool]] = []
    in_events = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if not in_events:
            if stripped == "events":
                in_events = True
                continue
            key, _, value = stripped.partition(" ")
            header[key] = value
        else:
            tokens = stripped.split()
            if len(tokens) != 3 or tokens[2] not in ("0", "1"):
                raise ValueError(f"line {lineno}: malformed event")
            events.append((tokens[0], tokens[1], tokens[2] == "1"))
    if not in_events:
        raise ValueError("missing events section")
    return header, events


def events_to_ids(g: Graph, events) -> list[tuple[int, int, bool]]:
    out = []
    for lu, lv, split in events:
        if lu not in g.label_to_id or lv not in g.label_to_id:
            raise ReplayError(f"unknown node label in event ({lu}, {lv})")
        out.append((g.label_to_id[lu], g.label_to_id[lv], split))
    return out


def replay_dendrogram(g: Graph, text: str) -> Dendrogram:
    """Rebuild a dendrogram from its file by replaying events against ``g``."""
    header, label_events = parse_dendrogram(text)
    events = events_to_ids(g, label_events)
    partitions = replay(g, events)
    return Dendrogram(
        algorithm=header.get("algorithm", "?"),
        seed=int(header.get("seed", "0")),
        n=g.n,
        m=g.m,
        k0=connected_components(g).k,
        partitions=partitions,
        events=events,
        complete=header.get("complete", "1") == "1",
    )


def metrics_csv_text(g: Graph, d: Dendrogram) -> str:
    """One row per removal with the community structure after that removal.

    Q and CV always refer to the original graph.
    """
    work = g.copy()
    comps = [set(c) for c in connected_components(work).communities]
    comp_of = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    rows = [METRICS_HEADER]
    for step, (u, v, split) in enumerate(d.events, start=1):
        work.remove_edge(u, v)
        if split:
            ci = comp_of[u]
            reachable = component_nodes(work, u)
            rest = comps[ci] - reachable
            comps[ci] = set(reachable)
            comps.append(set(rest))
            for w in rest:
                comp_of[w] = len(comps) - 1
        p = Partition(tuple(frozenset(c) for c in comps))
        q = modularity(g, p, "inout")
        cv = coefficient_of_variation(p.sizes())
        rows.append(
            f"{step},{p.k},{q:.10f},{cv:.10f},"
            f"{g.labels[u]},{g.labels[v]},{1 if split else 0}"
        )
    return "\n".join(rows) + "\n"
