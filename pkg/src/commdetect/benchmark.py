"""Synthetic four-community benchmark generator (128 nodes, expected degree 16)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, Partition

N_NODES = 128
N_BLOCKS = 4
BLOCK_SIZE = 32
EXPECTED_DEGREE = 16.0


@dataclass(frozen=True)
class BenchmarkSpec:
    z_out: float
    mu: float
    p_in: float
    p_out: float
    seed: int = 0
    n: int = N_NODES
    blocks: int = N_BLOCKS
    block_size: int = BLOCK_SIZE
    k_expected: float = EXPECTED_DEGREE


def benchmark_spec(z_out: float, seed: int = 0) -> BenchmarkSpec:
    """Derive edge probabilities from the expected out-degree.

    <k> = 16 splits as z_in + z_out with 31 same-block partners and 96
    cross-block partners, so p_in = (16 - z_out)/31 and p_out = z_out/96.
    """
    if not 0.0 < z_out < EXPECTED_DEGREE:
        raise ValueError(f"z_out must lie in (0, {EXPECTED_DEGREE})")
    z_in = EXPECTED_DEGREE - z_out
    return BenchmarkSpec(
        z_out=z_out,
        mu=z_out / (z_in + z_out),
        p_in=z_in / (BLOCK_SIZE - 1),
        p_out=z_out / (N_NODES - BLOCK_SIZE),
        seed=seed,
    )


def planted_partition(spec: BenchmarkSpec) -> Partition:
    blocks = []
    for b in range(spec.blocks):
        lo = b * spec.block_size
        blocks.append(frozenset(range(lo, lo + spec.block_size)))
    return Partition(tuple(blocks))


def generate(spec: BenchmarkSpec) -> tuple[Graph, Partition]:
    """Sample each unordered pair independently; returns graph + planted blocks."""
    n = spec.n
    rng = np.random.default_rng(spec.seed)
    iu, ju = np.triu_indices(n, k=1)
    same_block = (iu // spec.block_size) == (ju // spec.block_size)
    probs = np.where(same_block, spec.p_in, spec.p_out)
    keep = rng.random(iu.shape[0]) < probs
    g = Graph(n)
    for u, v in zip(iu[keep], ju[keep]):
        g.add_edge(int(u), int(v))
    return g, planted_partition(spec)


def reference_partition_text(g: Graph, p: Partition) -> str:
    """Sidecar format: one "node_label community_id" line per node."""
    assign = p.assignment()
    lines = [f"{g.labels[v]} {assign[v]}" for v in range(g.n)]
    return "\n".join(lines) + "\n"
