"""Linear modularity game: coalition worth, semivalue oracles, node power."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph

BRUTEFORCE_MAX_NODES = 20


class CapacityError(ValueError):
    """Graph too large for exhaustive coalition enumeration."""


class DegenerateGraphError(ValueError):
    """Operation undefined on a graph without edges."""


@dataclass(frozen=True)
class GameParams:
    alpha: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.beta < 0:
            raise ValueError("beta must be nonnegative")


@dataclass(frozen=True)
class PowerVector:
    """Per-node importance: closed-form semivalue of the linear modularity game."""

    phi: np.ndarray

    @property
    def n(self) -> int:
        return self.phi.shape[0]

    def ranking(self) -> list[int]:
        """Node ids by decreasing power, ties broken by smallest id."""
        return sorted(range(self.n), key=lambda i: (-self.phi[i], i))


def _in_out_counts(g: Graph, members: set[int]) -> tuple[int, int]:
    l_in = 0
    l_out = 0
    for u, v in g.edges():
        inside = (u in members) + (v in members)
        if inside == 2:
            l_in += 1
        elif inside == 1:
            l_out += 1
    return l_in, l_out


def v_mod(g: Graph, coalition, params: GameParams = GameParams()) -> float:
    """Worth of a coalition: alpha*l_in/m - beta*l_out/m."""
    members = set(coalition)
    for v in members:
        g._check_node(v)
    if not members:
        return 0.0
    if g.m == 0:
        return 0.0
    l_in, l_out = _in_out_counts(g, members)
    return params.alpha * l_in / g.m - params.beta * l_out / g.m


def _coalition_values(g: Graph, params: GameParams) -> list[float]:
    """Worth of every coalition, indexed by node-membership bitmask."""
    m = g.m
    edge_masks = [(1 << u) | (1 << v) for u, v in g.edges()]
    values = [0.0] * (1 << g.n)
    for mask in range(1, 1 << g.n):
        l_in = 0
        l_out = 0
        for emask in edge_masks:
            inter = emask & mask
            if inter == emask:
                l_in += 1
            elif inter:
                l_out += 1
        values[mask] = params.alpha * l_in / m - params.beta * l_out / m
    return values


def _subset_coefficients(n: int, kind: str) -> list[float]:
    """P(S) per coalition size |S|, S ranging over subsets of N minus one player."""
    if kind == "shapley":
        return [
            math.factorial(s) * math.factorial(n - 1 - s) / math.factorial(n)
            for s in range(n)
        ]
    if kind == "banzhaf":
        return [1.0 / 2 ** (n - 1)] * n
    raise ValueError(f"unknown semivalue kind {kind!r}")


def semivalue_bruteforce(
    g: Graph, i: int, params: GameParams = GameParams(), kind: str = "shapley"
) -> float:
    """Exhaustive semivalue of one node over all 2^(n-1) coalitions."""
    return all_semivalues_bruteforce(g, params, kind)[i]


def all_semivalues_bruteforce(
    g: Graph, params: GameParams = GameParams(), kind: str = "shapley"
) -> list[float]:
    if g.n > BRUTEFORCE_MAX_NODES:
        raise CapacityError(f"n={g.n} exceeds {BRUTEFORCE_MAX_NODES}")
    if g.m == 0:
        return [0.0] * g.n
    values = _coalition_values(g, params)
    coeff = _subset_coefficients(g.n, kind)
    out = []
    full = (1 << g.n) - 1
    for i in range(g.n):
        bit = 1 << i
        rest = full & ~bit
        total = 0.0
        sub = rest
        # iterate all subsets of N \ {i}, including the empty set
        while True:
            size = bin(sub).count("1")
            total += coeff[size] * (values[sub | bit] - values[sub])
            if sub == 0:
                break
            sub = (sub - 1) & rest
        out.append(total)
    return out


def power_vector(g: Graph, params: GameParams = GameParams()) -> PowerVector:
    """Closed-form power: phi_i = alpha * degree_i / (2m)."""
    if g.m == 0:
        raise DegenerateGraphError("power undefined on an edgeless graph")
    deg = np.asarray(g.degrees(), dtype=np.float64)
    return PowerVector(params.alpha * deg / (2.0 * g.m))


def pair_weights(pv: PowerVector):
    """Communication weight of a pair: min of the two node powers (lazy)."""
    phi = pv.phi

    def h(r: int, s: int) -> float:
        return float(min(phi[r], phi[s]))

    return h
