"""Named graph families and seeded random Kirchhoff-balanced digraphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import (
    DirectedWeightedGraph,
    GraphError,
    boundary_sets,
    induced_subgraph,
    relabel,
)

__all__ = [
    "FlowerDecomposition",
    "cycle",
    "symmetric_star",
    "random_tree",
    "random_balanced",
    "random_cycle_weights",
    "flower_compose",
    "verify_flower",
    "rng_for",
    "random_flower",
    "random_connected_subset",
]

WEIGHT_RANGE = (0.5, 2.0)


def rng_for(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(np.random.SeedSequence(seed))


def cycle(n: int, weights: Sequence[float] | None = None, m=None, *, allow_unbalanced: bool = False):
    """Directed cycle 0 -> 1 -> ... -> n-1 -> 0.

    Non-constant ``weights`` break Kirchhoff balance and are refused unless
    ``allow_unbalanced`` is set.
    """
    if n < 2:
        raise GraphError(f"cycle needs n >= 2, got {n}")
    if weights is None:
        weights = [1.0] * n
    weights = [float(w) for w in weights]
    if len(weights) != n:
        raise GraphError(f"cycle({n}) needs {n} weights, got {len(weights)}")
    if not allow_unbalanced and max(weights) != min(weights):
        raise GraphError("non-constant weights on a directed cycle violate balance; pass allow_unbalanced=True")
    if m is None:
        verts = list(range(n))
    elif np.isscalar(m):
        verts = [(i, float(m)) for i in range(n)]
    else:
        verts = [(i, float(mi)) for i, mi in enumerate(m)]
    return DirectedWeightedGraph(verts, [(i, (i + 1) % n, weights[i]) for i in range(n)])


def symmetric_star(q: int) -> DirectedWeightedGraph:
    """Centre ``c`` joined both ways to leaves ``1..q`` with unit weights."""
    if q < 1:
        raise GraphError(f"star needs q >= 1, got {q}")
    edges = []
    for i in range(1, q + 1):
        edges += [("c", i), (i, "c")]
    return DirectedWeightedGraph(["c", *range(1, q + 1)], edges)


def random_tree(n: int, seed) -> DirectedWeightedGraph:
    """Uniform labelled tree on ``0..n-1`` (Pruefer decoding), symmetric with unit weights."""
    if n < 2:
        raise GraphError(f"tree needs n >= 2, got {n}")
    rng = rng_for(seed)
    if n == 2:
        pairs = [(0, 1)]
    else:
        prufer = [int(v) for v in rng.integers(0, n, size=n - 2)]
        degree = [1] * n
        for v in prufer:
            degree[v] += 1
        pairs = []
        for v in prufer:
            leaf = degree.index(1)
            pairs.append((leaf, v))
            degree[leaf] -= 1
            degree[v] -= 1
        u, w = (i for i in range(n) if degree[i] == 1)
        pairs.append((u, w))
    edges = []
    for x, y in pairs:
        edges += [(x, y), (y, x)]
    return DirectedWeightedGraph(range(n), edges)


def random_cycle_weights(n: int, rng: np.random.Generator, length: int | None = None) -> dict:
    """One random directed cycle through a random vertex subsequence, constant weight."""
    L = int(rng.integers(2, n + 1)) if length is None else length
    verts = [int(v) for v in rng.permutation(n)[:L]]
    w = float(rng.uniform(*WEIGHT_RANGE))
    return {(verts[i], verts[(i + 1) % L]): w for i in range(L)}


def random_balanced(
    n: int, extra_cycles: int = 0, seed=0, *, random_measure: bool = False
) -> DirectedWeightedGraph:
    """Superposition of a random Hamiltonian cycle and ``extra_cycles`` random cycles.

    Each cycle is a circulation, so the sum is balanced exactly (up to the
    rounding of the weight sums) and the Hamiltonian cycle makes it strongly
    connected.
    """
    if n < 2:
        raise GraphError(f"random_balanced needs n >= 2, got {n}")
    if extra_cycles < 0:
        raise GraphError("extra_cycles must be >= 0")
    rng = rng_for(seed)
    weights: dict = {}
    for k in range(extra_cycles + 1):
        part = random_cycle_weights(n, rng, length=n if k == 0 else None)
        for e, w in part.items():
            weights[e] = weights.get(e, 0.0) + w
    if random_measure:
        verts = [(i, float(rng.uniform(*WEIGHT_RANGE))) for i in range(n)]
    else:
        verts = list(range(n))
    edges = [(x, y, weights[(x, y)]) for (x, y) in sorted(weights)]
    return DirectedWeightedGraph(verts, edges)


@dataclass(frozen=True)
class FlowerDecomposition:
    core: frozenset
    petals: tuple  # of (frozenset of petal vertices incl. attach vertex, attach vertex)
    graph: DirectedWeightedGraph

    def petal_interiors(self) -> list[frozenset]:
        return [vs - {x} for vs, x in self.petals]

    def core_graph(self) -> DirectedWeightedGraph:
        return induced_subgraph(self.graph, self.core)


def verify_flower(fd: FlowerDecomposition) -> list[str]:
    """Return the list of violated flower conditions (empty when valid)."""
    g = fd.graph
    problems = []
    interiors = fd.petal_interiors()
    covered = set(fd.core)
    for inner in interiors:
        if covered & inner:
            problems.append(f"condition (1): petal interior overlaps {sorted(covered & inner)}")
        covered |= inner
    if covered != set(g.order):
        problems.append(f"condition (1): vertices not covered {sorted(set(g.order) - covered)}")
    owner = {v: i for i, inner in enumerate(interiors) for v in inner}
    for x, y in g.edges:
        if x in owner and y in owner and owner[x] != owner[y]:
            problems.append(f"condition (2): petal interiors adjacent via ({x}, {y})")
    attaches = []
    for i, (vs, x) in enumerate(fd.petals):
        if set(fd.core) & set(vs) != {x}:
            problems.append(f"condition (3): petal {i} meets the core in {sorted(set(fd.core) & set(vs))}")
        attaches.append(x)
        # petal interior may only touch its own petal
        bs = boundary_sets(g, vs)
        if not (vs - {x}) <= bs.interior:
            problems.append(f"petal {i} interior has edges leaving the petal")
    if len(set(attaches)) != len(attaches):
        problems.append("petals must attach at distinct core vertices")
    return problems


def flower_compose(core: DirectedWeightedGraph, petals=()) -> FlowerDecomposition:
    """Glue each petal to ``core`` by identifying its attach vertex with a core vertex.

    ``petals`` is a sequence of ``(petal_graph, attach_core, attach_petal)``.
    The glued vertex keeps the core's measure.
    """
    verts = dict(core.measure)
    edges = dict(core.weights)
    decomposition = []
    used_attach = set()
    for i, (petal, attach_core, attach_petal) in enumerate(petals):
        ac, ap = str(attach_core), str(attach_petal)
        if ac not in core:
            raise GraphError(f"petal {i}: attach vertex {ac!r} is not a core vertex")
        if ap not in petal:
            raise GraphError(f"petal {i}: attach vertex {ap!r} is not a petal vertex")
        if ac in used_attach:
            raise GraphError(f"petal {i}: core vertex {ac!r} already carries a petal")
        used_attach.add(ac)
        rename = {v: (ac if v == ap else v) for v in petal.order}
        for v in petal.order:
            if v != ap and rename[v] in verts:
                raise GraphError(f"petal {i}: vertex {v!r} is shared with the core or another petal")
        for v in petal.order:
            if v != ap:
                verts[rename[v]] = petal.m(v)
        for (x, y), w in petal.weights.items():
            edges[(rename[x], rename[y])] = w
        decomposition.append((frozenset(rename.values()), ac))
    g = DirectedWeightedGraph(verts, [(x, y, w) for (x, y), w in edges.items()])
    fd = FlowerDecomposition(frozenset(core.order), tuple(decomposition), g)
    problems = verify_flower(fd)
    if problems:
        raise GraphError("; ".join(problems))
    return fd


def random_flower(seed, core_n_max: int = 8, petals_max: int = 4, petal_n_max: int = 6) -> FlowerDecomposition:
    """Random balanced core with 1..petals_max random balanced petals at distinct vertices."""
    rng = rng_for(seed)
    nc = int(rng.integers(2, core_n_max + 1))
    core = random_balanced(nc, int(rng.integers(0, nc + 1)), rng, random_measure=bool(rng.integers(2)))
    npet = int(rng.integers(1, min(petals_max, nc) + 1))
    attach = [int(a) for a in rng.choice(nc, size=npet, replace=False)]
    petals = []
    for i, a in enumerate(attach):
        npv = int(rng.integers(2, petal_n_max + 1))
        p = random_balanced(npv, int(rng.integers(0, npv + 1)), rng, random_measure=bool(rng.integers(2)))
        p = relabel(p, prefix=f"p{i}_")
        petals.append((p, a, f"p{i}_{int(rng.integers(npv))}"))
    return flower_compose(core, petals)


def random_connected_subset(g: DirectedWeightedGraph, size: int, rng: np.random.Generator) -> list[str]:
    """Vertex set of a random connected (undirected support) induced subgraph."""
    order = g.order
    start = order[int(rng.integers(len(order)))]
    chosen = [start]
    seen = {start}
    frontier = set()

    def grow(v):
        for w in list(g._out[v]) + list(g._in[v]):
            if w not in seen:
                frontier.add(w)

    grow(start)
    while len(chosen) < size and frontier:
        cand = sorted(frontier, key=g.index)
        v = cand[int(rng.integers(len(cand)))]
        frontier.discard(v)
        seen.add(v)
        chosen.append(v)
        grow(v)
    return chosen
