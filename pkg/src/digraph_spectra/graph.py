"""Directed weighted graphs with vertex measure, structural validation and extraction.

A graph is the triple ``(G, b, m)``: a vertex set carrying a positive measure
``m`` and a set of directed edges carrying positive weights ``b``.  Vertex ids
are normalised to strings at construction so that graphs read back from JSON
compare equal to the graphs that produced them; every public function accepts
any label and converts it with ``str``.
"""

from __future__ import annotations

import re
import warnings
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping

import numpy as np

__all__ = [
    "GraphError",
    "DirectedWeightedGraph",
    "DegreeProfile",
    "ValidationReport",
    "BoundarySets",
    "DEFAULT_BALANCE_TOL",
    "degree_profile",
    "validate",
    "induced_subgraph",
    "partial_graph",
    "part_of_graph",
    "boundary_sets",
    "is_connected",
    "is_strongly_connected",
    "relabel",
]

DEFAULT_BALANCE_TOL = 1e-9

Edge = tuple[str, str]


class GraphError(ValueError):
    """Raised for malformed graphs or ill-posed extraction requests."""


def _natural_key(label: str):
    return [(0, int(t), "") if t.isdigit() else (1, 0, t) for t in re.split(r"(\d+)", label) if t]


class DirectedWeightedGraph:
    """Immutable finite directed graph with edge weights ``b`` and vertex measure ``m``.

    At most one edge is stored per ordered pair; parallel edges given at
    construction are merged by summing their weights and the graph records
    ``merged_duplicates=True``.
    """

    __slots__ = ("_order", "_index", "_m", "_b", "_out", "_in", "merged_duplicates", "_cache")

    def __init__(
        self,
        vertices: Iterable[Hashable] | Mapping[Hashable, float],
        edges: Iterable[tuple] = (),
        *,
        sort: bool = False,
    ):
        if isinstance(vertices, Mapping):
            items = [(str(v), float(mv)) for v, mv in vertices.items()]
        else:
            items = []
            for v in vertices:
                if isinstance(v, tuple):
                    items.append((str(v[0]), float(v[1])))
                else:
                    items.append((str(v), 1.0))
        m: dict[str, float] = {}
        for v, mv in items:
            if v == "":
                raise GraphError("vertex id must be non-empty")
            if v in m:
                raise GraphError(f"duplicate vertex id {v!r}")
            if not (mv > 0) or not np.isfinite(mv):
                raise GraphError(f"measure m({v!r}) = {mv!r} must be a positive finite number")
            m[v] = mv
        order = sorted(m, key=_natural_key) if sort else list(m)

        b: dict[Edge, float] = {}
        merged = False
        for e in edges:
            if len(e) == 2:
                x, y, w = e[0], e[1], 1.0
            else:
                x, y, w = e[0], e[1], e[2]
            x, y, w = str(x), str(y), float(w)
            if x not in m or y not in m:
                missing = x if x not in m else y
                raise GraphError(f"edge ({x!r}, {y!r}) uses unregistered vertex {missing!r}")
            if x == y:
                raise GraphError(f"self-loop at vertex {x!r} is not allowed")
            if not (w > 0) or not np.isfinite(w):
                raise GraphError(f"weight b({x!r}, {y!r}) = {w!r} must be a positive finite number")
            if (x, y) in b:
                merged = True
                b[(x, y)] += w
            else:
                b[(x, y)] = w
        if merged:
            warnings.warn("parallel edges merged by summing their weights", stacklevel=2)

        self._order = tuple(order)
        self._index = {v: i for i, v in enumerate(self._order)}
        self._m = m
        self._b = b
        self._out: dict[str, dict[str, float]] = {v: {} for v in self._order}
        self._in: dict[str, dict[str, float]] = {v: {} for v in self._order}
        for (x, y), w in b.items():
            self._out[x][y] = w
            self._in[y][x] = w
        self.merged_duplicates = merged
        self._cache: dict = {}

    # -- basic accessors -------------------------------------------------
    @property
    def order(self) -> tuple[str, ...]:
        return self._order

    @property
    def n(self) -> int:
        return len(self._order)

    def __len__(self) -> int:
        return len(self._order)

    def __contains__(self, v) -> bool:
        return str(v) in self._m

    def index(self, v) -> int:
        try:
            return self._index[str(v)]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def m(self, v) -> float:
        return self._m[self._check(v)]

    def b(self, x, y) -> float:
        """Edge weight, ``0.0`` for a non-edge."""
        return self._b.get((str(x), str(y)), 0.0)

    @property
    def measure(self) -> dict[str, float]:
        return {v: self._m[v] for v in self._order}

    @property
    def weights(self) -> dict[Edge, float]:
        return dict(self._b)

    @property
    def edges(self) -> list[Edge]:
        """Edges sorted by (source position, target position)."""
        return sorted(self._b, key=lambda e: (self._index[e[0]], self._index[e[1]]))

    def out_neighbors(self, v) -> dict[str, float]:
        return dict(self._out[self._check(v)])

    def in_neighbors(self, v) -> dict[str, float]:
        return dict(self._in[self._check(v)])

    def _check(self, v) -> str:
        s = str(v)
        if s not in self._m:
            raise GraphError(f"unknown vertex {v!r}")
        return s

    # -- array views -----------------------------------------------------
    def weight_matrix(self) -> np.ndarray:
        """Dense ``W[i, j] = b(order[i], order[j])``."""
        if "W" not in self._cache:
            W = np.zeros((self.n, self.n))
            for (x, y), w in self._b.items():
                W[self._index[x], self._index[y]] = w
            W.setflags(write=False)
            self._cache["W"] = W
        return self._cache["W"]

    def measure_vector(self) -> np.ndarray:
        return np.array([self._m[v] for v in self._order])

    def beta_plus(self) -> np.ndarray:
        return self.weight_matrix().sum(axis=1)

    def beta_minus(self) -> np.ndarray:
        return self.weight_matrix().sum(axis=0)

    def is_symmetric(self) -> bool:
        return all(self._b.get((y, x)) == w for (x, y), w in self._b.items())

    # -- equality --------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, DirectedWeightedGraph):
            return NotImplemented
        return self._order == other._order and self._m == other._m and self._b == other._b

    def __hash__(self):
        return hash((self._order, tuple(sorted(self._b.items()))))

    def __repr__(self) -> str:
        return f"DirectedWeightedGraph(n={self.n}, edges={len(self._b)})"

    def same_structure(self, other: "DirectedWeightedGraph") -> bool:
        """Equality up to vertex order."""
        return self._m == other._m and self._b == other._b


@dataclass(frozen=True)
class DegreeProfile:
    vertex: str
    out_neighbors: frozenset
    in_neighbors: frozenset
    all_neighbors: frozenset
    beta_plus: float
    beta_minus: float
    beta_total: float
    valency: int

    @property
    def defect(self) -> float:
        return self.beta_plus - self.beta_minus


def degree_profile(g: DirectedWeightedGraph, x) -> DegreeProfile:
    x = g._check(x)
    out, inn = g._out[x], g._in[x]
    bp = float(sum(out.values()))
    bm = float(sum(inn.values()))
    alln = frozenset(out) | frozenset(inn)
    return DegreeProfile(x, frozenset(out), frozenset(inn), alln, bp, bm, bp + bm, len(alln))


@dataclass(frozen=True)
class ValidationReport:
    has_loops: bool
    weights_positive: bool
    hypothesis_cnx: bool
    connected: bool
    strongly_connected: bool
    beta_balanced: bool
    beta_defect: dict = field(repr=False)
    tolerance_used: float
    cnx_failures: tuple = ()

    @property
    def ok(self) -> bool:
        return (
            not self.has_loops
            and self.weights_positive
            and self.hypothesis_cnx
            and self.connected
            and self.beta_balanced
        )

    def worst_defect(self) -> tuple[str | None, float]:
        if not self.beta_defect:
            return None, 0.0
        v = max(self.beta_defect, key=lambda k: abs(self.beta_defect[k]))
        return v, self.beta_defect[v]

    def to_dict(self) -> dict:
        return {
            "has_loops": self.has_loops,
            "weights_positive": self.weights_positive,
            "hypothesis_cnx": self.hypothesis_cnx,
            "connected": self.connected,
            "strongly_connected": self.strongly_connected,
            "beta_balanced": self.beta_balanced,
            "beta_defect": dict(self.beta_defect),
            "tolerance_used": self.tolerance_used,
            "cnx_failures": list(self.cnx_failures),
        }


def _reachable(start: str, nbrs: Mapping[str, Iterable[str]]) -> set[str]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in nbrs[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def is_connected(g: DirectedWeightedGraph) -> bool:
    """Connectivity of the undirected support."""
    if g.n == 0:
        return False
    und = {v: set(g._out[v]) | set(g._in[v]) for v in g.order}
    return len(_reachable(g.order[0], und)) == g.n


def is_strongly_connected(g: DirectedWeightedGraph) -> bool:
    if g.n == 0:
        return False
    s = g.order[0]
    return len(_reachable(s, g._out)) == g.n and len(_reachable(s, g._in)) == g.n


def balance_defects(g: DirectedWeightedGraph) -> dict[str, float]:
    W = g.weight_matrix()
    d = W.sum(axis=1) - W.sum(axis=0)
    return {v: float(d[i]) for i, v in enumerate(g.order)}


def is_balanced(g: DirectedWeightedGraph, tol: float = DEFAULT_BALANCE_TOL) -> bool:
    if g.n == 0:
        return True
    W = g.weight_matrix()
    d = W.sum(axis=1) - W.sum(axis=0)
    return bool(np.max(np.abs(d)) <= tol * max(1.0, float(W.sum(axis=1).max())))


def validate(g: DirectedWeightedGraph, tol: float = DEFAULT_BALANCE_TOL) -> ValidationReport:
    """Check loops, weight positivity, Hypothesis (cnx), connectivity and Kirchhoff balance."""
    has_loops = any(x == y for x, y in g._b)
    positive = all(w > 0 for w in g._b.values()) and all(mv > 0 for mv in g._m.values())
    failures = tuple(v for v in g.order if not g._out[v] or not g._in[v])
    defect = balance_defects(g)
    bp_max = max((float(sum(g._out[v].values())) for v in g.order), default=0.0)
    worst = max((abs(d) for d in defect.values()), default=0.0)
    return ValidationReport(
        has_loops=has_loops,
        weights_positive=positive,
        hypothesis_cnx=not failures,
        connected=is_connected(g),
        strongly_connected=is_strongly_connected(g),
        beta_balanced=worst <= tol * max(1.0, bp_max),
        beta_defect=defect,
        tolerance_used=tol,
        cnx_failures=failures,
    )


def _vertex_set(g: DirectedWeightedGraph, S: Iterable) -> set[str]:
    out = set()
    for v in S:
        out.add(g._check(v))
    return out


def induced_subgraph(g: DirectedWeightedGraph, S: Iterable) -> DirectedWeightedGraph:
    """Subgraph on ``S`` keeping every edge of ``g`` with both endpoints in ``S``."""
    keep = _vertex_set(g, S)
    if not keep:
        raise GraphError("induced subgraph needs a non-empty vertex set")
    verts = {v: g._m[v] for v in g.order if v in keep}
    edges = [(x, y, w) for (x, y), w in g._b.items() if x in keep and y in keep]
    return DirectedWeightedGraph(verts, edges)


def _edge_set(g: DirectedWeightedGraph, E: Iterable) -> list[Edge]:
    out = []
    for e in E:
        x, y = str(e[0]), str(e[1])
        if (x, y) not in g._b:
            raise GraphError(f"edge ({x!r}, {y!r}) is not an edge of the graph")
        out.append((x, y))
    return out


def partial_graph(g: DirectedWeightedGraph, E1: Iterable) -> DirectedWeightedGraph:
    """Same vertex set as ``g`` with edges restricted to ``E1``."""
    edges = set(_edge_set(g, E1))
    return DirectedWeightedGraph(
        g.measure, [(x, y, g._b[(x, y)]) for (x, y) in g.edges if (x, y) in edges]
    )


def part_of_graph(g: DirectedWeightedGraph, V_U: Iterable, E_U: Iterable) -> DirectedWeightedGraph:
    """Arbitrary part ``(V_U, E_U)``: unlike a subgraph it need not keep all induced edges."""
    keep = _vertex_set(g, V_U)
    edges = _edge_set(g, E_U)
    for x, y in edges:
        if x not in keep or y not in keep:
            bad = x if x not in keep else y
            raise GraphError(f"edge ({x!r}, {y!r}) has endpoint {bad!r} outside the vertex set")
    verts = {v: g._m[v] for v in g.order if v in keep}
    return DirectedWeightedGraph(verts, [(x, y, g._b[(x, y)]) for x, y in edges])


@dataclass(frozen=True)
class BoundarySets:
    interior: frozenset
    vertex_boundary: frozenset
    edge_boundary: frozenset


def boundary_sets(g: DirectedWeightedGraph, Omega: Iterable) -> BoundarySets:
    om = _vertex_set(g, Omega)
    interior = frozenset(y for y in om if (set(g._out[y]) | set(g._in[y])) <= om)
    vb = set()
    for x in om:
        vb.update(w for w in set(g._out[x]) | set(g._in[x]) if w not in om)
    eb = frozenset((x, y) for (x, y) in g._b if (x in om) != (y in om))
    return BoundarySets(interior, frozenset(vb), eb)


def relabel(g: DirectedWeightedGraph, mapping: Mapping | None = None, prefix: str = "") -> DirectedWeightedGraph:
    """Copy of ``g`` with renamed vertices (``mapping`` first, then ``prefix``)."""
    mapping = {str(k): str(v) for k, v in (mapping or {}).items()}

    def name(v: str) -> str:
        return mapping[v] if v in mapping else prefix + v

    verts = [(name(v), g._m[v]) for v in g.order]
    return DirectedWeightedGraph(verts, [(name(x), name(y), w) for (x, y), w in g._b.items()])
