"""Repartitions ``(A, B, U)`` of a graph and their validation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..graph import DirectedWeightedGraph, GraphError, boundary_sets

__all__ = ["Partition", "PartitionReport", "validate_partition", "partition_from_split"]


def _vs(x: Iterable) -> frozenset:
    return frozenset(str(v) for v in x)


def _es(x: Iterable) -> frozenset:
    return frozenset((str(e[0]), str(e[1])) for e in x)


@dataclass(frozen=True)
class Partition:
    A_vertices: frozenset
    B_vertices: frozenset
    U_vertices: frozenset
    A_edges: frozenset
    B_edges: frozenset
    U_edges: frozenset

    @classmethod
    def of(cls, A_vertices, B_vertices, U_vertices, A_edges, B_edges, U_edges) -> "Partition":
        return cls(_vs(A_vertices), _vs(B_vertices), _vs(U_vertices), _es(A_edges), _es(B_edges), _es(U_edges))

    def to_dict(self) -> dict:
        def key(e):
            return (e[0], e[1])

        return {
            "A_vertices": sorted(self.A_vertices),
            "B_vertices": sorted(self.B_vertices),
            "U_vertices": sorted(self.U_vertices),
            "A_edges": [list(e) for e in sorted(self.A_edges, key=key)],
            "B_edges": [list(e) for e in sorted(self.B_edges, key=key)],
            "U_edges": [list(e) for e in sorted(self.U_edges, key=key)],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "Partition":
        return cls.of(*(doc.get(k, []) for k in ("A_vertices", "B_vertices", "U_vertices", "A_edges", "B_edges", "U_edges")))


@dataclass(frozen=True)
class PartitionReport:
    condition1: bool
    condition2: bool
    condition3: bool
    structure: bool
    interior_A: frozenset
    interior_B: frozenset
    problems: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.condition1 and self.condition2 and self.condition3 and self.structure

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "condition1": self.condition1,
            "condition2": self.condition2,
            "condition3": self.condition3,
            "structure": self.structure,
            "interior_A": sorted(self.interior_A),
            "interior_B": sorted(self.interior_B),
            "problems": {k: list(v) for k, v in self.problems.items()},
        }


def validate_partition(g: DirectedWeightedGraph, p: Partition) -> PartitionReport:
    """Check the three repartition conditions separately, with counterexamples.

    (1) ``V = V_A + V_B = int(A) + int(B) + V_U`` as disjoint unions;
    (2) ``E = E_A + E_B + E_U`` disjointly;
    (3) both edge boundaries equal ``E_U``.
    ``structure`` covers the remaining hypotheses: A and B are induced
    subgraphs and ``(V_U, E_U)`` is a part of the graph.
    """
    V = frozenset(g.order)
    E = frozenset(g.edges)
    problems: dict[str, list[str]] = {"condition1": [], "condition2": [], "condition3": [], "structure": []}
    for name, s in (("A", p.A_vertices), ("B", p.B_vertices), ("U", p.U_vertices)):
        extra = s - V
        if extra:
            problems["structure"].append(f"V_{name} has unknown vertices {sorted(extra)}")
    for name, s in (("A", p.A_edges), ("B", p.B_edges), ("U", p.U_edges)):
        extra = s - E
        if extra:
            problems["structure"].append(f"E_{name} has non-edges {sorted(extra)}")

    c1 = problems["condition1"]
    if not p.A_vertices:
        c1.append("V_A is empty")
    if not p.B_vertices:
        c1.append("V_B is empty")
    shared = p.A_vertices & p.B_vertices
    if shared:
        c1.append(f"V_A and V_B share vertex {sorted(shared)[0]!r}")
    missing = V - (p.A_vertices | p.B_vertices)
    if missing:
        c1.append(f"vertex {sorted(missing)[0]!r} is in neither V_A nor V_B")
    iA = boundary_sets(g, p.A_vertices & V).interior if p.A_vertices & V else frozenset()
    iB = boundary_sets(g, p.B_vertices & V).interior if p.B_vertices & V else frozenset()
    pieces = (("int(A)", iA), ("int(B)", iB), ("V_U", p.U_vertices))
    for i in range(3):
        for j in range(i + 1, 3):
            both = pieces[i][1] & pieces[j][1]
            if both:
                c1.append(f"{pieces[i][0]} and {pieces[j][0]} share vertex {sorted(both)[0]!r}")
    missing = V - (iA | iB | p.U_vertices)
    if missing:
        c1.append(f"vertex {sorted(missing)[0]!r} is in none of int(A), int(B), V_U")

    c2 = problems["condition2"]
    groups = (("E_A", p.A_edges), ("E_B", p.B_edges), ("E_U", p.U_edges))
    for i in range(3):
        for j in range(i + 1, 3):
            both = groups[i][1] & groups[j][1]
            if both:
                c2.append(f"{groups[i][0]} and {groups[j][0]} share edge {sorted(both)[0]}")
    missing = E - (p.A_edges | p.B_edges | p.U_edges)
    if missing:
        c2.append(f"edge {sorted(missing)[0]} is in none of E_A, E_B, E_U")

    c3 = problems["condition3"]
    for name, s in (("A", p.A_vertices), ("B", p.B_vertices)):
        bd = boundary_sets(g, s & V).edge_boundary if s & V else frozenset()
        if bd != p.U_edges:
            diff = sorted(bd ^ p.U_edges)
            c3.append(f"edge boundary of {name} differs from E_U at {diff[0]}")

    st = problems["structure"]
    for name, vs, es in (("A", p.A_vertices, p.A_edges), ("B", p.B_vertices, p.B_edges)):
        induced = frozenset(e for e in E if e[0] in vs and e[1] in vs)
        if es != induced:
            diff = sorted(es ^ induced)
            st.append(f"{name} is not the induced subgraph on V_{name}: edge {diff[0]}")
    for e in p.U_edges:
        if e[0] not in p.U_vertices or e[1] not in p.U_vertices:
            st.append(f"E_U edge {e} leaves V_U, so (V_U, E_U) is not a part")
            break

    return PartitionReport(
        condition1=not c1,
        condition2=not c2,
        condition3=not c3,
        structure=not st,
        interior_A=iA,
        interior_B=iB,
        problems={k: tuple(v) for k, v in problems.items() if v},
    )


def partition_from_split(g: DirectedWeightedGraph, A_vertices: Iterable) -> Partition:
    """The repartition induced by splitting the vertex set into ``A`` and its complement."""
    A = frozenset(str(v) for v in A_vertices)
    unknown = A - set(g.order)
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown)}")
    B = frozenset(g.order) - A
    EA = frozenset(e for e in g.edges if e[0] in A and e[1] in A)
    EB = frozenset(e for e in g.edges if e[0] in B and e[1] in B)
    EU = frozenset(g.edges) - EA - EB
    iA = boundary_sets(g, A).interior if A else frozenset()
    iB = boundary_sets(g, B).interior if B else frozenset()
    U = frozenset(g.order) - iA - iB
    return Partition(A, B, U, EA, EB, EU)
