"""Dense matrices for the directed Laplacian, its adjoint and the special Laplacian.

All operators act on functions ``f: V -> C`` with the inner product
``(f, h)_m = sum_x m(x) f(x) conj(h(x))``.  Matrices are real and dense, rows and
columns follow the graph's canonical vertex order.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

import numpy as np

from .graph import DEFAULT_BALANCE_TOL, DirectedWeightedGraph

__all__ = [
    "Measure",
    "OperatorMatrix",
    "OperatorError",
    "graph_measure",
    "laplacian",
    "adjoint_laplacian",
    "special_laplacian",
    "adjoint_sum",
    "m_adjoint",
    "dirichlet",
    "green_form",
    "m_inner",
    "as_vector",
    "matrix_scale",
]

MODES = ("raw", "normalized")


class OperatorError(ValueError):
    pass


@dataclass(frozen=True)
class Measure:
    order: tuple
    values: np.ndarray = field(repr=False)
    kind: str = "given_m"  # or "normalized_beta_plus"

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.shape != (len(self.order),):
            raise OperatorError("measure length does not match vertex order")
        if np.any(vals <= 0):
            bad = self.order[int(np.argmin(vals))]
            raise OperatorError(f"measure must be positive, m({bad!r}) = {vals.min()}")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def as_dict(self) -> dict:
        return {v: float(x) for v, x in zip(self.order, self.values)}

    def restrict(self, U: Iterable) -> "Measure":
        keep = {str(u) for u in U}
        idx = [i for i, v in enumerate(self.order) if v in keep]
        return Measure(tuple(self.order[i] for i in idx), self.values[idx], self.kind)


@dataclass(frozen=True)
class OperatorMatrix:
    """A dense operator matrix together with its vertex order and measure.

    ``kind`` is one of ``delta``, ``delta_star``, ``special_S`` or a negated /
    custom label; ``restricted_to`` is set for Dirichlet restrictions.
    ``construction`` records how the matrix was obtained when more than one
    route exists (``formula``, ``m-adjoint``, ``adjoint-by-definition``,
    ``symmetrized-weights``).
    """

    entries: np.ndarray = field(repr=False)
    order: tuple
    measure: Measure
    kind: str
    restricted_to: tuple | None = None
    construction: str = "formula"

    def __post_init__(self):
        A = np.array(self.entries, dtype=float)
        if A.shape != (len(self.order), len(self.order)):
            raise OperatorError("matrix shape does not match vertex order")
        if self.measure.order != tuple(self.order):
            raise OperatorError("measure order does not match matrix order")
        A.setflags(write=False)
        object.__setattr__(self, "entries", A)

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def m(self) -> np.ndarray:
        return self.measure.values

    def scale(self) -> float:
        return matrix_scale(self.entries)

    def __neg__(self) -> "OperatorMatrix":
        return replace(self, entries=-self.entries, kind=f"neg({self.kind})")

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if self.order != other.order or not np.array_equal(self.m, other.m):
            raise OperatorError("operands live on different spaces")
        return OperatorMatrix(self.entries + other.entries, self.order, self.measure, f"{self.kind}+{other.kind}")

    def apply(self, f) -> np.ndarray:
        return self.entries @ as_vector(self.order, f)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "construction": self.construction,
            "order": list(self.order),
            "measure": [float(x) for x in self.m],
            "restricted_to": list(self.restricted_to) if self.restricted_to is not None else None,
            "entries": self.entries.tolist(),
        }


def matrix_scale(A: np.ndarray) -> float:
    """Maximum absolute row sum."""
    if A.size == 0:
        return 0.0
    return float(np.abs(A).sum(axis=1).max())


def as_vector(order: tuple, f) -> np.ndarray:
    """Vertex function (mapping or aligned sequence) as an array in ``order``."""
    if isinstance(f, Mapping):
        keys = {str(k) for k in f}
        if keys != set(order):
            raise OperatorError(
                f"function domain mismatch: missing {sorted(set(order) - keys)}, extra {sorted(keys - set(order))}"
            )
        fm = {str(k): v for k, v in f.items()}
        return np.array([fm[v] for v in order])
    arr = np.asarray(f)
    if arr.shape != (len(order),):
        raise OperatorError(f"function has shape {arr.shape}, expected ({len(order)},)")
    return arr


def m_inner(f: np.ndarray, h: np.ndarray, m: np.ndarray) -> complex:
    return complex(np.sum(m * f * np.conj(h)))


def graph_measure(g: DirectedWeightedGraph, mode: str = "raw") -> Measure:
    if mode not in MODES:
        raise OperatorError(f"mode must be one of {MODES}, got {mode!r}")
    if mode == "raw":
        return Measure(g.order, g.measure_vector(), "given_m")
    bp = g.beta_plus()
    if np.any(bp <= 0):
        bad = g.order[int(np.argmin(bp))]
        raise OperatorError(f"normalized mode needs beta+(x) > 0; vertex {bad!r} has no out-edge")
    return Measure(g.order, bp, "normalized_beta_plus")


def _resolve_measure(g: DirectedWeightedGraph, mode: str, measure) -> Measure:
    if measure is None:
        return graph_measure(g, mode)
    if isinstance(measure, Measure):
        if measure.order == g.order:
            return measure
        mm = measure.as_dict()
    else:
        mm = {str(k): float(v) for k, v in dict(measure).items()}
    try:
        vals = np.array([mm[v] for v in g.order])
    except KeyError as exc:
        raise OperatorError(f"measure does not cover vertex {exc.args[0]!r}") from None
    kind = measure.kind if isinstance(measure, Measure) else "given_m"
    return Measure(g.order, vals, kind)


def _balance_or_raise(g: DirectedWeightedGraph, tol: float):
    W = g.weight_matrix()
    d = W.sum(axis=1) - W.sum(axis=0)
    if g.n and np.max(np.abs(d)) > tol * max(1.0, float(W.sum(axis=1).max())):
        i = int(np.argmax(np.abs(d)))
        raise OperatorError(
            f"graph violates Kirchhoff balance: vertex {g.order[i]!r} has beta+ - beta- = {d[i]:.6g}"
        )


def _is_balanced(g: DirectedWeightedGraph, tol: float) -> bool:
    try:
        _balance_or_raise(g, tol)
    except OperatorError:
        return False
    return True


def laplacian(g: DirectedWeightedGraph, mode: str = "raw", *, measure=None) -> OperatorMatrix:
    """``(Delta f)(x) = 1/m(x) * sum_{y in V_x^+} b(x,y) (f(x) - f(y))``."""
    mu = _resolve_measure(g, mode, measure)
    W = g.weight_matrix()
    L = (np.diag(W.sum(axis=1)) - W) / mu.values[:, None]
    return OperatorMatrix(L, g.order, mu, "delta")


def m_adjoint(A: OperatorMatrix) -> OperatorMatrix:
    """Adjoint for the m-inner product, ``M^{-1} A^T M``."""
    m = A.m
    B = A.entries.T * m[None, :] / m[:, None]
    kind = {"delta": "delta_star", "delta_star": "delta"}.get(A.kind, f"adj({A.kind})")
    return OperatorMatrix(B, A.order, A.measure, kind, A.restricted_to, "m-adjoint")


def adjoint_laplacian(
    g: DirectedWeightedGraph,
    mode: str = "raw",
    *,
    measure=None,
    tol: float = DEFAULT_BALANCE_TOL,
    allow_unbalanced: bool = False,
) -> OperatorMatrix:
    """In-neighbour formula ``1/m(x) * sum_{y in V_x^-} b(y,x) (f(x) - f(y))``.

    The formula is the m-adjoint of ``laplacian`` only on balanced graphs; it
    is cross-checked against ``m_adjoint`` there.  With ``allow_unbalanced``
    an unbalanced graph gets the m-adjoint construction instead.
    """
    mu = _resolve_measure(g, mode, measure)
    delta = laplacian(g, mode, measure=mu)
    if not _is_balanced(g, tol):
        if allow_unbalanced:
            return m_adjoint(delta)
        _balance_or_raise(g, tol)
    W = g.weight_matrix()
    A = (np.diag(W.sum(axis=0)) - W.T) / mu.values[:, None]
    check = m_adjoint(delta).entries
    scale = max(1.0, matrix_scale(A))
    err = float(np.max(np.abs(A - check))) if A.size else 0.0
    # the two routes differ on the diagonal by the (tolerated) balance defect
    slack = float(np.max(np.abs(W.sum(axis=0) - W.sum(axis=1)) / mu.values)) if A.size else 0.0
    if err > 1e-12 * scale + slack:
        raise OperatorError(f"adjoint formula disagrees with the m-adjoint by {err:.3g}")
    return OperatorMatrix(A, g.order, mu, "delta_star")


def special_laplacian(
    g: DirectedWeightedGraph,
    mode: str = "raw",
    *,
    measure=None,
    tol: float = DEFAULT_BALANCE_TOL,
    require_balanced: bool = True,
) -> OperatorMatrix:
    """``S = Delta + Delta^*`` assembled from ``a(x,y) = b(x,y) + b(y,x)``.

    On a balanced graph this equals ``laplacian + adjoint_laplacian``.  With
    ``require_balanced=False`` an unbalanced graph still gets the
    symmetrized-weight matrix (which is then no longer ``Delta + Delta^*``),
    flagged through ``construction``.
    """
    mu = _resolve_measure(g, mode, measure)
    balanced = _is_balanced(g, tol)
    if not balanced and require_balanced:
        _balance_or_raise(g, tol)
    W = g.weight_matrix()
    a = W + W.T
    S = (np.diag(a.sum(axis=1)) - a) / mu.values[:, None]
    return OperatorMatrix(S, g.order, mu, "special_S", None, "formula" if balanced else "symmetrized-weights")


def adjoint_sum(g: DirectedWeightedGraph, mode: str = "raw", *, measure=None, tol: float = DEFAULT_BALANCE_TOL):
    """``Delta + m_adjoint(Delta)``; equals ``special_laplacian`` on balanced graphs."""
    mu = _resolve_measure(g, mode, measure)
    delta = laplacian(g, mode, measure=mu)
    S = delta.entries + m_adjoint(delta).entries
    construction = "formula" if _is_balanced(g, tol) else "adjoint-by-definition"
    return OperatorMatrix(S, g.order, mu, "special_S", None, construction)


def dirichlet(A: OperatorMatrix, U: Iterable) -> OperatorMatrix:
    """Principal submatrix on ``U``; diagonals keep the full-graph degrees."""
    keep = {str(u) for u in U}
    if not keep:
        raise OperatorError("Dirichlet restriction needs a non-empty vertex set")
    unknown = keep - set(A.order)
    if unknown:
        raise OperatorError(f"Dirichlet set contains unknown vertices {sorted(unknown)}")
    idx = [i for i, v in enumerate(A.order) if v in keep]
    order = tuple(A.order[i] for i in idx)
    sub = A.entries[np.ix_(idx, idx)]
    return OperatorMatrix(sub, order, A.measure.restrict(order), A.kind, order, A.construction)


def green_form(g: DirectedWeightedGraph, f, h) -> complex:
    """``sum_{(x,y) in E} b(x,y) (f(x) - f(y)) conj(h(x) - h(y))``."""
    fv = as_vector(g.order, f)
    hv = as_vector(g.order, h)
    total = 0j
    for (x, y), w in g.weights.items():
        i, j = g.index(x), g.index(y)
        total += w * (fv[i] - fv[j]) * np.conj(hv[i] - hv[j])
    return complex(total)
