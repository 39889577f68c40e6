"""One certify function per theorem id, plus the ``certify`` dispatcher.

Every function validates the structural hypotheses first (raising
``HypothesisError`` naming the failed condition), re-derives n, r, q and the
index ranges from its inputs, and records one ``Check`` per inequality
instance.  Margins are ``rhs - lhs`` for ``lhs <= rhs``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from ..eigen import (
    complex_distance,
    cycle_delta_spectrum_closed_form,
    eig_general,
    eig_m_symmetric,
    real_distance,
    zero_cluster_size,
)
from ..generators import FlowerDecomposition, flower_compose, verify_flower
from ..graph import (
    DirectedWeightedGraph,
    GraphError,
    induced_subgraph,
    is_balanced,
    is_connected,
    partial_graph,
    relabel,
    validate,
)
from ..operators import (
    MODES,
    adjoint_laplacian,
    adjoint_sum,
    as_vector,
    dirichlet,
    graph_measure,
    green_form,
    laplacian,
    m_inner,
    matrix_scale,
    special_laplacian,
)
from .certificate import (
    Certificate,
    CertificateBuilder,
    HypothesisError,
    IndexRangeError,
    TheoremId,
    input_digest,
)
from .partition import Partition, validate_partition

T = TheoremId


# -- shared helpers ---------------------------------------------------------


def require_graph(g: DirectedWeightedGraph, name: str = "G") -> None:
    """Finite, connected, Hypothesis (cnx) and Kirchhoff-balanced."""
    rep = validate(g)
    if not rep.connected:
        raise HypothesisError(f"{name} is not connected")
    if not rep.hypothesis_cnx:
        raise HypothesisError(f"{name} fails Hypothesis (cnx) at vertex {rep.cnx_failures[0]!r}")
    if not rep.beta_balanced:
        v, d = rep.worst_defect()
        raise HypothesisError(f"{name} violates Kirchhoff balance at vertex {v!r} (beta+ - beta- = {d:.3g})")


def _mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return mode


def _indices(requested, lo: int, hi: int, name: str = "k") -> list[int]:
    if requested is None:
        return list(range(lo, hi + 1))
    out = []
    for k in requested:
        k = int(k)
        if not lo <= k <= hi:
            raise IndexRangeError(f"{name}={k} outside the theorem's range {lo}..{hi}")
        out.append(k)
    return out


def _subgraph(g: DirectedWeightedGraph, H: Iterable, *, connected: bool = True) -> DirectedWeightedGraph:
    vs = [str(v) for v in H]
    if not vs:
        raise HypothesisError("subgraph vertex set is empty")
    unknown = sorted(set(vs) - set(g.order))
    if unknown:
        raise HypothesisError(f"subgraph vertex {unknown[0]!r} is not a vertex of G")
    sub = induced_subgraph(g, vs)
    if connected and not is_connected(sub):
        raise HypothesisError("H is not a connected subgraph of G")
    return sub


def _vertex_subset(g: DirectedWeightedGraph, U: Iterable, name: str = "U") -> list[str]:
    vs = [str(v) for v in U]
    if not vs:
        raise HypothesisError(f"{name} is empty")
    unknown = sorted(set(vs) - set(g.order))
    if unknown:
        raise HypothesisError(f"{name} contains {unknown[0]!r}, not a vertex of G")
    return [v for v in g.order if v in set(vs)]


def _S(g, mode="raw", measure=None):
    return special_laplacian(g, mode, measure=measure, require_balanced=False)


def _lam(A) -> np.ndarray:
    """Ascending eigenvalues of an m-symmetric operator, indexable from 1."""
    w = eig_m_symmetric(A, vectors=False).eigenvalues
    return np.concatenate([[np.nan], w])


def _clam(A) -> np.ndarray:
    """Complex eigenvalues in (Re, Im) order, indexable from 1."""
    z = eig_general(A, residual=False).eigenvalues
    return np.concatenate([[np.nan], z])


def _cycle_rate(g: DirectedWeightedGraph) -> float:
    """``c = b/m`` when ``g`` is a simple directed cycle with constant b and m."""
    n = g.n
    if n < 2:
        raise HypothesisError("a cycle needs at least 2 vertices")
    for v in g.order:
        if len(g.out_neighbors(v)) != 1 or len(g.in_neighbors(v)) != 1:
            raise HypothesisError(f"G is not a simple directed cycle: vertex {v!r}")
    start = g.order[0]
    v, steps = start, 0
    while True:
        (v,) = tuple(g.out_neighbors(v))
        steps += 1
        if v == start:
            break
    if steps != n:
        raise HypothesisError("G is a union of several cycles, not a single cycle")
    bs = np.array(list(g.weights.values()))
    ms = g.measure_vector()
    if np.ptp(bs) > 1e-12 * bs.max() or np.ptp(ms) > 1e-12 * ms.max():
        raise HypothesisError("cycle theorems need constant edge weight and constant measure")
    return float(bs[0] / ms[0])


def _random_functions(order, m, trials, seed, count):
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    out = []
    for _ in range(trials):
        fs = []
        for _ in range(count):
            f = rng.standard_normal(len(order)) + 1j * rng.standard_normal(len(order))
            fs.append(f / np.sqrt(np.sum(m * np.abs(f) ** 2)))
        out.append(fs)
    return out


def _m_norm(f, m) -> float:
    return float(np.sqrt(np.sum(m * np.abs(f) ** 2)))


# -- section: operators and basic spectra -----------------------------------


def green_identity(g, f=None, h=None, *, trials: int = 1, seed: int = 0, mode: str = "raw", tol=None) -> Certificate:
    """``(Delta f, h)_m + (Delta* f, h)_m == sum_E b (f(x)-f(y)) conj(h(x)-h(y))``."""
    require_graph(g)
    _mode(mode)
    D = laplacian(g, mode)
    Ds = adjoint_laplacian(g, mode)
    m = D.m
    if (f is None) != (h is None):
        raise ValueError("pass both f and h, or neither")
    if f is not None:
        pairs = [(as_vector(g.order, f), as_vector(g.order, h))]
    else:
        pairs = _random_functions(g.order, m, trials, seed, 2)
    digest = input_digest(T.GREEN_IDENTITY, graph=g, f=f, h=h, trials=trials, seed=seed, mode=mode)
    b = CertificateBuilder(T.GREEN_IDENTITY, tol, matrix_scale(_S(g, mode).entries), digest, mode)
    for t, (fv, hv) in enumerate(pairs):
        lhs = m_inner(D.entries @ fv, hv, m) + m_inner(Ds.entries @ fv, hv, m)
        rhs = green_form(g, fv, hv)
        norm = _m_norm(fv, m) * _m_norm(hv, m)
        b.eq(f"trial {t}: (Df,h)+(D*f,h) = green form", lhs, rhs, norm if norm > 0 else 1.0)
    return b.seal()


def positivity_s(g, f=None, *, trials: int = 1, seed: int = 0, mode: str = "raw", tol=None) -> Certificate:
    """``(S f, f)_m >= 0``, on the given or random functions and on ``lambda_1(S)``."""
    require_graph(g)
    S = special_laplacian(g, _mode(mode))
    m = S.m
    fs = [[as_vector(g.order, f)]] if f is not None else _random_functions(g.order, m, trials, seed, 1)
    digest = input_digest(T.POSITIVITY_S, graph=g, f=f, trials=trials, seed=seed, mode=mode)
    b = CertificateBuilder(T.POSITIVITY_S, tol, matrix_scale(S.entries), digest, mode)
    for t, (fv,) in enumerate(fs):
        nn = _m_norm(fv, m) ** 2
        q = m_inner(S.entries @ fv, fv, m).real / (nn if nn > 0 else 1.0)
        b.le(f"trial {t}: (Sf,f)_m/(f,f)_m >= 0", 0.0, q)
        dirichlet_energy = sum(w * abs(fv[g.index(x)] - fv[g.index(y)]) ** 2 for (x, y), w in g.weights.items())
        b.record(f"trial {t}: (Sf,f)_m equals the edge energy (difference)", abs(q * nn - dirichlet_energy), 0.0)
    b.le("lambda_1(S) >= 0", 0.0, _lam(S)[1])
    return b.seal()


def spectrum_basic(g, *, tol=None) -> Certificate:
    """0 simple for S~ and S; spectrum of S~ in [0, 4]; real parts of Delta~ in [0, 2]."""
    require_graph(g)
    St = special_laplacian(g, "normalized")
    S = special_laplacian(g, "raw")
    Dt = laplacian(g, "normalized")
    st = eig_m_symmetric(St, vectors=False)
    sr = eig_m_symmetric(S, vectors=False)
    dt = eig_general(Dt, residual=False)
    digest = input_digest(T.SPECTRUM_BASIC, graph=g)
    b = CertificateBuilder(T.SPECTRUM_BASIC, tol, matrix_scale(St.entries), digest, "normalized")
    for k, lam in enumerate(st.eigenvalues, 1):
        b.le(f"lambda_{k}(S~) >= 0", 0.0, lam)
        b.le(f"lambda_{k}(S~) <= 4", lam, 4.0)
    for k, z in enumerate(dt.eigenvalues, 1):
        b.le(f"Re lambda_{k}(Delta~) >= 0", 0.0, z.real)
        b.le(f"Re lambda_{k}(Delta~) <= 2", z.real, 2.0)
    b.eq("zero cluster of S~ has size 1", float(zero_cluster_size(st)), 1.0)
    b.eq("zero cluster of S has size 1", float(zero_cluster_size(sr)), 1.0)
    b.flag("strongly_connected", validate(g).strongly_connected)
    return b.seal()


def realpart_lemma(g, *, mode: str = "raw", tol=None) -> Certificate:
    """``2 Re lambda_n(Delta) <= lambda_n(S)``; the other k are recorded only."""
    require_graph(g)
    S = special_laplacian(g, _mode(mode))
    ls = _lam(S)
    ld = _clam(laplacian(g, mode))
    n = g.n
    digest = input_digest(T.REALPART_LEMMA, graph=g, mode=mode)
    b = CertificateBuilder(T.REALPART_LEMMA, tol, matrix_scale(S.entries), digest, mode)
    b.le(f"2Re(lambda_{n}(Delta)) <= lambda_{n}(S)", 2 * ld[n].real, ls[n])
    for k in range(1, n + 1):
        b.record(f"k={k}: 2Re(lambda_k(Delta)) <= lambda_k(S)", 2 * ld[k].real, ls[k])
    return b.seal()


def cycle_spectrum(g, *, tol=None) -> Certificate:
    """Spectrum of Delta on a cycle against ``c (1 - exp(+-2 i l pi / n))``."""
    c = _cycle_rate(g)
    require_graph(g)
    n = g.n
    spec = eig_general(laplacian(g), residual=False)
    closed = c * np.asarray(cycle_delta_spectrum_closed_form(n).eigenvalues)
    digest = input_digest(T.CYCLE_SPECTRUM, graph=g)
    b = CertificateBuilder(T.CYCLE_SPECTRUM, tol, matrix_scale(_S(g).entries), digest)
    b.distance("multiset distance sigma(Delta) vs closed form", complex_distance(spec.eigenvalues, closed))
    near2 = int(np.sum(np.abs(spec.eigenvalues - 2 * c) <= 1e-8 * max(1.0, 2 * c)))
    b.eq(f"multiplicity of 2c (n={n} {'even' if n % 2 == 0 else 'odd'})", float(near2), float(n % 2 == 0))
    b.flag("rate", c)
    return b.seal()


def cycle_corollary(g, *, tol=None) -> Certificate:
    """``sigma(S) == 2 Re sigma(Delta)`` on a cycle."""
    _cycle_rate(g)
    require_graph(g)
    S = special_laplacian(g)
    ls = eig_m_symmetric(S, vectors=False).eigenvalues
    ld = eig_general(laplacian(g), residual=False).eigenvalues
    digest = input_digest(T.CYCLE_COROLLARY, graph=g)
    b = CertificateBuilder(T.CYCLE_COROLLARY, tol, matrix_scale(S.entries), digest)
    b.distance("multiset distance sigma(S) vs 2Re sigma(Delta)", real_distance(ls, 2 * ld.real))
    return b.seal()


# -- section: domain monotonicity --------------------------------------------


def subgraph_interlace(g, H, *, ks=None, mode: str = "raw", tol=None) -> Certificate:
    """``lambda_k(S_H) <= lambda_{n-r+k}(S_G)`` for a connected induced subgraph H.

    S_H is assembled from the symmetrized weights of H with G's measure
    restricted to H.  The proof's shifted form (``n-r+k+1``) is recorded.
    """
    require_graph(g)
    _mode(mode)
    Hg = _subgraph(g, H)
    mu = graph_measure(g, mode)
    SG = special_laplacian(g, mode, measure=mu)
    SH = _S(Hg, mode, measure=mu.restrict(Hg.order))
    lg, lh = _lam(SG), _lam(SH)
    n, r = g.n, Hg.n
    digest = input_digest(T.SUBGRAPH_INTERLACE, graph=g, H=sorted(Hg.order), ks=ks, mode=mode)
    b = CertificateBuilder(T.SUBGRAPH_INTERLACE, tol, matrix_scale(SG.entries), digest, mode)
    for k in _indices(ks, 1, r):
        b.le(f"k={k}: lambda_{k}(S_H) <= lambda_{n - r + k}(S_G)", lh[k], lg[n - r + k])
        if n - r + k + 1 <= n:
            b.record(f"k={k}: shifted lambda_{k}(S_H) <= lambda_{n - r + k + 1}(S_G)", lh[k], lg[n - r + k + 1])
    b.flag("n", n)
    b.flag("r", r)
    b.flag("S_H_construction", SH.construction)
    return b.seal()


def flower_from_parts(g, core: Iterable, petals: Sequence) -> FlowerDecomposition:
    """Wrap a graph with an explicit core and ``[(petal vertices, attach vertex), ...]``."""
    fd = FlowerDecomposition(
        frozenset(str(v) for v in core),
        tuple((frozenset(str(v) for v in vs) | {str(x)}, str(x)) for vs, x in petals),
        g,
    )
    return fd


def flower_monotone(fd: FlowerDecomposition, *, ks=None, mode: str = "raw", tol=None) -> Certificate:
    """``lambda_k(S_H) >= lambda_k(S_G)`` for ``k <= #V_H`` on an H-flower-like G."""
    problems = verify_flower(fd)
    if problems:
        raise HypothesisError("not a flower decomposition: " + "; ".join(problems))
    g = fd.graph
    require_graph(g)
    _mode(mode)
    Hg = fd.core_graph()
    mu = graph_measure(g, mode)
    SG = special_laplacian(g, mode, measure=mu)
    SH = _S(Hg, mode, measure=mu.restrict(Hg.order))
    lg, lh = _lam(SG), _lam(SH)
    r = Hg.n
    digest = input_digest(
        T.FLOWER_MONOTONE, graph=g, core=fd.core, petals=[(vs, x) for vs, x in fd.petals], ks=ks, mode=mode
    )
    b = CertificateBuilder(T.FLOWER_MONOTONE, tol, matrix_scale(SG.entries), digest, mode)
    for k in _indices(ks, 1, r):
        b.le(f"k={k}: lambda_{k}(S_G) <= lambda_{k}(S_H)", lg[k], lh[k])
    b.flag("r", r)
    b.flag("petals", len(fd.petals))
    return b.seal()


def _tree_check(g) -> None:
    if not g.is_symmetric():
        raise HypothesisError("G is not symmetric")
    if not is_connected(g):
        raise HypothesisError("G is not connected")
    if len(g.edges) != 2 * (g.n - 1):
        raise HypothesisError("G is not a tree: the undirected support has a cycle")
    if any(w != 1.0 for w in g.weights.values()) or any(v != 1.0 for v in g.measure.values()):
        raise HypothesisError("G is not a simple tree: weights and measure must be 1")


def tree_star_bound(g, *, tol=None) -> Certificate:
    """``lambda_k(S) <= 2`` for ``k <= q`` and ``lambda_{q+1}(S) <= 2(q+1)``, ``2q = max v(x)``."""
    _tree_check(g)
    require_graph(g)
    S = special_laplacian(g)
    lg = _lam(S)
    n = g.n
    vmax = max(len(set(g.out_neighbors(v)) | set(g.in_neighbors(v))) for v in g.order)
    q = vmax // 2
    digest = input_digest(T.TREE_STAR_BOUND, graph=g)
    b = CertificateBuilder(T.TREE_STAR_BOUND, tol, matrix_scale(S.entries), digest)
    for k in range(1, q + 1):
        b.le(f"k={k}: lambda_{k}(S) <= 2", lg[k], 2.0)
    b.le(f"lambda_{q + 1}(S) <= 2(q+1)", lg[q + 1], 2.0 * (q + 1))
    star = np.concatenate([[0.0], [2.0] * (q - 1), [2.0 * (q + 1)]]) if q >= 1 else np.array([0.0])
    for k in range(1, q + 2):
        b.record(f"k={k}: lambda_{k}(S) <= lambda_{k}(S_star)", lg[k], star[k - 1])
    if vmax == n - 1 and n >= 2:
        closed = np.concatenate([[0.0], [2.0] * (n - 2), [2.0 * n]])
        b.distance("G is a star: spectrum vs {0, 2, ..., 2, 2n}", real_distance(lg[1:], closed))
    b.flag("q", q)
    return b.seal()


def attach_graph(g, other, attach, other_attach, weight: float = 1.0) -> FlowerDecomposition:
    """``g`` with ``other`` hung off vertex ``attach`` by the edge pair attach <-> other_attach."""
    attach, other_attach = str(attach), str(other_attach)
    if attach not in g:
        raise HypothesisError(f"attach vertex {attach!r} is not a vertex of G")
    if other_attach not in other:
        raise HypothesisError(f"attach vertex {other_attach!r} is not a vertex of G_1")
    if weight <= 0:
        raise HypothesisError("connecting edge weight must be positive")
    if set(other.order) & set(g.order):
        other = relabel(other, prefix="g1_")
        other_attach = "g1_" + other_attach
    glue = "__glue__"
    while glue in other:
        glue += "_"
    petal = DirectedWeightedGraph(
        [(v, other.m(v)) for v in other.order] + [(glue, 1.0)],
        [(x, y, w) for (x, y), w in other.weights.items()]
        + [(glue, other_attach, weight), (other_attach, glue, weight)],
    )
    try:
        return flower_compose(g, [(petal, attach, glue)])
    except GraphError as exc:
        raise HypothesisError(str(exc)) from None


def single_edge_attach(
    g, other, attach, other_attach, *, weight: float = 1.0, ks=None, mode: str = "raw", tol=None
) -> Certificate:
    """``lambda_k(S_G) >= lambda_k(S_{G'})``, ``k = 1..n``, where G' is G plus ``other`` via one edge."""
    require_graph(g)
    require_graph(other, "G_1")
    _mode(mode)
    fd = attach_graph(g, other, attach, other_attach, weight)
    big = fd.graph
    mu = graph_measure(big, mode)
    SB = special_laplacian(big, mode, measure=mu)
    SG = special_laplacian(g, mode, measure=mu.restrict(g.order))
    lb, lg = _lam(SB), _lam(SG)
    n = g.n
    digest = input_digest(
        T.SINGLE_EDGE_ATTACH, graph=g, other=other, attach=attach, other_attach=other_attach,
        weight=weight, ks=ks, mode=mode,
    )
    b = CertificateBuilder(T.SINGLE_EDGE_ATTACH, tol, matrix_scale(SB.entries), digest, mode)
    for k in _indices(ks, 1, n):
        b.le(f"k={k}: lambda_{k}(S_G+G1) <= lambda_{k}(S_G)", lb[k], lg[k])
    b.flag("n", n)
    return b.seal()


def _edge_split(g, E1):
    E1 = {(str(x), str(y)) for x, y, *_ in E1}
    missing = sorted(E1 - set(g.edges))
    if missing:
        raise HypothesisError(f"E_1 contains {missing[0]}, which is not an edge of G")
    E2 = [e for e in g.edges if e not in E1]
    return partial_graph(g, sorted(E1)), partial_graph(g, E2)


def edge_weyl(g, E1, *, ks=None, js=None, mode: str = "raw", tol=None) -> Certificate:
    """Both Weyl families for ``E = E_1 + E_2``, for (s, r) = (1, 2) and (2, 1).

    Upper: ``lambda_k(S_G) <= lambda_{k+j}(S_s) + lambda_{n-j}(S_r)``, j = 0..n-k.
    Lower: ``lambda_k(S_G) >= lambda_{k-j+1}(S_s) + lambda_j(S_r)``, j = 1..k, checked
    as stated and, separately, as the upper family for ``-S`` re-indexed through
    ``lambda_k(-S) = -lambda_{n-k+1}(S)``.
    """
    require_graph(g)
    _mode(mode)
    G1, G2 = _edge_split(g, E1)
    mu = graph_measure(g, mode)
    mats = {0: special_laplacian(g, mode, measure=mu), 1: _S(G1, mode, mu), 2: _S(G2, mode, mu)}
    lam = {i: _lam(A) for i, A in mats.items()}
    neg = {i: _lam(-A) for i, A in mats.items()}
    n = g.n
    kset = set(_indices(ks, 1, n))
    jset = None if js is None else set(_indices(js, 0, n, "j"))
    digest = input_digest(T.EDGE_WEYL, graph=g, E1=sorted(G1.edges), ks=ks, js=js, mode=mode)
    b = CertificateBuilder(T.EDGE_WEYL, tol, matrix_scale(mats[0].entries), digest, mode)
    for s, r in ((1, 2), (2, 1)):
        l, ls, lr = lam[0], lam[s], lam[r]
        for k in sorted(kset):
            for j in range(0, n - k + 1):
                if jset is None or j in jset:
                    b.le(f"upper s={s} r={r} k={k} j={j}", l[k], ls[k + j] + lr[n - j])
            for j in range(1, k + 1):
                if jset is None or j in jset:
                    b.le(f"lower s={s} r={r} k={k} j={j}", ls[k - j + 1] + lr[j], l[k])
        # lower family through -S: upper family at (kk, jj) gives k = n-kk+1, j = jj+1
        nl, nls, nlr = neg[0], neg[s], neg[r]
        for kk in range(1, n + 1):
            for jj in range(0, n - kk + 1):
                k, j = n - kk + 1, jj + 1
                if k in kset and (jset is None or j in jset):
                    b.le(f"lower(-S) s={s} r={r} k={k} j={j}", nl[kk], nls[kk + jj] + nlr[n - jj])
    b.flag("E1", len(G1.edges))
    b.flag("E2", len(G2.edges))
    return b.seal()


def edge_sandwich(g, E1, *, ks=None, mode: str = "raw", tol=None) -> Certificate:
    """``lambda_k(S_s) <= lambda_k(S_G) <= lambda_k(S_s) + lambda_n(S_r)``."""
    require_graph(g)
    _mode(mode)
    G1, G2 = _edge_split(g, E1)
    mu = graph_measure(g, mode)
    SG = special_laplacian(g, mode, measure=mu)
    lam = {0: _lam(SG), 1: _lam(_S(G1, mode, mu)), 2: _lam(_S(G2, mode, mu))}
    n = g.n
    digest = input_digest(T.EDGE_SANDWICH, graph=g, E1=sorted(G1.edges), ks=ks, mode=mode)
    b = CertificateBuilder(T.EDGE_SANDWICH, tol, matrix_scale(SG.entries), digest, mode)
    for s, r in ((1, 2), (2, 1)):
        for k in _indices(ks, 1, n):
            b.le(f"s={s} r={r} k={k}: lambda_k(S_s) <= lambda_k(S_G)", lam[s][k], lam[0][k])
            b.le(f"s={s} r={r} k={k}: lambda_k(S_G) <= lambda_k(S_s) + lambda_n(S_r)", lam[0][k], lam[s][k] + lam[r][n])
    return b.seal()


def edge_monotone(g, g_plus, *, ks=None, mode: str = "raw", tol=None) -> Certificate:
    """``lambda_k(S_G) <= lambda_k(S_{G_1})`` when G_1 adds edges (or weight) to G.

    Both operators use G's measure.
    """
    require_graph(g)
    require_graph(g_plus, "G_1")
    _mode(mode)
    if set(g.order) != set(g_plus.order):
        raise HypothesisError("G and G_1 must have the same vertex set")
    for v in g.order:
        if g.m(v) != g_plus.m(v):
            raise HypothesisError(f"G and G_1 must share the measure (differs at {v!r})")
    for e, w in g.weights.items():
        if e not in g_plus.weights:
            raise HypothesisError(f"G_1 drops the edge {e}")
        if g_plus.weights[e] < w:
            raise HypothesisError(f"G_1 lowers the weight of edge {e}")
    mu = graph_measure(g, mode)
    SG = special_laplacian(g, mode, measure=mu)
    SP = special_laplacian(g_plus, mode, measure=mu)
    lg, lp = _lam(SG), _lam(SP)
    digest = input_digest(T.EDGE_MONOTONE, graph=g, g_plus=g_plus, ks=ks, mode=mode)
    b = CertificateBuilder(T.EDGE_MONOTONE, tol, matrix_scale(SP.entries), digest, mode)
    for k in _indices(ks, 1, g.n):
        b.le(f"k={k}: lambda_k(S_G) <= lambda_k(S_G1)", lg[k], lp[k])
    b.flag("added_edges", len(set(g_plus.edges) - set(g.edges)))
    return b.seal()


# -- section: Dirichlet comparison -------------------------------------------


def dirichlet_realpart(g, U, *, mode: str = "raw", tol=None) -> Certificate:
    """``lambda_1(S^D_U) <= 2Re lambda_1(Delta^D_U)`` and ``lambda_p(S^D_U) >= 2Re lambda_p(Delta^D_U)``, p = #U."""
    require_graph(g)
    _mode(mode)
    U = _vertex_subset(g, U)
    SD = dirichlet(special_laplacian(g, mode), U)
    DD = dirichlet(laplacian(g, mode), U)
    ls, ld = _lam(SD), _clam(DD)
    p = len(U)
    digest = input_digest(T.DIRICHLET_REALPART, graph=g, U=sorted(U), mode=mode)
    b = CertificateBuilder(T.DIRICHLET_REALPART, tol, matrix_scale(special_laplacian(g, mode).entries), digest, mode)
    b.le("lambda_1(S^D_U) <= 2Re(lambda_1(Delta^D_U))", ls[1], 2 * ld[1].real)
    b.le(f"2Re(lambda_{p}(Delta^D_U)) <= lambda_{p}(S^D_U)", 2 * ld[p].real, ls[p])
    for k in range(1, p + 1):
        b.record(f"k={k}: 2Re(lambda_k(Delta^D_U)) <= lambda_k(S^D_U)", 2 * ld[k].real, ls[k])
    b.flag("p", p)
    return b.seal()


def dirichlet_interlace(g, H, *, ks=None, mode: str = "both", tol=None) -> Certificate:
    """``lambda_k(S^D_H) <= lambda_{k+n-r}(S_G)``, by default for both raw and normalized S."""
    require_graph(g)
    modes = MODES if mode == "both" else (_mode(mode),)
    Hg = _subgraph(g, H)
    n, r = g.n, Hg.n
    kk = _indices(ks, 1, r)
    scale = 0.0
    rows = []
    for md in modes:
        SG = special_laplacian(g, md)
        scale = max(scale, matrix_scale(SG.entries))
        lg, lh = _lam(SG), _lam(dirichlet(SG, Hg.order))
        for k in kk:
            rows.append((f"{md} k={k}: lambda_{k}(S^D_H) <= lambda_{k + n - r}(S_G)", lh[k], lg[k + n - r]))
    digest = input_digest(T.DIRICHLET_INTERLACE, graph=g, H=sorted(Hg.order), ks=ks, mode=mode)
    b = CertificateBuilder(T.DIRICHLET_INTERLACE, tol, scale, digest, "+".join(modes))
    for row in rows:
        b.le(*row)
    b.flag("n", n)
    b.flag("r", r)
    return b.seal()


def dirichlet_max_combine(g, H, *, ks=None, mode: str = "raw", tol=None) -> Certificate:
    """``lambda_{k+n-r}(S_G) >= max(lambda_k(S_H), lambda_k(S^D_H))`` and
    ``lambda_n(S_G) >= max(2Re lambda_r(Delta_H), 2Re lambda_r(Delta^D_H))``.

    ``S_H = Delta_H + Delta_H^*`` with the m-adjoint; when H is not balanced
    this is flagged ``adjoint-by-definition``.
    """
    require_graph(g)
    _mode(mode)
    Hg = _subgraph(g, H)
    n, r = g.n, Hg.n
    mu = graph_measure(g, mode)
    muH = mu.restrict(Hg.order)
    SG = special_laplacian(g, mode, measure=mu)
    SH = adjoint_sum(Hg, mode, measure=muH)
    lg = _lam(SG)
    lh = _lam(SH)
    lhd = _lam(dirichlet(SG, Hg.order))
    lh_sym = _lam(_S(Hg, mode, muH))
    dH = _clam(laplacian(Hg, mode, measure=muH))
    dHD = _clam(dirichlet(laplacian(g, mode, measure=mu), Hg.order))
    digest = input_digest(T.DIRICHLET_MAX_COMBINE, graph=g, H=sorted(Hg.order), ks=ks, mode=mode)
    b = CertificateBuilder(T.DIRICHLET_MAX_COMBINE, tol, matrix_scale(SG.entries), digest, mode)
    for k in _indices(ks, 1, r):
        b.le(f"k={k}: lambda_{k}(S_H) <= lambda_{k + n - r}(S_G)", lh[k], lg[k + n - r])
        b.le(f"k={k}: lambda_{k}(S^D_H) <= lambda_{k + n - r}(S_G)", lhd[k], lg[k + n - r])
        b.record(f"k={k}: symmetrized lambda_{k}(S_H) <= lambda_{k + n - r}(S_G)", lh_sym[k], lg[k + n - r])
    b.le(f"2Re(lambda_{r}(Delta_H)) <= lambda_{n}(S_G)", 2 * dH[r].real, lg[n])
    b.le(f"2Re(lambda_{r}(Delta^D_H)) <= lambda_{n}(S_G)", 2 * dHD[r].real, lg[n])
    b.flag("H_balanced", is_balanced(Hg))
    b.flag("S_H_construction", SH.construction)
    b.flag("n", n)
    b.flag("r", r)
    return b.seal()


def cycle_subgraph_corollary(g, H, *, tol=None) -> Certificate:
    """``Re lambda_n(Delta_{C_n}) >= max(Re lambda_r(Delta_H), Re lambda_r(Delta^D_H))``.

    ``lambda_n`` and ``lambda_r`` are the eigenvalues of largest real part.
    """
    _cycle_rate(g)
    require_graph(g)
    Hg = _subgraph(g, H)
    n, r = g.n, Hg.n
    D = laplacian(g)
    lg = _clam(D)
    dH = _clam(laplacian(Hg, measure=D.measure.restrict(Hg.order)))
    dHD = _clam(dirichlet(D, Hg.order))
    digest = input_digest(T.CYCLE_SUBGRAPH_COROLLARY, graph=g, H=sorted(Hg.order))
    b = CertificateBuilder(T.CYCLE_SUBGRAPH_COROLLARY, tol, matrix_scale(_S(g).entries), digest)
    b.le(f"Re lambda_{r}(Delta_H) <= Re lambda_{n}(Delta_G)", dH[r].real, lg[n].real)
    b.le(f"Re lambda_{r}(Delta^D_H) <= Re lambda_{n}(Delta_G)", dHD[r].real, lg[n].real)
    b.flag("n", n)
    b.flag("r", r)
    return b.seal()


def _partition_interiors(g, p: Partition):
    rep = validate_partition(g, p)
    if not rep.ok:
        msgs = [f"{k}: {v[0]}" for k, v in rep.problems.items()]
        raise HypothesisError("partition hypotheses violated: " + "; ".join(msgs))
    iA = [v for v in g.order if v in rep.interior_A]
    iB = [v for v in g.order if v in rep.interior_B]
    hi = min(len(iA), len(iB))
    if hi == 0:
        raise IndexRangeError("empty (k, l) range: an interior is empty, min(#int A, #int B) = 0")
    return iA, iB, hi


def partition_bound(g, partition: Partition, *, ks=None, ls=None, mode: str = "raw", tol=None) -> Certificate:
    """``lambda_{k+l}(S_G) <= max(lambda_k(S^D_intA), lambda_l(S^D_intB))``, 1 <= k, l <= min(#intA, #intB)."""
    require_graph(g)
    _mode(mode)
    iA, iB, hi = _partition_interiors(g, partition)
    SG = special_laplacian(g, mode)
    lg, la, lb = _lam(SG), _lam(dirichlet(SG, iA)), _lam(dirichlet(SG, iB))
    digest = input_digest(T.PARTITION_BOUND, graph=g, partition=partition.to_dict(), ks=ks, ls=ls, mode=mode)
    b = CertificateBuilder(T.PARTITION_BOUND, tol, matrix_scale(SG.entries), digest, mode)
    for k in _indices(ks, 1, hi):
        for l in _indices(ls, 1, hi, "l"):
            b.le(
                f"k={k} l={l}: lambda_{k + l}(S_G) <= max(lambda_{k}(S^D_intA), lambda_{l}(S^D_intB))",
                lg[k + l],
                max(la[k], lb[l]),
            )
    b.flag("int_A", len(iA))
    b.flag("int_B", len(iB))
    return b.seal()


def partition_realpart(g, partition: Partition, *, tol=None) -> Certificate:
    """``lambda_2(S_G) <= max(2Re lambda_1(Delta^D_intA), 2Re lambda_1(Delta^D_intB))``; on a cycle
    also ``Re lambda_2(Delta_G) <= max(Re lambda_1(Delta^D_intA), Re lambda_1(Delta^D_intB))``."""
    require_graph(g)
    iA, iB, _ = _partition_interiors(g, partition)
    SG = special_laplacian(g)
    D = laplacian(g)
    lg = _lam(SG)
    da, db = _clam(dirichlet(D, iA)), _clam(dirichlet(D, iB))
    rhs = max(da[1].real, db[1].real)
    digest = input_digest(T.PARTITION_REALPART, graph=g, partition=partition.to_dict())
    b = CertificateBuilder(T.PARTITION_REALPART, tol, matrix_scale(SG.entries), digest)
    b.le("lambda_2(S_G) <= max(2Re lambda_1(Delta^D_intA), 2Re lambda_1(Delta^D_intB))", lg[2], 2 * rhs)
    try:
        _cycle_rate(g)
        is_cycle = True
    except HypothesisError:
        is_cycle = False
    if is_cycle:
        b.le("cycle: Re lambda_2(Delta_G) <= max(Re lambda_1(Delta^D_intA), Re lambda_1(Delta^D_intB))",
             _clam(D)[2].real, rhs)
    b.flag("cycle_version", is_cycle)
    return b.seal()


_DISPATCH = {
    T.GREEN_IDENTITY: green_identity,
    T.POSITIVITY_S: positivity_s,
    T.SPECTRUM_BASIC: spectrum_basic,
    T.REALPART_LEMMA: realpart_lemma,
    T.CYCLE_SPECTRUM: cycle_spectrum,
    T.CYCLE_COROLLARY: cycle_corollary,
    T.SUBGRAPH_INTERLACE: subgraph_interlace,
    T.FLOWER_MONOTONE: flower_monotone,
    T.TREE_STAR_BOUND: tree_star_bound,
    T.SINGLE_EDGE_ATTACH: single_edge_attach,
    T.EDGE_WEYL: edge_weyl,
    T.EDGE_SANDWICH: edge_sandwich,
    T.EDGE_MONOTONE: edge_monotone,
    T.DIRICHLET_REALPART: dirichlet_realpart,
    T.DIRICHLET_INTERLACE: dirichlet_interlace,
    T.DIRICHLET_MAX_COMBINE: dirichlet_max_combine,
    T.CYCLE_SUBGRAPH_COROLLARY: cycle_subgraph_corollary,
    T.PARTITION_BOUND: partition_bound,
    T.PARTITION_REALPART: partition_realpart,
}


def certify(theorem, *args, **kwargs) -> Certificate:
    """Run the certificate for ``theorem`` (a ``TheoremId`` or its name)."""
    return _DISPATCH[TheoremId.parse(theorem)](*args, **kwargs)
