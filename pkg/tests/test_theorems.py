import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from digraph_spectra import DirectedWeightedGraph, cycle, random_balanced, symmetric_star
from digraph_spectra.generators import random_connected_subset
from digraph_spectra.theorems import (
    CertificateBuilder,
    HypothesisError,
    IndexRangeError,
    Partition,
    TheoremId,
    batch_certify,
    certify,
    generate_instance,
    partition_from_split,
    validate_partition,
)
from digraph_spectra.theorems import checks
from digraph_spectra.theorems.batch import GenerationError, trial_rng
from digraph_spectra.theorems.certificate import default_tolerance

from conftest import balanced_graphs

T = TheoremId


def eigs_S(g, vertices=None, measure=None, dirichlet_of=None):
    """numpy oracle: spectrum of the symmetrized-weight operator."""
    W = g.weight_matrix()
    a = W + W.T
    m = g.measure_vector() if measure is None else measure
    S = (np.diag(a.sum(1)) - a) / m[:, None]
    if dirichlet_of is not None:
        idx = [g.index(v) for v in dirichlet_of]
        S, m = S[np.ix_(idx, idx)], m[idx]
    r = np.sqrt(m)
    return np.linalg.eigvalsh(r[:, None] * S / r[None, :])


def check(cert, desc):
    return next(c for c in cert.checks if c.desc.startswith(desc))


# worked examples


def test_triangle_subgraph_interlace(triangle):
    cert = certify(T.SUBGRAPH_INTERLACE, triangle, ["a", "b"])
    assert cert.passed and len(cert.checks) == 2
    c1, c2 = cert.checks
    assert (c1.lhs, c1.rhs) == pytest.approx((0.0, 6.0), abs=1e-12)
    assert (c2.lhs, c2.rhs) == pytest.approx((4.0, 6.0), abs=1e-12)
    assert [r.desc for r in cert.records] == ["k=1: shifted lambda_1(S_H) <= lambda_3(S_G)"]


def test_cycle_spectrum_c3(c3):
    cert = certify(T.CYCLE_SPECTRUM, c3)
    assert cert.passed and cert.checks[0].lhs <= 1e-10 and cert.tolerance == 1e-10


def test_cycle_spectrum_scaled():
    g = cycle(5, [3.0] * 5, 1.5)
    cert = certify(T.CYCLE_SPECTRUM, g)
    assert cert.passed and cert.flags["rate"] == 2.0
    assert certify(T.CYCLE_COROLLARY, g).passed


def test_edge_sandwich_trivial_split():
    g = random_balanced(6, 3, 2, random_measure=True)
    cert = certify(T.EDGE_SANDWICH, g, g.edges)
    s1 = [c for c in cert.checks if c.desc.startswith("s=1")]
    assert len(s1) == 2 * g.n and all(abs(c.margin) <= 1e-12 for c in s1)
    assert cert.passed


def test_dirichlet_interlace_full_subgraph():
    g = random_balanced(5, 2, 4, random_measure=True)
    cert = certify(T.DIRICHLET_INTERLACE, g, g.order)
    assert cert.passed and cert.mode == "raw+normalized"
    assert len(cert.checks) == 2 * g.n and all(abs(c.margin) <= 1e-12 for c in cert.checks)


def test_tree_star_bound_on_stars():
    for q in range(2, 8):
        cert = certify(T.TREE_STAR_BOUND, symmetric_star(q))
        assert cert.passed and cert.flags["q"] == q // 2
        assert check(cert, "G is a star").lhs <= 1e-9


def test_green_identity_explicit(c3):
    cert = certify(T.GREEN_IDENTITY, c3, [1, 0, 0], [1, 0, 0])
    assert cert.passed and cert.checks[0].rhs == 2


def test_positivity_records_edge_energy():
    g = random_balanced(6, 2, 9, random_measure=True)
    cert = certify(T.POSITIVITY_S, g, trials=20, seed=3)
    assert cert.passed and len(cert.checks) == 21
    assert all(abs(r.lhs) <= 1e-9 for r in cert.records)


# cross-check certificate values against the oracle


@given(balanced_graphs(n_min=3, n_max=8), st.integers(0, 2**31))
def test_subgraph_interlace_matches_oracle(g, seed):
    rng = np.random.default_rng(seed)
    H = random_connected_subset(g, int(rng.integers(1, g.n + 1)), rng)
    cert = certify(T.SUBGRAPH_INTERLACE, g, H)
    Hs = [v for v in g.order if v in set(H)]
    sub = DirectedWeightedGraph([(v, g.m(v)) for v in Hs], [(x, y, w) for (x, y), w in g.weights.items() if x in Hs and y in Hs])
    lg, lh = eigs_S(g), eigs_S(sub)
    n, r = g.n, len(Hs)
    assert len(cert.checks) == r
    for k, c in enumerate(cert.checks, 1):
        assert c.lhs == pytest.approx(lh[k - 1], abs=1e-9) and c.rhs == pytest.approx(lg[n - r + k - 1], abs=1e-9)
    assert cert.passed


@given(balanced_graphs(n_max=8), st.integers(0, 2**31))
def test_dirichlet_interlace_matches_oracle(g, seed):
    rng = np.random.default_rng(seed)
    H = random_connected_subset(g, int(rng.integers(1, g.n + 1)), rng)
    cert = certify(T.DIRICHLET_INTERLACE, g, H, mode="raw")
    Hs = [v for v in g.order if v in set(H)]
    lh = eigs_S(g, dirichlet_of=Hs)
    lg = eigs_S(g)
    n, r = g.n, len(Hs)
    for k, c in enumerate(cert.checks, 1):
        assert c.lhs == pytest.approx(lh[k - 1], abs=1e-9) and c.rhs == pytest.approx(lg[k + n - r - 1], abs=1e-9)
    assert cert.passed


@given(balanced_graphs(n_max=7), st.integers(0, 2**31))
def test_edge_weyl_counts_and_pass(g, seed):
    rng = np.random.default_rng(seed)
    E1 = [e for e in g.edges if rng.random() < 0.5]
    cert = certify(T.EDGE_WEYL, g, E1)
    n = g.n
    per_pair = sum(n - k + 1 for k in range(1, n + 1)) + sum(range(1, n + 1)) * 2
    assert len(cert.checks) == 2 * per_pair
    assert cert.passed
    # the two lower-bound routes check the same inequality set
    as_stated = sorted(round(c.margin, 9) for c in cert.checks if c.desc.startswith("lower s="))
    via_neg = sorted(round(c.margin, 9) for c in cert.checks if c.desc.startswith("lower(-S)"))
    assert np.allclose(as_stated, via_neg, atol=1e-8)


@pytest.mark.parametrize("theorem", list(TheoremId))
def test_generated_instances_pass(theorem):
    for t in range(15):
        args, kw = generate_instance(theorem, trial_rng(123, t))
        cert = certify(theorem, *args, **kw)
        assert cert.passed, cert.to_json()
        assert cert.checks and all(np.isfinite(c.margin) for c in cert.checks)


@pytest.mark.parametrize("theorem", list(TheoremId))
def test_certificates_are_deterministic(theorem):
    args, kw = generate_instance(theorem, trial_rng(5, 0))
    a, b = certify(theorem, *args, **kw), certify(theorem, *args, **kw)
    assert a.to_json() == b.to_json()
    args2, kw2 = generate_instance(theorem, trial_rng(5, 0))
    assert certify(theorem, *args2, **kw2).input_digest == a.input_digest


# hypotheses and index ranges


def test_hypothesis_errors(c3):
    unbalanced = cycle(3, [1, 2, 1], allow_unbalanced=True)
    with pytest.raises(HypothesisError, match="balance"):
        certify(T.REALPART_LEMMA, unbalanced)
    path = DirectedWeightedGraph(["a", "b"], [("a", "b"), ("b", "a")])
    disconnected = DirectedWeightedGraph(["a", "b", "c"], [("a", "b"), ("b", "a")])
    with pytest.raises(HypothesisError, match="not connected"):
        certify(T.SPECTRUM_BASIC, disconnected)
    with pytest.raises(HypothesisError, match="connected subgraph"):
        certify(T.SUBGRAPH_INTERLACE, cycle(4), ["0", "2"])
    with pytest.raises(HypothesisError, match="not a vertex"):
        certify(T.SUBGRAPH_INTERLACE, c3, ["7"])
    with pytest.raises(HypothesisError, match="not an edge"):
        certify(T.EDGE_WEYL, c3, [("1", "0")])
    with pytest.raises(HypothesisError, match="symmetric"):
        certify(T.TREE_STAR_BOUND, c3)
    with pytest.raises(HypothesisError, match="tree"):
        certify(T.TREE_STAR_BOUND, DirectedWeightedGraph("abc", [(x, y) for x in "abc" for y in "abc" if x != y]))
    with pytest.raises(HypothesisError, match="simple directed cycle"):
        certify(T.CYCLE_SPECTRUM, random_balanced(5, 3, 1))
    with pytest.raises(HypothesisError, match="constant"):
        certify(T.CYCLE_COROLLARY, cycle(4, m=[1, 2, 1, 1]))
    with pytest.raises(HypothesisError, match="drops"):
        certify(T.EDGE_MONOTONE, c3, DirectedWeightedGraph(range(3), [(1, 0), (2, 1), (0, 2)]))
    assert certify(T.EDGE_MONOTONE, path, path).passed


def test_index_range_errors(triangle):
    with pytest.raises(IndexRangeError):
        certify(T.SUBGRAPH_INTERLACE, triangle, ["a", "b"], ks=[3])
    with pytest.raises(IndexRangeError):
        certify(T.EDGE_WEYL, triangle, triangle.edges[:2], ks=[0])
    with pytest.raises(IndexRangeError):
        certify(T.EDGE_WEYL, triangle, triangle.edges[:2], js=[4])
    cert = certify(T.SUBGRAPH_INTERLACE, triangle, ["a", "b"], ks=[2])
    assert len(cert.checks) == 1


def test_flower_hypothesis():
    from digraph_spectra.theorems import flower_from_parts

    g = cycle(4)
    fd = flower_from_parts(g, ["0", "1"], [(["2", "3"], "1")])
    with pytest.raises(HypothesisError, match="flower"):
        certify(T.FLOWER_MONOTONE, fd)


def test_single_edge_attach_relabels():
    g = random_balanced(4, 1, 0)
    other = random_balanced(3, 1, 1)
    cert = certify(T.SINGLE_EDGE_ATTACH, g, other, "0", "0")
    assert cert.passed and len(cert.checks) == 4
    with pytest.raises(HypothesisError):
        certify(T.SINGLE_EDGE_ATTACH, g, other, "9", "0")


def test_dirichlet_max_combine_flags():
    g = random_balanced(6, 2, 8)
    H = random_connected_subset(g, 3, np.random.default_rng(0))
    cert = certify(T.DIRICHLET_MAX_COMBINE, g, H)
    assert cert.passed
    if not cert.flags["H_balanced"]:
        assert cert.flags["S_H_construction"] == "adjoint-by-definition"


def test_cycle_subgraph_corollary():
    for n in range(2, 9):
        for r in range(1, n + 1):
            assert certify(T.CYCLE_SUBGRAPH_COROLLARY, cycle(n), list(range(r))).passed


# partitions


def test_validate_partition_cycle6():
    g = cycle(6)
    p = partition_from_split(g, [0, 1, 2])
    assert p.U_edges == {("2", "3"), ("5", "0")}
    rep = validate_partition(g, p)
    assert rep.ok and rep.interior_A == {"1"} and rep.interior_B == {"4"}
    assert p.U_vertices == {"0", "2", "3", "5"}
    cert = certify(T.PARTITION_BOUND, g, p)
    assert cert.passed and len(cert.checks) == 1
    assert certify(T.PARTITION_REALPART, g, p).flags["cycle_version"]


def test_validate_partition_failures():
    g = cycle(6)
    V = g.order
    rep = validate_partition(g, Partition.of(V, [], [], g.edges, [], []))
    assert not rep.condition1 and any("V_B is empty" in m for m in rep.problems["condition1"])
    good = partition_from_split(g, [0, 1, 2])
    shared = Partition.of(["0", "1", "2", "3"], good.B_vertices, good.U_vertices, good.A_edges, good.B_edges, good.U_edges)
    rep = validate_partition(g, shared)
    assert not rep.condition1 and any("share vertex '3'" in m for m in rep.problems["condition1"])
    bad_u = Partition.of(good.A_vertices, good.B_vertices, good.U_vertices, good.A_edges, good.B_edges, [("2", "3")])
    rep = validate_partition(g, bad_u)
    assert not rep.condition2 and not rep.condition3
    with pytest.raises(HypothesisError, match="condition"):
        certify(T.PARTITION_BOUND, g, bad_u)


def test_partition_empty_interior():
    g = cycle(4)
    p = partition_from_split(g, [0, 1])
    assert validate_partition(g, p).ok
    with pytest.raises(IndexRangeError):
        certify(T.PARTITION_BOUND, g, p)


def test_partition_roundtrip():
    p = partition_from_split(cycle(6), [0, 1, 2])
    assert Partition.from_dict(json.loads(json.dumps(p.to_dict()))) == p


# certificate mechanics


def test_builder_pass_rule():
    b = CertificateBuilder(T.EDGE_WEYL, 1e-8, 10.0, "x")
    b.le("ok", 1.0, 1.0 - 5e-8)
    assert b.seal().passed
    b.le("bad", 1.0, 1.0 - 2e-7)
    cert = b.seal()
    assert not cert.passed and [c.desc for c in cert.failures()] == ["bad"]
    b = CertificateBuilder(T.EDGE_WEYL, 1e-8, 0.1, "x")
    assert b.scale == 1.0
    with pytest.raises(ValueError):
        CertificateBuilder(T.EDGE_WEYL, -1e-8, 1.0, "x")


def test_default_tolerances(monkeypatch):
    assert default_tolerance(T.GREEN_IDENTITY) == 1e-10
    assert default_tolerance(T.POSITIVITY_S) == 1e-12
    assert default_tolerance(T.EDGE_WEYL) == 1e-8
    monkeypatch.setenv("SPECTRA_TOL", "1e-6")
    assert default_tolerance(T.EDGE_WEYL) == 1e-6


def test_certificate_json_shape(c3):
    d = json.loads(certify(T.REALPART_LEMMA, c3).to_json())
    assert {"theorem", "pass", "tolerance", "checks", "input_digest"} <= set(d)
    assert set(d["checks"][0]) == {"desc", "lhs", "rhs", "margin"}
    assert TheoremId.parse("edge_weyl") is T.EDGE_WEYL
    with pytest.raises(ValueError):
        TheoremId.parse("NOPE")


# batch


def test_batch_single_trial_equals_certify():
    s = batch_certify(T.EDGE_WEYL, 1, seed=4)
    args, kw = generate_instance(T.EDGE_WEYL, trial_rng(4, 0))
    cert = certify(T.EDGE_WEYL, *args, **kw)
    assert s.trials == 1 and s.passed == 1 and s.checks == len(cert.checks)
    assert s.min_margin == cert.min_margin


def test_batch_parallel_matches_serial():
    a = batch_certify(T.SUBGRAPH_INTERLACE, 12, seed=2)
    b = batch_certify(T.SUBGRAPH_INTERLACE, 12, seed=2, workers=2)
    assert a.to_dict() == b.to_dict() and a.ok


def test_batch_families_and_errors():
    assert batch_certify(T.SUBGRAPH_INTERLACE, 5, family="random_tree").ok
    assert batch_certify(T.PARTITION_REALPART, 5, family="cycle").ok
    with pytest.raises(ValueError):
        batch_certify(T.EDGE_WEYL, 0)
    with pytest.raises(ValueError):
        batch_certify(T.EDGE_WEYL, 2, family="nope")
    assert issubclass(GenerationError, RuntimeError)


def planted_failure(g, *, mode="raw", tol=None):
    b = CertificateBuilder(T.REALPART_LEMMA, tol, 1.0, "0" * 64)
    b.le("planted: 1 <= 0", 1.0, 0.0)
    return b.seal()


def test_batch_reports_failures(monkeypatch):
    monkeypatch.setitem(checks._DISPATCH, T.REALPART_LEMMA, planted_failure)
    s = batch_certify(T.REALPART_LEMMA, 3, seed=0)
    assert s.failed == 3 and not s.ok and len(s.failures) == 3
    assert s.to_dict()["failures"][0]["pass"] is False
