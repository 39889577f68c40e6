import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from digraph_spectra import (
    DirectedWeightedGraph,
    OperatorError,
    adjoint_laplacian,
    cycle,
    dirichlet,
    green_form,
    laplacian,
    m_adjoint,
    partial_graph,
    random_balanced,
    special_laplacian,
)
from digraph_spectra.operators import OperatorMatrix, adjoint_sum, graph_measure, m_inner, matrix_scale

from conftest import balanced_graphs, random_complex

C3_DELTA = [[1, -1, 0], [0, 1, -1], [-1, 0, 1]]
C3_STAR = [[1, 0, -1], [-1, 1, 0], [0, -1, 1]]
K3 = [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]


def naive_delta(g, m):
    """Row-by-row evaluation of the defining sum on indicator functions."""
    n = g.n
    out = np.zeros((n, n))
    for j in range(n):
        f = np.zeros(n)
        f[j] = 1.0
        for i, x in enumerate(g.order):
            out[i, j] = sum(b * (f[i] - f[g.index(y)]) for y, b in g.out_neighbors(x).items()) / m[i]
    return out


def test_c3_matrices(c3):
    assert np.array_equal(laplacian(c3).entries, C3_DELTA)
    assert np.array_equal(adjoint_laplacian(c3).entries, C3_STAR)
    assert np.array_equal(special_laplacian(c3).entries, K3)
    assert np.array_equal(m_adjoint(laplacian(c3)).entries, C3_STAR)


def test_triangle_matrices(triangle):
    assert np.array_equal(laplacian(triangle).entries, K3)
    assert np.array_equal(adjoint_laplacian(triangle).entries, K3)
    assert np.array_equal(special_laplacian(triangle).entries, 2 * np.array(K3))


def test_edgeless_is_zero():
    g = partial_graph(cycle(4), [])
    assert not laplacian(g).entries.any()
    assert not special_laplacian(g).entries.any()


@given(balanced_graphs())
def test_delta_matches_defining_sum(g):
    assert np.allclose(laplacian(g).entries, naive_delta(g, g.measure_vector()), rtol=0, atol=1e-14)


@given(balanced_graphs())
def test_adjoint_consistency(g):
    D, Ds = laplacian(g), adjoint_laplacian(g)
    scale = max(1.0, Ds.scale())
    assert np.max(np.abs(Ds.entries - m_adjoint(D).entries)) <= 1e-12 * scale
    S = special_laplacian(g)
    assert np.max(np.abs(S.entries - (D.entries + Ds.entries))) <= 1e-12 * scale


@pytest.mark.parametrize("seed", range(5))
def test_adjoint_random_balanced(seed):
    g = random_balanced(6, 3, seed, random_measure=True)
    assert np.max(np.abs(adjoint_laplacian(g).entries - m_adjoint(laplacian(g)).entries)) <= 1e-12


def test_symmetric_weights_adjoint_equals_laplacian():
    g = DirectedWeightedGraph([("a", 2.0), "b", ("c", 0.5)], [("a", "b", 2), ("b", "a", 2), ("b", "c", 0.7), ("c", "b", 0.7)])
    assert np.allclose(adjoint_laplacian(g).entries, laplacian(g).entries, atol=1e-15)


@given(balanced_graphs())
def test_m_adjoint_involution_and_identity(g):
    rng = np.random.default_rng(len(g.edges))
    A = laplacian(g)
    assert np.allclose(m_adjoint(m_adjoint(A)).entries, A.entries, rtol=0, atol=1e-14)
    Aa = m_adjoint(A)
    for _ in range(100):
        f, h = random_complex(rng, g.n), random_complex(rng, g.n)
        lhs = m_inner(A.entries @ f, h, A.m)
        rhs = m_inner(f, Aa.entries @ h, A.m)
        assert abs(lhs - rhs) <= 1e-11 * max(1.0, abs(lhs), A.scale() * np.sum(A.m * abs(f) * abs(h)))


def test_m_adjoint_symmetric_unit_measure(triangle):
    S = special_laplacian(triangle)
    assert np.array_equal(m_adjoint(S).entries, S.entries)


def test_unbalanced_refused():
    g = cycle(3, [1, 2, 1], allow_unbalanced=True)
    with pytest.raises(OperatorError, match="'1'|'0'"):
        adjoint_laplacian(g)
    with pytest.raises(OperatorError, match="balance"):
        special_laplacian(g)
    A = adjoint_laplacian(g, allow_unbalanced=True)
    assert A.construction == "m-adjoint"
    S = special_laplacian(g, require_balanced=False)
    assert S.construction == "symmetrized-weights"
    assert adjoint_sum(g).construction == "adjoint-by-definition"


def test_normalized_mode():
    g = random_balanced(5, 2, 7, random_measure=True)
    mu = graph_measure(g, "normalized")
    assert mu.kind == "normalized_beta_plus" and np.allclose(mu.values, g.beta_plus())
    D = laplacian(g, "normalized")
    assert np.allclose(np.diag(D.entries), 1.0)
    with pytest.raises(OperatorError, match="'0'"):
        laplacian(partial_graph(cycle(3), [(1, 2), (2, 0)]), "normalized")
    with pytest.raises(OperatorError):
        laplacian(g, "other")


def test_explicit_measure_overrides():
    g = cycle(3)
    D = laplacian(g, measure={"0": 2.0, "1": 1.0, "2": 4.0})
    assert np.allclose(D.entries[0], [0.5, -0.5, 0]) and np.allclose(D.entries[2], [-0.25, 0, 0.25])
    with pytest.raises(OperatorError, match="'2'"):
        laplacian(g, measure={"0": 1.0, "1": 1.0})


@given(balanced_graphs())
def test_row_sums_and_symmetry(g):
    for A in (laplacian(g), special_laplacian(g), laplacian(g, "normalized")):
        assert np.max(np.abs(A.entries.sum(axis=1))) <= 1e-12 * max(1.0, A.scale())
    S = special_laplacian(g)
    MS = S.m[:, None] * S.entries
    assert np.max(np.abs(MS - MS.T)) <= 1e-12 * max(1.0, np.abs(MS).max())


# Dirichlet


def test_dirichlet_examples(c3, triangle):
    assert np.array_equal(dirichlet(special_laplacian(c3), ["0"]).entries, [[2]])
    S = special_laplacian(triangle)
    assert np.array_equal(dirichlet(S, ["a", "b"]).entries, [[4, -2], [-2, 4]])
    full = dirichlet(S, triangle.order)
    assert np.array_equal(full.entries, S.entries)
    assert dirichlet(S, ["b", "a"]).order == ("a", "b")
    with pytest.raises(OperatorError):
        dirichlet(S, [])
    with pytest.raises(OperatorError, match="z"):
        dirichlet(S, ["a", "z"])


@given(balanced_graphs(), st.data())
def test_dirichlet_structure(g, data):
    U = data.draw(st.lists(st.sampled_from(g.order), min_size=1, unique=True))
    D = dirichlet(special_laplacian(g), U)
    E = D.entries
    off = E - np.diag(np.diag(E))
    assert np.all(off <= 0)
    assert np.all(np.diag(E) + 1e-12 >= -off.sum(axis=1))
    assert np.array_equal(D.m, [g.m(v) for v in D.order])


# Green form


def test_green_examples(c3):
    assert green_form(c3, [1, 1, 1], [1, 1, 1]) == 0
    assert green_form(c3, [1, 0, 0], [1, 0, 0]) == 2
    with pytest.raises(OperatorError):
        green_form(c3, [1, 0], [1, 0, 0])
    with pytest.raises(OperatorError, match="missing"):
        green_form(c3, {"0": 1, "1": 2}, [1, 0, 0])


def test_green_identity_fuzz():
    rng = np.random.default_rng(5)
    for k in range(1000):
        g = random_balanced(int(rng.integers(2, 9)), int(rng.integers(0, 5)), k, random_measure=True)
        f, h = random_complex(rng, g.n), random_complex(rng, g.n)
        D, Ds = laplacian(g), adjoint_laplacian(g)
        lhs = m_inner(D.entries @ f, h, D.m) + m_inner(Ds.entries @ f, h, D.m)
        rhs = green_form(g, f, h)
        scale = special_laplacian(g).scale() * np.sum(D.m * abs(f) * abs(h))
        assert abs(lhs - rhs) <= 1e-11 * max(1.0, scale)
        q = m_inner(special_laplacian(g).entries @ f, f, D.m).real
        assert q >= -1e-12 * np.sum(D.m * abs(f) ** 2) * special_laplacian(g).scale()


def test_operator_matrix_json_and_ops(c3):
    D = laplacian(c3)
    d = D.to_dict()
    assert d["order"] == ["0", "1", "2"] and d["entries"] == C3_DELTA and d["measure"] == [1.0] * 3
    assert np.array_equal((D + m_adjoint(D)).entries, K3)
    assert np.array_equal((-D).entries, -np.array(C3_DELTA))
    assert matrix_scale(D.entries) == 2.0
    with pytest.raises(ValueError):
        D.entries[0, 0] = 3
    with pytest.raises(OperatorError):
        OperatorMatrix(np.zeros((2, 2)), ("0", "1", "2"), D.measure, "delta")
