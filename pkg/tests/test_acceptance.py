"""Acceptance criteria 1-13, each at its stated tolerance and budget.

Every test records one PASS/FAIL line; the lines are printed in the pytest
terminal summary (see conftest.py) and when this file is run directly.
"""

import time
from contextlib import contextmanager

import numpy as np
import pytest

from digraph_spectra import (
    DirectedWeightedGraph,
    cycle,
    laplacian,
    random_balanced,
    special_laplacian,
    symmetric_star,
    validate,
)
from digraph_spectra.eigen import (
    complex_distance,
    cycle_delta_spectrum_closed_form,
    eig_general,
    eig_m_symmetric,
    real_distance,
    zero_cluster_size,
)
from digraph_spectra.theorems import TheoremId, batch_certify
from digraph_spectra.theorems.certificate import IDENTITY_TOL, INEQUALITY_TOL, POSITIVITY_TOL

T = TheoremId
SEED = 20240611
RESULTS: dict[int, str] = {}


@contextmanager
def criterion(number: int, title: str):
    start = time.perf_counter()
    notes: list[str] = []
    try:
        yield notes
    except BaseException as exc:
        RESULTS[number] = f"criterion {number:>2} FAIL  {title}: {type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        raise
    took = time.perf_counter() - start
    extra = ("; " + "; ".join(notes)) if notes else ""
    RESULTS[number] = f"criterion {number:>2} PASS  {title} ({took:.2f} s{extra})"


def batch_ok(theorem, trials, notes, **kw):
    s = batch_certify(theorem, trials, seed=SEED, **kw)
    assert s.trials == trials
    assert s.failed == 0, f"{theorem.value}: {s.failed} failures, first: {s.failures[0].to_json()}"
    notes.append(f"{theorem.value} {trials} trials, {s.checks} checks, min margin {s.min_margin:.2e}")
    return s


def test_criterion_01_c3_exact():
    with criterion(1, "C3 exact spectra") as notes:
        t0 = time.perf_counter()
        d = eig_general(laplacian(cycle(3)))
        s = eig_m_symmetric(special_laplacian(cycle(3)))
        dist_d = complex_distance(d, [0, 1.5 + 0.8660254038j, 1.5 - 0.8660254038j])
        dist_s = real_distance(s, [0, 3, 3])
        took = time.perf_counter() - t0
        assert dist_d <= 1e-9 and dist_s <= 1e-9
        assert took < 1.0
        notes.append(f"dist {max(dist_d, dist_s):.1e}")


def test_criterion_02_cycle_closed_form():
    with criterion(2, "cycle closed form n=2..50") as notes:
        t0 = time.perf_counter()
        worst = 0.0
        for n in range(2, 51):
            spec = eig_general(laplacian(cycle(n)))
            cf = cycle_delta_spectrum_closed_form(n)
            worst = max(worst, complex_distance(spec, cf))
            twos = int(np.sum(np.abs(spec.eigenvalues - 2) <= 1e-8))
            assert twos == (1 if n % 2 == 0 else 0), f"n={n}: {twos} eigenvalues at 2"
        took = time.perf_counter() - t0
        assert worst <= 1e-8
        assert took < 10.0
        notes.append(f"max dist {worst:.1e}")


def test_criterion_03_cycle_corollary():
    with criterion(3, "sigma(S_Cn) = 2 Re sigma(Delta_Cn), n <= 50") as notes:
        worst = 0.0
        for n in range(2, 51):
            g = cycle(n)
            ls = eig_m_symmetric(special_laplacian(g), vectors=False)
            ld = eig_general(laplacian(g))
            worst = max(worst, real_distance(ls, 2 * ld.eigenvalues.real))
        assert worst <= 1e-8
        notes.append(f"max dist {worst:.1e}")


def test_criterion_04_basic_spectrum():
    with criterion(4, "normalized spectrum bounds, 0 simple, 500 graphs") as notes:
        t0 = time.perf_counter()
        rng = np.random.default_rng(SEED)
        for t in range(500):
            n = int(rng.integers(2, 13))
            g = random_balanced(n, int(rng.integers(0, n + 1)), rng, random_measure=bool(rng.integers(2)))
            st = eig_m_symmetric(special_laplacian(g, "normalized"), vectors=False)
            dt = eig_general(laplacian(g, "normalized"), residual=False)
            assert st.eigenvalues.min() >= -1e-8 and st.eigenvalues.max() <= 4 + 1e-8, t
            assert dt.eigenvalues.real.min() >= -1e-8 and dt.eigenvalues.real.max() <= 2 + 1e-8, t
            if validate(g).connected:
                assert zero_cluster_size(st) == 1, t
        batch_ok(T.SPECTRUM_BASIC, 500, notes, n_max=12)
        assert time.perf_counter() - t0 < 60.0


def test_criterion_05_green_positivity():
    with criterion(5, "Green identity and positivity, 1000 triples") as notes:
        assert IDENTITY_TOL == 1e-10 and POSITIVITY_TOL == 1e-12
        batch_ok(T.GREEN_IDENTITY, 1000, notes)
        batch_ok(T.POSITIVITY_S, 1000, notes)


def test_criterion_06_realpart():
    with criterion(6, "2Re lambda_n(Delta) <= lambda_n(S), 500 graphs") as notes:
        assert INEQUALITY_TOL == 1e-8
        s = batch_ok(T.REALPART_LEMMA, 500, notes)
        assert s.checks == 500


def test_criterion_07_subgraph_interlace():
    with criterion(7, "subgraph interlacing, 1000 pairs") as notes:
        batch_ok(T.SUBGRAPH_INTERLACE, 1000, notes)


def test_criterion_08_flower():
    with criterion(8, "flower monotonicity, 200 flowers") as notes:
        batch_ok(T.FLOWER_MONOTONE, 200, notes)


def test_criterion_09_tree_star():
    with criterion(9, "stars q=2..10 exact, tree bound on 200 trees") as notes:
        worst = 0.0
        for q in range(2, 11):
            s = eig_m_symmetric(special_laplacian(symmetric_star(q)), vectors=False)
            expect = [0.0] + [2.0] * (q - 1) + [2.0 * (q + 1)]
            worst = max(worst, real_distance(s, expect))
        assert worst <= 1e-9
        notes.append(f"star dist {worst:.1e}")
        batch_ok(T.TREE_STAR_BOUND, 200, notes, n_max=12)


def test_criterion_10_edge_partition():
    with criterion(10, "edge Weyl, sandwich (500) and monotone (200)") as notes:
        batch_ok(T.EDGE_WEYL, 500, notes)
        batch_ok(T.EDGE_SANDWICH, 500, notes)
        batch_ok(T.EDGE_MONOTONE, 200, notes)


def test_criterion_11_dirichlet():
    with criterion(11, "Dirichlet lemma and interlacing, 500 each") as notes:
        batch_ok(T.DIRICHLET_REALPART, 500, notes)
        batch_ok(T.DIRICHLET_INTERLACE, 500, notes)


def test_criterion_12_partition():
    with criterion(12, "partition bound and lambda_2 corollary, 200 each") as notes:
        batch_ok(T.PARTITION_BOUND, 200, notes)
        batch_ok(T.PARTITION_REALPART, 200, notes)


def test_criterion_13_solver_consistency():
    with criterion(13, "solver agreement, residuals, permutation invariance") as notes:
        rng = np.random.default_rng(SEED + 13)
        agree = res = perm = 0.0
        for _ in range(200):
            n = int(rng.integers(2, 13))
            g = random_balanced(n, int(rng.integers(0, n + 1)), rng, random_measure=bool(rng.integers(2)))
            for mode in ("raw", "normalized"):
                S = special_laplacian(g, mode)
                sym = eig_m_symmetric(S)
                gen = eig_general(S)
                agree = max(agree, complex_distance(gen, sym.eigenvalues))
                res = max(res, sym.residual, gen.residual, eig_general(laplacian(g, mode)).residual)
                p = [g.order[i] for i in rng.permutation(n)]
                h = DirectedWeightedGraph([(v, g.m(v)) for v in p], [(x, y, b) for (x, y), b in g.weights.items()])
                perm = max(perm, real_distance(sym, eig_m_symmetric(special_laplacian(h, mode), vectors=False)))
        assert agree <= 1e-8 and res <= 1e-9 and perm <= 1e-10
        notes.append(f"agree {agree:.1e}, residual {res:.1e}, perm {perm:.1e}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
