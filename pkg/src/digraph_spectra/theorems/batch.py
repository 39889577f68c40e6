"""Seeded batch certification over random inputs that satisfy each theorem's hypotheses."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..generators import (
    cycle,
    random_balanced,
    random_connected_subset,
    random_cycle_weights,
    random_flower,
    random_tree,
    relabel,
)
from ..graph import DirectedWeightedGraph
from . import checks
from .certificate import Certificate, TheoremId
from .partition import partition_from_split, validate_partition

__all__ = ["BatchSummary", "GenerationError", "generate_instance", "batch_certify", "FAMILIES"]

T = TheoremId
FAMILIES = ("random_balanced", "random_tree", "cycle", "flower")
MAX_RETRIES = 50


class GenerationError(RuntimeError):
    pass


@dataclass
class BatchSummary:
    theorem: TheoremId
    trials: int
    seed: int
    passed: int = 0
    failed: int = 0
    checks: int = 0
    min_margin: float = float("inf")
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "trials": self.trials,
            "seed": self.seed,
            "passed": self.passed,
            "failed": self.failed,
            "checks": self.checks,
            "min_margin": None if self.min_margin == float("inf") else float(self.min_margin),
            "failures": [c.to_dict() for c in self.failures],
        }


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(trial)]))


def _balanced(rng, n_max, n_min=2, dense=True):
    n = int(rng.integers(n_min, max(n_min, n_max) + 1))
    extra = int(rng.integers(0, n + 1)) if dense else int(rng.integers(0, 3))
    return random_balanced(n, extra, rng, random_measure=bool(rng.integers(2)))


def _subset_size(rng, n):
    return int(rng.integers(1, n + 1))


def _add_edges(g: DirectedWeightedGraph, rng) -> DirectedWeightedGraph:
    """``g`` plus 1..3 random balanced cycles (new edges, or extra weight on old ones)."""
    w = dict(g.weights)
    for _ in range(int(rng.integers(1, 4))):
        for (x, y), b in random_cycle_weights(g.n, rng).items():
            e = (g.order[x], g.order[y])
            w[e] = w.get(e, 0.0) + b
    return DirectedWeightedGraph(g.measure, [(x, y, b) for (x, y), b in w.items()])


def _partition_instance(rng, n_max, family):
    for _ in range(MAX_RETRIES):
        if family == "cycle":
            g = cycle(int(rng.integers(6, max(6, n_max) + 1)))
        else:
            g = _balanced(rng, n_max, n_min=4, dense=False)
        size = int(rng.integers(2, g.n - 1))
        A = random_connected_subset(g, size, rng)
        p = partition_from_split(g, A)
        rep = validate_partition(g, p)
        if rep.ok and rep.interior_A and rep.interior_B:
            return (g, p), {}
    raise GenerationError(f"no partition with non-empty interiors after {MAX_RETRIES} tries")


def generate_instance(theorem, rng: np.random.Generator, *, n_max: int = 10, family: str | None = None):
    """``(args, kwargs)`` for ``checks.certify(theorem, *args, **kwargs)``, valid by construction."""
    th = TheoremId.parse(theorem)
    if family is not None and family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    if th in (T.GREEN_IDENTITY, T.POSITIVITY_S):
        return (_balanced(rng, n_max),), {"trials": 1, "seed": int(rng.integers(2**31))}
    if th in (T.SPECTRUM_BASIC, T.REALPART_LEMMA):
        if family == "cycle":
            return (cycle(int(rng.integers(2, n_max + 1))),), {}
        if family == "random_tree":
            return (random_tree(int(rng.integers(2, n_max + 1)), rng),), {}
        return (_balanced(rng, n_max),), {}
    if th in (T.CYCLE_SPECTRUM, T.CYCLE_COROLLARY):
        n = int(rng.integers(2, n_max + 1))
        c = float(rng.uniform(0.5, 2.0))
        return (cycle(n, [c] * n, float(rng.uniform(0.5, 2.0))),), {}
    if th in (T.SUBGRAPH_INTERLACE, T.DIRICHLET_INTERLACE, T.DIRICHLET_MAX_COMBINE):
        g = random_tree(int(rng.integers(2, n_max + 1)), rng) if family == "random_tree" else _balanced(rng, n_max)
        return (g, random_connected_subset(g, _subset_size(rng, g.n), rng)), {}
    if th is T.FLOWER_MONOTONE:
        return (random_flower(rng),), {}
    if th is T.TREE_STAR_BOUND:
        return (random_tree(int(rng.integers(2, max(2, n_max) + 1)), rng),), {}
    if th is T.SINGLE_EDGE_ATTACH:
        g = _balanced(rng, n_max)
        other = relabel(_balanced(rng, max(2, n_max // 2)), prefix="o")
        attach = g.order[int(rng.integers(g.n))]
        oattach = other.order[int(rng.integers(other.n))]
        return (g, other, attach, oattach), {"weight": float(rng.uniform(0.5, 2.0))}
    if th in (T.EDGE_WEYL, T.EDGE_SANDWICH):
        g = _balanced(rng, n_max)
        mask = rng.random(len(g.edges)) < 0.5
        return (g, [e for e, keep in zip(g.edges, mask) if keep]), {}
    if th is T.EDGE_MONOTONE:
        g = _balanced(rng, n_max)
        return (g, _add_edges(g, rng)), {}
    if th is T.DIRICHLET_REALPART:
        g = _balanced(rng, n_max)
        size = _subset_size(rng, g.n)
        U = [g.order[i] for i in rng.choice(g.n, size=size, replace=False)]
        return (g, U), {}
    if th is T.CYCLE_SUBGRAPH_COROLLARY:
        n = int(rng.integers(2, n_max + 1))
        g = cycle(n)
        r, s = int(rng.integers(1, n + 1)), int(rng.integers(n))
        return (g, [(s + i) % n for i in range(r)]), {}
    if th is T.PARTITION_BOUND:
        return _partition_instance(rng, max(n_max, 6), family)
    if th is T.PARTITION_REALPART:
        fam = family or ("cycle" if rng.integers(2) else "random_balanced")
        return _partition_instance(rng, max(n_max, 6), fam)
    raise ValueError(f"no generator for {th.value}")


def _run_trial(args) -> Certificate:
    theorem, seed, trial, n_max, family, tol = args
    rng = trial_rng(seed, trial)
    pos, kw = generate_instance(theorem, rng, n_max=n_max, family=family)
    return checks.certify(theorem, *pos, tol=tol, **kw)


def batch_certify(
    theorem,
    trials: int,
    seed: int = 0,
    *,
    n_max: int = 10,
    family: str | None = None,
    tol: float | None = None,
    workers: int = 1,
) -> BatchSummary:
    """Certify ``trials`` generated instances; trial ``t`` uses the seed ``(seed, t)``."""
    th = TheoremId.parse(theorem)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    jobs = [(th, seed, t, n_max, family, tol) for t in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            certs = list(ex.map(_run_trial, jobs, chunksize=max(1, trials // (4 * workers))))
    else:
        certs = [_run_trial(j) for j in jobs]
    summary = BatchSummary(th, trials, seed)
    for c in certs:
        summary.checks += len(c.checks)
        summary.min_margin = min(summary.min_margin, c.min_margin)
        if c.passed:
            summary.passed += 1
        else:
            summary.failed += 1
            summary.failures.append(c)
    return summary
