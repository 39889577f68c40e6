"""Certificate records: one theorem, the inequality instances checked, their margins."""

from __future__ import annotations

import enum
import hashlib
import json
import os
from dataclasses import dataclass, field

from ..graph import DirectedWeightedGraph
from ..graph_io import graph_to_dict

__all__ = [
    "TheoremId",
    "Check",
    "Certificate",
    "CertificateBuilder",
    "HypothesisError",
    "IndexRangeError",
    "input_digest",
    "default_tolerance",
]

INEQUALITY_TOL = 1e-8
IDENTITY_TOL = 1e-10
POSITIVITY_TOL = 1e-12


class TheoremId(str, enum.Enum):
    GREEN_IDENTITY = "GREEN_IDENTITY"
    POSITIVITY_S = "POSITIVITY_S"
    SPECTRUM_BASIC = "SPECTRUM_BASIC"
    REALPART_LEMMA = "REALPART_LEMMA"
    CYCLE_SPECTRUM = "CYCLE_SPECTRUM"
    CYCLE_COROLLARY = "CYCLE_COROLLARY"
    SUBGRAPH_INTERLACE = "SUBGRAPH_INTERLACE"
    FLOWER_MONOTONE = "FLOWER_MONOTONE"
    TREE_STAR_BOUND = "TREE_STAR_BOUND"
    SINGLE_EDGE_ATTACH = "SINGLE_EDGE_ATTACH"
    EDGE_WEYL = "EDGE_WEYL"
    EDGE_SANDWICH = "EDGE_SANDWICH"
    EDGE_MONOTONE = "EDGE_MONOTONE"
    DIRICHLET_REALPART = "DIRICHLET_REALPART"
    DIRICHLET_INTERLACE = "DIRICHLET_INTERLACE"
    DIRICHLET_MAX_COMBINE = "DIRICHLET_MAX_COMBINE"
    CYCLE_SUBGRAPH_COROLLARY = "CYCLE_SUBGRAPH_COROLLARY"
    PARTITION_BOUND = "PARTITION_BOUND"
    PARTITION_REALPART = "PARTITION_REALPART"

    @classmethod
    def parse(cls, name) -> "TheoremId":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).upper())
        except ValueError:
            raise ValueError(f"unknown theorem {name!r}; choose from {[t.value for t in cls]}") from None


IDENTITIES = {TheoremId.GREEN_IDENTITY, TheoremId.CYCLE_SPECTRUM, TheoremId.CYCLE_COROLLARY}


def default_tolerance(theorem: TheoremId) -> float:
    if theorem in IDENTITIES:
        return IDENTITY_TOL
    if theorem is TheoremId.POSITIVITY_S:
        return POSITIVITY_TOL
    env = os.environ.get("SPECTRA_TOL")
    return float(env) if env else INEQUALITY_TOL


class HypothesisError(ValueError):
    """The inputs do not satisfy the theorem's structural hypotheses."""


class IndexRangeError(HypothesisError):
    """Requested eigenvalue indices fall outside the theorem's range."""


def _jsonable(x):
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    return float(x)


@dataclass(frozen=True)
class Check:
    """One inequality instance normalised to ``lhs <= rhs`` (or an identity ``lhs == rhs``)."""

    desc: str
    lhs: float | complex
    rhs: float | complex
    margin: float

    def to_dict(self) -> dict:
        return {"desc": self.desc, "lhs": _jsonable(self.lhs), "rhs": _jsonable(self.rhs), "margin": float(self.margin)}


@dataclass(frozen=True)
class Certificate:
    theorem: TheoremId
    input_digest: str
    checks: tuple
    tolerance: float
    scale: float
    passed: bool
    mode: str = "raw"
    flags: dict = field(default_factory=dict)
    records: tuple = ()

    @property
    def min_margin(self) -> float:
        return min((c.margin for c in self.checks), default=float("inf"))

    def failures(self) -> list[Check]:
        bound = -self.tolerance * self.scale
        return [c for c in self.checks if not c.margin >= bound]

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "pass": self.passed,
            "tolerance": self.tolerance,
            "scale": self.scale,
            "mode": self.mode,
            "input_digest": self.input_digest,
            "min_margin": None if not self.checks else float(self.min_margin),
            "flags": dict(self.flags),
            "checks": [c.to_dict() for c in self.checks],
            "records": [c.to_dict() for c in self.records],
        }

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"{self.theorem.value}: {verdict}  checks={len(self.checks)}  "
            f"min_margin={self.min_margin:.3e}  tol={self.tolerance:g}*scale({self.scale:.4g})"
        )


def _canon(obj):
    if isinstance(obj, DirectedWeightedGraph):
        return graph_to_dict(obj)
    if isinstance(obj, dict):
        return {str(k): _canon(v) for k, v in sorted(obj.items(), key=lambda kv: str(kv[0]))}
    if isinstance(obj, (set, frozenset)):
        return sorted((_canon(v) for v in obj), key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(obj, (list, tuple)):
        return [_canon(v) for v in obj]
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if hasattr(obj, "tolist"):
        return _canon(obj.tolist())
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return str(obj)


def input_digest(theorem: TheoremId, **inputs) -> str:
    payload = json.dumps({"theorem": theorem.value, "inputs": _canon(inputs)}, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


class CertificateBuilder:
    """Collects checks and seals them into a ``Certificate``."""

    def __init__(self, theorem: TheoremId, tol: float | None, scale: float, digest: str, mode: str = "raw"):
        self.theorem = theorem
        self.tol = default_tolerance(theorem) if tol is None else float(tol)
        if not self.tol >= 0:
            raise ValueError(f"tolerance must be >= 0, got {tol!r}")
        self.scale = max(1.0, float(scale))
        self.digest = digest
        self.mode = mode
        self.checks: list[Check] = []
        self.records: list[Check] = []
        self.flags: dict = {}

    def le(self, desc: str, lhs, rhs):
        """Record ``lhs <= rhs``."""
        self.checks.append(Check(desc, float(lhs), float(rhs), float(rhs) - float(lhs)))

    def eq(self, desc: str, lhs, rhs, norm: float = 1.0):
        """Record the identity ``lhs == rhs``; margin is ``-|lhs - rhs| / norm``."""
        self.checks.append(Check(desc, lhs, rhs, -abs(lhs - rhs) / norm))

    def distance(self, desc: str, dist: float):
        self.checks.append(Check(desc, float(dist), 0.0, -float(dist)))

    def record(self, desc: str, lhs, rhs):
        """Informational ``lhs <= rhs`` margin that does not affect the verdict."""
        self.records.append(Check(desc, float(lhs), float(rhs), float(rhs) - float(lhs)))

    def flag(self, key: str, value):
        self.flags[key] = value

    def seal(self) -> Certificate:
        bound = -self.tol * self.scale
        passed = all(c.margin >= bound for c in self.checks)
        return Certificate(
            self.theorem,
            self.digest,
            tuple(self.checks),
            self.tol,
            self.scale,
            passed,
            self.mode,
            dict(self.flags),
            tuple(self.records),
        )
