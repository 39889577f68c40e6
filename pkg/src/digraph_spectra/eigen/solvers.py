"""Spectra of m-symmetric and general real operators."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..operators import Measure, OperatorMatrix, as_vector, matrix_scale
from . import _backend
from ._errors import ConvergenceError

__all__ = [
    "Spectrum",
    "ComplexSpectrum",
    "SymmetryError",
    "ConvergenceError",
    "eig_m_symmetric",
    "eig_general",
    "rayleigh",
    "cycle_delta_spectrum_closed_form",
    "real_distance",
    "complex_distance",
    "zero_cluster_size",
    "conjugate_deviation",
    "variational_deviation",
    "m_symmetry_defect",
]

SYMMETRY_TOL = 1e-10
ZERO_CLUSTER_TOL = 1e-8


class SymmetryError(ValueError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """Ascending real eigenvalues, optionally with m-orthonormal eigenvectors (columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None = field(default=None, repr=False)
    residual: float = 0.0
    order: tuple | None = None
    scale: float = 0.0

    def __len__(self):
        return len(self.eigenvalues)

    def lam(self, k: int) -> float:
        """``k``-th eigenvalue, counted from 1."""
        if not 1 <= k <= len(self.eigenvalues):
            raise IndexError(f"eigenvalue index {k} outside 1..{len(self.eigenvalues)}")
        return float(self.eigenvalues[k - 1])

    def to_dict(self) -> dict:
        return {
            "type": "real",
            "eigenvalues": [float(x) for x in self.eigenvalues],
            "residual": float(self.residual),
            "order": list(self.order) if self.order is not None else None,
        }


@dataclass(frozen=True)
class ComplexSpectrum:
    """Eigenvalues sorted by real part, then imaginary part."""

    eigenvalues: np.ndarray
    residual: float | None = None
    order: tuple | None = None
    scale: float = 0.0

    def __len__(self):
        return len(self.eigenvalues)

    def lam(self, k: int) -> complex:
        if not 1 <= k <= len(self.eigenvalues):
            raise IndexError(f"eigenvalue index {k} outside 1..{len(self.eigenvalues)}")
        return complex(self.eigenvalues[k - 1])

    @property
    def real_parts(self) -> np.ndarray:
        return self.eigenvalues.real

    def to_dict(self) -> dict:
        return {
            "type": "complex",
            "eigenvalues": [{"re": float(z.real), "im": float(z.imag)} for z in self.eigenvalues],
            "residual": None if self.residual is None else float(self.residual),
            "order": list(self.order) if self.order is not None else None,
        }


def _unpack(A, measure=None) -> tuple[np.ndarray, np.ndarray, tuple | None]:
    if isinstance(A, OperatorMatrix):
        return np.array(A.entries, dtype=float), np.asarray(A.m, dtype=float), A.order
    a = np.array(A, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if measure is None:
        m = np.ones(a.shape[0])
    elif isinstance(measure, Measure):
        m = measure.values
    else:
        m = np.asarray(measure, dtype=float)
    return a, m, None


def sort_complex(z: np.ndarray) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    return z[np.lexsort((z.imag, z.real))]


def m_symmetry_defect(A, measure=None) -> tuple[float, tuple[int, int]]:
    """Largest ``|B - B^T|`` entry of ``B = M^{1/2} A M^{-1/2}`` and its location."""
    a, m, _ = _unpack(A, measure)
    if a.size == 0:
        return 0.0, (0, 0)
    r = np.sqrt(m)
    B = r[:, None] * a / r[None, :]
    D = np.abs(B - B.T)
    i, j = np.unravel_index(int(np.argmax(D)), D.shape)
    return float(D[i, j]), (int(i), int(j))


def eig_m_symmetric(A, measure=None, *, vectors: bool = True, backend: str | None = None) -> Spectrum:
    """Eigenvalues of an operator that is self-adjoint for the m-inner product.

    Reduced to the ordinary symmetric problem for ``B = M^{1/2} A M^{-1/2}``
    and solved by cyclic Jacobi; eigenvectors are mapped back so that they are
    orthonormal in the m-inner product.
    """
    a, m, order = _unpack(A, measure)
    n = a.shape[0]
    scale = matrix_scale(a)
    defect, (i, j) = m_symmetry_defect(a, m)
    if defect > SYMMETRY_TOL * max(1.0, scale):
        where = (order[i], order[j]) if order else (i, j)
        raise SymmetryError(f"operator is not m-symmetric: defect {defect:.3g} at {where}")
    if n == 0:
        return Spectrum(np.zeros(0), np.zeros((0, 0)) if vectors else None, 0.0, order, scale)
    kern = _backend.get(backend) if backend else _backend.kernels
    r = np.sqrt(m)
    B = r[:, None] * a / r[None, :]
    B = 0.5 * (B + B.T)
    w, U, _ = kern.jacobi_eigh(np.ascontiguousarray(B))
    idx = np.argsort(w, kind="stable")
    w = w[idx]
    V = U[:, idx] / r[:, None]
    R = a @ V - V * w[None, :]
    res = float(np.max(np.sqrt((m[:, None] * R * R).sum(axis=0)))) / (scale if scale > 0 else 1.0)
    w.setflags(write=False)
    return Spectrum(w, V if vectors else None, res, order, scale)


def _isolate(a: np.ndarray) -> tuple[int, int]:
    """Permute rows/columns in place to split off eigenvalues that sit on the diagonal.

    Returns ``(lo, hi)``: entries outside ``lo..hi`` are isolated eigenvalues.
    """
    n = a.shape[0]
    lo, hi = 0, n - 1

    def swap(i, j):
        if i != j:
            a[[i, j], :] = a[[j, i], :]
            a[:, [i, j]] = a[:, [j, i]]

    found = True
    while found and hi > lo:
        found = False
        for j in range(hi, lo - 1, -1):
            row = a[j, lo : hi + 1]
            if np.count_nonzero(row) - (1 if a[j, j] != 0 else 0) == 0:
                swap(j, hi)
                hi -= 1
                found = True
                break
    found = True
    while found and hi > lo:
        found = False
        for j in range(lo, hi + 1):
            col = a[lo : hi + 1, j]
            if np.count_nonzero(col) - (1 if a[j, j] != 0 else 0) == 0:
                swap(j, lo)
                lo += 1
                found = True
                break
    return lo, hi


def eig_general(
    A, *, residual: bool | None = None, max_iter: int | None = None, backend: str | None = None
) -> ComplexSpectrum:
    """All eigenvalues of a real square matrix.

    Permutation isolation, radix-2 balancing, Householder reduction to
    Hessenberg form, then Francis double-shift QR.  ``max_iter`` caps the total
    number of QR sweeps (default ``100 n``).  ``residual`` computes
    ``min_v ||(A - lam) v|| / ||A||`` per eigenvalue; by default only for n <= 64.
    """
    a, _, order = _unpack(A)
    n = a.shape[0]
    scale = matrix_scale(a)
    if n == 0:
        return ComplexSpectrum(np.zeros(0, dtype=complex), 0.0, order, scale)
    kern = _backend.get(backend) if backend else _backend.kernels
    work = np.ascontiguousarray(a.copy())
    lo, hi = _isolate(work)
    vals = [complex(work[i, i]) for i in list(range(lo)) + list(range(hi + 1, n))]
    if hi >= lo:
        block = np.ascontiguousarray(work[lo : hi + 1, lo : hi + 1])
        kern.balance(block)
        kern.hessenberg(block)
        wr, wi = kern.hqr(block, int(max_iter if max_iter is not None else 100 * n))
        vals.extend(complex(x, y) for x, y in zip(wr, wi))
    z = sort_complex(np.array(vals))
    if residual is None:
        residual = n <= 64
    res = None
    if residual:
        denom = scale if scale > 0 else 1.0
        eye = np.eye(n)
        res = max(
            float(np.linalg.svd(a - lam * eye, compute_uv=False)[-1]) for lam in z
        ) / denom
    z.setflags(write=False)
    return ComplexSpectrum(z, res, order, scale)


def rayleigh(A, f, measure=None):
    """``(A f, f)_m / (f, f)_m``; real for m-symmetric ``A`` and real ``f``."""
    a, m, order = _unpack(A, measure)
    fv = as_vector(order, f) if order is not None else np.asarray(f)
    denom = float(np.sum(m * np.abs(fv) ** 2))
    if denom == 0.0:
        raise ValueError("Rayleigh quotient of the zero function")
    val = complex(np.sum(m * (a @ fv) * np.conj(fv))) / denom
    if np.isrealobj(fv):
        defect, _ = m_symmetry_defect(a, m)
        if defect <= SYMMETRY_TOL * max(1.0, matrix_scale(a)):
            return val.real
    return val


def cycle_delta_spectrum_closed_form(n: int) -> ComplexSpectrum:
    """``0``, ``2`` when n is even, and ``1 - exp(+-2 i l pi / n)`` for ``0 < l < n/2``."""
    if n < 2:
        raise ValueError(f"cycle needs n >= 2, got {n}")
    vals = [0j]
    if n % 2 == 0:
        vals.append(2 + 0j)
    top = (n - 1) // 2 if n % 2 else n // 2 - 1
    for l in range(1, top + 1):
        e = np.exp(2j * np.pi * l / n)
        vals += [1 - e, 1 - np.conj(e)]
    z = sort_complex(np.array(vals))
    z.setflags(write=False)
    return ComplexSpectrum(z, 0.0, None, 2.0)


def _values(s):
    return s.eigenvalues if isinstance(s, (Spectrum, ComplexSpectrum)) else np.asarray(s)


def real_distance(a, b) -> float:
    """Max deviation between two real multisets matched in sorted order."""
    x, y = np.sort(np.real(_values(a))), np.sort(np.real(_values(b)))
    if x.shape != y.shape:
        return float("inf")
    return float(np.max(np.abs(x - y))) if x.size else 0.0


def complex_distance(a, b) -> float:
    """Max pair distance under a minimum-cost (Hungarian) matching of two multisets."""
    x, y = np.asarray(_values(a), dtype=complex), np.asarray(_values(b), dtype=complex)
    if x.shape != y.shape:
        return float("inf")
    if x.size == 0:
        return 0.0
    C = np.abs(x[:, None] - y[None, :])
    r, c = linear_sum_assignment(C)
    return float(C[r, c].max())


def zero_cluster_size(spec, scale: float | None = None, tol: float = ZERO_CLUSTER_TOL) -> int:
    """Number of eigenvalues within ``tol * max(1, scale)`` of zero."""
    vals = _values(spec)
    if scale is None:
        scale = getattr(spec, "scale", 0.0)
    return int(np.sum(np.abs(vals) <= tol * max(1.0, scale)))


def conjugate_deviation(spec) -> float:
    z = np.asarray(_values(spec), dtype=complex)
    return complex_distance(z, np.conj(z))


def variational_deviation(A, spec: Spectrum, measure=None) -> float:
    """Largest gap between each ``lam_k`` and its min-max characterisations.

    Over the computed eigenbasis: the minimum Rayleigh quotient on the
    m-orthogonal complement of the first ``k - 1`` eigenvectors, and the maximum
    on the span of the first ``k``.
    """
    if spec.eigenvectors is None:
        raise ValueError("spectrum has no eigenvectors")
    a, m, _ = _unpack(A, measure)
    V = spec.eigenvectors
    n = V.shape[1]
    worst = 0.0
    for k in range(1, n + 1):
        C = V[:, k - 1 :]
        K = C.T @ (m[:, None] * (a @ C))
        K = 0.5 * (K + K.T)
        lo = float(np.min(_backend.kernels.jacobi_eigh(K)[0]))
        P = V[:, :k]
        K = P.T @ (m[:, None] * (a @ P))
        K = 0.5 * (K + K.T)
        hi = float(np.max(_backend.kernels.jacobi_eigh(K)[0]))
        lam = spec.eigenvalues[k - 1]
        worst = max(worst, abs(lo - lam), abs(hi - lam))
    return worst
