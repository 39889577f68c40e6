"""Dense eigen solvers backed by compiled kernels with a pure-Python fallback."""

from ._backend import BACKEND
from .solvers import (
    ComplexSpectrum,
    ConvergenceError,
    Spectrum,
    SymmetryError,
    complex_distance,
    conjugate_deviation,
    cycle_delta_spectrum_closed_form,
    eig_general,
    eig_m_symmetric,
    m_symmetry_defect,
    rayleigh,
    real_distance,
    variational_deviation,
    zero_cluster_size,
)

__all__ = [
    "BACKEND",
    "ComplexSpectrum",
    "ConvergenceError",
    "Spectrum",
    "SymmetryError",
    "complex_distance",
    "conjugate_deviation",
    "cycle_delta_spectrum_closed_form",
    "eig_general",
    "eig_m_symmetric",
    "m_symmetry_defect",
    "rayleigh",
    "real_distance",
    "variational_deviation",
    "zero_cluster_size",
]
