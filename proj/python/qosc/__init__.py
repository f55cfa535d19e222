"""Finite-matrix quantum oscillators.

Hamiltonian builders, spectra, Pauli decomposition, and a statevector VQE,
backed by the C++ core.
"""

from ._core import (
    __version__,
    build_hamiltonian,
    compare_spectrum,
    decompose,
    eigensystem,
    eigenvalues,
    reconstruct,
    reference_energy,
    vqe,
    wavefunction_density,
)

__all__ = [
    "__version__",
    "build_hamiltonian",
    "compare_spectrum",
    "decompose",
    "eigensystem",
    "eigenvalues",
    "reconstruct",
    "reference_energy",
    "vqe",
    "wavefunction_density",
]
