"""Dense complex linear algebra substrate.

Thin, validated wrappers around numpy.linalg plus the unitary DFT matrix.
All matrices are plain ``numpy.ndarray`` objects; functions here enforce
the entry-level contracts (finiteness, squareness, Hermiticity) that the
rest of the package relies on. Accuracy targets are 1e-9 for spectra and
1e-12 for constructed unitaries, well within LAPACK's reach at the tiny
sizes used here (at most 144 x 144).
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DimensionTooSmallError,
    InvalidMatrixError,
    NonSquareError,
    NotHermitianError,
)

# Max allowed entry of |m - m^dagger| before a matrix is rejected as
# non-Hermitian.
HERMITICITY_TOL = 1e-10


def _as_matrix(m, name: str = "matrix") -> np.ndarray:
    """Coerce input to a finite 2-D complex array, raising on violation."""
    a = np.asarray(m)
    if a.ndim != 2:
        raise InvalidMatrixError(f"{name} must be 2-D, got shape {a.shape}")
    a = a.astype(complex, copy=False)
    if not np.all(np.isfinite(a)):
        raise InvalidMatrixError(f"{name} contains NaN or Inf entries")
    return a


def hermitian_eigenvalues(m) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, ascending.

    The input must be square and Hermitian to within ``HERMITICITY_TOL``
    (max entry of m minus its conjugate transpose). It is symmetrized as
    (m + m^dagger)/2 before the decomposition so that round-off in the
    input does not leak into the spectrum.

    Returns a real array whose sum equals the trace to about 1e-9.
    """
    a = _as_matrix(m)
    n, cols = a.shape
    if n != cols:
        raise NonSquareError(f"eigenvalues need a square matrix, got {a.shape}")
    dev = np.max(np.abs(a - a.conj().T)) if n else 0.0
    if dev > HERMITICITY_TOL:
        raise NotHermitianError(
            f"matrix deviates from Hermiticity by {dev:.3e} > {HERMITICITY_TOL:.0e}"
        )
    return np.linalg.eigvalsh((a + a.conj().T) / 2)


def singular_values(m) -> np.ndarray:
    """Singular values of any finite matrix, descending.

    Returns min(rows, cols) non-negative reals. The squared values sum to
    the squared Frobenius norm.
    """
    a = _as_matrix(m)
    return np.linalg.svd(a, compute_uv=False)


def dft_matrix(d: int) -> np.ndarray:
    """Unitary discrete Fourier transform matrix of size d.

    Entries are F[i, j] = omega^(-i*j) / sqrt(d) with omega = exp(2*pi*i/d).
    Unitary to within 1e-12 for d up to 12 and beyond.
    """
    if d < 2:
        raise DimensionTooSmallError(f"dft_matrix needs d >= 2, got {d}")
    i, j = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    # reduce the exponent mod d before exponentiation to keep phases exact
    return np.exp(-2j * np.pi * ((i * j) % d) / d) / np.sqrt(d)


def kron(a, b) -> np.ndarray:
    """Kronecker product of two finite matrices."""
    return np.kron(_as_matrix(a, "a"), _as_matrix(b, "b"))
