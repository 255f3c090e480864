"""Weyl-Heisenberg operators, Bell states, and the maps used by the oracles.

The d-dimensional Weyl operators W_{k,l} act on basis kets as

    W_{k,l} |j> = omega^(j*k) |j + l mod d>,   omega = exp(2*pi*i/d),

so W_{k,l} = Z^k X^l in terms of the clock and shift matrices. Applying
them to one side of the maximally entangled state produces the Bell basis

    |Omega_{k,l}> = (W_{k,l} (x) 1) |Omega_{0,0}> = vec(W_{k,l}) / sqrt(d),

with vec taken row-major. A Bell-diagonal state is a convex mixture of the
d^2 Bell projectors and is described entirely by its d x d coefficient
matrix C; :class:`CoefficientMatrix` carries that data with the simplex
invariants enforced. This module also provides the dense partial transpose
and realignment index shuffles that the brute-force detection oracles
operate on.

Index pairs (k, l) are plain tuples and are reduced mod d on entry.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import (
    DimensionMismatchError,
    DimensionTooSmallError,
    InvalidCoefficientsError,
    InvalidMatrixError,
)

# Entries in [-COEFF_CLAMP, 0) are treated as file round-trip noise and
# clamped to zero; anything more negative is rejected.
COEFF_CLAMP = 1e-12
# Allowed deviation of the coefficient sum from 1 before renormalization.
COEFF_SUM_TOL = 1e-10
# A state (or partial transpose) counts as positive semidefinite when its
# minimum eigenvalue is above -PSD_TOL, the eigensolver accuracy budget.
PSD_TOL = 1e-10


class CoefficientMatrix:
    """Probability weights c_{k,l} of a Bell-diagonal state.

    Wraps a d x d real array with the simplex invariants: every entry is
    non-negative (inputs down to -1e-12 are clamped to 0 to tolerate
    serialization round-off, anything lower is rejected) and the entries
    sum to 1 within 1e-10 before an exact renormalization. The stored
    array is read-only.

    Attributes
    ----------
    d : int
        Local dimension (the matrix is d x d).
    c : numpy.ndarray
        The validated, renormalized coefficient matrix, float64, read-only.
    """

    __slots__ = ("d", "c")

    def __init__(self, c):
        a = np.asarray(c, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidCoefficientsError(
                f"coefficients must form a square matrix, got shape {a.shape}"
            )
        d = a.shape[0]
        if d < 2:
            raise DimensionTooSmallError(f"coefficients need d >= 2, got d={d}")
        if not np.all(np.isfinite(a)):
            raise InvalidCoefficientsError("coefficients contain NaN or Inf")
        lowest = a.min()
        if lowest < -COEFF_CLAMP:
            raise InvalidCoefficientsError(
                f"coefficient {lowest:.3e} is negative beyond the -{COEFF_CLAMP:.0e} tolerance"
            )
        a = np.where(a < 0, 0.0, a)
        total = a.sum()
        if abs(total - 1.0) > COEFF_SUM_TOL:
            raise InvalidCoefficientsError(
                f"coefficients sum to {total!r}, expected 1 within {COEFF_SUM_TOL:.0e}"
            )
        a = a / total
        a.flags.writeable = False
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "c", a)

    def __setattr__(self, name, value):
        raise AttributeError("CoefficientMatrix is immutable")

    def __repr__(self):
        if not hasattr(self, "c"):
            return "CoefficientMatrix(<unvalidated>)"
        return f"CoefficientMatrix(d={self.d}, c={self.c.tolist()!r})"


def _norm_index(d: int, idx) -> tuple[int, int]:
    k, l = idx
    return int(k) % d, int(l) % d


def _check_dim(d: int) -> None:
    if d < 2:
        raise DimensionTooSmallError(f"need d >= 2, got {d}")


def weyl_operator(d: int, idx) -> np.ndarray:
    """The Weyl operator W_{k,l} as a dense d x d unitary.

    Parameters
    ----------
    d : int
        Dimension, at least 2.
    idx : pair of int
        Phase index k and shift index l, reduced mod d.
    """
    _check_dim(d)
    k, l = _norm_index(d, idx)
    j = np.arange(d)
    w = np.zeros((d, d), dtype=complex)
    w[j, (j + l) % d] = np.exp(2j * np.pi * ((j * k) % d) / d)
    return w


def bell_state(d: int, idx) -> np.ndarray:
    """The Bell state |Omega_{k,l}> as a length-d^2 unit vector.

    Equals vec(W_{k,l})/sqrt(d) with row-major vec, i.e. the component on
    |m>|n> is omega^(m*k)/sqrt(d) when n = m + l mod d and 0 otherwise.
    The global phase is fixed by this construction.
    """
    return weyl_operator(d, idx).reshape(-1) / np.sqrt(d)


def bell_projector(d: int, idx) -> np.ndarray:
    """Rank-one projector P_{k,l} onto the Bell state |Omega_{k,l}>."""
    v = bell_state(d, idx)
    return np.outer(v, v.conj())


@lru_cache(maxsize=8)
def _bell_projector_stack(d: int) -> np.ndarray:
    """All d^2 Bell projectors stacked on a flat (k*d + l) leading axis."""
    stack = np.empty((d * d, d * d, d * d), dtype=complex)
    for k in range(d):
        for l in range(d):
            stack[k * d + l] = bell_projector(d, (k, l))
    stack.flags.writeable = False
    return stack


def density_from_coefficients(cm: CoefficientMatrix) -> np.ndarray:
    """Dense d^2 x d^2 density matrix of the Bell-diagonal state.

    Returns sum_{k,l} c_{k,l} P_{k,l}: Hermitian, trace 1, positive
    semidefinite, with the Bell states as eigenvectors and the c_{k,l}
    as eigenvalues.
    """
    return np.tensordot(cm.c.reshape(-1), _bell_projector_stack(cm.d), axes=1)


def _check_bipartite(rho, dA: int, dB: int) -> np.ndarray:
    a = np.asarray(rho)
    if a.ndim != 2:
        raise InvalidMatrixError(f"expected a matrix, got shape {a.shape}")
    if a.shape != (dA * dB, dA * dB):
        raise DimensionMismatchError(
            f"shape {a.shape} does not match local dimensions ({dA}, {dB})"
        )
    a = a.astype(complex, copy=False)
    if not np.all(np.isfinite(a)):
        raise InvalidMatrixError("matrix contains NaN or Inf entries")
    return a


def partial_transpose(rho, dA: int, dB: int) -> np.ndarray:
    """Transpose the second tensor factor of a bipartite matrix.

    Maps |i><j| (x) |k><l| to |i><j| (x) |l><k|. Involutive and trace
    preserving; negativity of the output spectrum certifies entanglement
    of the input state.
    """
    a = _check_bipartite(rho, dA, dB)
    t = a.reshape(dA, dB, dA, dB).transpose(0, 3, 2, 1)
    return np.ascontiguousarray(t.reshape(dA * dB, dA * dB))


def realign(rho, dA: int, dB: int) -> np.ndarray:
    """Realignment index shuffle of a bipartite matrix.

    Maps |i><j| (x) |k><l| to |i><k| (x) |j><l|, producing a dA^2 x dB^2
    matrix. The trace norm of the output exceeding 1 certifies
    entanglement of the input state. For equal local dimensions the
    shuffle is an involution.
    """
    a = _check_bipartite(rho, dA, dB)
    t = a.reshape(dA, dB, dA, dB).transpose(0, 2, 1, 3)
    return np.ascontiguousarray(t.reshape(dA * dA, dB * dB))


def flip_operator(d: int) -> np.ndarray:
    """The flip (swap) operator sum_{i,j} |i><j| (x) |j><i|.

    Hermitian and self-inverse. Multiplying a realigned matrix by it
    permutes rows without changing singular values.
    """
    _check_dim(d)
    f = np.zeros((d * d, d * d), dtype=complex)
    i, j = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    f[(i * d + j).reshape(-1), (j * d + i).reshape(-1)] = 1
    return f
