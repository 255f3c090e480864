"""Entanglement detection for Bell-diagonal states.

Two one-sided criteria certify entanglement of a state rho:

* PPT: the partial transpose rho^Gamma has a negative eigenvalue.
* Realignment: the realigned matrix has trace norm above 1.

For Bell-diagonal states both admit fast closed forms that never touch a
dense d^2 x d^2 matrix. The realigned matrix is diagonalized by the Bell
basis itself, its eigenvalues being B_{j,i}/d where B = d F C F^dagger is
the Bloch matrix (the DFT image of the coefficient matrix). The trace
norm therefore reduces to the entry-wise 1-norm of B, and the realignment
criterion becomes ||B||_1 > d. For qutrits the same quantity can be
rewritten as a sum over the four striations of the phase space, and the
PPT criterion collapses to a single cubic polynomial inequality in the
coefficients,

    3 * sum over the 12 cosets of (product of the 3 coefficients)
        < sum of c_{k,l}^3     iff     rho is NPT,

because rho^Gamma is unitarily equivalent to a direct sum of three 3 x 3
blocks sharing one determinant sign. The cubic also yields an
entanglement witness kappa for each state.

Every fast form has a brute-force oracle counterpart here
(:func:`realignment_oracle`, :func:`ppt_oracle`) that builds the dense
matrix and calls a dense decomposition, so the two routes can be checked
against each other. Detection thresholds use strict inequalities with a
1e-12 guard band; boundary states such as subgroup states report "not
detected".
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import linalg
from .errors import InvalidBlochError, WrongDimensionError
from .phase_space import all_cosets
from .weyl import (
    COEFF_CLAMP,
    COEFF_SUM_TOL,
    PSD_TOL,
    CoefficientMatrix,
    density_from_coefficients,
    partial_transpose,
    realign,
    weyl_operator,
)

# Strict-inequality guard band for the detection thresholds.
DETECTION_GUARD = 1e-12

LABEL_NPT = "NPT-entangled"
LABEL_PPT_DETECTED = "PPT-entangled (detected)"
LABEL_UNDETECTED = "undetected"
LABEL_SEPARABLE = "separable"


class RealignmentResult(NamedTuple):
    value: float
    detected: bool


class DetCriterionResult(NamedTuple):
    lhs: float
    rhs: float
    is_npt: bool


class PptOracleResult(NamedTuple):
    min_eigenvalue: float
    is_npt: bool


@dataclass(frozen=True)
class ClassificationRecord:
    """Per-state verdicts of both criteria plus the combined label.

    realignment_value is the entry-wise 1-norm of the Bloch matrix;
    realignment_trace_norm is the same value divided by d, which is the
    trace norm of the realigned density matrix. ppt_value is rhs - lhs of
    the qutrit cubic when ppt_method is "det-criterion" (positive beyond
    the guard band means NPT) and the minimum eigenvalue of the dense
    partial transpose when ppt_method is "dense-eigensolve" (negative
    beyond tolerance means NPT). Raw values are always carried so that
    downstream tooling can apply its own tolerances.

    label is one of "NPT-entangled", "PPT-entangled (detected)",
    "undetected", or "separable" (the last only for d=2, where PPT is
    also sufficient for separability).
    """

    d: int
    realignment_value: float
    realignment_trace_norm: float
    realignment_detected: bool
    ppt_value: float
    ppt_method: str
    is_ppt: bool
    label: str

    def to_dict(self) -> dict:
        return asdict(self)


def _require_cm(cm) -> CoefficientMatrix:
    if not isinstance(cm, CoefficientMatrix):
        raise TypeError(f"expected a CoefficientMatrix, got {type(cm).__name__}")
    return cm


def _require_qutrit(cm) -> CoefficientMatrix:
    _require_cm(cm)
    if cm.d != 3:
        raise WrongDimensionError(f"operation is defined for d=3 only, got d={cm.d}")
    return cm


@lru_cache(maxsize=16)
def _dft(d: int) -> np.ndarray:
    f = linalg.dft_matrix(d)
    f.flags.writeable = False
    return f


def bloch_from_coefficients(cm: CoefficientMatrix) -> np.ndarray:
    """Bloch matrix B = d * F C F^dagger of a coefficient matrix.

    Entry B[j, i] equals sum_{k,l} c_{k,l} omega^(i*l - j*k). B[0, 0] is 1
    and every entry has modulus at most 1.
    """
    _require_cm(cm)
    f = _dft(cm.d)
    return cm.d * (f @ cm.c @ f.conj().T)


def coefficients_from_bloch(b) -> CoefficientMatrix:
    """Invert the Bloch map, C = F^dagger B F / d.

    Raises InvalidBloch if the result is not a valid coefficient matrix
    (noticeably complex, negative beyond -1e-12, or with sum away from 1,
    the latter catching B[0, 0] != 1).
    """
    a = np.asarray(b)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 2:
        raise InvalidBlochError(f"Bloch matrix must be square with d >= 2, got {a.shape}")
    a = a.astype(complex, copy=False)
    if not np.all(np.isfinite(a)):
        raise InvalidBlochError("Bloch matrix contains NaN or Inf")
    d = a.shape[0]
    f = _dft(d)
    c = f.conj().T @ a @ f / d
    drift = np.max(np.abs(c.imag))
    if drift > 1e-10:
        raise InvalidBlochError(
            f"inverse DFT leaves imaginary residue {drift:.3e}, not a coefficient image"
        )
    r = c.real
    if r.min() < -COEFF_CLAMP:
        raise InvalidBlochError(
            f"inverse DFT yields negative coefficient {r.min():.3e}"
        )
    if abs(r.sum() - 1.0) > COEFF_SUM_TOL:
        raise InvalidBlochError(
            f"coefficients sum to {r.sum()!r} (B[0,0] must be 1)"
        )
    return CoefficientMatrix(r)


def realignment_fast(cm: CoefficientMatrix) -> RealignmentResult:
    """Realignment criterion via the Bloch matrix 1-norm.

    value is sum |B_{j,i}|, which equals d times the trace norm of the
    realigned density matrix. detected means value > d + 1e-12, which
    certifies entanglement.
    """
    _require_cm(cm)
    value = float(np.abs(bloch_from_coefficients(cm)).sum())
    return RealignmentResult(value, value > cm.d + DETECTION_GUARD)


def realignment_oracle(cm: CoefficientMatrix) -> float:
    """Brute-force realignment criterion quantity.

    Builds the dense density matrix, realigns it, and sums the singular
    values. Equals realignment_fast(cm).value / d to within 1e-9.
    """
    _require_cm(cm)
    rho = density_from_coefficients(cm)
    return float(linalg.singular_values(realign(rho, cm.d, cm.d)).sum())


def realigned_spectrum(cm: CoefficientMatrix) -> np.ndarray:
    """Eigenvalues of the realigned density matrix, from the Bloch matrix.

    The realigned matrix equals (1/d) sum c_{k,l} W_{k,l} (x) W_{k,l}^*,
    whose eigenvectors are the Bell states with eigenvalues B_{j,i}/d.
    Returned sorted by real part, then imaginary part; matches a dense
    eigensolve of realign(rho) as a multiset to 1e-9.
    """
    _require_cm(cm)
    vals = (bloch_from_coefficients(cm) / cm.d).reshape(-1)
    return vals[np.lexsort((vals.imag, vals.real))]


@lru_cache(maxsize=1)
def _qutrit_tables():
    """Flat-index tables for the 12 qutrit cosets.

    Returns (coset_idx, striation_rows, partners): coset_idx is (12, 3)
    flat indices of each coset's points; striation_rows groups the 12 rows
    by generating subgroup (4 groups of 3); partners[p, m] holds the two
    flat indices sharing the m-th coset through point p.
    """
    cosets = all_cosets(3)
    coset_idx = np.array(
        [[k * 3 + l for (k, l) in cs.elements] for cs in cosets], dtype=np.intp
    )
    groups: dict = {}
    for row, cs in enumerate(cosets):
        groups.setdefault(cs.base.elements, []).append(row)
    striation_rows = tuple(np.array(rows, dtype=np.intp) for rows in groups.values())
    partners = np.empty((9, 4, 2), dtype=np.intp)
    for p in range(9):
        hits = [row for row in range(12) if p in coset_idx[row]]
        for m, row in enumerate(hits):
            partners[p, m] = [q for q in coset_idx[row] if q != p]
    coset_idx.flags.writeable = False
    partners.flags.writeable = False
    return coset_idx, striation_rows, partners


def realignment_qutrit_subgroup_form(cm: CoefficientMatrix) -> RealignmentResult:
    """Qutrit realignment criterion evaluated striation by striation.

    For each of the four striations, sum the squared coset masses m_ell
    (the total coefficient weight on each of its three cosets) and add
    sqrt(6 * sum m_ell^2 - 2); the state is detected when the total
    exceeds 2. The value always equals ||B||_1 - 1, so the detected flag
    agrees with realignment_fast. Radicands are non-negative up to
    round-off and are clipped at 0.
    """
    _require_qutrit(cm)
    coset_idx, striation_rows, _ = _qutrit_tables()
    flat = cm.c.reshape(-1)
    masses = flat[coset_idx].sum(axis=1)
    value = 0.0
    for rows in striation_rows:
        radicand = 6.0 * float((masses[rows] ** 2).sum()) - 2.0
        value += np.sqrt(max(radicand, 0.0))
    return RealignmentResult(value, value > 2.0 + DETECTION_GUARD)


@lru_cache(maxsize=1)
def _block_kernel() -> np.ndarray:
    """Kernel K with A_m = sum_{k,l} K[m,k,l] c_{k,l} for the qutrit blocks."""
    omega = np.exp(2j * np.pi / 3)
    k = np.empty((3, 3, 3, 3, 3), dtype=complex)
    ws = [[weyl_operator(3, (i, j)) for j in range(3)] for i in range(3)]
    for m in range(3):
        for kk in range(3):
            for ll in range(3):
                acc = np.zeros((3, 3), dtype=complex)
                for i in range(3):
                    for j in range(3):
                        acc += omega ** ((j * (m - kk) - i * (ll + j)) % 3) * ws[i][j]
                k[m, kk, ll] = acc / 9.0
    k.flags.writeable = False
    return k


def ppt_blocks(cm: CoefficientMatrix) -> list[np.ndarray]:
    """The three 3 x 3 Hermitian blocks of the qutrit partial transpose.

    In the Bell basis rho^Gamma is unitarily equivalent to a direct sum of
    blocks A_0, A_1, A_2 with A_m = W_{m,0}^dagger A_0 W_{m,0}, so all
    three share one spectrum and det(rho^Gamma) = det(A_0)^3. Each block
    has trace 1/3.
    """
    _require_qutrit(cm)
    blocks = np.tensordot(_block_kernel(), cm.c, axes=([1, 2], [0, 1]))
    return [blocks[m] for m in range(3)]


def ppt_det_qutrit(cm: CoefficientMatrix) -> DetCriterionResult:
    """Qutrit PPT criterion as a cubic coefficient inequality.

    lhs is 3 times the sum over the 12 cosets of the product of the three
    coefficients on the coset; rhs is the sum of cubes. The state is NPT
    precisely when lhs < rhs (evaluated with a 1e-12 guard band), which is
    the sign of det(A_0) of the block decomposition.
    """
    _require_qutrit(cm)
    coset_idx, _, _ = _qutrit_tables()
    flat = cm.c.reshape(-1)
    lhs = 3.0 * float(flat[coset_idx].prod(axis=1).sum())
    rhs = float((flat**3).sum())
    return DetCriterionResult(lhs, rhs, lhs < rhs - DETECTION_GUARD)


def ppt_oracle(cm: CoefficientMatrix) -> PptOracleResult:
    """Brute-force PPT criterion for any d.

    Builds the dense density matrix, partial transposes it, and takes the
    minimum eigenvalue. is_npt means the minimum eigenvalue is below
    -1e-10 (the eigensolver accuracy budget).
    """
    _require_cm(cm)
    rho = density_from_coefficients(cm)
    evs = linalg.hermitian_eigenvalues(partial_transpose(rho, cm.d, cm.d))
    min_eig = float(evs[0])
    return PptOracleResult(min_eig, min_eig < -PSD_TOL)


def witness_kappa(cm: CoefficientMatrix) -> np.ndarray:
    """Witness coefficients kappa tailored to a qutrit state.

    kappa_{i,j} is minus the squared coefficient at (i, j) plus, for each
    of the four cosets through (i, j), the product of the coefficients at
    the other two points. The operator sum kappa_{i,j} P_{i,j} has a
    negative expectation value on the state exactly when the state is
    NPT. Returned as a real 3 x 3 array.
    """
    _require_qutrit(cm)
    _, _, partners = _qutrit_tables()
    flat = cm.c.reshape(-1)
    pair_products = (flat[partners[:, :, 0]] * flat[partners[:, :, 1]]).sum(axis=1)
    return (pair_products - flat**2).reshape(3, 3)


def witness_value(c_state: CoefficientMatrix, kappa) -> float:
    """Expectation value tr(rho W) of a witness on a Bell-diagonal state.

    By Bell-basis orthonormality this is sum kappa_{i,j} c_{i,j}. With
    kappa = witness_kappa(c_state) it equals lhs - rhs of the cubic
    criterion, so a negative value certifies NPT.
    """
    _require_qutrit(c_state)
    k = np.asarray(kappa, dtype=float)
    if k.shape != (3, 3):
        raise WrongDimensionError(f"witness matrix must be 3x3, got {k.shape}")
    return float((k * c_state.c).sum())


@lru_cache(maxsize=1)
def _weyl_stack_3() -> np.ndarray:
    ws = np.stack([weyl_operator(3, (i, j)) for i in range(3) for j in range(3)])
    ws.flags.writeable = False
    return ws


def choi_map_apply(kappa, sigma) -> np.ndarray:
    """Apply the positive map induced by a witness, sum kappa W sigma W^dagger.

    Agrees with the partial-trace form 3 * tr_B(W_NPT (1 (x) sigma^T)).
    """
    k = np.asarray(kappa, dtype=float)
    if k.shape != (3, 3):
        raise WrongDimensionError(f"witness matrix must be 3x3, got {k.shape}")
    s = np.asarray(sigma)
    if s.shape != (3, 3):
        raise WrongDimensionError(f"choi_map_apply needs a 3x3 input, got {s.shape}")
    s = s.astype(complex, copy=False)
    ws = _weyl_stack_3()
    return np.einsum("n,nab,bc,ndc->ad", k.reshape(-1), ws, s, ws.conj())


def classify(cm: CoefficientMatrix) -> ClassificationRecord:
    """Run both criteria on a state and assemble the combined verdict.

    Realignment always uses the fast Bloch form. The PPT side uses the
    cubic det criterion for d=3 and the dense eigensolve oracle otherwise.
    Labels: NPT states are "NPT-entangled"; PPT states detected by
    realignment are "PPT-entangled (detected)"; PPT qubit states are
    "separable" (PPT is sufficient at d=2); everything else is
    "undetected" since PPT-entangled states that realignment misses exist
    for d >= 3.
    """
    _require_cm(cm)
    value, detected = realignment_fast(cm)
    if cm.d == 3:
        lhs, rhs, is_npt = ppt_det_qutrit(cm)
        ppt_value = rhs - lhs
        method = "det-criterion"
    else:
        ppt_value, is_npt = ppt_oracle(cm)
        method = "dense-eigensolve"
    if not is_npt and detected:
        label = LABEL_PPT_DETECTED
    elif not is_npt and cm.d == 2:
        label = LABEL_SEPARABLE
    elif not is_npt:
        label = LABEL_UNDETECTED
    else:
        label = LABEL_NPT
    return ClassificationRecord(
        d=cm.d,
        realignment_value=value,
        realignment_trace_norm=value / cm.d,
        realignment_detected=detected,
        ppt_value=float(ppt_value),
        ppt_method=method,
        is_ppt=not is_npt,
        label=label,
    )
