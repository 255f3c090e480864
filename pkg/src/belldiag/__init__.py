"""Entanglement detection for Bell-diagonal bipartite qudit states.

Bell-diagonal states of two qudits are convex mixtures of the d^2 Weyl
Bell projectors, described by a d x d coefficient matrix on the
probability simplex. This package classifies such states as entangled
using fast closed forms of the realignment and PPT criteria built on the
group structure of the Weyl operators, cross-validated against dense
brute-force oracles, and estimates the detection shares of both criteria
over uniformly sampled states.

Modules: :mod:`belldiag.linalg` (dense linear-algebra substrate),
:mod:`belldiag.weyl` (operators, Bell basis, density matrices, index
shuffles), :mod:`belldiag.phase_space` (subgroups, cosets, striations),
:mod:`belldiag.detection` (criteria, oracles, witness, classification),
:mod:`belldiag.montecarlo` (seeded sampling and share estimation), and
:mod:`belldiag.cli` (the command-line surface).
"""

from . import cli, detection, linalg, montecarlo, phase_space, weyl
from .detection import (
    ClassificationRecord,
    DetCriterionResult,
    PptOracleResult,
    RealignmentResult,
    bloch_from_coefficients,
    choi_map_apply,
    classify,
    coefficients_from_bloch,
    ppt_blocks,
    ppt_det_qutrit,
    ppt_oracle,
    realigned_spectrum,
    realignment_fast,
    realignment_oracle,
    realignment_qutrit_subgroup_form,
    witness_kappa,
    witness_value,
)
from .errors import (
    BellDiagError,
    DimensionMismatchError,
    DimensionTooSmallError,
    InvalidBlochError,
    InvalidCoefficientsError,
    InvalidMatrixError,
    NonPrimeDimensionError,
    NonSquareError,
    NotHermitianError,
    WrongDimensionError,
)
from .linalg import dft_matrix, hermitian_eigenvalues, kron, singular_values
from .montecarlo import (
    Prop1Counts,
    SamplerConfig,
    ShareReport,
    estimate_shares,
    proposition1_check,
    sample_uniform,
)
from .phase_space import (
    Coset,
    Striation,
    Subgroup,
    all_cosets,
    coset_preserving_maps,
    enumerate_subgroups,
    striation,
    striation_projectors,
    subgroup_state,
)
from .weyl import (
    CoefficientMatrix,
    bell_projector,
    bell_state,
    density_from_coefficients,
    flip_operator,
    partial_transpose,
    realign,
    weyl_operator,
)

__version__ = "0.1.0"
