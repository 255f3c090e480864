"""Fast detection criteria against their dense oracles, plus witnesses."""

import numpy as np
import pytest

from belldiag.detection import (
    DETECTION_GUARD,
    LABEL_NPT,
    LABEL_PPT_DETECTED,
    LABEL_SEPARABLE,
    LABEL_UNDETECTED,
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
from belldiag.errors import InvalidBlochError, WrongDimensionError
from belldiag.linalg import hermitian_eigenvalues, kron
from belldiag.phase_space import all_cosets, coset_preserving_maps, subgroup_state
from belldiag.weyl import (
    CoefficientMatrix,
    bell_projector,
    density_from_coefficients,
    partial_transpose,
    realign,
    weyl_operator,
)

from conftest import match_multisets, rand_coeffs


def delta_state(d, k, l):
    c = np.zeros((d, d))
    c[k, l] = 1.0
    return CoefficientMatrix(c)


def maximally_mixed(d):
    return CoefficientMatrix(np.full((d, d), 1.0 / (d * d)))


def uniform_rows_state(x):
    """Full first row uniform at (1-3x)/3... kept simple: see family helpers."""


def family_row_plus_two(x):
    """Uniform first row bled into two entries of the second row."""
    return CoefficientMatrix(
        np.array([[1 / 3 - x, 1 / 3 - x, 1 / 3 - x], [2 * x, x, 0.0], [0.0, 0.0, 0.0]])
    )


def family_row_plus_column(x):
    """Uniform first row bled into the first column."""
    return CoefficientMatrix(
        np.array([[1 / 3 - x, 1 / 3 - x, 1 / 3 - x], [2 * x, 0.0, 0.0], [x, 0.0, 0.0]])
    )


def apply_map(cm, perm):
    """Push a coefficient matrix through a phase-space permutation."""
    d = cm.d
    out = np.empty(d * d)
    out[perm] = cm.c.reshape(-1)
    return CoefficientMatrix(out.reshape(d, d))


def bloch_by_hand(c):
    d = c.shape[0]
    omega = np.exp(2j * np.pi / d)
    b = np.empty((d, d), dtype=complex)
    for j in range(d):
        for i in range(d):
            acc = 0.0 + 0.0j
            for k in range(d):
                for l in range(d):
                    acc += c[k, l] * omega ** ((i * l - j * k) % d)
            b[j, i] = acc
    return b


class TestBlochMatrix:
    def test_point_mass_gives_all_ones(self):
        b = bloch_from_coefficients(delta_state(3, 0, 0))
        assert np.allclose(b, np.ones((3, 3)), atol=1e-13)

    def test_maximally_mixed_gives_single_one(self):
        b = bloch_from_coefficients(maximally_mixed(4))
        expected = np.zeros((4, 4))
        expected[0, 0] = 1.0
        assert np.allclose(b, expected, atol=1e-13)

    def test_row_subgroup_state_fills_first_column(self):
        cm = subgroup_state(all_cosets(3)[0])
        b = bloch_from_coefficients(cm)
        expected = np.zeros((3, 3))
        expected[:, 0] = 1.0
        assert np.allclose(b, expected, atol=1e-13)

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_matches_term_by_term_sum(self, d):
        rng = np.random.default_rng(100 + d)
        for _ in range(5):
            cm = rand_coeffs(rng, d)
            assert np.allclose(
                bloch_from_coefficients(cm), bloch_by_hand(cm.c), atol=1e-12
            )

    def test_corner_is_one_and_entries_bounded(self):
        rng = np.random.default_rng(5)
        for d in (2, 3, 5):
            for _ in range(20):
                b = bloch_from_coefficients(rand_coeffs(rng, d))
                assert abs(b[0, 0] - 1.0) < 1e-12
                assert np.max(np.abs(b)) <= 1.0 + 1e-12

    def test_rejects_raw_array(self):
        with pytest.raises(TypeError):
            bloch_from_coefficients(np.eye(3) / 3)


class TestCoefficientsFromBloch:
    @pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
    def test_roundtrip(self, d):
        rng = np.random.default_rng(200 + d)
        for _ in range(10):
            cm = rand_coeffs(rng, d)
            back = coefficients_from_bloch(bloch_from_coefficients(cm))
            assert np.allclose(back.c, cm.c, atol=1e-12)

    def test_all_ones_is_point_mass(self):
        back = coefficients_from_bloch(np.ones((3, 3)))
        assert np.allclose(back.c, delta_state(3, 0, 0).c, atol=1e-13)

    def test_rejects_wrong_corner(self):
        b = np.ones((3, 3))
        b[0, 0] = 2.0
        with pytest.raises(InvalidBlochError):
            coefficients_from_bloch(b)

    def test_rejects_non_coefficient_image(self):
        rng = np.random.default_rng(3)
        b = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        b[0, 0] = 1.0
        with pytest.raises(InvalidBlochError):
            coefficients_from_bloch(b)

    def test_rejects_negative_preimage(self):
        b = bloch_from_coefficients(delta_state(3, 0, 0))
        with pytest.raises(InvalidBlochError):
            coefficients_from_bloch(-b)

    def test_rejects_bad_shapes_and_nan(self):
        with pytest.raises(InvalidBlochError):
            coefficients_from_bloch(np.ones((2, 3)))
        with pytest.raises(InvalidBlochError):
            coefficients_from_bloch(np.ones((1, 1)))
        b = np.ones((3, 3))
        b[1, 1] = np.nan
        with pytest.raises(InvalidBlochError):
            coefficients_from_bloch(b)


class TestRealignmentFast:
    def test_point_mass_golden(self):
        value, detected = realignment_fast(delta_state(3, 0, 0))
        assert abs(value - 9.0) < 1e-12
        assert detected

    def test_maximally_mixed_golden(self):
        for d in (2, 3, 4):
            value, detected = realignment_fast(maximally_mixed(d))
            assert abs(value - 1.0) < 1e-12
            assert not detected

    def test_subgroup_states_sit_on_threshold(self):
        for ell in all_cosets(3):
            value, detected = realignment_fast(subgroup_state(ell))
            assert abs(value - 3.0) < 1e-12
            assert not detected

    @pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
    def test_matches_dense_oracle(self, d):
        rng = np.random.default_rng(300 + d)
        for _ in range(25):
            cm = rand_coeffs(rng, d)
            value, detected = realignment_fast(cm)
            tn = realignment_oracle(cm)
            assert abs(value / d - tn) < 1e-9
            if abs(tn - 1.0) > 1e-9:
                assert detected == (tn > 1.0)

    def test_trace_norm_scaling(self):
        cm = maximally_mixed(3)
        assert abs(realignment_oracle(cm) - 1 / 3) < 1e-12


class TestRealignedSpectrum:
    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_matches_dense_eigenvalues(self, d):
        rng = np.random.default_rng(400 + d)
        for _ in range(10):
            cm = rand_coeffs(rng, d)
            rho = density_from_coefficients(cm)
            dense = np.linalg.eigvals(realign(rho, d, d))
            match_multisets(realigned_spectrum(cm), dense, 1e-9)

    def test_sorted_and_sized(self):
        rng = np.random.default_rng(9)
        spec = realigned_spectrum(rand_coeffs(rng, 3))
        assert spec.shape == (9,)
        assert np.all(np.diff(spec.real) > -1e-15)

    def test_absolute_sum_is_trace_norm(self):
        rng = np.random.default_rng(10)
        for _ in range(10):
            cm = rand_coeffs(rng, 3)
            assert abs(np.abs(realigned_spectrum(cm)).sum() - realignment_oracle(cm)) < 1e-9

    def test_point_mass_spectrum(self):
        spec = realigned_spectrum(delta_state(2, 0, 0))
        match_multisets(spec, [0.5, 0.5, 0.5, 0.5], 1e-12)


class TestSubgroupForm:
    def test_point_mass_golden(self):
        value, detected = realignment_qutrit_subgroup_form(delta_state(3, 0, 0))
        assert abs(value - 8.0) < 1e-12
        assert detected

    def test_maximally_mixed_golden(self):
        value, detected = realignment_qutrit_subgroup_form(maximally_mixed(3))
        assert abs(value) < 1e-12
        assert not detected

    def test_subgroup_state_boundary(self):
        for ell in all_cosets(3):
            value, detected = realignment_qutrit_subgroup_form(subgroup_state(ell))
            assert abs(value - 2.0) < 1e-12
            assert not detected

    def test_equals_bloch_norm_minus_one(self):
        rng = np.random.default_rng(20)
        for _ in range(200):
            cm = rand_coeffs(rng, 3)
            sub = realignment_qutrit_subgroup_form(cm)
            fast = realignment_fast(cm)
            assert abs(sub.value - (fast.value - 1.0)) < 1e-9
            assert sub.detected == fast.detected

    def test_qutrit_only(self):
        with pytest.raises(WrongDimensionError):
            realignment_qutrit_subgroup_form(maximally_mixed(2))


class TestPptBlocks:
    def test_maximally_mixed_blocks(self):
        for a in ppt_blocks(maximally_mixed(3)):
            assert np.allclose(a, np.eye(3) / 9, atol=1e-13)

    def test_hermitian_with_trace_third(self):
        rng = np.random.default_rng(30)
        for _ in range(20):
            blocks = ppt_blocks(rand_coeffs(rng, 3))
            for a in blocks:
                assert np.linalg.norm(a - a.conj().T) < 1e-12
                assert abs(np.trace(a).real - 1 / 3) < 1e-12

    def test_blocks_are_conjugates_of_first(self):
        rng = np.random.default_rng(31)
        for _ in range(10):
            blocks = ppt_blocks(rand_coeffs(rng, 3))
            for m in (1, 2):
                w = weyl_operator(3, (m, 0))
                assert np.allclose(blocks[m], w.conj().T @ blocks[0] @ w, atol=1e-12)

    def test_union_matches_dense_partial_transpose_spectrum(self):
        rng = np.random.default_rng(32)
        for _ in range(10):
            cm = rand_coeffs(rng, 3)
            pooled = np.concatenate(
                [hermitian_eigenvalues(a) for a in ppt_blocks(cm)]
            )
            rho_pt = partial_transpose(density_from_coefficients(cm), 3, 3)
            dense = hermitian_eigenvalues(rho_pt)
            match_multisets(pooled, dense, 1e-9)

    def test_determinant_identities(self):
        rng = np.random.default_rng(33)
        for _ in range(10):
            cm = rand_coeffs(rng, 3)
            det0 = np.linalg.det(ppt_blocks(cm)[0]).real
            lhs, rhs, _ = ppt_det_qutrit(cm)
            assert abs(det0 - (lhs - rhs) / 27.0) < 1e-12
            rho_pt = partial_transpose(density_from_coefficients(cm), 3, 3)
            assert abs(np.linalg.det(rho_pt).real - det0**3) < 1e-12

    def test_qutrit_only(self):
        with pytest.raises(WrongDimensionError):
            ppt_blocks(maximally_mixed(2))


class TestPptDetQutrit:
    def test_point_mass_golden(self):
        lhs, rhs, is_npt = ppt_det_qutrit(delta_state(3, 0, 0))
        assert lhs == 0.0
        assert abs(rhs - 1.0) < 1e-15
        assert is_npt

    def test_maximally_mixed_golden(self):
        lhs, rhs, is_npt = ppt_det_qutrit(maximally_mixed(3))
        assert abs(lhs - 36 / 729) < 1e-15
        assert abs(rhs - 9 / 729) < 1e-15
        assert not is_npt

    def test_subgroup_state_boundary(self):
        for ell in all_cosets(3):
            lhs, rhs, is_npt = ppt_det_qutrit(subgroup_state(ell))
            assert abs(lhs - 1 / 9) < 1e-15
            assert abs(rhs - 1 / 9) < 1e-15
            assert not is_npt

    def test_matches_dense_oracle(self):
        rng = np.random.default_rng(40)
        for _ in range(300):
            cm = rand_coeffs(rng, 3)
            lhs, rhs, is_npt = ppt_det_qutrit(cm)
            oracle = ppt_oracle(cm)
            if abs(lhs - rhs) > 1e-9:
                assert is_npt == oracle.is_npt

    def test_qutrit_only(self):
        with pytest.raises(WrongDimensionError):
            ppt_det_qutrit(maximally_mixed(4))


class TestPptOracle:
    def test_qubit_point_mass(self):
        res = ppt_oracle(delta_state(2, 0, 0))
        assert abs(res.min_eigenvalue - (-0.5)) < 1e-12
        assert res.is_npt

    def test_maximally_mixed(self):
        for d in (2, 3, 4):
            res = ppt_oracle(maximally_mixed(d))
            assert abs(res.min_eigenvalue - 1 / d**2) < 1e-12
            assert not res.is_npt

    def test_qutrit_spectrum_window_and_negative_count(self):
        rng = np.random.default_rng(41)
        for _ in range(100):
            cm = rand_coeffs(rng, 3)
            rho_pt = partial_transpose(density_from_coefficients(cm), 3, 3)
            evs = hermitian_eigenvalues(rho_pt)
            assert evs[0] >= -1 / 3 - 1e-9
            assert evs[-1] <= 1 / 3 + 1e-9
            assert int((evs < -1e-12).sum()) in (0, 3)


def kappa_term_by_term(c):
    """The nine witness coefficients written out, one coset partner pair
    per term: horizontal, vertical, diagonal, anti-diagonal."""
    k = np.empty((3, 3))
    k[0, 0] = -c[0, 0] ** 2 + c[0, 1] * c[0, 2] + c[1, 0] * c[2, 0] + c[1, 1] * c[2, 2] + c[1, 2] * c[2, 1]
    k[0, 1] = -c[0, 1] ** 2 + c[0, 0] * c[0, 2] + c[1, 1] * c[2, 1] + c[1, 2] * c[2, 0] + c[1, 0] * c[2, 2]
    k[0, 2] = -c[0, 2] ** 2 + c[0, 0] * c[0, 1] + c[1, 2] * c[2, 2] + c[1, 0] * c[2, 1] + c[1, 1] * c[2, 0]
    k[1, 0] = -c[1, 0] ** 2 + c[1, 1] * c[1, 2] + c[0, 0] * c[2, 0] + c[0, 2] * c[2, 1] + c[0, 1] * c[2, 2]
    k[1, 1] = -c[1, 1] ** 2 + c[1, 0] * c[1, 2] + c[0, 1] * c[2, 1] + c[0, 0] * c[2, 2] + c[0, 2] * c[2, 0]
    k[1, 2] = -c[1, 2] ** 2 + c[1, 0] * c[1, 1] + c[0, 2] * c[2, 2] + c[0, 1] * c[2, 0] + c[0, 0] * c[2, 1]
    k[2, 0] = -c[2, 0] ** 2 + c[2, 1] * c[2, 2] + c[0, 0] * c[1, 0] + c[0, 1] * c[1, 2] + c[0, 2] * c[1, 1]
    k[2, 1] = -c[2, 1] ** 2 + c[2, 0] * c[2, 2] + c[0, 1] * c[1, 1] + c[0, 2] * c[1, 0] + c[0, 0] * c[1, 2]
    k[2, 2] = -c[2, 2] ** 2 + c[2, 0] * c[2, 1] + c[0, 2] * c[1, 2] + c[0, 0] * c[1, 1] + c[0, 1] * c[1, 0]
    return k


class TestWitness:
    def test_maximally_mixed_kappa_uniform(self):
        k = witness_kappa(maximally_mixed(3))
        assert np.allclose(k, np.full((3, 3), 1 / 27), atol=1e-15)

    def test_point_mass_kappa(self):
        k = witness_kappa(delta_state(3, 0, 0))
        expected = np.zeros((3, 3))
        expected[0, 0] = -1.0
        assert np.allclose(k, expected, atol=1e-15)

    def test_subgroup_states_give_exact_zero(self):
        for ell in all_cosets(3):
            k = witness_kappa(subgroup_state(ell))
            assert np.all(k == 0.0)

    def test_matches_term_by_term_expansion(self):
        rng = np.random.default_rng(50)
        for _ in range(50):
            cm = rand_coeffs(rng, 3)
            assert np.allclose(witness_kappa(cm), kappa_term_by_term(cm.c), atol=1e-14)

    def test_value_equals_cubic_margin(self):
        rng = np.random.default_rng(51)
        for _ in range(100):
            cm = rand_coeffs(rng, 3)
            lhs, rhs, is_npt = ppt_det_qutrit(cm)
            val = witness_value(cm, witness_kappa(cm))
            assert abs(val - (lhs - rhs)) < 1e-12
            if abs(val) > 1e-9:
                assert (val < 0) == is_npt

    def test_value_goldens(self):
        assert abs(witness_value(delta_state(3, 0, 0), witness_kappa(delta_state(3, 0, 0))) - (-1.0)) < 1e-15
        mm = maximally_mixed(3)
        assert abs(witness_value(mm, witness_kappa(mm)) - 1 / 27) < 1e-15
        sub = subgroup_state(all_cosets(3)[0])
        assert witness_value(sub, witness_kappa(sub)) == 0.0

    def test_witness_operator_expectation(self):
        rng = np.random.default_rng(52)
        cm = rand_coeffs(rng, 3)
        probe = rand_coeffs(rng, 3)
        k = witness_kappa(cm)
        op = sum(
            k[i, j] * bell_projector(3, (i, j)) for i in range(3) for j in range(3)
        )
        rho = density_from_coefficients(probe)
        assert abs(np.trace(rho @ op).real - witness_value(probe, k)) < 1e-12

    def test_shape_checks(self):
        cm = maximally_mixed(3)
        with pytest.raises(WrongDimensionError):
            witness_value(cm, np.ones((2, 2)))
        with pytest.raises(WrongDimensionError):
            witness_value(maximally_mixed(2), np.ones((3, 3)))


class TestChoiMap:
    def test_point_mass_witness_is_identity_map(self):
        k = np.zeros((3, 3))
        k[0, 0] = 1.0
        rng = np.random.default_rng(60)
        s = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        assert np.allclose(choi_map_apply(k, s), s, atol=1e-13)

    def test_zero_witness_is_zero_map(self):
        out = choi_map_apply(np.zeros((3, 3)), np.eye(3))
        assert np.allclose(out, 0.0, atol=1e-15)

    def test_uniform_witness_scales_identity(self):
        k = np.full((3, 3), 1 / 27)
        out = choi_map_apply(k, np.eye(3) / 3)
        assert np.allclose(out, np.eye(3) / 9, atol=1e-14)

    def test_agrees_with_partial_trace_form(self):
        rng = np.random.default_rng(61)
        for _ in range(20):
            cm = rand_coeffs(rng, 3)
            k = witness_kappa(cm)
            s = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
            s = s @ s.conj().T
            op = sum(
                k[i, j] * bell_projector(3, (i, j)) for i in range(3) for j in range(3)
            )
            m = (op @ kron(np.eye(3), s.T)).reshape(3, 3, 3, 3)
            via_trace = 3.0 * np.einsum("abcb->ac", m)
            assert np.allclose(choi_map_apply(k, s), via_trace, atol=1e-12)

    def test_preserves_hermiticity(self):
        rng = np.random.default_rng(62)
        k = witness_kappa(rand_coeffs(rng, 3))
        s = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        s = (s + s.conj().T) / 2
        out = choi_map_apply(k, s)
        assert np.linalg.norm(out - out.conj().T) < 1e-12

    def test_shape_checks(self):
        with pytest.raises(WrongDimensionError):
            choi_map_apply(np.ones((2, 2)), np.eye(3))
        with pytest.raises(WrongDimensionError):
            choi_map_apply(np.ones((3, 3)), np.eye(2))


class TestClassify:
    def test_point_mass_qutrit(self):
        rec = classify(delta_state(3, 0, 0))
        assert rec.label == LABEL_NPT
        assert not rec.is_ppt
        assert rec.ppt_method == "det-criterion"
        assert abs(rec.ppt_value - 1.0) < 1e-15
        assert rec.realignment_detected
        assert abs(rec.realignment_value - 9.0) < 1e-12
        assert abs(rec.realignment_trace_norm - 3.0) < 1e-12

    def test_maximally_mixed_labels(self):
        assert classify(maximally_mixed(2)).label == LABEL_SEPARABLE
        assert classify(maximally_mixed(3)).label == LABEL_UNDETECTED
        rec = classify(maximally_mixed(4))
        assert rec.label == LABEL_UNDETECTED
        assert rec.ppt_method == "dense-eigensolve"
        assert abs(rec.ppt_value - 1 / 16) < 1e-12

    def test_subgroup_states_undetected(self):
        for ell in all_cosets(3):
            assert classify(subgroup_state(ell)).label == LABEL_UNDETECTED
        for ell in all_cosets(2):
            assert classify(subgroup_state(ell)).label == LABEL_SEPARABLE

    def test_family_row_plus_two(self):
        rec = classify(family_row_plus_two(0.0))
        assert rec.label == LABEL_UNDETECTED
        assert abs(rec.ppt_value) < 1e-15
        for x in (0.05, 0.1, 1 / 3):
            assert classify(family_row_plus_two(x)).label == LABEL_NPT

    def test_family_row_plus_column(self):
        for x in (0.05, 0.1, 2 / 15):
            rec = classify(family_row_plus_column(x))
            assert rec.label == LABEL_PPT_DETECTED
            assert rec.is_ppt
            assert rec.realignment_detected
        assert classify(family_row_plus_column(2 / 15)).is_ppt
        assert classify(family_row_plus_column(0.14)).label == LABEL_NPT

    def test_qubit_criteria_coincide(self):
        rng = np.random.default_rng(70)
        for _ in range(500):
            cm = rand_coeffs(rng, 2)
            rec = classify(cm)
            if abs(rec.realignment_trace_norm - 1.0) > 1e-9:
                assert rec.realignment_detected == (not rec.is_ppt)
                assert rec.label in (LABEL_NPT, LABEL_SEPARABLE)

    def test_to_dict_keys(self):
        rec = classify(maximally_mixed(3))
        assert set(rec.to_dict()) == {
            "d",
            "realignment_value",
            "realignment_trace_norm",
            "realignment_detected",
            "ppt_value",
            "ppt_method",
            "is_ppt",
            "label",
        }

    def test_rejects_raw_array(self):
        with pytest.raises(TypeError):
            classify(np.full((3, 3), 1 / 9))


class TestSymmetryInvariance:
    def test_both_functionals_invariant_under_affine_maps(self):
        rng = np.random.default_rng(80)
        perms = coset_preserving_maps(3)
        for _ in range(10):
            cm = rand_coeffs(rng, 3)
            base_fast = realignment_fast(cm).value
            base_lhs, base_rhs, _ = ppt_det_qutrit(cm)
            for perm in perms:
                mapped = apply_map(cm, perm)
                assert abs(realignment_fast(mapped).value - base_fast) < 1e-12
                lhs, rhs, _ = ppt_det_qutrit(mapped)
                assert abs(lhs - base_lhs) < 1e-12
                assert abs(rhs - base_rhs) < 1e-12

    def test_labels_invariant(self):
        rng = np.random.default_rng(81)
        perms = coset_preserving_maps(3)
        states = [rand_coeffs(rng, 3) for _ in range(3)]
        states.append(family_row_plus_column(0.1))
        for cm in states:
            label = classify(cm).label
            for perm in perms[:: len(perms) // 36]:
                assert classify(apply_map(cm, perm)).label == label


ZERO_ROW_PATTERNS = {
    "single-point": [[1, 0, 0], [0, 0, 0], [0, 0, 0]],
    "two-in-row": [[1, 1, 0], [0, 0, 0], [0, 0, 0]],
    "corner-l": [[1, 1, 0], [1, 0, 0], [0, 0, 0]],
    "full-row": [[1, 1, 1], [0, 0, 0], [0, 0, 0]],
    "row-plus-one": [[1, 1, 1], [1, 0, 0], [0, 0, 0]],
    "two-by-two": [[1, 1, 0], [1, 1, 0], [0, 0, 0]],
    "row-plus-two": [[1, 1, 1], [1, 1, 0], [0, 0, 0]],
    "two-rows": [[1, 1, 1], [1, 1, 1], [0, 0, 0]],
}


class TestZeroCosetStates:
    """States with an entire coset at zero are never PPT-entangled."""

    @pytest.mark.parametrize("name", sorted(ZERO_ROW_PATTERNS))
    def test_generic_patterns_are_npt(self, name):
        mask = np.array(ZERO_ROW_PATTERNS[name], dtype=float)
        rng = np.random.default_rng(abs(hash(name)) % 2**32)
        for _ in range(20):
            c = mask * rng.exponential(size=(3, 3))
            cm = CoefficientMatrix(c / c.sum())
            assert classify(cm).label == LABEL_NPT

    def test_uniform_full_row_is_ppt_boundary(self):
        cm = CoefficientMatrix(np.array([[1, 1, 1], [0, 0, 0], [0, 0, 0]]) / 3)
        rec = classify(cm)
        assert rec.is_ppt
        assert rec.label == LABEL_UNDETECTED

    def test_two_uniform_rows_are_ppt(self):
        rng = np.random.default_rng(90)
        for _ in range(10):
            a = rng.uniform(0.05, 0.95)
            c = np.zeros((3, 3))
            c[0, :] = a / 3
            c[1, :] = (1 - a) / 3
            rec = classify(CoefficientMatrix(c))
            assert rec.is_ppt
            assert rec.label == LABEL_UNDETECTED

    def test_random_zeroed_cosets_never_ppt_detected(self):
        rng = np.random.default_rng(91)
        for ell in all_cosets(3):
            dead = set(ell.elements)
            for _ in range(25):
                c = rng.exponential(size=(3, 3))
                for k, l in dead:
                    c[k, l] = 0.0
                cm = CoefficientMatrix(c / c.sum())
                assert classify(cm).label != LABEL_PPT_DETECTED
