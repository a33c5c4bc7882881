import math
from fractions import Fraction

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given, settings

from symclone.cloner import (
    alpha_d,
    alpha_d_sq,
    alpha_qubit,
    alpha_qubit_sq,
    ancilla_dim,
    clone_amplitudes,
    clone_channel,
    concatenate,
    isometry_gram,
    uqcm_pure_output,
)
from symclone.symspace import (
    Composition,
    InvalidParameterError,
    basis_projector,
    dim,
    enumerate_basis,
    reduce_one,
    sym_operator,
)


class TestAlphaQubit:
    def test_one_to_two(self):
        assert alpha_qubit_sq(0, 0, 1, 2) == Fraction(2, 3)
        assert alpha_qubit_sq(0, 1, 1, 2) == Fraction(1, 3)
        assert alpha_qubit(0, 0, 1, 2) == math.sqrt(2 / 3)

    def test_identity_when_no_copies_added(self):
        for m in range(0, 5):
            for j in range(m + 1):
                assert alpha_qubit_sq(j, 0, m, m) == 1

    def test_out_of_range(self):
        with pytest.raises(InvalidParameterError):
            alpha_qubit(3, 0, 2, 4)
        with pytest.raises(InvalidParameterError):
            alpha_qubit(0, 3, 2, 4)
        with pytest.raises(InvalidParameterError):
            alpha_qubit(0, 0, 3, 2)


class TestAlphaD:
    def test_reduces_to_qubit_form(self):
        for m in range(0, 4):
            for l in range(m, m + 4):
                for j in range(m + 1):
                    for k in range(l - m + 1):
                        general = alpha_d_sq(
                            Composition((m - j, j)),
                            Composition((l - m - k, k)),
                            m,
                            l,
                        )
                        assert general == alpha_qubit_sq(j, k, m, l)

    def test_identity_when_no_copies_added(self):
        for c in enumerate_basis(3, 2).order:
            assert alpha_d_sq(c, Composition((0, 0, 0)), 2, 2) == 1

    def test_three_level_example(self):
        got = alpha_d_sq(Composition((1, 0, 0)), Composition((1, 1, 0)), 1, 3)
        assert got == Fraction(1, 5)
        assert alpha_d(Composition((1, 0, 0)), Composition((1, 1, 0)), 1, 3) == math.sqrt(0.2)

    def test_weight_mismatch(self):
        with pytest.raises(InvalidParameterError):
            alpha_d_sq(Composition((1, 0)), Composition((1, 0)), 2, 3)
        with pytest.raises(InvalidParameterError):
            alpha_d_sq(Composition((1, 0)), Composition((2, 0)), 1, 2)
        with pytest.raises(InvalidParameterError):
            alpha_d_sq(Composition((1, 0)), Composition((1, 0, 0)), 1, 2)

    @given(d=st.integers(2, 4), m=st.integers(0, 3), extra=st.integers(0, 4))
    @settings(max_examples=40)
    def test_normalization_is_exact(self, d, m, extra):
        l = m + extra
        added = enumerate_basis(d, l - m).order
        for j in enumerate_basis(d, m).order:
            total = sum((alpha_d_sq(j, k, m, l) for k in added), Fraction(0))
            assert total == 1


class TestAncillaDim:
    def test_examples(self):
        assert ancilla_dim(2, 1, 2) == 2
        assert ancilla_dim(3, 1, 3) == len(enumerate_basis(3, 2).order) == 6
        for d in (2, 3, 4):
            assert ancilla_dim(d, 3, 3) == 1

    def test_counts_added_compositions(self):
        for d in (2, 3):
            for m in range(1, 4):
                for l in range(m, 7):
                    assert ancilla_dim(d, m, l) == len(enumerate_basis(d, l - m).order)

    def test_rejects_shrinking(self):
        with pytest.raises(InvalidParameterError):
            ancilla_dim(2, 3, 2)


class TestCloneChannel:
    def test_identity_at_equal_weights(self):
        rng = np.random.default_rng(11)
        x = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        op = sym_operator(2, 2, x)
        out = clone_channel(op, 2)
        assert np.array_equal(out.entries, op.entries)

    def test_pure_qubit_one_to_two(self):
        out = clone_channel(basis_projector(Composition((1, 0))), 2)
        np.testing.assert_allclose(
            out.entries, np.diag([2 / 3, 1 / 3, 0.0]), atol=1e-15
        )

    def test_unital_on_maximally_mixed_reduction(self):
        op = sym_operator(2, 1, np.eye(2) / 2)
        red = reduce_one(clone_channel(op, 2))
        np.testing.assert_allclose(red.entries, np.eye(2) / 2, atol=1e-12)

    def test_rejects_fewer_output_copies(self):
        with pytest.raises(InvalidParameterError):
            clone_channel(basis_projector(Composition((1, 1))), 1)

    @given(seed=st.integers(0, 2**32 - 1))
    @settings(max_examples=25)
    def test_trace_preserving_for_arbitrary_inputs(self, seed):
        rng = np.random.default_rng(seed)
        d, m = int(rng.integers(2, 4)), int(rng.integers(1, 3))
        l = m + int(rng.integers(0, 3))
        n = dim(d, m)
        x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        op = sym_operator(d, m, x)
        out = clone_channel(op, l)
        assert abs(out.trace() - op.trace()) < 1e-12

    def test_commutes_with_adjoint(self):
        rng = np.random.default_rng(3)
        n = dim(3, 2)
        x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        op = sym_operator(3, 2, x)
        assert np.array_equal(
            clone_channel(op.dagger(), 3).entries,
            clone_channel(op, 3).dagger().entries,
        )


class TestPureOutput:
    def test_one_to_two(self):
        out = uqcm_pure_output(2, 1, 2)
        np.testing.assert_allclose(
            out.entries, np.diag([2 / 3, 1 / 3, 0.0]), atol=1e-15
        )

    def test_no_growth_is_pure(self):
        for d, n in ((2, 1), (3, 2)):
            out = uqcm_pure_output(d, n, n)
            expected = basis_projector(Composition((n,) + (0,) * (d - 1)))
            assert np.array_equal(out.entries, expected.entries)

    def test_one_to_three(self):
        # direct factorial evaluation at j=0: alpha^2(k) = (3-k)/6
        out = uqcm_pure_output(2, 1, 3)
        np.testing.assert_allclose(
            out.entries, np.diag([1 / 2, 1 / 3, 1 / 6, 0.0]), atol=1e-15
        )

    def test_output_is_diagonal_with_unit_trace(self):
        for d, n, m in ((2, 2, 5), (3, 1, 4), (4, 2, 3)):
            out = uqcm_pure_output(d, n, m)
            off = out.entries - np.diag(np.diagonal(out.entries))
            assert np.max(np.abs(off)) == 0.0
            assert abs(out.trace() - 1) < 1e-12

    def test_invalid_parameters(self):
        with pytest.raises(InvalidParameterError):
            uqcm_pure_output(2, 0, 2)
        with pytest.raises(InvalidParameterError):
            uqcm_pure_output(2, 3, 2)


class TestIsometryGram:
    def test_small_qubit_cell(self):
        np.testing.assert_allclose(isometry_gram(2, 1, 2), np.eye(2), atol=1e-15)

    def test_identity_channel(self):
        for d, m in ((2, 3), (3, 2)):
            np.testing.assert_allclose(
                isometry_gram(d, m, m), np.eye(dim(d, m)), atol=1e-15
            )

    def test_qutrit_cell(self):
        assert len(enumerate_basis(3, 2).order) == 6
        np.testing.assert_allclose(isometry_gram(3, 2, 4), np.eye(6), atol=1e-12)

    def test_grid(self):
        for d in (2, 3):
            for m in (1, 2, 3):
                for l in range(m, m + 3):
                    gram = isometry_gram(d, m, l)
                    np.testing.assert_allclose(gram, np.eye(dim(d, m)), atol=1e-12)


class TestConcatenate:
    def test_two_stage_qubit(self):
        via, direct = concatenate(2, 1, 2, 3)
        # independent route: evaluate the factorial form at j=0 directly
        expected = [float(alpha_qubit_sq(0, p, 1, 3)) for p in range(3)] + [0.0]
        np.testing.assert_allclose(via.entries, np.diag(expected), atol=1e-14)
        np.testing.assert_allclose(via.entries, direct.entries, atol=1e-14)

    def test_trivial_first_stage(self):
        for d, n, l in ((2, 1, 3), (3, 2, 4)):
            via, direct = concatenate(d, n, n, l)
            assert np.array_equal(via.entries, direct.entries)

    def test_qutrit_case(self):
        via, direct = concatenate(3, 1, 2, 3)
        assert np.max(np.abs(via.entries - direct.entries)) <= 1e-12

    def test_ordering_violation(self):
        with pytest.raises(InvalidParameterError):
            concatenate(2, 2, 1, 3)
        with pytest.raises(InvalidParameterError):
            concatenate(2, 1, 3, 2)


class TestCloneAmplitudesTable:
    def test_rows_cover_product_of_bases(self):
        amps = clone_amplitudes(3, 1, 2)
        assert len(amps.rows) == dim(3, 1) * dim(3, 1)
        assert amps.d == 3 and amps.m == 1 and amps.l == 2

    def test_lookup_matches_direct_evaluation(self):
        amps = clone_amplitudes(2, 2, 4)
        for j, k, sq in amps.rows:
            assert sq == alpha_d_sq(j, k, 2, 4)
            assert amps.alpha_sq(j, k) == sq
            assert sq >= 0 and amps.alpha(j, k) >= 0.0

    def test_unknown_pair_rejected(self):
        amps = clone_amplitudes(2, 1, 2)
        with pytest.raises(InvalidParameterError):
            amps.alpha_sq(Composition((2, 0)), Composition((1, 0)))
