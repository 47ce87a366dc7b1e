"""Conjugation operators, Hodge star, Com bracket, and the Hermitian scalar
product."""

import numpy as np
import pytest

import oracle
from cliffalg.algebra import (
    Multivector,
    Signature,
    all_signatures,
    blade,
    clifford_product,
    commutator,
    exterior_product,
    generator,
    indices_from_mask,
    random_multivector,
    trace,
    volume_element,
)
from cliffalg.involutions import (
    clifford_conjugate,
    com_bracket,
    complex_conjugate,
    dagger,
    grade_involution,
    hermitian_split,
    hodge_star,
    norm,
    reversion,
    scalar_product,
)

ALL_CONJUGATIONS = [grade_involution, reversion, complex_conjugate, clifford_conjugate, dagger]


class TestSignMaps:
    def test_grade_involution_examples(self):
        sig = Signature(2, 0)
        assert grade_involution(generator(sig, 1)).isclose(-generator(sig, 1), 0)
        assert grade_involution(blade(sig, [1, 2])).isclose(blade(sig, [1, 2]), 0)
        assert grade_involution(blade(sig, [])).isclose(blade(sig, []), 0)

    def test_reversion_examples(self):
        sig = Signature(3, 0)
        assert reversion(blade(sig, [1, 2])).isclose(-blade(sig, [1, 2]), 0)
        assert reversion(generator(sig, 1)).isclose(generator(sig, 1), 0)
        assert reversion(blade(sig, [1, 2, 3])).isclose(-blade(sig, [1, 2, 3]), 0)

    def test_clifford_conjugation(self):
        sig = Signature(2, 0)
        assert clifford_conjugate(Multivector.scalar(sig, 1j)).isclose(
            Multivector.scalar(sig, -1j), 0)
        assert clifford_conjugate(blade(sig, [1, 2])).isclose(-blade(sig, [1, 2]), 0)

    def test_volume_element_conjugate(self):
        for sig in all_signatures(6):
            ell = volume_element(sig)
            sign = (-1) ** (sig.n * (sig.n - 1) // 2)
            assert clifford_conjugate(ell).isclose(sign * ell, 0)

    @pytest.mark.parametrize("op", ALL_CONJUGATIONS)
    def test_involutivity(self, op, rng):
        for sig in all_signatures(5):
            u = random_multivector(sig, rng)
            assert op(op(u)).isclose(u, 1e-12)

    def test_composition_laws(self, rng):
        for sig in all_signatures(5):
            u, v = random_multivector(sig, rng), random_multivector(sig, rng)
            uv = clifford_product(u, v)
            assert grade_involution(uv).isclose(
                clifford_product(grade_involution(u), grade_involution(v)), 1e-10)
            assert reversion(uv).isclose(
                clifford_product(reversion(v), reversion(u)), 1e-10)
            assert clifford_conjugate(uv).isclose(
                clifford_product(clifford_conjugate(v), clifford_conjugate(u)), 1e-10)
            # the same laws hold for the exterior product
            w = exterior_product(u, v)
            assert reversion(w).isclose(
                exterior_product(reversion(v), reversion(u)), 1e-10)
            assert grade_involution(w).isclose(
                exterior_product(grade_involution(u), grade_involution(v)), 1e-10)

    def test_trace_of_conjugate(self, rng):
        for sig in all_signatures(4):
            u = random_multivector(sig, rng)
            assert abs(trace(clifford_conjugate(u)) - np.conj(trace(u))) < 1e-15


class TestHodgeStar:
    def test_frozen_examples(self):
        # expected values computed with the brute-force epsilon-sum oracle
        sig = Signature(3, 0)
        assert hodge_star(blade(sig, [])).isclose(volume_element(sig), 0)
        assert hodge_star(generator(sig, 1)).isclose(blade(sig, [2, 3]), 0)

    def test_volume_to_scalar(self):
        for sig in all_signatures(6):
            expected = sig.det_metric * Multivector.scalar(sig, 1.0)
            assert hodge_star(volume_element(sig)).isclose(expected, 0)

    def test_against_epsilon_sum_oracle(self, rng):
        for sig in all_signatures(5):
            u = random_multivector(sig, rng)
            assert hodge_star(u).isclose(oracle.hodge_star(u), 1e-10)

    def test_double_star_is_signed_det_eta(self, rng):
        # verified against the oracle per grade rather than an assumed form
        for sig in all_signatures(5):
            for k in range(sig.n + 1):
                u = random_multivector(sig, rng, grade=k)
                twice = hodge_star(hodge_star(u))
                oracle_twice = oracle.hodge_star(oracle.hodge_star(u))
                assert twice.isclose(oracle_twice, 1e-10)
                sign = scalar_product(u, twice).real / scalar_product(u, u).real
                assert abs(abs(sign) - 1) < 1e-9


class TestComBracket:
    def test_matches_commutator_example(self):
        sig = Signature(4, 0)
        u, v = blade(sig, [1, 2]), blade(sig, [2, 3])
        assert com_bracket(u, v).isclose(2 * blade(sig, [1, 3]), 1e-12)
        assert com_bracket(u, v).isclose(commutator(u, v), 1e-12)

    def test_antisymmetry(self, rng):
        sig = Signature(2, 2)
        u = random_multivector(sig, rng, grade=2)
        v = random_multivector(sig, rng, grade=2)
        assert com_bracket(u, v).isclose(-com_bracket(v, u), 1e-12)
        assert com_bracket(v, v).norm() < 1e-12

    def test_disjoint_blades_vanish(self):
        sig = Signature(4, 0)
        assert com_bracket(blade(sig, [1, 2]), blade(sig, [3, 4])).norm() == 0

    def test_equals_commutator_for_n4_n5(self, rng):
        for sig in all_signatures(5, n_min=4):
            u = random_multivector(sig, rng, grade=2)
            v = random_multivector(sig, rng, grade=2)
            assert com_bracket(u, v).isclose(commutator(u, v), 1e-9), sig

    def test_requires_grade2(self, rng):
        sig = Signature(3, 0)
        with pytest.raises(ValueError):
            com_bracket(generator(sig, 1), blade(sig, [1, 2]))


class TestDagger:
    def test_generator_signs(self):
        for sig in all_signatures(6):
            for a in range(1, sig.n + 1):
                expected = generator(sig, a) if a <= sig.p else -generator(sig, a)
                assert dagger(generator(sig, a)).isclose(expected, 0)

    def test_blade_map_against_oracle(self):
        for sig in all_signatures(5):
            for mask in range(sig.dim):
                indices = indices_from_mask(mask)
                sign, word = oracle.dagger_blade(indices, sig)
                assert word == indices
                assert dagger(blade(sig, indices)).coeffs[mask] == sign

    def test_frozen_example(self):
        sig = Signature(1, 1)
        assert dagger(blade(sig, [1, 2])).isclose(blade(sig, [1, 2]), 0)

    def test_antilinearity(self):
        sig = Signature(2, 1)
        lam = 2.0 + 3.0j
        assert dagger(lam * blade(sig, [])).isclose(
            np.conj(lam) * blade(sig, []), 0)

    def test_antiautomorphism(self, rng):
        for sig in all_signatures(5):
            u, v = random_multivector(sig, rng), random_multivector(sig, rng)
            assert dagger(clifford_product(u, v)).isclose(
                clifford_product(dagger(v), dagger(u)), 1e-10)
            assert dagger(dagger(u)).isclose(u, 0)

    def test_coincides_with_clifford_conjugation_on_euclidean(self, rng):
        for n in range(1, 7):
            sig = Signature(n, 0)
            u = random_multivector(sig, rng)
            assert dagger(u).isclose(clifford_conjugate(u), 0)


class TestScalarProduct:
    def test_canonical_basis_is_orthonormal(self):
        for sig in all_signatures(4):
            for mask_a in range(sig.dim):
                for mask_b in range(sig.dim):
                    value = scalar_product(blade(sig, indices_from_mask(mask_a)),
                                           blade(sig, indices_from_mask(mask_b)))
                    assert value == (1.0 if mask_a == mask_b else 0.0)

    def test_equals_trace_of_dagger_product(self, rng):
        # the fast diagonal evaluation against the literal Tr(U^dagger V)
        for sig in all_signatures(5):
            u, v = random_multivector(sig, rng), random_multivector(sig, rng)
            literal = trace(clifford_product(dagger(u), v))
            assert abs(scalar_product(u, v) - literal) < 1e-12

    def test_positive_definite(self, rng):
        sig = Signature(1, 2)
        u = random_multivector(sig, rng)
        assert abs(scalar_product(u, u) - np.sum(np.abs(u.coeffs) ** 2)) < 1e-12
        assert norm(u) > 0

    def test_sesquilinear_in_first_slot(self, rng):
        sig = Signature(2, 1)
        u, v = random_multivector(sig, rng), random_multivector(sig, rng)
        lam = 0.5 - 2.0j
        assert abs(scalar_product(u, lam * v) - lam * scalar_product(u, v)) < 1e-12
        assert abs(scalar_product(lam * u, v) - np.conj(lam) * scalar_product(u, v)) < 1e-12
        assert abs(scalar_product(u, v) - np.conj(scalar_product(v, u))) < 1e-12

    def test_adjoint_law(self, rng):
        for sig in all_signatures(5):
            a, u, v = (random_multivector(sig, rng) for _ in range(3))
            lhs = scalar_product(clifford_product(a, u), v)
            rhs = scalar_product(u, clifford_product(dagger(a), v))
            assert abs(lhs - rhs) < 1e-9


class TestHermitianSplit:
    def test_examples(self):
        s20, s01 = Signature(2, 0), Signature(0, 1)
        h, a = hermitian_split(generator(s20, 1))
        assert h.isclose(generator(s20, 1), 0) and a.norm() == 0
        h, a = hermitian_split(generator(s01, 1))
        assert h.norm() == 0 and a.isclose(generator(s01, 1), 0)
        h, a = hermitian_split(Multivector.scalar(s20, 1 + 1j))
        assert h.isclose(Multivector.scalar(s20, 1.0), 0)
        assert a.isclose(Multivector.scalar(s20, 1j), 0)

    def test_split_properties(self, rng):
        for sig in all_signatures(5):
            u = random_multivector(sig, rng)
            h, a = hermitian_split(u)
            assert (h + a).isclose(u, 0)
            assert dagger(h).isclose(h, 1e-12)
            assert dagger(a).isclose(-a, 1e-12)
