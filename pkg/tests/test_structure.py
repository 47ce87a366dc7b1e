"""Grade-support prediction, the grade-2 non-degeneracy rank check, and
reconstruction from generator commutators."""

import numpy as np
import pytest

from cliffalg.algebra import (
    Multivector,
    Signature,
    all_signatures,
    blade,
    commutator,
    generator,
    grade_project,
    indices_from_mask,
    random_multivector,
    volume_element,
)
from cliffalg.structure import (
    ANTICOMMUTATOR,
    COMMUTATOR,
    check_support,
    commutator_kernel,
    grade2_nondegeneracy,
    predicted_support,
    reconstruction_denominator,
    solve_commutator_system,
)


class TestPredictedSupport:
    def test_table_examples(self):
        assert predicted_support(2, 2, COMMUTATOR, 8).grades == (2,)
        assert predicted_support(4, 4, ANTICOMMUTATOR, 8).grades == (0, 4, 8)
        assert predicted_support(1, 1, COMMUTATOR, 8).grades == (2,)
        assert predicted_support(1, 1, ANTICOMMUTATOR, 8).grades == (0,)

    def test_rank_table_k_l_up_to_4(self):
        # the printed table rows, reconstructed from the parity case formulas
        table = {
            (1, 1): ((2,), (0,)),
            (2, 1): ((1,), (3,)),
            (2, 2): ((2,), (0, 4)),
            (3, 1): ((4,), (2,)),
            (3, 2): ((3,), (1, 5)),
            (3, 3): ((2, 6), (0, 4)),
            (4, 1): ((3,), (5,)),
            (4, 2): ((4,), (2, 6)),
            (4, 3): ((1, 5), (3, 7)),
            (4, 4): ((2, 6), (0, 4, 8)),
        }
        for (k, l), (comm, anti) in table.items():
            assert predicted_support(k, l, COMMUTATOR, 8).grades == comm
            assert predicted_support(k, l, ANTICOMMUTATOR, 8).grades == anti

    def test_swap_symmetry(self):
        for k in range(7):
            for l in range(7):
                for bracket in (COMMUTATOR, ANTICOMMUTATOR):
                    assert (predicted_support(k, l, bracket, 8).grades
                            == predicted_support(l, k, bracket, 8).grades)

    def test_clipping(self):
        assert predicted_support(3, 3, ANTICOMMUTATOR, 3).grades == (0,)
        assert predicted_support(3, 3, COMMUTATOR, 5).grades == (2,)

    def test_increment_is_four(self):
        for k in range(9):
            for l in range(9):
                for bracket in (COMMUTATOR, ANTICOMMUTATOR):
                    g = predicted_support(k, l, bracket, 8).grades
                    assert all(b - a == 4 for a, b in zip(g, g[1:]))

    def test_scalar_inputs(self):
        assert predicted_support(0, 3, COMMUTATOR, 5).grades == ()
        assert predicted_support(0, 3, ANTICOMMUTATOR, 5).grades == (3,)


class TestCheckSupport:
    def test_examples(self):
        sig = Signature(4, 0)
        comm, anti = check_support(blade(sig, [1, 2]), blade(sig, [3, 4]))
        assert comm.actual.grades == () and comm.ok and anti.ok

        sig = Signature(3, 0)
        _, anti = check_support(blade(sig, [1, 2, 3]), blade(sig, [1, 2, 3]))
        assert anti.actual.grades == (0,) and anti.ok

    def test_volume_element_is_central_for_odd_n(self):
        sig = Signature(2, 1)
        comm, _ = check_support(generator(sig, 1), volume_element(sig))
        assert comm.actual.grades == ()

    def test_exhaustive_blade_pairs(self):
        for sig in all_signatures(5):
            for mask_u in range(sig.dim):
                for mask_v in range(sig.dim):
                    comm, anti = check_support(blade(sig, indices_from_mask(mask_u)),
                                               blade(sig, indices_from_mask(mask_v)))
                    assert comm.ok and anti.ok, (sig, mask_u, mask_v)

    def test_rejects_inhomogeneous(self, rng):
        sig = Signature(2, 1)
        u = random_multivector(sig, rng)
        with pytest.raises(ValueError):
            check_support(u, generator(sig, 1))


class TestNondegeneracy:
    @pytest.mark.parametrize("sig", all_signatures(5, field="real"), ids=str)
    def test_grade2_kernel_is_trivial(self, sig):
        for k in range(1, sig.n):
            assert grade2_nondegeneracy(sig, k), (sig, k)

    def test_scalar_breaks_it(self):
        # admitting the unit shows why the statement needs the grade restriction
        kernel_dim, _ = commutator_kernel(Signature(2, 0, "real"), 1, grades=(0, 2))
        assert kernel_dim >= 1

    def test_k_out_of_range(self):
        with pytest.raises(ValueError):
            commutator_kernel(Signature(2, 0, "real"), 2)


class TestReconstruction:
    def test_denominators(self):
        for n in range(1, 13):
            top = n if n % 2 == 0 else n - 1
            for k in range(1, top + 1):
                value = reconstruction_denominator(k, n)
                assert value == (2 * k if k % 2 == 0 else 2 * (n - k))
                assert value != 0

    def test_forward_reconstruct_examples(self):
        sig = Signature(2, 0)
        b = generator(sig, 1)
        cs = [commutator(b, generator(sig, a)) for a in (1, 2)]
        rec = solve_commutator_system(cs, sig)
        assert rec.particular.isclose(b, 1e-12)
        assert rec.free_masks == (0,)

        sig = Signature(1, 3)
        b = blade(sig, [1, 2])
        cs = [commutator(b, generator(sig, a)) for a in range(1, 5)]
        assert solve_commutator_system(cs, sig).particular.isclose(b, 1e-12)

    def test_zero_system(self):
        sig = Signature(2, 1)
        rec = solve_commutator_system([Multivector.zero(sig)] * 3, sig)
        assert rec.particular.norm() == 0
        assert rec.free_masks == (0, sig.dim - 1)
        full = rec.full()
        assert full.norm() == 0
        rec.alpha, rec.beta = 2.0, 3.0
        assert rec.full().isclose(
            2.0 * Multivector.scalar(sig, 1.0) + 3.0 * volume_element(sig), 0)

    def test_round_trip_up_to_center(self, rng):
        for sig in all_signatures(6):
            b = random_multivector(sig, rng)
            cs = [commutator(b, generator(sig, a)) for a in range(1, sig.n + 1)]
            rec = solve_commutator_system(cs, sig, tol=1e-8)
            center = grade_project(b, 0)
            if sig.n % 2 == 1:
                center = center + grade_project(b, sig.n)
            assert (rec.particular - (b - center)).norm() <= 1e-8, sig

    def test_nonzero_trace_rejected(self):
        sig = Signature(2, 0)
        with pytest.raises(ValueError, match="nonzero"):
            solve_commutator_system([Multivector.scalar(sig, 1.0),
                                     Multivector.zero(sig)], sig)

    def test_inconsistent_system_rejected(self):
        # C^a that no B can produce: [B, e^1] can never equal e^1 itself
        sig = Signature(2, 0)
        cs = [generator(sig, 1), Multivector.zero(sig)]
        with pytest.raises(ValueError, match="inconsistent"):
            solve_commutator_system(cs, sig)

    def test_wrong_arity(self):
        sig = Signature(2, 0)
        with pytest.raises(ValueError):
            solve_commutator_system([Multivector.zero(sig)], sig)
