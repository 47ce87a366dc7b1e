"""Backend kernels: compiled and NumPy fallback must agree with each other
and with the generator-string rewriting oracle."""

import numpy as np
import pytest

import oracle
from cliffalg import backend
from cliffalg.algebra import (
    Multivector,
    Signature,
    all_signatures,
    blade_product_sign,
    clifford_product,
    exterior_product,
    indices_from_mask,
    mask_from_indices,
    random_multivector,
)


def _backends():
    names = ["python"]
    try:
        backend.get_kernels("compiled")
        names.append("compiled")
    except ImportError:
        pass
    return names


BACKENDS = _backends()


def test_compiled_backend_is_available():
    # the build ships the extension; the fallback is for source-only installs
    assert "compiled" in BACKENDS


@pytest.mark.parametrize("name", BACKENDS)
def test_geometric_product_matches_oracle(name, rng):
    kernels = backend.get_kernels(name)
    for sig in [Signature(3, 0), Signature(1, 2), Signature(2, 3), Signature(0, 4)]:
        u = random_multivector(sig, rng)
        v = random_multivector(sig, rng)
        out = np.zeros(sig.dim, dtype=np.complex128)
        kernels.geometric_product(u.coeffs, v.coeffs, out, sig.neg_mask)
        expected = oracle.multiply(u, v)
        assert np.max(np.abs(out - expected.coeffs)) < 1e-12


@pytest.mark.parametrize("name", BACKENDS)
def test_exterior_product_backends(name, rng):
    kernels = backend.get_kernels(name)
    for sig in [Signature(2, 1), Signature(1, 3)]:
        u = random_multivector(sig, rng)
        v = random_multivector(sig, rng)
        out = np.zeros(sig.dim, dtype=np.complex128)
        kernels.exterior_product(u.coeffs, v.coeffs, out)
        assert np.max(np.abs(out - exterior_product(u, v).coeffs)) < 1e-12


def test_backends_agree_on_large_n(rng):
    # n = 10 exercises the fallback's row-at-a-time path (beyond its table cap)
    if "compiled" not in BACKENDS:
        pytest.skip("extension not built")
    sig = Signature(6, 4)
    u = random_multivector(sig, rng)
    v = random_multivector(sig, rng)
    outs = []
    for name in ("python", "compiled"):
        out = np.zeros(sig.dim, dtype=np.complex128)
        backend.get_kernels(name).geometric_product(u.coeffs, v.coeffs, out, sig.neg_mask)
        outs.append(out)
    assert np.max(np.abs(outs[0] - outs[1])) < 1e-12


def test_blade_sign_matches_oracle_exhaustively():
    for sig in all_signatures(4):
        for mask_a in range(sig.dim):
            for mask_b in range(sig.dim):
                sign, word = oracle.blade_times_blade(
                    indices_from_mask(mask_a), indices_from_mask(mask_b), sig)
                assert mask_from_indices(word, sig.n) == mask_a ^ mask_b
                assert blade_product_sign(mask_a, mask_b, sig.neg_mask) == sign


def test_product_of_blades_is_exact(rng):
    # blade-level products carry integer coefficients with no rounding
    sig = Signature(2, 2)
    for mask_a in range(sig.dim):
        for mask_b in range(sig.dim):
            u = Multivector.from_terms(sig, [(1.0, indices_from_mask(mask_a))])
            v = Multivector.from_terms(sig, [(1.0, indices_from_mask(mask_b))])
            w = clifford_product(u, v)
            assert w.coeffs[mask_a ^ mask_b] in (1, -1)
            assert np.count_nonzero(w.coeffs) == 1
