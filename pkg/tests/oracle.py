"""Independent brute-force oracles used to validate the fast implementations.

The generator-string multiplier applies the defining rewrite rules literally
(swap adjacent generators with a sign flip, cancel equal neighbours into the
metric), so it shares no code with the bitmask sign algorithm.  The Hodge
oracle evaluates the full antisymmetric epsilon sum over permutations.
"""

from itertools import permutations

import numpy as np

from cliffalg.algebra import (
    Multivector,
    Signature,
    indices_from_mask,
    mask_from_indices,
)


def rewrite_generator_string(indices, sig: Signature):
    """Normalize a generator product e^{i1} e^{i2} ... by bubble rewriting.

    Returns (sign, ascending index tuple).
    """
    word = list(indices)
    sign = 1
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(word) - 1:
            a, b = word[i], word[i + 1]
            if a == b:
                sign *= sig.metric(a)
                del word[i : i + 2]
                changed = True
                i = max(i - 1, 0)
            elif a > b:
                word[i], word[i + 1] = b, a
                sign = -sign
                changed = True
                i += 1
            else:
                i += 1
    return sign, tuple(word)


def blade_times_blade(indices_a, indices_b, sig: Signature):
    """Oracle product of two canonical blades: (sign, ascending index tuple)."""
    return rewrite_generator_string(list(indices_a) + list(indices_b), sig)


def multiply(u: Multivector, v: Multivector) -> Multivector:
    """Oracle Clifford product by distributing over all blade pairs."""
    sig = u.sig
    out = np.zeros(sig.dim, dtype=np.complex128)
    for mask_a in range(sig.dim):
        ca = u.coeffs[mask_a]
        if ca == 0:
            continue
        inds_a = indices_from_mask(mask_a)
        for mask_b in range(sig.dim):
            cb = v.coeffs[mask_b]
            if cb == 0:
                continue
            sign, word = blade_times_blade(inds_a, indices_from_mask(mask_b), sig)
            out[mask_from_indices(word, sig.n)] += sign * ca * cb
    return Multivector(sig, out, copy=False)


def perm_sign(perm) -> int:
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1


def wedge_generators(indices, sig: Signature):
    """(sign, ascending tuple) of e^{i1} ^ ... ^ e^{ik}; zero on repeats."""
    if len(set(indices)) != len(indices):
        return 0, ()
    # the inversion parity of the value sequence is the sorting permutation sign
    return perm_sign(indices), tuple(sorted(indices))


def hodge_star(u: Multivector) -> Multivector:
    """Brute-force Hodge star from the epsilon-sum definition (n <= 6)."""
    sig = u.sig
    n = sig.n
    out = np.zeros(sig.dim, dtype=np.complex128)
    all_indices = tuple(range(1, n + 1))
    for mask in range(sig.dim):
        coeff = u.coeffs[mask]
        if coeff == 0:
            continue
        blade_indices = indices_from_mask(mask)
        k = len(blade_indices)
        # antisymmetric extension of the canonical (ascending) coefficient
        dense = {perm: perm_sign(perm) * coeff for perm in permutations(blade_indices)}
        raised = {
            key: value * np.prod([sig.metric(a) for a in key]) if key else value
            for key, value in dense.items()
        }
        norm = 1.0
        for m in range(1, k + 1):
            norm *= m
        for m in range(1, n - k + 1):
            norm *= m
        for perm in permutations(all_indices):
            head, tail = perm[:k], perm[k:]
            uval = raised.get(head, 0.0)
            if uval == 0.0:
                continue
            wsign, word = wedge_generators(tail, sig)
            if wsign == 0:
                continue
            eps = perm_sign(perm)
            out[mask_from_indices(word, sig.n)] += eps * uval * wsign / norm
    return Multivector(sig, out, copy=False)


def dagger_blade(indices, sig: Signature):
    """Oracle dagger of a blade: product of lowered generators in reverse order."""
    sign = 1
    for a in indices:
        sign *= sig.metric(a)
    rsign, word = rewrite_generator_string(list(reversed(indices)), sig)
    return sign * rsign, word
