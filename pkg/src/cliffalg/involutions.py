"""Conjugation operators, Hodge star, the Com bracket, and the Hermitian
scalar product.

All conjugations act blade-by-blade through exact integer sign maps; the
Hermitian dagger combines coefficient conjugation with the metric-lowered
blade reversal, so it is exact on the canonical basis.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .algebra import (
    EPS_DEFAULT,
    Multivector,
    Signature,
    exterior_product,
    grades_array,
)

_ONE = np.uint64(1)


@lru_cache(maxsize=None)
def _grade_involution_signs(n: int) -> np.ndarray:
    g = grades_array(n)
    return np.where(g % 2, -1.0, 1.0)


@lru_cache(maxsize=None)
def _reversion_signs(n: int) -> np.ndarray:
    g = grades_array(n)
    return np.where((g * (g - 1) // 2) % 2, -1.0, 1.0)


@lru_cache(maxsize=None)
def _dagger_signs(n: int, neg_mask: int) -> np.ndarray:
    # (e^{i1..ik})^dagger = e_{ik}..e_{i1}: reversal sign times one -1 per
    # negative-square generator in the blade
    masks = np.arange(1 << n, dtype=np.uint64)
    neg = np.bitwise_count(masks & np.uint64(neg_mask)).astype(np.int64)
    return _reversion_signs(n) * np.where(neg % 2, -1.0, 1.0)


@lru_cache(maxsize=None)
def _hodge_data(n: int, neg_mask: int) -> tuple[np.ndarray, np.ndarray]:
    # star(e^A) = (prod of eta^{aa} over A) * eps([A, complement]) * e^complement
    masks = np.arange(1 << n, dtype=np.uint64)
    full = np.uint64((1 << n) - 1)
    comp = masks ^ full
    counts = np.zeros(1 << n, dtype=np.uint64)
    shifted = masks >> _ONE
    while shifted.any():
        counts += np.bitwise_count(shifted & comp)
        shifted = shifted >> _ONE
    counts += np.bitwise_count(masks & np.uint64(neg_mask))
    signs = np.where(counts & _ONE, -1.0, 1.0)
    return comp.astype(np.intp), signs


def grade_involution(u: Multivector) -> Multivector:
    """Flip the sign of every odd-grade component."""
    return Multivector(u.sig, u.coeffs * _grade_involution_signs(u.sig.n), copy=False)


def reversion(u: Multivector) -> Multivector:
    """Reverse the generator order in every blade: sign (-1)^(k(k-1)/2) on grade k."""
    return Multivector(u.sig, u.coeffs * _reversion_signs(u.sig.n), copy=False)


def complex_conjugate(u: Multivector) -> Multivector:
    return Multivector(u.sig, np.conj(u.coeffs), copy=False)


def clifford_conjugate(u: Multivector) -> Multivector:
    """Coefficient conjugation followed by reversion."""
    return Multivector(u.sig, np.conj(u.coeffs) * _reversion_signs(u.sig.n), copy=False)


def dagger(u: Multivector) -> Multivector:
    """Hermitian conjugation: antilinear, (uv)^dagger = v^dagger u^dagger."""
    sig = u.sig
    return Multivector(sig, np.conj(u.coeffs) * _dagger_signs(sig.n, sig.neg_mask), copy=False)


def hodge_star(u: Multivector) -> Multivector:
    """Hodge star: maps grade k to grade n-k, indices raised with the metric."""
    sig = u.sig
    comp, signs = _hodge_data(sig.n, sig.neg_mask)
    out = np.zeros(sig.dim, dtype=np.complex128)
    out[comp] = signs * u.coeffs
    return Multivector(sig, out, copy=False)


def com_bracket(u: Multivector, v: Multivector, tol: float = EPS_DEFAULT) -> Multivector:
    """Bilinear grade-2 x grade-2 -> grade-2 eta-contraction bracket.

    Evaluates the four-term contraction of the antisymmetric coefficient
    matrices directly; antisymmetric in its arguments.
    """
    u._check_same(v)
    sig = u.sig
    for name, w in (("first", u), ("second", v)):
        if w.grades(tol) - {2}:
            raise ValueError(f"com_bracket requires grade-2 inputs; {name} argument has grades {sorted(w.grades(tol))}")
    n = sig.n
    eta = np.array([sig.metric(a) for a in range(1, n + 1)], dtype=np.float64)

    def as_matrix(w: Multivector) -> np.ndarray:
        m = np.zeros((n, n), dtype=np.complex128)
        for value, (a, b) in w.terms(tol=0.0):
            m[a - 1, b - 1] = value
            m[b - 1, a - 1] = -value
        return m

    um, vm = as_matrix(u), as_matrix(v)
    c = 0.5 * (
        -np.einsum("c,cx,cy->xy", eta, um, vm)
        - np.einsum("c,xc,yc->xy", eta, um, vm)
        + np.einsum("c,cx,yc->xy", eta, um, vm)
        + np.einsum("c,xc,cy->xy", eta, um, vm)
    )
    terms = []
    for x in range(n):
        for y in range(x + 1, n):
            value = c[x, y] - c[y, x]
            if value != 0:
                terms.append((value, (x + 1, y + 1)))
    return Multivector.from_terms(sig, terms)


@lru_cache(maxsize=None)
def _square_signs(n: int, neg_mask: int) -> np.ndarray:
    # sign of e^A e^A for every mask A
    masks = np.arange(1 << n, dtype=np.uint64)
    neg = np.bitwise_count(masks & np.uint64(neg_mask)).astype(np.int64)
    return _reversion_signs(n) * np.where(neg % 2, -1.0, 1.0)


def trace_of_product(u: Multivector, v: Multivector) -> complex:
    """Tr(uv) without forming the full product: only mask-cancelling pairs survive."""
    u._check_same(v)
    sig = u.sig
    return complex(np.sum(u.coeffs * v.coeffs * _square_signs(sig.n, sig.neg_mask)))


def scalar_product(u: Multivector, v: Multivector) -> complex:
    """Hermitian scalar product (u, v) = Tr(u^dagger v); antilinear in u."""
    return trace_of_product(dagger(u), v)


def norm(u: Multivector) -> float:
    value = scalar_product(u, u).real
    return float(np.sqrt(max(value, 0.0)))


def hermitian_split(u: Multivector) -> tuple[Multivector, Multivector]:
    """Decompose u = h + a with h^dagger = h and a^dagger = -a."""
    ud = dagger(u)
    return 0.5 * (u + ud), 0.5 * (u - ud)


def wedge_list(factors: list[Multivector]) -> Multivector:
    """Left-to-right exterior product of a nonempty factor list."""
    out = factors[0]
    for f in factors[1:]:
        out = exterior_product(out, f)
    return out
