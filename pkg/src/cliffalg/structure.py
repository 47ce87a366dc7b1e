"""Executable structural results: grade-support prediction for brackets,
the grade-2 non-degeneracy rank check, and reconstruction of an element from
its generator commutators.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    EPS_DEFAULT,
    Multivector,
    Signature,
    anticommutator,
    commutator,
    clifford_product,
    generator,
    grade_project,
    grades_array,
    mask_from_indices,
    trace,
    volume_element,
)

COMMUTATOR = "commutator"
ANTICOMMUTATOR = "anticommutator"


@dataclass(frozen=True)
class GradeSupport:
    """Sorted grade set; consecutive admitted grades differ by 4."""

    grades: tuple[int, ...]

    def __contains__(self, k: int) -> bool:
        return k in self.grades

    def issuperset(self, other: "GradeSupport") -> bool:
        return set(self.grades) >= set(other.grades)


def predicted_support(k: int, l: int, bracket: str, n: int) -> GradeSupport:
    """Grade set of [U,V] or {U,V} for homogeneous inputs of grades k, l.

    The three parity cases assume k >= l; the other order follows by
    (anti)symmetry of the brackets.  Grades outside [0, n] are dropped.
    """
    if bracket not in (COMMUTATOR, ANTICOMMUTATOR):
        raise ValueError(f"bracket must be {COMMUTATOR!r} or {ANTICOMMUTATOR!r}")
    if not (0 <= k <= n and 0 <= l <= n):
        raise ValueError(f"grades ({k}, {l}) out of range 0..{n}")
    if k < l:
        k, l = l, k
    if bracket == COMMUTATOR:
        if l % 2 == 0:
            start, stop = k - l + 2, k + l - 2
        elif k % 2 == 0:
            start, stop = k - l, k + l - 2
        else:
            start, stop = k - l + 2, k + l
    else:
        if l % 2 == 0:
            start, stop = k - l, k + l
        elif k % 2 == 0:
            start, stop = k - l + 2, k + l
        else:
            start, stop = k - l, k + l - 2
    return GradeSupport(tuple(g for g in range(start, stop + 1, 4) if 0 <= g <= n))


@dataclass
class SupportReport:
    bracket: str
    predicted: GradeSupport
    actual: GradeSupport

    @property
    def ok(self) -> bool:
        return self.predicted.issuperset(self.actual)


def check_support(u: Multivector, v: Multivector, tol: float = EPS_DEFAULT) -> tuple[SupportReport, SupportReport]:
    """Actual-vs-predicted grade support of both brackets of homogeneous u, v."""
    for name, w in (("first", u), ("second", v)):
        if not w.is_homogeneous(tol):
            raise ValueError(f"{name} argument is not homogeneous: grades {sorted(w.grades(tol))}")
    n = u.sig.n
    k = next(iter(u.grades(tol)), 0)
    l = next(iter(v.grades(tol)), 0)
    reports = []
    for bracket, op in ((COMMUTATOR, commutator), (ANTICOMMUTATOR, anticommutator)):
        actual = GradeSupport(tuple(sorted(op(u, v).grades(tol))))
        reports.append(SupportReport(bracket, predicted_support(k, l, bracket, n), actual))
    return reports[0], reports[1]


# ---------------------------------------------------------------------------
# Theorem 4: non-degeneracy of the commutator pairing on grade 2

def commutator_kernel(sig: Signature, k: int, grades: tuple[int, ...] = (2,),
                      singular_tol: float = 1e-8) -> tuple[int, np.ndarray]:
    """Kernel dimension of V -> ([U_i, V])_i with U_i the grade-k basis blades
    and V restricted to the span of the given grades (real coefficients).

    Returns (kernel_dim, singular_values).
    """
    if not 1 <= k <= sig.n - 1:
        raise ValueError(f"k must satisfy 1 <= k <= n-1, got {k}")
    g = grades_array(sig.n)
    cols = [m for m in range(sig.dim) if g[m] in grades]

    def basis_mv(mask: int) -> Multivector:
        c = np.zeros(sig.dim, dtype=np.complex128)
        c[mask] = 1.0
        return Multivector(sig, c, copy=False)

    rows = []
    for mask_u in (m for m in range(sig.dim) if g[m] == k):
        u = basis_mv(mask_u)
        block = np.empty((sig.dim, len(cols)))
        for j, mask_v in enumerate(cols):
            block[:, j] = commutator(u, basis_mv(mask_v)).coeffs.real
        rows.append(block)
    matrix = np.vstack(rows)
    svals = np.linalg.svd(matrix, compute_uv=False)
    rank = int(np.sum(svals > singular_tol))
    return len(cols) - rank, svals


def grade2_nondegeneracy(sig: Signature, k: int, singular_tol: float = 1e-8) -> bool:
    """True iff no nonzero grade-2 element commutes with every grade-k blade."""
    kernel_dim, _ = commutator_kernel(sig, k, grades=(2,), singular_tol=singular_tol)
    return kernel_dim == 0


# ---------------------------------------------------------------------------
# Theorem 6: reconstruction from generator commutators

@dataclass
class Reconstruction:
    """Solution of [B, e^a] = C^a, determined up to the center.

    particular has zero scalar (and, for odd n, volume-element) components;
    alpha and beta are the free center coefficients, defaulted to 0.
    """

    particular: Multivector
    alpha: complex = 0.0
    beta: complex = 0.0

    def full(self) -> Multivector:
        sig = self.particular.sig
        out = self.particular + self.alpha * Multivector.scalar(sig, 1.0)
        if sig.n % 2 == 1:
            out = out + self.beta * volume_element(sig)
        return out

    @property
    def free_masks(self) -> tuple[int, ...]:
        sig = self.particular.sig
        return (0, sig.dim - 1) if sig.n % 2 == 1 else (0,)


def reconstruction_denominator(k: int, n: int) -> int:
    """Per-grade denominator n + (-1)^(k+1) (n - 2k): 2k for even k, 2(n-k) for odd."""
    return n + (-1) ** (k + 1) * (n - 2 * k)


def solve_commutator_system(c_list: list[Multivector], sig: Signature,
                            tol: float = EPS_DEFAULT) -> Reconstruction:
    """Recover B with [B, e^a] = C^a from trace-free right-hand sides.

    Raises ValueError if any Tr(C^a) is nonzero or the system is inconsistent
    (the reconstructed B fails to reproduce the inputs).
    """
    if len(c_list) != sig.n:
        raise ValueError(f"expected {sig.n} commutator inputs, got {len(c_list)}")
    for a, c in enumerate(c_list, start=1):
        if c.sig != sig:
            raise ValueError(f"C^{a} has signature {c.sig}, expected {sig}")
        if abs(trace(c)) > tol:
            raise ValueError(f"Tr(C^{a}) = {trace(c)} is nonzero")

    contracted = Multivector.zero(sig)
    for a, c in enumerate(c_list, start=1):
        contracted = contracted + sig.metric(a) * clifford_product(c, generator(sig, a))

    top = sig.n if sig.n % 2 == 0 else sig.n - 1
    b = Multivector.zero(sig)
    for k in range(1, top + 1):
        b = b + grade_project(contracted, k) / reconstruction_denominator(k, sig.n)

    for a, c in enumerate(c_list, start=1):
        residual = (commutator(b, generator(sig, a)) - c).norm()
        if residual > tol * max(1.0, c.norm()):
            raise ValueError(f"inconsistent system: residual {residual:.3e} at generator {a}")
    return Reconstruction(particular=b)
