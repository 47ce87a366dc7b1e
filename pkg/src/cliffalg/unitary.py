"""Unitary elements of the algebra, exponential sampling, basis changes
between representations, and the group dimension checks.

The exponential is computed in the algebra itself (power series on
multivectors), so unitarity of the represented matrix is a genuine
cross-check rather than a matrix-level construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    EPS_DEFAULT,
    Multivector,
    Signature,
    clifford_product,
    indices_from_mask,
    blade,
    random_multivector,
)
from .idempotents import IdealBasis, is_hermitian_idempotent
from .involutions import dagger, hermitian_split
from .representations import Representation

MAX_SERIES_TERMS = 400


def is_unitary(u: Multivector, tol: float = EPS_DEFAULT) -> bool:
    """Membership test for the unitary group: u^dagger u = e."""
    residual = clifford_product(dagger(u), u) - Multivector.scalar(u.sig, 1.0)
    return residual.norm() <= tol


def exp_multivector(a: Multivector, term_tol: float = 1e-15) -> Multivector:
    """Power-series exponential, truncated when the term norm drops below
    term_tol."""
    total = Multivector.scalar(a.sig, 1.0)
    term = Multivector.scalar(a.sig, 1.0)
    for k in range(1, MAX_SERIES_TERMS):
        term = clifford_product(term, a) / k
        total = total + term
        if term.norm() < term_tol:
            return total
    raise RuntimeError("exponential series did not converge; scale the argument down")


def random_unitary(sig: Signature, seed: int | np.random.Generator = 0) -> Multivector:
    """Exponential of a random antiHermitian element, normalized to a
    moderate norm so the series converges quickly."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    _, anti = hermitian_split(random_multivector(sig, rng))
    scale = anti.norm()
    if scale > 2.0:
        anti = anti * (2.0 / scale)
    return exp_multivector(anti)


@dataclass
class ConjugatedBases:
    """The three derived representations for a unitary element u.

    left:       tau'_k = u tau_k            over I(t),        gamma' = g(u)^-1 gamma g(u)
    right:      tau'_k = tau_k u^-1         over I(u t u^-1),  gamma' = gamma
    sandwich:   tau'_k = u tau_k u^-1       over I(u t u^-1),  gamma' = g(u^-1) gamma g(u)
    """

    left: Representation
    right: Representation
    sandwich: Representation


def conjugated_bases(rep: Representation, u: Multivector, tol: float = EPS_DEFAULT) -> ConjugatedBases:
    if not is_unitary(u, max(tol, 1e-8)):
        raise ValueError("basis change requires a unitary element")
    sig = rep.sig
    u_inv = dagger(u)
    t = rep.basis.t
    t_conj = clifford_product(u, clifford_product(t, u_inv))
    taus = rep.basis.taus
    left = IdealBasis(sig, t, [clifford_product(u, tau) for tau in taus], label="left")
    right = IdealBasis(sig, t_conj, [clifford_product(tau, u_inv) for tau in taus], label="right")
    sandwich = IdealBasis(
        sig, t_conj,
        [clifford_product(u, clifford_product(tau, u_inv)) for tau in taus],
        label="sandwich",
    )
    return ConjugatedBases(Representation(left), Representation(right), Representation(sandwich))


def antihermitian_dimension(sig: Signature, singular_tol: float = 1e-8) -> int:
    """Real dimension of {A : A^dagger = -A} via the rank of U -> U + U^dagger
    acting on the real basis (blades and i-blades)."""
    dim = sig.dim
    cols = []
    for mask in range(dim):
        for phase in (1.0, 1j):
            u = phase * blade(sig, indices_from_mask(mask))
            image = u + dagger(u)
            cols.append(np.concatenate([image.coeffs.real, image.coeffs.imag]))
    matrix = np.array(cols).T
    svals = np.linalg.svd(matrix, compute_uv=False)
    rank = int(np.sum(svals > singular_tol))
    return 2 * dim - rank


def block_structure_ok(m: np.ndarray, tol: float = EPS_DEFAULT) -> bool:
    """True iff the matrix is block-diagonal with two equal square blocks."""
    d = m.shape[0]
    half = d // 2
    off1 = float(np.max(np.abs(m[:half, half:]))) if half else 0.0
    off2 = float(np.max(np.abs(m[half:, :half]))) if half else 0.0
    return max(off1, off2) <= tol


@dataclass
class GroupDimensionReport:
    sig: Signature
    samples: int
    matrix_unitary_ok: bool
    block_diagonal_ok: bool | None
    antihermitian_dim: int
    expected_dim: int
    max_unitarity_residual: float
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.matrix_unitary_ok
            and self.antihermitian_dim == self.expected_dim
            and self.block_diagonal_ok in (None, True)
        )


def group_dimension_check(sig: Signature, rep: Representation, samples: int = 5,
                          seed: int = 0, tol: float = 1e-8) -> GroupDimensionReport:
    """Sample unitary elements, check gamma(u) lands in the expected unitary
    (block) group, and compare the antiHermitian subspace dimension with the
    group dimension."""
    rng = np.random.default_rng([seed, sig.p, sig.q])
    d = rep.d
    odd = sig.n % 2 == 1
    worst = 0.0
    blocks_ok: bool | None = True if odd else None
    for _ in range(samples):
        u = random_unitary(sig, rng)
        m = rep.gamma(u)
        worst = max(worst, float(np.max(np.abs(m.conj().T @ m - np.eye(d)))))
        if odd and not block_structure_ok(m, tol):
            blocks_ok = False
    expected = 2 * (d // 2) ** 2 if odd else d * d
    report = GroupDimensionReport(
        sig=sig,
        samples=samples,
        matrix_unitary_ok=worst <= tol,
        block_diagonal_ok=blocks_ok,
        antihermitian_dim=antihermitian_dimension(sig),
        expected_dim=expected,
        max_unitarity_residual=worst,
    )
    if odd and blocks_ok:
        # each block must itself be unitary once the off-diagonal blocks vanish
        report.notes.append("odd n: gamma(u) splits into two unitary blocks")
    return report


def transported_idempotent_ok(t: Multivector, u: Multivector, tol: float = EPS_DEFAULT) -> bool:
    """u t u^-1 is again a Hermitian idempotent for unitary u."""
    t_conj = clifford_product(u, clifford_product(t, dagger(u)))
    return is_hermitian_idempotent(t_conj, tol)
