"""Matrix representations induced by an orthonormal left-ideal basis.

gamma maps algebra elements to d x d matrices through inner products with the
basis (entry (k, i) is the tau_k component of U tau_i); theta antirepresents
the corner subalgebra acting from the right; rho extracts ideal coordinates.
A representation built from an orthonormal basis is normal: it intertwines
the algebra dagger with the matrix conjugate transpose.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    EPS_DEFAULT,
    Multivector,
    Signature,
    blade,
    clifford_product,
    indices_from_mask,
)
from .idempotents import IdealBasis, ideal_dimension, in_corner, in_ideal
from .involutions import dagger, scalar_product
from .matrixops import eigenvalues, lu_determinant


class Representation:
    """Immutable matrix representation attached to an IdealBasis."""

    def __init__(self, basis: IdealBasis):
        self.basis = basis
        self.sig = basis.sig
        self.d = basis.d
        self._generator_cache = tuple(
            self.gamma(blade(self.sig, [a])) for a in range(1, self.sig.n + 1)
        )

    def generator_matrix(self, a: int) -> np.ndarray:
        """Cached gamma(e^a), a = 1..n."""
        return self._generator_cache[a - 1].copy()

    def gamma(self, u: Multivector) -> np.ndarray:
        """Matrix of left multiplication by u on the tau basis."""
        if u.sig != self.sig:
            raise ValueError(f"element over {u.sig}, representation over {self.sig}")
        taus = self.basis.taus
        m = np.empty((self.d, self.d), dtype=np.complex128)
        for i, tau in enumerate(taus):
            u_tau = clifford_product(u, tau)
            for k in range(self.d):
                m[k, i] = scalar_product(taus[k], u_tau)
        return m

    def rho(self, omega: Multivector, tol: float = EPS_DEFAULT) -> np.ndarray:
        """Coordinate column of an ideal element in the tau basis."""
        if omega.sig != self.sig:
            raise ValueError(f"element over {omega.sig}, representation over {self.sig}")
        coords = np.array([scalar_product(tau, omega) for tau in self.basis.taus])
        recon = Multivector.zero(self.sig)
        for c, tau in zip(coords, self.basis.taus):
            recon = recon + c * tau
        residual = (omega - recon).norm()
        if residual > tol * max(1.0, omega.norm()):
            raise ValueError(f"element is not in the ideal (projection residual {residual:.3e})")
        return coords

    def theta(self, v: Multivector, tol: float = EPS_DEFAULT) -> np.ndarray:
        """Matrix of right multiplication by a corner element on the tau basis."""
        if not in_corner(v, self.basis.t, tol):
            raise ValueError("element is not in the corner subalgebra K(t)")
        taus = self.basis.taus
        m = np.empty((self.d, self.d), dtype=np.complex128)
        for i, tau in enumerate(taus):
            tau_v = clifford_product(tau, v)
            for k in range(self.d):
                m[k, i] = scalar_product(taus[k], tau_v)
        return m

    def determinant(self, u: Multivector) -> complex:
        return lu_determinant(self.gamma(u))

    def spectrum(self, u: Multivector) -> np.ndarray:
        """Eigenvalues of gamma(u) with multiplicity, sorted by (real, imag)."""
        return eigenvalues(self.gamma(u))


@dataclass
class NormalityReport:
    d: int
    expected_d: int
    failures: list[tuple[tuple[int, ...], float]]

    @property
    def ok(self) -> bool:
        return self.d == self.expected_d and not self.failures


def is_normal(rep: Representation, tol: float = EPS_DEFAULT) -> NormalityReport:
    """Check the normal-representation conditions: minimal dimension and
    gamma(U^dagger) = gamma(U)^dagger on every basis blade."""
    failures = []
    for mask in range(rep.sig.dim):
        u = blade(rep.sig, indices_from_mask(mask))
        gap = float(np.max(np.abs(rep.gamma(dagger(u)) - rep.gamma(u).conj().T)))
        if gap > tol:
            failures.append((indices_from_mask(mask), gap))
    return NormalityReport(rep.d, ideal_dimension(rep.sig), failures)


def left_eigen_check(rep: Representation, u: Multivector, lam: complex,
                     v: Multivector, tol: float = EPS_DEFAULT) -> bool:
    """True iff (u - lam e) v = 0 and gamma(u - lam e) is singular, so the
    left ideal generated by v is proper."""
    if v.norm() == 0:
        raise ValueError("eigen-element candidate must be nonzero")
    shifted = u - Multivector.scalar(u.sig, lam)
    if (clifford_product(shifted, v)).norm() > tol * v.norm():
        return False
    svals = np.linalg.svd(rep.gamma(shifted), compute_uv=False)
    return bool(svals[-1] <= max(tol, 1e-9 * max(svals[0], 1.0)))


# ---------------------------------------------------------------------------
# serialization / pretty printing

def matrix_to_dict(m: np.ndarray) -> dict:
    return {
        "d": int(m.shape[0]),
        "rows": [[[float(z.real), float(z.imag)] for z in row] for row in m],
    }


def matrix_from_dict(data: dict) -> np.ndarray:
    rows = data["rows"]
    return np.array([[complex(re, im) for re, im in row] for row in rows], dtype=np.complex128)


def format_entry(z: complex, tol: float = EPS_DEFAULT) -> str:
    for value, text in ((0, "0"), (1, "1"), (-1, "-1"), (1j, "i"), (-1j, "-i")):
        if abs(z - value) <= tol:
            return text
    if abs(z.imag) <= tol:
        return f"{z.real:g}"
    if abs(z.real) <= tol:
        return f"{z.imag:g}i"
    return f"{z.real:g}{z.imag:+g}i"


def format_matrix(m: np.ndarray, tol: float = EPS_DEFAULT) -> str:
    cells = [[format_entry(z, tol) for z in row] for row in m]
    width = max(len(c) for row in cells for c in row)
    lines = ["( " + "  ".join(c.rjust(width) for c in row) + " )" for row in cells]
    return "\n".join(lines)
