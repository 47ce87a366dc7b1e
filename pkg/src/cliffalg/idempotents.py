"""Standard Hermitian idempotents, left ideals I(t), the corner subalgebra
K(t), and orthonormal ideal bases (the constructed standard basis plus the
tabulated presets, including the Dirac basis for signature (1,3)).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .algebra import (
    EPS_DEFAULT,
    Multivector,
    Signature,
    blade,
    clifford_product,
    trace,
)
from .involutions import dagger, scalar_product

SQRT2 = float(np.sqrt(2.0))


def ideal_dimension(sig: Signature) -> int:
    """Dimension of the standard left ideal: 2**ceil(n/2)."""
    return 1 << ((sig.n + 1) // 2)


def _require_complex(sig: Signature, what: str) -> None:
    if sig.field != "complex":
        raise ValueError(f"{what} requires the complex field (factors may need i)")


def standard_idempotent(sig: Signature) -> Multivector:
    """The standard Hermitian idempotent: a product of commuting rank-one
    Hermitian idempotent factors built from e^1 and the pairs e^{2k} e^{2k+1}.

    Each factor is (e + i^s B)/2 with s chosen so that (i^s B)^2 = e and the
    factor is Hermitian: s = 0 iff B squares to +e.  For n = 1 the idempotent
    is the unit.
    """
    _require_complex(sig, "standard_idempotent")
    if sig.n == 1:
        return Multivector.scalar(sig, 1.0)
    # e^1 factor: i appears exactly when p = 0 (then (e^1)^2 = -e)
    phase = 1j if sig.p == 0 else 1.0
    t = 0.5 * (Multivector.scalar(sig, 1.0) + phase * blade(sig, [1]))
    for k in range(1, sig.n // 2):
        # pair factor on e^{2k} e^{2k+1}: plain exactly when 2k = p
        phase = 1.0 if 2 * k == sig.p else 1j
        factor = 0.5 * (Multivector.scalar(sig, 1.0) + phase * blade(sig, [2 * k, 2 * k + 1]))
        t = clifford_product(t, factor)
    return t


def is_hermitian_idempotent(t: Multivector, tol: float = EPS_DEFAULT) -> bool:
    return (clifford_product(t, t) - t).norm() <= tol and (dagger(t) - t).norm() <= tol


def in_ideal(u: Multivector, t: Multivector, tol: float = EPS_DEFAULT) -> bool:
    """Membership in I(t) = {U : U = Ut}."""
    return (u - clifford_product(u, t)).norm() <= tol * max(1.0, u.norm())


def in_corner(u: Multivector, t: Multivector, tol: float = EPS_DEFAULT) -> bool:
    """Membership in K(t) = {U : U = tUt}."""
    tut = clifford_product(t, clifford_product(u, t))
    return (u - tut).norm() <= tol * max(1.0, u.norm())


def q_basis(sig: Signature) -> list[Multivector]:
    """Ordered blade basis of the commuting subalgebra generated by the even
    generators (plus e^n for odd n): even-grade blades first, then odd, each
    class sorted by (grade, index list).
    """
    n = sig.n
    if n % 2 == 1:
        gens = list(range(2, n, 2)) + [n]
    else:
        gens = list(range(2, n + 1, 2))
    subsets = []
    for r in range(len(gens) + 1):
        subsets.extend(combinations(gens, r))
    even = sorted((s for s in subsets if len(s) % 2 == 0), key=lambda s: (len(s), s))
    odd = sorted((s for s in subsets if len(s) % 2 == 1), key=lambda s: (len(s), s))
    return [blade(sig, list(s)) for s in even + odd]


@dataclass
class IdealBasis:
    """Hermitian idempotent plus an ordered orthonormal basis of I(t)."""

    sig: Signature
    t: Multivector
    taus: list[Multivector]
    label: str = "standard"

    @property
    def d(self) -> int:
        return len(self.taus)

    def gram(self) -> np.ndarray:
        d = self.d
        g = np.empty((d, d), dtype=np.complex128)
        for i in range(d):
            for j in range(d):
                g[i, j] = scalar_product(self.taus[i], self.taus[j])
        return g

    def validate(self, tol: float = EPS_DEFAULT) -> list[str]:
        """Return human-readable violations of the ideal-basis invariants."""
        problems = []
        if not is_hermitian_idempotent(self.t, tol):
            problems.append("t is not a Hermitian idempotent")
        for k, tau in enumerate(self.taus, start=1):
            if not in_ideal(tau, self.t, tol):
                problems.append(f"tau_{k} is not in I(t)")
        gram = self.gram()
        err = float(np.max(np.abs(gram - np.eye(self.d))))
        if err > tol:
            problems.append(f"Gram matrix deviates from identity by {err:.3e}")
        return problems


def standard_ideal_basis(sig: Signature) -> IdealBasis:
    """Orthonormal ideal basis tau_k = sqrt(2)^floor(n/2) c_k t with c_k the
    ordered blade basis of the commuting subalgebra."""
    _require_complex(sig, "standard_ideal_basis")
    t = standard_idempotent(sig)
    scale = SQRT2 ** (sig.n // 2)
    taus = [scale * clifford_product(c, t) for c in q_basis(sig)]
    return IdealBasis(sig, t, taus, label="standard")


# ---------------------------------------------------------------------------
# tabulated preset bases (n = 1..5 plus the Dirac basis)
#
# each entry: (idempotent spec or None for the standard one, tau spec list,
# overall tau scale); a spec is a list of (coefficient, index tuple) pairs,
# multiplied by t on the right.

_PRESET_TABLE: dict[tuple[int, int], tuple[list | None, list, float]] = {
    (1, 0): ([(1.0, ())], [[(1.0, ()), (1.0, (1,))], [(1.0, ()), (-1.0, (1,))]], 1 / SQRT2),
    (0, 1): ([(1.0, ())], [[(1.0, ()), (-1j, (1,))], [(1.0, ()), (1j, (1,))]], 1 / SQRT2),
    (3, 0): (None, [[(1.0, ()), (-1j, (2, 3))], [(1.0, (2,)), (-1j, (3,))],
                    [(1.0, (2,)), (1j, (3,))], [(1.0, ()), (1j, (2, 3))]], 1.0),
    (2, 1): (None, [[(1.0, ()), (1.0, (2, 3))], [(1.0, (2,)), (1.0, (3,))],
                    [(1.0, (2,)), (-1.0, (3,))], [(1.0, ()), (-1.0, (2, 3))]], 1.0),
    (1, 2): (None, [[(1.0, ()), (-1j, (2, 3))], [(1.0, (2,)), (1j, (3,))],
                    [(1.0, (2,)), (-1j, (3,))], [(1.0, ()), (1j, (2, 3))]], 1.0),
    (0, 3): (None, [[(1.0, ()), (-1j, (2, 3))], [(1.0, (2,)), (1j, (3,))],
                    [(1.0, (2,)), (-1j, (3,))], [(1.0, ()), (1j, (2, 3))]], 1.0),
    (5, 0): (None, [[(1.0, ()), (-1j, (4, 5))], [(1.0, (2, 4)), (-1j, (2, 5))],
                    [(1.0, (2,)), (-1j, (2, 4, 5))], [(1.0, (4,)), (-1j, (5,))],
                    [(1.0, (4,)), (1j, (5,))], [(1.0, (2,)), (1j, (2, 4, 5))],
                    [(1.0, (2, 4)), (1j, (2, 5))], [(1.0, ()), (1j, (4, 5))]], SQRT2),
    (4, 1): (None, [[(1.0, ()), (-1.0, (4, 5))], [(1.0, (2, 4)), (-1.0, (2, 5))],
                    [(1.0, (2,)), (-1.0, (2, 4, 5))], [(1.0, (4,)), (-1.0, (5,))],
                    [(1.0, (4,)), (1.0, (5,))], [(1.0, (2,)), (1.0, (2, 4, 5))],
                    [(1.0, (2, 4)), (1.0, (2, 5))], [(1.0, ()), (1.0, (4, 5))]], SQRT2),
    (3, 2): (None, [[(1.0, ()), (-1j, (4, 5))], [(1.0, (2,)), (-1j, (2, 4, 5))],
                    [(1.0, (4,)), (1j, (5,))], [(1.0, (2, 4)), (1j, (2, 5))],
                    [(1.0, (2, 4)), (-1j, (2, 5))], [(1.0, (4,)), (-1j, (5,))],
                    [(1.0, (2,)), (1j, (2, 4, 5))], [(1.0, ()), (1j, (4, 5))]], SQRT2),
}
# sharing rules from the tables: (2,3), (1,4), (0,5) reuse the (3,2) tau list
for _sig in ((2, 3), (1, 4), (0, 5)):
    _PRESET_TABLE[_sig] = (None, _PRESET_TABLE[(3, 2)][1], SQRT2)

_DIRAC_TAUS = [[(-2.0, ())], [(2.0, (2, 4))], [(2.0, (4,))], [(2.0, (2,))]]


def _from_spec(sig: Signature, spec: list) -> Multivector:
    return Multivector.from_terms(sig, [(c, list(ind)) for c, ind in spec])


def preset_ideal_basis(sig: Signature, preset: str = "paper") -> IdealBasis:
    """Tabulated ideal bases: "standard" (the constructed basis, any
    signature), "paper" (the listed bases, n = 1..5), "dirac" ((1,3) only).
    """
    _require_complex(sig, "preset_ideal_basis")
    if preset == "standard":
        return standard_ideal_basis(sig)
    if preset == "dirac":
        if (sig.p, sig.q) != (1, 3):
            raise ValueError(f"dirac preset is defined for signature (1,3), not ({sig.p},{sig.q})")
        t = standard_idempotent(sig)
        taus = [clifford_product(_from_spec(sig, s), t) for s in _DIRAC_TAUS]
        return IdealBasis(sig, t, taus, label="dirac")
    if preset != "paper":
        raise ValueError(f"unknown preset {preset!r}; expected standard, paper or dirac")
    if sig.n in (2, 4):
        basis = standard_ideal_basis(sig)
        basis.label = "paper"
        return basis
    key = (sig.p, sig.q)
    if key not in _PRESET_TABLE:
        raise ValueError(f"no tabulated basis for signature ({sig.p},{sig.q})")
    t_spec, tau_specs, scale = _PRESET_TABLE[key]
    t = _from_spec(sig, t_spec) if t_spec is not None else standard_idempotent(sig)
    taus = [scale * clifford_product(_from_spec(sig, s), t) for s in tau_specs]
    return IdealBasis(sig, t, taus, label="paper")


def preset_signatures() -> list[tuple[Signature, str]]:
    """Every (signature, preset) pair with a tabulated golden matrix set."""
    pairs = []
    for n in range(1, 6):
        for p in range(n, -1, -1):
            pairs.append((Signature(p, n - p), "paper"))
    pairs.append((Signature(1, 3), "dirac"))
    return pairs


# ---------------------------------------------------------------------------
# JSON

def ideal_basis_to_dict(basis: IdealBasis) -> dict:
    from .algebra import multivector_to_dict

    return {
        "signature": [basis.sig.p, basis.sig.q],
        "preset": basis.label,
        "t": multivector_to_dict(basis.t),
        "taus": [multivector_to_dict(tau) for tau in basis.taus],
    }
