"""Multivector data model and the fundamental bilinear operations.

A multivector over Cl(p,q) is stored as a dense array of 2**n complex
coefficients indexed by blade bitmask: bit a-1 of the mask is set iff the
generator e^a is present in the canonical (ascending-index) blade.  Mask 0 is
the unit e, mask 2**n - 1 is the volume element.  All operations are pure;
multivectors are immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import backend

EPS_DEFAULT = 1e-9
N_MAX = 12


class SignatureMismatch(ValueError):
    """Raised when two multivectors over different signatures are combined."""


@dataclass(frozen=True)
class Signature:
    """Algebra signature (p, q) with diagonal metric +1 x p, -1 x q.

    field is "complex" (default) or "real"; real multivectors keep zero
    imaginary parts but share the complex storage.
    """

    p: int
    q: int
    field: str = "complex"

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("p and q must be nonnegative")
        n = self.p + self.q
        if not 1 <= n <= N_MAX:
            raise ValueError(f"require 1 <= p+q <= {N_MAX}, got {n}")
        if self.field not in ("real", "complex"):
            raise ValueError(f"field must be 'real' or 'complex', got {self.field!r}")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def neg_mask(self) -> int:
        """Bitmask of generators squaring to -e (indices p+1..n)."""
        return ((1 << self.n) - 1) ^ ((1 << self.p) - 1)

    def metric(self, a: int) -> int:
        """Diagonal metric value for generator a (1-based)."""
        if not 1 <= a <= self.n:
            raise ValueError(f"generator index {a} out of range 1..{self.n}")
        return 1 if a <= self.p else -1

    @property
    def det_metric(self) -> int:
        """Sign of det(eta), i.e. (-1)**q."""
        return -1 if self.q % 2 else 1

    def __str__(self) -> str:
        tag = "" if self.field == "complex" else "^R"
        return f"Cl{tag}({self.p},{self.q})"


# ---------------------------------------------------------------------------
# mask helpers

def mask_from_indices(indices: Iterable[int], n: int) -> int:
    """Bitmask of a strictly increasing generator index list (1-based)."""
    mask = 0
    prev = 0
    for a in indices:
        if not 1 <= a <= n:
            raise ValueError(f"generator index {a} out of range 1..{n}")
        if a <= prev:
            raise ValueError(f"indices must be strictly increasing, got {list(indices)}")
        mask |= 1 << (a - 1)
        prev = a
    return mask


def indices_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    a = 1
    while mask:
        if mask & 1:
            out.append(a)
        mask >>= 1
        a += 1
    return tuple(out)


def grade_of_mask(mask: int) -> int:
    return int(mask).bit_count()


@lru_cache(maxsize=None)
def grades_array(n: int) -> np.ndarray:
    """Grade of every mask 0..2**n-1."""
    arr = np.bitwise_count(np.arange(1 << n, dtype=np.uint64)).astype(np.int64)
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=None)
def display_order(n: int) -> tuple[int, ...]:
    """Masks ordered as in the canonical basis listing: by grade, then index list."""
    return tuple(sorted(range(1 << n), key=lambda m: (grade_of_mask(m), indices_from_mask(m))))


def blade_product_sign(mask_a: int, mask_b: int, neg_mask: int) -> int:
    """Exact sign of e^A e^B (the result blade has mask A ^ B)."""
    swaps = int(mask_a & mask_b & neg_mask).bit_count()
    a = mask_a >> 1
    while a:
        swaps += int(a & mask_b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


# ---------------------------------------------------------------------------
# multivector

class Multivector:
    """Immutable dense multivector over a fixed signature."""

    __slots__ = ("sig", "_c")

    def __init__(self, sig: Signature, coeffs, *, copy: bool = True):
        arr = np.array(coeffs, dtype=np.complex128, copy=copy)
        if arr.shape != (sig.dim,):
            raise ValueError(f"expected {sig.dim} coefficients for {sig}, got {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "_c", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient array, indexed by blade mask."""
        return self._c

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return cls(sig, np.zeros(sig.dim, dtype=np.complex128), copy=False)

    @classmethod
    def scalar(cls, sig: Signature, value: complex) -> "Multivector":
        c = np.zeros(sig.dim, dtype=np.complex128)
        c[0] = value
        return cls(sig, c, copy=False)

    @classmethod
    def from_terms(cls, sig: Signature, terms: Iterable[tuple[complex, Sequence[int]]]) -> "Multivector":
        """Build from (coefficient, ascending index list) pairs."""
        c = np.zeros(sig.dim, dtype=np.complex128)
        for value, indices in terms:
            c[mask_from_indices(indices, sig.n)] += value
        return cls(sig, c, copy=False)

    # -- introspection -----------------------------------------------------

    def coefficient(self, indices: Sequence[int]) -> complex:
        return complex(self._c[mask_from_indices(indices, self.sig.n)])

    def __getitem__(self, mask: int) -> complex:
        return complex(self._c[mask])

    def terms(self, tol: float = 0.0) -> list[tuple[complex, tuple[int, ...]]]:
        """Nonzero (coefficient, index list) pairs in display order."""
        out = []
        for mask in display_order(self.sig.n):
            v = self._c[mask]
            if abs(v) > tol:
                out.append((complex(v), indices_from_mask(mask)))
        return out

    def grades(self, tol: float = EPS_DEFAULT) -> set[int]:
        g = grades_array(self.sig.n)
        return {int(k) for k in np.unique(g[np.abs(self._c) > tol])}

    def is_homogeneous(self, tol: float = EPS_DEFAULT) -> bool:
        return len(self.grades(tol)) <= 1

    def norm(self) -> float:
        """Norm induced by the Hermitian scalar product (the basis is orthonormal)."""
        return float(np.linalg.norm(self._c))

    # -- arithmetic --------------------------------------------------------

    def _check_same(self, other: "Multivector") -> None:
        if self.sig != other.sig:
            raise SignatureMismatch(f"cannot combine {self.sig} with {other.sig}")

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_same(other)
        return Multivector(self.sig, self._c + other._c, copy=False)

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_same(other)
        return Multivector(self.sig, self._c - other._c, copy=False)

    def __neg__(self):
        return Multivector(self.sig, -self._c, copy=False)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return clifford_product(self, other)
        if isinstance(other, (int, float, complex)):
            return Multivector(self.sig, self._c * other, copy=False)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return Multivector(self.sig, other * self._c, copy=False)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex)):
            return Multivector(self.sig, self._c / other, copy=False)
        return NotImplemented

    def __xor__(self, other):
        if isinstance(other, Multivector):
            return exterior_product(self, other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and bool(np.array_equal(self._c, other._c))

    def __hash__(self):
        return hash((self.sig, self._c.tobytes()))

    def isclose(self, other: "Multivector", tol: float = EPS_DEFAULT) -> bool:
        self._check_same(other)
        return float(np.max(np.abs(self._c - other._c))) <= tol

    def __repr__(self):
        parts = []
        for value, indices in self.terms(tol=0.0)[:8]:
            name = "e" if not indices else "e^{" + ",".join(map(str, indices)) + "}"
            parts.append(f"({value:g})*{name}")
        body = " + ".join(parts) if parts else "0"
        if len(self.terms(tol=0.0)) > 8:
            body += " + ..."
        return f"<{self.sig} {body}>"


# ---------------------------------------------------------------------------
# spec operations

def blade(sig: Signature, indices: Sequence[int]) -> Multivector:
    """Canonical basis blade e^{a1...ak}; the empty list gives the unit e."""
    c = np.zeros(sig.dim, dtype=np.complex128)
    c[mask_from_indices(indices, sig.n)] = 1.0
    return Multivector(sig, c, copy=False)


def generator(sig: Signature, a: int) -> Multivector:
    return blade(sig, [a])


def volume_element(sig: Signature) -> Multivector:
    c = np.zeros(sig.dim, dtype=np.complex128)
    c[sig.dim - 1] = 1.0
    return Multivector(sig, c, copy=False)


def clifford_product(u: Multivector, v: Multivector) -> Multivector:
    u._check_same(v)
    out = np.zeros(u.sig.dim, dtype=np.complex128)
    backend.geometric_product(u.coeffs, v.coeffs, out, u.sig.neg_mask)
    return Multivector(u.sig, out, copy=False)


def exterior_product(u: Multivector, v: Multivector) -> Multivector:
    u._check_same(v)
    out = np.zeros(u.sig.dim, dtype=np.complex128)
    backend.exterior_product(u.coeffs, v.coeffs, out)
    return Multivector(u.sig, out, copy=False)


def grade_project(u: Multivector, k: int) -> Multivector:
    if not 0 <= k <= u.sig.n:
        raise ValueError(f"grade {k} out of range 0..{u.sig.n}")
    keep = grades_array(u.sig.n) == k
    return Multivector(u.sig, np.where(keep, u.coeffs, 0.0), copy=False)


def trace(u: Multivector) -> complex:
    """Scalar coefficient of u (the unit-blade component)."""
    return complex(u.coeffs[0])


def commutator(u: Multivector, v: Multivector) -> Multivector:
    return clifford_product(u, v) - clifford_product(v, u)


def anticommutator(u: Multivector, v: Multivector) -> Multivector:
    return clifford_product(u, v) + clifford_product(v, u)


def generator_contraction(u: Multivector) -> Multivector:
    """Sum over a of e_a u e^a with e_a the metric-lowered generator."""
    sig = u.sig
    total = Multivector.zero(sig)
    for a in range(1, sig.n + 1):
        ga = generator(sig, a)
        total = total + sig.metric(a) * clifford_product(ga, clifford_product(u, ga))
    return total


def random_multivector(sig: Signature, rng: np.random.Generator, grade: int | None = None) -> Multivector:
    """Random multivector with coefficients uniform in [-1, 1] (both parts if complex)."""
    c = rng.uniform(-1.0, 1.0, sig.dim).astype(np.complex128)
    if sig.field == "complex":
        c += 1j * rng.uniform(-1.0, 1.0, sig.dim)
    if grade is not None:
        if not 0 <= grade <= sig.n:
            raise ValueError(f"grade {grade} out of range 0..{sig.n}")
        c = np.where(grades_array(sig.n) == grade, c, 0.0)
    return Multivector(sig, c, copy=False)


def all_signatures(n_max: int, field: str = "complex", n_min: int = 1) -> list[Signature]:
    """Every (p, q) with n_min <= p+q <= n_max, ordered by n then descending p."""
    out = []
    for n in range(n_min, n_max + 1):
        for p in range(n, -1, -1):
            out.append(Signature(p, n - p, field))
    return out


# ---------------------------------------------------------------------------
# JSON multivector schema

def multivector_to_dict(u: Multivector) -> dict:
    terms = [
        {"blade": list(indices), "re": float(value.real), "im": float(value.imag)}
        for value, indices in u.terms(tol=0.0)
    ]
    return {"p": u.sig.p, "q": u.sig.q, "field": u.sig.field, "terms": terms}


def multivector_from_dict(data: dict) -> Multivector:
    sig = Signature(int(data["p"]), int(data["q"]), data.get("field", "complex"))
    c = np.zeros(sig.dim, dtype=np.complex128)
    for term in data.get("terms", []):
        mask = mask_from_indices(term["blade"], sig.n)
        c[mask] += complex(term.get("re", 0.0), term.get("im", 0.0))
    return Multivector(sig, c, copy=False)
