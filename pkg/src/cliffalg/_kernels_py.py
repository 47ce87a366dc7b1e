"""NumPy fallback for the product kernels.

Same contract as the compiled extension: flat complex128 coefficient arrays
indexed by blade bitmask, results accumulated into a caller-zeroed buffer.
Sign tables for small n are cached; larger algebras compute sign rows on the
fly with vectorized popcounts.
"""

from functools import lru_cache

import numpy as np

_TABLE_MAX_N = 9

_ONE = np.uint64(1)


@lru_cache(maxsize=None)
def _masks(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.uint64)


def _swap_counts(a, b):
    # pairs (x in a, y in b) with x > y, elementwise over broadcast arrays
    counts = np.zeros(np.broadcast_shapes(np.shape(a), np.shape(b)), dtype=np.uint64)
    a = np.asarray(a, dtype=np.uint64) >> _ONE
    while a.any():
        counts += np.bitwise_count(a & b)
        a = a >> _ONE
    return counts


@lru_cache(maxsize=None)
def _sign_table(n: int, neg_mask: int) -> np.ndarray:
    m = _masks(n)
    counts = _swap_counts(m[:, None], m[None, :])
    counts += np.bitwise_count(m[:, None] & m[None, :] & np.uint64(neg_mask))
    return np.where(counts & _ONE, -1.0, 1.0)


def _sign_row(n: int, neg_mask: int, a: int) -> np.ndarray:
    m = _masks(n)
    a = np.uint64(a)
    counts = _swap_counts(a, m) + np.bitwise_count(a & m & np.uint64(neg_mask))
    return np.where(counts & _ONE, -1.0, 1.0)


def geometric_product(u, v, out, neg_mask):
    """Accumulate the Clifford product of u and v into out (caller zeroes out)."""
    dim = out.shape[0]
    n = dim.bit_length() - 1
    targets = _masks(n).astype(np.intp)
    table = _sign_table(n, neg_mask) if n <= _TABLE_MAX_N else None
    for a in np.flatnonzero(u):
        signs = table[a] if table is not None else _sign_row(n, neg_mask, a)
        # a ^ targets is a permutation of 0..dim-1, so indices never collide
        out[a ^ targets] += (u[a] * signs) * v


def exterior_product(u, v, out):
    """Accumulate the exterior (wedge) product of u and v into out."""
    dim = out.shape[0]
    n = dim.bit_length() - 1
    masks = _masks(n)
    targets = masks.astype(np.intp)
    table = _sign_table(n, 0) if n <= _TABLE_MAX_N else None
    for a in np.flatnonzero(u):
        signs = table[a] if table is not None else _sign_row(n, 0, a)
        row = np.where(masks & np.uint64(a), 0.0, signs)
        out[a ^ targets] += (u[a] * row) * v
