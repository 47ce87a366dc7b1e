# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled dense product kernels.

Multivectors are flat complex128 arrays of length 2**n indexed by the blade
bitmask (bit a-1 set <=> generator a present).  Blade-level signs are exact
integer arithmetic: the reordering parity counts generator transpositions via
popcounts, the metric factor counts shared negative-square generators.
"""

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #  define CLIFF_POPCOUNT(x) __builtin_popcountll(x)
    #else
    static int CLIFF_POPCOUNT(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; ++c; }
        return c;
    }
    #endif
    """
    int CLIFF_POPCOUNT(unsigned long long x) nogil


cdef inline int _product_parity(unsigned long long a, unsigned long long b,
                                unsigned long long neg_mask) nogil:
    # swaps needed to merge blade b into blade a (pairs x in a, y in b with
    # x > y), plus one flip per shared generator squaring to -e
    cdef int s = CLIFF_POPCOUNT(a & b & neg_mask)
    a >>= 1
    while a:
        s += CLIFF_POPCOUNT(a & b)
        a >>= 1
    return s & 1


def geometric_product(const double complex[::1] u, const double complex[::1] v,
                      double complex[::1] out, unsigned long long neg_mask):
    """Accumulate the Clifford product of u and v into out (caller zeroes out)."""
    cdef Py_ssize_t dim = u.shape[0]
    cdef Py_ssize_t a, b
    cdef double complex ua
    with nogil:
        for a in range(dim):
            ua = u[a]
            if ua == 0:
                continue
            for b in range(dim):
                if v[b] == 0:
                    continue
                if _product_parity(<unsigned long long> a, <unsigned long long> b, neg_mask):
                    out[a ^ b] = out[a ^ b] - ua * v[b]
                else:
                    out[a ^ b] = out[a ^ b] + ua * v[b]


def exterior_product(const double complex[::1] u, const double complex[::1] v,
                     double complex[::1] out):
    """Accumulate the exterior (wedge) product of u and v into out."""
    cdef Py_ssize_t dim = u.shape[0]
    cdef Py_ssize_t a, b
    cdef double complex ua
    with nogil:
        for a in range(dim):
            ua = u[a]
            if ua == 0:
                continue
            for b in range(dim):
                if (a & b) or v[b] == 0:
                    continue
                if _product_parity(<unsigned long long> a, <unsigned long long> b, 0):
                    out[a ^ b] = out[a ^ b] - ua * v[b]
                else:
                    out[a ^ b] = out[a ^ b] + ua * v[b]
