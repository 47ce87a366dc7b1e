"""Dense complex matrix routines for the representation matrices.

Representation dimensions stay small (d <= 64), so the determinant uses
partial-pivot LU and the spectrum uses Householder reduction to Hessenberg
(tridiagonal in the Hermitian case) followed by shifted QR iteration with
deflation.  numpy.linalg serves as an independent oracle in the tests, not
as the implementation.
"""

from __future__ import annotations

import numpy as np

QR_TOL = 1e-12


class EigenConvergenceError(RuntimeError):
    """Shifted QR failed to deflate within the iteration budget."""


def lu_determinant(matrix: np.ndarray) -> complex:
    """Determinant via LU with partial pivoting."""
    a = np.array(matrix, dtype=np.complex128)
    d = a.shape[0]
    if a.shape != (d, d):
        raise ValueError(f"square matrix required, got {a.shape}")
    det = 1.0 + 0.0j
    for col in range(d):
        pivot = col + int(np.argmax(np.abs(a[col:, col])))
        if abs(a[pivot, col]) == 0.0:
            return 0.0 + 0.0j
        if pivot != col:
            a[[col, pivot]] = a[[pivot, col]]
            det = -det
        det *= a[col, col]
        factors = a[col + 1 :, col] / a[col, col]
        a[col + 1 :, col:] -= np.outer(factors, a[col, col:])
    return complex(det)


def is_hermitian(matrix: np.ndarray, tol: float = 1e-12) -> bool:
    return bool(np.max(np.abs(matrix - matrix.conj().T)) <= tol * max(1.0, float(np.max(np.abs(matrix))))) \
        if matrix.size else True


def hessenberg(matrix: np.ndarray) -> np.ndarray:
    """Householder reduction to upper Hessenberg form (similarity transform)."""
    a = np.array(matrix, dtype=np.complex128)
    d = a.shape[0]
    for col in range(d - 2):
        x = a[col + 1 :, col].copy()
        nx = np.linalg.norm(x)
        if nx == 0.0:
            continue
        alpha = -np.exp(1j * np.angle(x[0])) * nx if x[0] != 0 else -nx
        v = x.copy()
        v[0] -= alpha
        nv = np.linalg.norm(v)
        if nv < 1e-300:
            continue
        v /= nv
        # a <- H a H with H = I - 2 v v*
        a[col + 1 :, col:] -= 2.0 * np.outer(v, v.conj() @ a[col + 1 :, col:])
        a[:, col + 1 :] -= 2.0 * np.outer(a[:, col + 1 :] @ v, v.conj())
    return a


def _wilkinson_shift(h: np.ndarray) -> complex:
    # eigenvalue of the trailing 2x2 block closest to its bottom-right entry
    a, b = h[-2, -2], h[-2, -1]
    c, d = h[-1, -2], h[-1, -1]
    tr = a + d
    disc = np.sqrt((a - d) ** 2 + 4.0 * b * c + 0.0j)
    r1 = (tr + disc) / 2.0
    r2 = (tr - disc) / 2.0
    return r1 if abs(r1 - d) <= abs(r2 - d) else r2


def _qr_sweep(h: np.ndarray, mu: complex) -> np.ndarray:
    """One explicit single-shift QR step on a Hessenberg matrix via Givens
    rotations; preserves the Hessenberg structure."""
    d = h.shape[0]
    h = h - mu * np.eye(d)
    rotations = []
    for i in range(d - 1):
        a, b = h[i, i], h[i + 1, i]
        r = np.sqrt(abs(a) ** 2 + abs(b) ** 2)
        if r < 1e-300:
            c, s = 1.0 + 0.0j, 0.0 + 0.0j
        else:
            c, s = a / r, b / r
        rotations.append((c, s))
        row_i = h[i, i:].copy()
        row_j = h[i + 1, i:].copy()
        h[i, i:] = np.conj(c) * row_i + np.conj(s) * row_j
        h[i + 1, i:] = -s * row_i + c * row_j
    for i, (c, s) in enumerate(rotations):
        col_i = h[: i + 2, i].copy()
        col_j = h[: i + 2, i + 1].copy()
        h[: i + 2, i] = c * col_i + s * col_j
        h[: i + 2, i + 1] = -np.conj(s) * col_i + np.conj(c) * col_j
    return h + mu * np.eye(d)


def _qr_eigvals_hessenberg(h: np.ndarray, tol: float, max_iter: int) -> list[complex]:
    h = np.array(h, dtype=np.complex128)
    eigs: list[complex] = []
    iterations = 0
    while h.shape[0] > 0:
        d = h.shape[0]
        if d == 1:
            eigs.append(complex(h[0, 0]))
            break
        scale = max(float(np.max(np.abs(h))), 1e-300)
        # deflate any negligible subdiagonal entry, bottom-up
        deflated = False
        for i in range(d - 1, 0, -1):
            if abs(h[i, i - 1]) <= tol * (abs(h[i - 1, i - 1]) + abs(h[i, i]) + scale * 1e-3):
                h[i, i - 1] = 0.0
                eigs.extend(_qr_eigvals_hessenberg(h[i:, i:], tol, max_iter))
                h = h[:i, :i]
                deflated = True
                break
        if deflated:
            continue
        if d == 2:
            a, b = h[0, 0], h[0, 1]
            c, e = h[1, 0], h[1, 1]
            tr = a + e
            disc = np.sqrt((a - e) ** 2 + 4.0 * b * c + 0.0j)
            eigs.extend([complex((tr + disc) / 2.0), complex((tr - disc) / 2.0)])
            break
        iterations += 1
        if iterations > max_iter:
            raise EigenConvergenceError(f"QR iteration did not converge after {max_iter} sweeps")
        mu = _wilkinson_shift(h)
        if iterations % 12 == 0:
            # occasional exceptional shift to break stagnation cycles
            mu = h[-1, -1] + 0.9 * abs(h[-1, -2])
        h = _qr_sweep(h, mu)
    return eigs


def eigenvalues(matrix: np.ndarray, tol: float = QR_TOL, max_iter: int | None = None) -> np.ndarray:
    """Eigenvalues of a dense complex matrix, sorted by (real, imaginary).

    Hermitian inputs keep an exactly real spectrum (the Hessenberg form of a
    Hermitian matrix is tridiagonal Hermitian and the shifts stay real, but
    the imaginary dust is dropped explicitly for determinism).
    """
    a = np.asarray(matrix, dtype=np.complex128)
    d = a.shape[0]
    if a.shape != (d, d):
        raise ValueError(f"square matrix required, got {a.shape}")
    if max_iter is None:
        max_iter = 100 * max(d, 1)
    hermitian = is_hermitian(a)
    h = hessenberg(a)
    eigs = np.array(_qr_eigvals_hessenberg(h, tol, max_iter), dtype=np.complex128)
    if hermitian:
        eigs = eigs.real.astype(np.complex128)
    order = np.lexsort((eigs.imag, eigs.real))
    return eigs[order]
