"""Dense complex matrix helpers and a cyclic Jacobi eigensolver for Hermitian matrices.

Matrices are plain ``complex128`` numpy arrays marked read-only. Every function
returns a fresh array and never mutates its inputs.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITIAN_TOL = 1e-12
JACOBI_REL_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


class NotHermitianError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


def as_matrix(data) -> np.ndarray:
    """Return a read-only square complex copy of ``data``."""
    m = np.array(data, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains NaN or Inf")
    m.setflags(write=False)
    return m


def _frozen(m: np.ndarray) -> np.ndarray:
    m.setflags(write=False)
    return m


def mat_mul(lhs, rhs) -> np.ndarray:
    lhs, rhs = np.asarray(lhs), np.asarray(rhs)
    if lhs.shape != rhs.shape:
        raise ValueError(f"dimension mismatch: {lhs.shape} vs {rhs.shape}")
    return _frozen(np.asarray(lhs @ rhs, dtype=np.complex128))


def adjoint(m) -> np.ndarray:
    return _frozen(np.ascontiguousarray(np.conj(np.asarray(m, dtype=np.complex128)).T))


def kron(lhs, rhs) -> np.ndarray:
    """Tensor product; block ``(i, j)`` of the result is ``lhs[i, j] * rhs``."""
    return _frozen(np.kron(np.asarray(lhs, dtype=np.complex128), np.asarray(rhs, dtype=np.complex128)))


def frobenius_norm(m) -> float:
    return float(np.sqrt(np.sum(np.abs(np.asarray(m)) ** 2)))


def is_hermitian(m, tol: float = HERMITIAN_TOL) -> bool:
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and bool(np.max(np.abs(m - m.conj().T)) <= tol)


def _check_hermitian(stack: np.ndarray) -> None:
    dev = np.max(np.abs(stack - np.conj(np.swapaxes(stack, -1, -2))), axis=(-1, -2))
    bad = np.flatnonzero(dev > HERMITIAN_TOL)
    if bad.size:
        raise NotHermitianError(
            f"matrix is not Hermitian (max |M - M^H| = {dev[bad[0]]:.3e} > {HERMITIAN_TOL})"
        )


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues of a Hermitian matrix.

    ``vectors`` holds the matching orthonormal eigenvectors as columns and
    ``reconstruction_error`` is ``||V diag(w) V^H - M||_F``.
    """

    eigenvalues: np.ndarray
    vectors: np.ndarray
    reconstruction_error: float

    def __len__(self) -> int:
        return len(self.eigenvalues)


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Annihilate ``a[:, p, q]`` in place for every matrix of the stack."""
    g = a[:, p, q]
    mag = np.abs(g)
    idx = np.flatnonzero(mag > 0.0)
    if idx.size == 0:
        return
    full = idx.size == a.shape[0]
    sub_a = a if full else a[idx]
    sub_v = v if full else v[idx]
    g, mag = (g, mag) if full else (g[idx], mag[idx])

    app = sub_a[:, p, p].real.copy()
    aqq = sub_a[:, q, q].real.copy()
    phase = np.exp(1j * np.angle(g))
    with np.errstate(over="ignore"):
        # |theta| = inf for a negligible |g| gives t = 0, the identity rotation
        theta = (aqq - app) / (2.0 * mag)
    t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
    t = np.where(theta == 0.0, 1.0, t)
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    sp = (s * phase)[:, None]
    sm = (s * np.conj(phase))[:, None]
    c = c[:, None]

    # A <- A J with J = [[c, s e^{i phi}], [-s e^{-i phi}, c]] on the (p, q) plane
    col_p = sub_a[:, :, p].copy()
    col_q = sub_a[:, :, q]
    sub_a[:, :, p] = c * col_p - sm * col_q
    sub_a[:, :, q] = sp * col_p + c * col_q
    # A <- J^H A
    row_p = sub_a[:, p, :].copy()
    row_q = sub_a[:, q, :]
    sub_a[:, p, :] = c * row_p - sp * row_q
    sub_a[:, q, :] = sm * row_p + c * row_q
    sub_a[:, p, q] = 0.0
    sub_a[:, q, p] = 0.0
    sub_a[:, p, p] = app - t * mag
    sub_a[:, q, q] = aqq + t * mag

    vp = sub_v[:, :, p].copy()
    vq = sub_v[:, :, q]
    sub_v[:, :, p] = c * vp - sm * vq
    sub_v[:, :, q] = sp * vp + c * vq

    if not full:
        a[idx] = sub_a
        v[idx] = sub_v


def _off_norm(a: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    off = a.copy()
    off[:, np.arange(n), np.arange(n)] = 0.0
    return np.sqrt(np.sum(np.abs(off) ** 2, axis=(-1, -2)))


def jacobi_eigh(stack) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic complex Jacobi on a stack of Hermitian matrices.

    Parameters
    ----------
    stack : array_like, shape (batch, n, n)
        Hermitian matrices (checked to 1e-12 entrywise).

    Returns
    -------
    w : ndarray, shape (batch, n)
        Eigenvalues in ascending order.
    v : ndarray, shape (batch, n, n)
        Eigenvectors as columns, ordered like ``w``.

    Each matrix leaves the active set as soon as its off-diagonal Frobenius
    norm drops below ``1e-13 * ||M||_F``, so the result for a given matrix is
    bit-for-bit independent of what else is in the batch.
    """
    a_all = np.array(stack, dtype=np.complex128)
    if a_all.ndim != 3 or a_all.shape[1] != a_all.shape[2]:
        raise ValueError(f"expected shape (batch, n, n), got {a_all.shape}")
    if not np.all(np.isfinite(a_all)):
        raise ValueError("matrix contains NaN or Inf")
    _check_hermitian(a_all)
    batch, n, _ = a_all.shape
    v_all = np.broadcast_to(np.eye(n, dtype=np.complex128), a_all.shape).copy()
    # the diagonal of a Hermitian matrix is real; drop rounding residue up front
    diag = np.arange(n)
    a_all[:, diag, diag] = a_all[:, diag, diag].real
    tol = JACOBI_REL_TOL * np.sqrt(np.sum(np.abs(a_all) ** 2, axis=(-1, -2)))

    active = np.arange(batch)
    a, v = a_all, v_all
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    for _ in range(JACOBI_MAX_SWEEPS + 1):
        done = _off_norm(a) <= tol[active]
        if done.any():
            a_all[active[done]] = a[done]
            v_all[active[done]] = v[done]
            keep = ~done
            active, a, v = active[keep], a[keep], v[keep]
        if active.size == 0:
            break
        for p, q in pairs:
            _rotate(a, v, p, q)
    else:
        raise ConvergenceError(
            f"Jacobi did not converge within {JACOBI_MAX_SWEEPS} sweeps for {active.size} matrices"
        )

    w = a_all[:, diag, diag].real
    order = np.argsort(w, axis=-1, kind="stable")
    w = np.take_along_axis(w, order, axis=-1)
    v_all = np.take_along_axis(v_all, order[:, None, :], axis=-1)
    return w, v_all


def eigh_stack(stack) -> list[Spectrum]:
    """Spectra for every matrix in ``stack``, with reconstruction errors."""
    stack = np.asarray(stack, dtype=np.complex128)
    w, v = jacobi_eigh(stack)
    recon = (v * w[:, None, :]) @ np.conj(np.swapaxes(v, -1, -2))
    err = np.sqrt(np.sum(np.abs(recon - stack) ** 2, axis=(-1, -2)))
    out = []
    for k in range(len(w)):
        out.append(Spectrum(_frozen(w[k].copy()), _frozen(v[k].copy()), float(err[k])))
    return out


def hermitian_eigenvalues(m) -> Spectrum:
    """Spectrum of a single Hermitian matrix.

    Raises :class:`NotHermitianError` if ``m`` is not Hermitian within 1e-12;
    the input is never symmetrised.
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return eigh_stack(m[None])[0]


def trace_norm_hermitian(m) -> float:
    """Sum of absolute eigenvalues, i.e. ``Tr sqrt(M^H M)`` for Hermitian ``M``."""
    return float(np.sum(np.abs(hermitian_eigenvalues(m).eigenvalues)))
