"""Negativity, logarithmic negativity and the closed forms for the rho / eta mixtures."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import HERMITIAN_TOL, NotHermitianError, jacobi_eigh
from .qstate import FamilyParams, check_triple, partial_transpose

NEG_EPS = 1e-10
DENSITY_TOL = 1e-10
IDENTITY_TOL = 1e-10
AC_CUT = ("A", "C")


class NotADensityMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class EnResult:
    """Logarithmic negativity in bits plus the data it was derived from."""

    en: float
    negativity: float
    neg_eigenvalues: tuple[float, ...]
    method: str = "numeric"


def _check_density(stack: np.ndarray) -> None:
    herm_dev = np.max(np.abs(stack - np.conj(np.swapaxes(stack, -1, -2))), axis=(-1, -2))
    if np.any(herm_dev > HERMITIAN_TOL):
        raise NotHermitianError(f"density matrix is not Hermitian (deviation {herm_dev.max():.3e})")
    tr = np.trace(stack, axis1=-2, axis2=-1).real
    if np.any(np.abs(tr - 1.0) > DENSITY_TOL):
        raise NotADensityMatrixError(f"trace {tr[np.argmax(np.abs(tr - 1.0))]!r} is not 1")
    n = stack.shape[-1]
    # PSD within DENSITY_TOL: M + tol*I must admit a Cholesky factorisation
    try:
        np.linalg.cholesky(stack + DENSITY_TOL * np.eye(n))
    except np.linalg.LinAlgError:
        raise NotADensityMatrixError("matrix is not positive semidefinite") from None


def pt_spectra(stack, subset, labels=None, check: bool = True) -> np.ndarray:
    """Ascending spectra of the partial transposes of a stack of density matrices."""
    stack = np.asarray(stack, dtype=np.complex128)
    if stack.ndim == 2:
        stack = stack[None]
    if check:
        _check_density(stack)
    w, _ = jacobi_eigh(partial_transpose(stack, subset, labels))
    return w


def _negativity_from(w: np.ndarray) -> np.ndarray:
    return 0.0 - np.sum(np.where(w < -NEG_EPS, w, 0.0), axis=-1)


def log_negativity_stack(stack, subset=AC_CUT, labels=None) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised ``(E_N, N)`` for a stack of density matrices across ``subset``."""
    w = pt_spectra(stack, subset, labels)
    en = np.log2(np.sum(np.abs(w), axis=-1))
    neg = _negativity_from(w)
    _check_identity(en, neg)
    return en, neg


def _check_identity(en, neg) -> None:
    dev = np.abs(np.asarray(en) - np.log2(1.0 + 2.0 * np.asarray(neg)))
    if np.any(dev > IDENTITY_TOL):
        raise ArithmeticError(f"log2(trace norm) and log2(1+2N) disagree by {dev.max():.3e}")


def negativity(m, subset, labels=None) -> float:
    """Absolute sum of the eigenvalues of ``m^T_subset`` below ``-1e-10``."""
    return float(_negativity_from(pt_spectra(m, subset, labels)[0]))


def log_negativity(m, subset=AC_CUT, labels=None) -> EnResult:
    """``log2 || m^T_subset ||_1`` across the cut ``subset : rest``."""
    w = pt_spectra(m, subset, labels)[0]
    en = float(np.log2(np.sum(np.abs(w))))
    neg = float(_negativity_from(w))
    _check_identity(en, neg)
    return EnResult(en, neg, tuple(float(v) for v in w[w < -NEG_EPS]), "numeric")


def _require_canonical(p: FamilyParams) -> None:
    if not p.is_canonical:
        raise ValueError("closed forms need |a| >= |b| and |c| >= |d|; call p.canonical() first")


def en_rho_closed_form(p: FamilyParams) -> float:
    _require_canonical(p)
    return math.log2(abs(p.a) ** 2 + abs(p.c) ** 2)


def eta_roles(p: FamilyParams, triple) -> tuple[float, float]:
    """``(x, y)`` with x from the pair fully contained in ``triple`` and y from the other pair."""
    t = set(check_triple(triple))
    return (p.x, p.y) if {1, 2} <= t else (p.y, p.x)


def _eta_terms(p: FamilyParams, triple) -> tuple[float, float, float, float]:
    # 1 - 4|uv|^2 == (|u|^2 - |v|^2)^2 for |u|^2 + |v|^2 == 1; the squared
    # difference avoids cancellation next to |uv| = 1/2
    d_ab = (abs(p.a) ** 2 - abs(p.b) ** 2) ** 2
    d_cd = (abs(p.c) ** 2 - abs(p.d) ** 2) ** 2
    if {1, 2} <= set(check_triple(triple)):
        return p.x, p.y, d_ab, d_cd
    return p.y, p.x, d_cd, d_ab


def eta_verbatim(p: FamilyParams, triple=(1, 2, 3)) -> float:
    """The published eta expression, applied without any regime check."""
    x, y, one_minus_4x, one_minus_4y = _eta_terms(p, triple)
    return math.log2(
        (math.sqrt(one_minus_4y + 16.0 * x) + 2.0 * math.sqrt(one_minus_4x + y)) / 3.0 + 1.0
    )


def eta_branched(p: FamilyParams, triple=(1, 2, 3)) -> float:
    """Closed form that agrees with the numeric spectrum on both sides of 4x = y.

    The published expression only holds for ``4x >= y``. Below that line
    the first square root no longer enters and the value is
    ``log2(4/3 + (2/3) sqrt(1 - 4x + y))``; both pieces meet at 4x = y.
    """
    x, y, one_minus_4x, _ = _eta_terms(p, triple)
    if 4.0 * x >= y:
        return eta_verbatim(p, triple)
    return math.log2(4.0 / 3.0 + (2.0 / 3.0) * math.sqrt(one_minus_4x + y))


def en_eta_closed_form(p: FamilyParams, triple=(1, 2, 3)) -> float:
    _require_canonical(p)
    return eta_branched(p, triple)


def en_eta_verbatim(p: FamilyParams, triple=(1, 2, 3)) -> float:
    _require_canonical(p)
    return eta_verbatim(p, triple)


def condition3_value(p: FamilyParams) -> float:
    return 4.0 * p.x - p.y


def condition4_value(p: FamilyParams) -> float:
    return 4.0 * p.y - p.x


def condition3(p: FamilyParams) -> bool:
    """``4|ab|^2 - |cd|^2 > 3/4`` (strict)."""
    return condition3_value(p) > 0.75


def condition4(p: FamilyParams) -> bool:
    """``4|cd|^2 - |ab|^2 > 3/4`` (strict)."""
    return condition4_value(p) > 0.75


def condition_for_triple(p: FamilyParams, triple) -> bool:
    return condition3(p) if {1, 2} <= set(check_triple(triple)) else condition4(p)
