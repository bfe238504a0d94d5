"""Multi-qubit pure states, the Bell and |A_i> families, mixtures and partial transposes.

Basis ordering: the first label is the most significant bit, so for labels
``("A", "B", "C", "D")`` the basis index is ``8*i_A + 4*i_B + 2*i_C + i_D``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import _frozen

NORM_TOL = 1e-12
QUBITS = ("A", "B", "C", "D")
INV_SQRT2 = 1.0 / math.sqrt(2.0)


def default_labels(num_qubits: int) -> tuple[str, ...]:
    return tuple(chr(ord("A") + k) for k in range(num_qubits))


@dataclass(frozen=True)
class FamilyParams:
    """Amplitudes ``(a, b, c, d)`` with ``|a|^2+|b|^2 = |c|^2+|d|^2 = 1``."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in "abcd":
            z = complex(getattr(self, name))
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise ValueError(f"amplitude {name} is not finite")
            object.__setattr__(self, name, z)
        for pair, (u, v) in (("a,b", (self.a, self.b)), ("c,d", (self.c, self.d))):
            dev = abs(abs(u) ** 2 + abs(v) ** 2 - 1.0)
            if dev > NORM_TOL:
                raise ValueError(f"|{pair}| not normalised (deviation {dev:.3e})")

    @classmethod
    def from_angles(cls, theta1: float, theta2: float) -> "FamilyParams":
        """Real parameters ``(cos t1, sin t1, cos t2, sin t2)``; pi/4 maps to exact 1/sqrt(2)."""
        return cls(*_cos_sin(theta1), *_cos_sin(theta2))

    @property
    def is_canonical(self) -> bool:
        return abs(self.a) >= abs(self.b) and abs(self.c) >= abs(self.d)

    def canonical(self) -> tuple["FamilyParams", tuple[bool, bool]]:
        """Reorder so that ``|a| >= |b|`` and ``|c| >= |d|``.

        ``(a, b) -> (conj(b), -conj(a))`` exchanges |A_1> and |A_2> up to a
        global phase, and likewise for ``(c, d)`` with |A_3>, |A_4>. The flags
        report which pair was swapped.
        """
        a, b, c, d = self.a, self.b, self.c, self.d
        swap_ab = abs(a) < abs(b)
        swap_cd = abs(c) < abs(d)
        if swap_ab:
            a, b = b.conjugate(), -a.conjugate()
        if swap_cd:
            c, d = d.conjugate(), -c.conjugate()
        return FamilyParams(a, b, c, d), (swap_ab, swap_cd)

    @property
    def x(self) -> float:
        return abs(self.a * self.b) ** 2

    @property
    def y(self) -> float:
        return abs(self.c * self.d) ** 2

    def with_phases(self, phases) -> "FamilyParams":
        pa, pb, pc, pd = (cmath.exp(1j * float(t)) for t in phases)
        return FamilyParams(self.a * pa, self.b * pb, self.c * pc, self.d * pd)


def _cos_sin(theta: float) -> tuple[float, float]:
    if theta == math.pi / 4:
        return INV_SQRT2, INV_SQRT2
    return math.cos(theta), math.sin(theta)


BELL_PARAMS = FamilyParams(INV_SQRT2, INV_SQRT2, INV_SQRT2, INV_SQRT2)
PRODUCT_PARAMS = FamilyParams(1.0, 0.0, 1.0, 0.0)


@dataclass(frozen=True)
class PureState:
    amplitudes: np.ndarray
    labels: tuple[str, ...]

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128).ravel()
        labels = tuple(self.labels)
        if len(labels) < 1 or amps.size != 2 ** len(labels):
            raise ValueError(f"{amps.size} amplitudes do not fit {len(labels)} qubits")
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate qubit labels {labels}")
        dev = abs(float(np.vdot(amps, amps).real) - 1.0)
        if dev > NORM_TOL:
            raise ValueError(f"state not normalised (deviation {dev:.3e})")
        object.__setattr__(self, "amplitudes", _frozen(amps))
        object.__setattr__(self, "labels", labels)

    @property
    def num_qubits(self) -> int:
        return len(self.labels)

    def inner(self, other: "PureState") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))


def _two_qubit(amps, labels) -> PureState:
    return PureState(np.asarray(amps, dtype=np.complex128), tuple(labels))


def bell_state(i: int, labels=("C", "D")) -> PureState:
    """|B_i>, i = 1..4: Phi+, Phi-, Psi+, Psi- in that order."""
    s = INV_SQRT2
    table = {
        1: (s, 0, 0, s),
        2: (s, 0, 0, -s),
        3: (0, s, s, 0),
        4: (0, s, -s, 0),
    }
    if i not in table:
        raise ValueError(f"Bell index must be in 1..4, got {i!r}")
    return _two_qubit(table[i], labels)


def a_state(i: int, p: FamilyParams, labels=("A", "B")) -> PureState:
    """|A_i> of the four-state family built from ``p``."""
    a, b, c, d = p.a, p.b, p.c, p.d
    if i == 1:
        amps = (a, 0, 0, b)
    elif i == 2:
        amps = (b.conjugate(), 0, 0, -a.conjugate())
    elif i == 3:
        amps = (0, c, d, 0)
    elif i == 4:
        amps = (0, d.conjugate(), -c.conjugate(), 0)
    else:
        raise ValueError(f"state index must be in 1..4, got {i!r}")
    return _two_qubit(amps, labels)


def basis_state(bits: str, labels=None) -> PureState:
    labels = default_labels(len(bits)) if labels is None else tuple(labels)
    amps = np.zeros(2 ** len(bits), dtype=np.complex128)
    amps[int(bits, 2)] = 1.0
    return PureState(amps, labels)


def tensor(left: PureState, right: PureState) -> PureState:
    clash = set(left.labels) & set(right.labels)
    if clash:
        raise ValueError(f"label collision: {sorted(clash)}")
    return PureState(np.kron(left.amplitudes, right.amplitudes), left.labels + right.labels)


def projector(s: PureState) -> np.ndarray:
    return _frozen(np.outer(s.amplitudes, np.conj(s.amplitudes)))


@dataclass(frozen=True)
class Ensemble:
    """Convex mixture of pure states sharing one label set."""

    members: tuple = field(default_factory=tuple)

    def __post_init__(self):
        members = tuple((float(w), s) for w, s in self.members)
        if not members:
            raise ValueError("empty ensemble")
        labels = members[0][1].labels
        for w, s in members:
            if not (w > 0.0 and math.isfinite(w)):
                raise ValueError(f"weights must be positive, got {w}")
            if s.labels != labels:
                raise ValueError(f"label mismatch: {s.labels} vs {labels}")
        total = math.fsum(w for w, _ in members)
        if abs(total - 1.0) > NORM_TOL:
            raise ValueError(f"weights sum to {total!r}, not 1")
        object.__setattr__(self, "members", members)

    @property
    def labels(self) -> tuple[str, ...]:
        return self.members[0][1].labels


def mix_ensemble(e: Ensemble) -> np.ndarray:
    out = np.zeros((2 ** len(e.labels),) * 2, dtype=np.complex128)
    for w, s in e.members:
        out += w * np.outer(s.amplitudes, np.conj(s.amplitudes))
    return _frozen(out)


def _axes_for(subset, labels) -> list[int]:
    labels = tuple(labels)
    axes = []
    for lab in subset:
        if lab not in labels:
            raise ValueError(f"unknown qubit label {lab!r}; known labels are {labels}")
        axes.append(labels.index(lab))
    return sorted(set(axes))


def partial_transpose(m, subset, labels=None) -> np.ndarray:
    """Transpose the tensor factors named in ``subset``.

    Works on a single ``(2^n, 2^n)`` matrix or a stack ``(..., 2^n, 2^n)``.
    ``|i><j|`` goes to ``|i'><j'|`` where the bits of the chosen qubits are
    exchanged between ``i`` and ``j``; this is a pure entry permutation.
    """
    m = np.asarray(m, dtype=np.complex128)
    dim = m.shape[-1]
    n = dim.bit_length() - 1
    if m.shape[-2] != dim or 2 ** n != dim:
        raise ValueError(f"matrix of shape {m.shape} is not a {n}-qubit operator")
    labels = default_labels(n) if labels is None else tuple(labels)
    if len(labels) != n:
        raise ValueError(f"{len(labels)} labels for a {n}-qubit operator")
    axes = _axes_for(subset, labels)
    lead = m.shape[:-2]
    k = len(lead)
    t = m.reshape(lead + (2,) * (2 * n))
    perm = list(range(k + 2 * n))
    for q in axes:
        perm[k + q], perm[k + n + q] = perm[k + n + q], perm[k + q]
    return _frozen(np.ascontiguousarray(t.transpose(perm)).reshape(m.shape))


def _family_states(p: FamilyParams, indices) -> list[PureState]:
    return [tensor(a_state(i, p, ("A", "B")), bell_state(i, ("C", "D"))) for i in indices]


def build_rho(p: FamilyParams) -> np.ndarray:
    """Equal mixture of |A_i>_AB |B_i>_CD over i = 1..4 (16x16, order A,B,C,D)."""
    return mix_ensemble(Ensemble(tuple((0.25, s) for s in _family_states(p, (1, 2, 3, 4)))))


def check_triple(triple) -> tuple[int, int, int]:
    t = tuple(int(i) for i in triple)
    if len(t) != 3 or len(set(t)) != 3 or not set(t) <= {1, 2, 3, 4}:
        raise ValueError(f"triple must be three distinct indices from 1..4, got {triple!r}")
    return t


def build_eta(p: FamilyParams, triple=(1, 2, 3)) -> np.ndarray:
    """Equal mixture of |A_i>_AB |B_i>_CD over the three indices in ``triple``."""
    t = check_triple(triple)
    return mix_ensemble(Ensemble(tuple((1.0 / 3.0, s) for s in _family_states(p, t))))


def _family_vectors(a, b, c, d) -> np.ndarray:
    """Vectorised |A_i>|B_i> amplitudes, shape (batch, 4, 16), for real or complex arrays."""
    a, b, c, d = (np.asarray(z, dtype=np.complex128) for z in (a, b, c, d))
    batch = a.shape[0]
    s = INV_SQRT2
    zero = np.zeros(batch, dtype=np.complex128)
    avec = np.stack([
        np.stack([a, zero, zero, b], axis=-1),
        np.stack([b.conj(), zero, zero, -a.conj()], axis=-1),
        np.stack([zero, c, d, zero], axis=-1),
        np.stack([zero, d.conj(), -c.conj(), zero], axis=-1),
    ], axis=1)
    bvec = np.array([[s, 0, 0, s], [s, 0, 0, -s], [0, s, s, 0], [0, s, -s, 0]], dtype=np.complex128)
    return (avec[:, :, :, None] * bvec[None, :, None, :]).reshape(batch, 4, 16)


def family_mixtures(params, indices) -> np.ndarray:
    """Stack of equal mixtures over ``indices`` for a sequence of FamilyParams.

    Matches :func:`build_rho` / :func:`build_eta` point by point; used by the
    grid scanner to avoid per-point Python overhead.
    """
    params = list(params)
    vecs = _family_vectors(*(np.array([getattr(p, k) for p in params]) for k in "abcd"))
    sel = vecs[:, [i - 1 for i in indices], :]
    out = np.zeros((len(params), 16, 16), dtype=np.complex128)
    w = 1.0 / len(indices)
    for k in range(len(indices)):
        v = sel[:, k, :]
        out += w * (v[:, :, None] * np.conj(v[:, None, :]))
    return out


@dataclass(frozen=True)
class Cut:
    """Bipartition of the qubit labels into two non-empty complementary sides."""

    left: tuple[str, ...]
    right: tuple[str, ...]

    def __post_init__(self):
        left, right = tuple(self.left), tuple(self.right)
        if not left or not right:
            raise ValueError("both sides of a cut must be non-empty")
        if set(left) & set(right):
            raise ValueError(f"cut sides overlap: {sorted(set(left) & set(right))}")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def __str__(self) -> str:
        return "".join(self.left) + ":" + "".join(self.right)


AC_BD = Cut(("A", "C"), ("B", "D"))
