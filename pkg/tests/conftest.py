import numpy as np
import pytest

from locc_negativity.qstate import PureState, Ensemble, mix_ensemble

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def random_hermitian(rng, n, trace_one=False):
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    h = (x + x.conj().T) / 2
    if trace_one:
        h = h - (np.trace(h).real - 1.0) / n * np.eye(n)
    return h


def random_pure(rng, n_qubits=4):
    v = rng.normal(size=2 ** n_qubits) + 1j * rng.normal(size=2 ** n_qubits)
    return PureState(v / np.linalg.norm(v), tuple("ABCD"[:n_qubits]))


def random_density(rng, n_qubits=4, max_members=6):
    k = int(rng.integers(1, max_members + 1))
    w = rng.dirichlet(np.ones(k))
    w = w / np.sum(w)
    # fix rounding so the weights pass the 1e-12 sum check exactly
    w[-1] = 1.0 - np.sum(w[:-1])
    return mix_ensemble(Ensemble(tuple((float(wi), random_pure(rng, n_qubits)) for wi in w)))


def loop_partial_transpose(m, axes, n_qubits):
    """Reference partial transpose by explicit bit exchange on every entry."""
    dim = 2 ** n_qubits
    mask = 0
    for q in axes:
        mask |= 1 << (n_qubits - 1 - q)
    out = np.zeros_like(m)
    for i in range(dim):
        for j in range(dim):
            i2 = (i & ~mask) | (j & mask)
            j2 = (j & ~mask) | (i & mask)
            out[i2, j2] = m[i, j]
    return out


def oracle_log_negativity(m, axes=(0, 2), n_qubits=4):
    """Independent path: loop partial transpose + LAPACK eigvalsh."""
    w = np.linalg.eigvalsh(loop_partial_transpose(np.asarray(m), axes, n_qubits))
    return float(np.log2(np.sum(np.abs(w)))), float(-np.sum(w[w < 0]))


def charpoly_roots_bisection(h):
    """Eigenvalues of a 2x2 or 3x3 Hermitian matrix from det(tI - h) by bisection."""
    h = np.asarray(h, dtype=complex)
    n = h.shape[0]
    if n == 2:
        coeffs = [1.0, -np.trace(h).real, np.linalg.det(h).real]
    else:
        tr = np.trace(h).real
        c2 = 0.5 * (tr ** 2 - np.trace(h @ h).real)
        coeffs = [1.0, -tr, c2, -np.linalg.det(h).real]

    def f(t):
        return np.polyval(coeffs, t)

    bound = 1.0 + max(abs(c) for c in coeffs[1:])
    grid = np.linspace(-bound, bound, 20001)
    vals = f(grid)
    roots = []
    for k in range(len(grid) - 1):
        if vals[k] == 0.0:
            roots.append(grid[k])
            continue
        if vals[k] * vals[k + 1] < 0:
            lo, hi = grid[k], grid[k + 1]
            for _ in range(200):
                mid = 0.5 * (lo + hi)
                if f(lo) * f(mid) <= 0:
                    hi = mid
                else:
                    lo = mid
            roots.append(0.5 * (lo + hi))
    return np.sort(np.array(roots))
