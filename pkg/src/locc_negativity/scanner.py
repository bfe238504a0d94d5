"""Grid sweeps over (theta1, theta2) in [0, pi/4]^2 cross-checking numeric and closed-form E_N."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .certifier import EPS_CERT, VerdictKind, classify_case, verdict_four, verdict_three
from .measures import (
    AC_CUT,
    condition3,
    condition4,
    en_eta_closed_form,
    en_rho_closed_form,
    eta_roles,
    eta_verbatim,
    log_negativity_stack,
)
from .qstate import FamilyParams, check_triple, family_mixtures

AGREEMENT_TOL = 1e-9
MARGIN = 1e-6
CHUNK = 2048


@dataclass(frozen=True)
class ScanRecord:
    theta1: float
    theta2: float
    a: float
    b: float
    c: float
    d: float
    x: float
    y: float
    en_rho_numeric: float
    en_rho_closed: float
    en_eta_numeric: float
    en_eta_closed: float
    cond3: bool
    cond4: bool
    verdict_three: str
    verdict_four: str
    case_label: str
    triple: tuple[int, int, int] = (1, 2, 3)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["triple"] = list(self.triple)
        return d


def grid_angles(n: int) -> list[float]:
    """``n`` evenly spaced angles from 0 to pi/4 inclusive, the last one exactly pi/4."""
    if n < 2:
        raise ValueError(f"grid size must be at least 2, got {n}")
    step = (math.pi / 4) / (n - 1)
    out = [k * step for k in range(n - 1)]
    out.append(math.pi / 4)
    return out


def _numeric_en(params: list[FamilyParams], indices) -> np.ndarray:
    out = np.empty(len(params))
    for lo in range(0, len(params), CHUNK):
        chunk = params[lo:lo + CHUNK]
        out[lo:lo + len(chunk)], _ = log_negativity_stack(family_mixtures(chunk, indices), AC_CUT)
    return out


def sweep_points(points, triple=(1, 2, 3)) -> list[ScanRecord]:
    """Evaluate every ``(theta1, theta2)`` point; records come back sorted by angle."""
    triple = check_triple(triple)
    points = sorted((float(t1), float(t2)) for t1, t2 in points)
    params = [FamilyParams.from_angles(t1, t2) for t1, t2 in points]
    en_rho = _numeric_en(params, (1, 2, 3, 4))
    en_eta = _numeric_en(params, triple)
    records = []
    for k, ((t1, t2), p) in enumerate(zip(points, params)):
        rho_n, eta_n = float(en_rho[k]), float(en_eta[k])
        records.append(ScanRecord(
            theta1=t1, theta2=t2,
            a=p.a.real, b=p.b.real, c=p.c.real, d=p.d.real,
            x=p.x, y=p.y,
            en_rho_numeric=rho_n,
            en_rho_closed=en_rho_closed_form(p),
            en_eta_numeric=eta_n,
            en_eta_closed=en_eta_closed_form(p, triple),
            cond3=condition3(p),
            cond4=condition4(p),
            verdict_three=verdict_three(p, triple, eta_n).kind.value,
            verdict_four=verdict_four(p, rho_n).kind.value,
            case_label=classify_case(p, triple),
            triple=triple,
        ))
    return records


def sweep_grid(n: int, triple=(1, 2, 3)) -> list[ScanRecord]:
    angles = grid_angles(n)
    return sweep_points([(t1, t2) for t1 in angles for t2 in angles], triple)


@dataclass
class ValidationReport:
    n_records: int
    max_rho_dev: float
    max_eta_dev: float
    max_eta_verbatim_dev_in_regime: float
    max_eta_verbatim_dev_off_regime: float
    n_regime_branch: int
    n_margin_excluded: int
    n_region_mismatch: int
    n_soundness_violations: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d


def cross_validate(records) -> ValidationReport:
    """Summarise closed-form agreement, regime usage and verdict consistency.

    Never raises on a violated invariant; each violation is listed in
    ``failures`` instead.
    """
    records = list(records)
    if not records:
        raise ValueError("no records to validate")
    rho_dev = eta_dev = verb_in = verb_off = 0.0
    n_branch = n_margin = n_mismatch = n_unsound = 0
    failures = []
    for r in records:
        rho_dev = max(rho_dev, abs(r.en_rho_numeric - r.en_rho_closed))
        eta_dev = max(eta_dev, abs(r.en_eta_numeric - r.en_eta_closed))
        p = FamilyParams(r.a, r.b, r.c, r.d)
        xr, yr = eta_roles(p, r.triple)
        verb = abs(r.en_eta_numeric - eta_verbatim(p, r.triple))
        if 4.0 * xr >= yr:
            verb_in = max(verb_in, verb)
        else:
            n_branch += 1
            verb_off = max(verb_off, verb)
        certified = VerdictKind.CERTIFIED_INDISTINGUISHABLE.value
        if (r.verdict_three == certified and r.en_eta_numeric >= 1.0 - EPS_CERT) or (
            r.verdict_four == certified and r.en_rho_numeric >= 1.0 - EPS_CERT
        ):
            n_unsound += 1
        if abs(4.0 * xr - yr - 0.75) <= MARGIN:
            n_margin += 1
            continue
        cond = r.cond3 if {1, 2} <= set(r.triple) else r.cond4
        if cond != (r.verdict_three == certified):
            n_mismatch += 1
    if rho_dev > AGREEMENT_TOL:
        failures.append(f"rho closed form deviates by {rho_dev:.3e} > {AGREEMENT_TOL}")
    if eta_dev > AGREEMENT_TOL:
        failures.append(f"eta closed form deviates by {eta_dev:.3e} > {AGREEMENT_TOL}")
    if verb_in > AGREEMENT_TOL:
        failures.append(f"published eta expression deviates by {verb_in:.3e} inside its regime")
    if n_unsound:
        failures.append(f"{n_unsound} certified verdicts with E_N >= 1 - {EPS_CERT}")
    if n_mismatch:
        failures.append(f"{n_mismatch} records where the inequality and the verdict disagree")
    return ValidationReport(
        n_records=len(records),
        max_rho_dev=rho_dev,
        max_eta_dev=eta_dev,
        max_eta_verbatim_dev_in_regime=verb_in,
        max_eta_verbatim_dev_off_regime=verb_off,
        n_regime_branch=n_branch,
        n_margin_excluded=n_margin,
        n_region_mismatch=n_mismatch,
        n_soundness_violations=n_unsound,
        failures=failures,
    )
