"""Turn E_N across AC:BD into a verdict on single-copy LOCC discrimination.

If the states could be told apart by LOCC, the helper mixture would yield one
ebit between C and D, so its distillable entanglement would be at least 1.
Logarithmic negativity bounds distillable entanglement from above, so
``E_N < 1`` rules discrimination out.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .measures import AC_CUT, log_negativity
from .qstate import AC_BD, Cut, FamilyParams, build_eta, build_rho, check_triple

EPS_CERT = 1e-9
CASE_TOL = 1e-12


class VerdictKind(str, enum.Enum):
    CERTIFIED_INDISTINGUISHABLE = "certified_indistinguishable"
    TRIVIALLY_DISTINGUISHABLE = "trivially_distinguishable"
    KNOWN_INDISTINGUISHABLE_BY_CITATION = "known_indistinguishable_by_citation"
    INCONCLUSIVE = "inconclusive"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    en_value: float
    cut: Cut
    rationale: str
    case_label: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "en_value": self.en_value,
            "cut": str(self.cut),
            "rationale": self.rationale,
            "case_label": self.case_label,
        }


def _is_zero(z: complex) -> bool:
    return abs(z) <= CASE_TOL


def _bell_modulus(u: complex, v: complex) -> bool:
    return abs(abs(u * v) - 0.5) <= CASE_TOL


def _literal_bell(u: complex, v: complex) -> bool:
    # u = +-v: the pair reproduces two members of the Bell basis up to global phases
    return _bell_modulus(u, v) and abs((u / v).imag) <= CASE_TOL


def _roles(p: FamilyParams, triple) -> tuple[bool, tuple[complex, complex], tuple[complex, complex]]:
    t = set(check_triple(triple))
    if {1, 2} <= t:
        return True, (p.a, p.b), (p.c, p.d)
    return False, (p.c, p.d), (p.a, p.b)


def classify_case(p: FamilyParams, triple=(1, 2, 3)) -> str:
    """Label ``(p, triple)`` with one of the enumerated special cases or ``"general"``.

    The triple always contains one complete pair (|A_1>,|A_2> or |A_3>,|A_4>)
    plus one state of the other pair. Labels 1.x cover a maximally entangled
    complete pair, 2.x a maximally entangled single state. When both are
    maximally entangled, the 1.x label wins unless only the single state is a
    literal Bell vector.
    """
    ab_pair, pair, single = _roles(p, triple)
    pair_bell, single_bell = _bell_modulus(*pair), _bell_modulus(*single)
    both_b = "2.1.b" if ab_pair else "2.2.b"
    first = "1.1.b" if ab_pair else "1.2"
    if pair_bell and single_bell:
        if not _literal_bell(*pair) and _literal_bell(*single):
            return both_b
        return first
    if pair_bell:
        return "1.1.a" if ab_pair else "1.2"
    if _is_zero(pair[0] * pair[1]):
        return "2.1.a" if ab_pair else "2.2.a"
    return "general"


def verdict_four(p: FamilyParams, en: float) -> Verdict:
    """Decision for all four states given the numeric E_N of the rho mixture."""
    if en < 1.0 - EPS_CERT:
        return Verdict(VerdictKind.CERTIFIED_INDISTINGUISHABLE, en, AC_BD,
                       f"E_N = {en:.17g} < 1 bounds distillable entanglement below one ebit")
    q, _ = p.canonical()
    if _is_zero(q.b) and _is_zero(q.d):
        return Verdict(VerdictKind.TRIVIALLY_DISTINGUISHABLE, en, AC_BD,
                       "states are |00>, |11>, |01>, |10> up to phases; a local Z measurement separates them")
    return Verdict(VerdictKind.INCONCLUSIVE, en, AC_BD, f"E_N = {en:.17g} is not below 1")


def verdict_three(p: FamilyParams, triple, en: float) -> Verdict:
    """Decision for three states given the numeric E_N of the eta mixture."""
    label = classify_case(p, triple)
    _, pair, single = _roles(p, triple)
    if en < 1.0 - EPS_CERT:
        return Verdict(VerdictKind.CERTIFIED_INDISTINGUISHABLE, en, AC_BD,
                       f"E_N = {en:.17g} < 1 bounds distillable entanglement below one ebit", label)
    if _is_zero(pair[0] * pair[1]):
        return Verdict(VerdictKind.TRIVIALLY_DISTINGUISHABLE, en, AC_BD,
                       "the complete pair is a product pair; local Z measurements separate all three", label)
    if _bell_modulus(*pair) and _bell_modulus(*single):
        return Verdict(VerdictKind.KNOWN_INDISTINGUISHABLE_BY_CITATION, en, AC_BD,
                       "locally equivalent to three Bell states, indistinguishable by a relative-entropy bound; "
                       f"E_N = {en:.17g} alone is not decisive", label)
    return Verdict(VerdictKind.INCONCLUSIVE, en, AC_BD,
                   f"E_N = {en:.17g} is not below 1; a tighter bound would be needed", label)


def certify_four(p: FamilyParams) -> Verdict:
    return verdict_four(p, log_negativity(build_rho(p), AC_CUT).en)


def certify_three(p: FamilyParams, triple=(1, 2, 3)) -> Verdict:
    return verdict_three(p, triple, log_negativity(build_eta(p, triple), AC_CUT).en)
