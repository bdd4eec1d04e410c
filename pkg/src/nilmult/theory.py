"""Classification, capability and closed multiplier formulas.

Tuples are (alpha, beta, gamma; rho, sigma) for the group

    < a, b | [a,b]^(p^gamma) = [a,b,a] = [a,b,b] = 1,
             a^(p^alpha) = [a,b]^(p^rho), b^(p^beta) = [a,b]^(p^sigma) >

with alpha >= beta >= gamma >= 1 and 0 <= rho, sigma <= gamma.  Every
two-generator p-group of class exactly two is one of these, and each
isomorphism class has exactly one canonical tuple (families 1a .. 3c).
Named groups: G1..G3 (p odd) and G4..G7 (p = 2) are the capable ones,
K1..K5 (p odd) and K6..K14 (p = 2) the noncapable ones.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import groups
from .errors import InadmissibleParams, NoClosedForm
from .groups import GroupElement, GroupParams
from .lattice import AbelianInvariants
from .oracle import multiplier_of, two_nilpotent_multiplier

__all__ = [
    "Classification",
    "validate",
    "canonicalize",
    "identify",
    "matching_labels",
    "classify",
    "is_capable",
    "is_2_capable",
    "closed_form_multiplier",
    "epicenter_witness",
    "epicenter_membership",
    "CAPABLE_LABELS",
    "NONCAPABLE_LABELS",
]

CAPABLE_LABELS = tuple(f"G{i}" for i in range(1, 8))
NONCAPABLE_LABELS = tuple(f"K{i}" for i in range(1, 15))


@dataclass(frozen=True)
class Classification:
    canonical: GroupParams
    family: str
    label: Optional[str]

    @property
    def capable(self) -> bool:
        return self.label in CAPABLE_LABELS


def _params(p, params) -> GroupParams:
    if isinstance(params, GroupParams):
        if params.p != p:
            return GroupParams(p, *params.tuple)
        return params
    return GroupParams.of(p, params)


def validate(p: int, params) -> GroupParams:
    """Return the checked GroupParams or raise InadmissibleParams."""
    gp = _params(p, params)
    gp.check()
    return gp


def _canonical(gp: GroupParams) -> tuple[tuple[int, ...], str]:
    p = gp.p
    al, be, ga, rh, si = gp.tuple
    if al > be:
        if rh <= si:
            return (al, be, ga, rh, ga), "1a"
        if si + al - be <= rh or rh == ga:
            return (al, be, ga, ga, si), "1b"
        return (al, be, ga, rh, si), "1c"
    m = min(rh, si)
    if be > ga or p > 2:
        return (al, be, ga, m, ga), "2"
    if m < ga - 1:
        return (al, be, ga, m, ga), "3a"
    if rh == si == ga - 1:
        return (al, be, ga, ga - 1, ga - 1), "3b"
    return (al, be, ga, ga, ga), "3c"


def _family(p: int, t) -> str:
    return _canonical(GroupParams.of(p, t))[1]


def canonicalize(p: int, params) -> Classification:
    gp = validate(p, params)
    t, fam = _canonical(gp)
    canon = GroupParams.of(p, t)
    return Classification(canon, fam, identify(p, canon))


classify = canonicalize


def _capable_label(p: int, t) -> Optional[str]:
    """Match a canonical tuple against the capable presentations G1..G7."""
    al, be, ga, rh, si = t
    if p > 2:
        if rh == si == ga and al == be == ga:
            return "G1"
        if rh == si == ga and al == be > ga:
            return "G2"
        if rh == ga and 0 <= si < ga and al - be == ga - si:
            return "G3"
        return None
    if al == be == ga == rh == si:
        return "G4"
    if be == ga == rh == si and al == be + 1:
        return "G5"
    if rh == si == ga and al == be > ga:
        return "G6"
    delta = int(be == ga)
    if rh == ga and si < ga and al > be and al - be == ga - si and al - be > delta:
        return "G7"
    return None


def _noncapable_labels(p: int, t) -> list[str]:
    """Every K-label whose defining conditions the canonical tuple meets."""
    al, be, ga, rh, si = t
    out = []
    if p > 2:
        if al > be >= ga and si == ga and rh < ga:
            out.append("K1")
        if al > be >= ga and rh == si == ga:
            out.append("K2")
        if al > be >= ga and rh == ga and si + al - be < ga:
            out.append("K3")
        if al > be >= ga and si < rh < min(ga, si + al - be):
            out.append("K4")
        if al == be and al > ga > rh and si == ga:
            out.append("K5")
        return out
    if al > be >= ga and si == ga and rh < ga:
        out.append("K6")
    if al > be > ga and rh == si == ga:
        out.append("K7")
    if ga == be and rh == si == be and al > be + 1:
        out.append("K8")
    if rh == ga and 0 <= si < si + al - be < ga:
        out.append("K9")
    if 0 <= si < rh < min(ga, si + al - be):
        out.append("K10")
    if al == be and al > ga > rh and si == ga:
        out.append("K11")
    if ga == al == be and si == ga and al > rh:
        out.append("K12")
    if ga == al == be and si == ga and be - 1 > rh:
        out.append("K13")
    if al == be == ga and rh == si == al - 1:
        out.append("K14")
    return out


def matching_labels(p: int, params) -> list[str]:
    """All labels (G and K) whose conditions hold for the canonical tuple."""
    gp = validate(p, params)
    t, _ = _canonical(gp)
    g = _capable_label(p, t)
    return ([g] if g else []) + _noncapable_labels(p, t)


def identify(p: int, classification) -> Optional[str]:
    """Label of a canonical tuple; K-labels are tried in numbering order."""
    if isinstance(classification, Classification):
        classification = classification.canonical
    gp = validate(p, classification)
    t, _ = _canonical(gp)
    labels = matching_labels(p, t)
    return labels[0] if labels else None


def is_capable(p: int, params) -> bool:
    """Capability criterion on the canonical tuple.

    p odd: alpha - beta = rho - sigma and rho = gamma.
    p = 2: one of (i) rho <= sigma, alpha = beta, rho = gamma;
    (ii) rho > sigma, alpha - beta = rho - sigma > delta(beta, gamma), rho = gamma;
    (iii) rho = sigma = gamma = beta and alpha = gamma + 1.
    """
    gp = validate(p, params)
    al, be, ga, rh, si = _canonical(gp)[0]
    if p > 2:
        return al - be == rh - si and rh == ga
    delta = int(be == ga)
    return (
        (rh <= si and al == be and rh == ga)
        or (rh > si and al - be == rh - si > delta and rh == ga)
        or (rh == si == ga == be and al == ga + 1)
    )


def is_2_capable(p: int, params) -> bool:
    """Membership of the canonical tuple in the list of 2-capable groups G1..G7."""
    gp = validate(p, params)
    return _capable_label(p, _canonical(gp)[0]) is not None


def _closed_orders(p: int, label: str, t) -> list[int]:
    al, be, ga, rh, si = t
    q = lambda e: p**e  # noqa: E731
    table = {
        "G1": lambda: [q(al)] * 5,
        "G2": lambda: [q(al)] * 2 + [q(ga)] * 3,
        "G3": lambda: [q(al), q(be)] + [q(si)] * 3,
        "K1": lambda: [q(be)] * 2 + [q(rh)] * 3,
        "K2": lambda: [q(be)] * 2 + [q(ga)] * 3,
        "K3": lambda: [q(al), q(be)] + [q(si)] * 3,
        "K4": lambda: [q(rh - si + be), q(be)] + [q(si)] * 3,
        "K5": lambda: [q(al)] * 2 + [q(rh)] * 3,
        "K6": lambda: [q(be)] * 2 + [q(rh)] * 3,
        "K7": lambda: [q(be)] * 2 + [q(ga)] * 3,
        "K8": lambda: [q(be - 1)] * 3 + [q(be), q(be + 1)],
        "K9": lambda: [q(al), q(be)] + [q(si)] * 3,
        "K10": lambda: [q(rh - si + be), q(be)] + [q(si)] * 3,
        "K11": lambda: [q(al)] * 2 + [q(rh)] * 3,
        "K12": lambda: [q(al)] * 2 + [q(rh)] * 3,
        "K13": lambda: [q(be)] * 2 + [q(rh)] * 3,
        "K14": lambda: [q(al)] * 2 + [q(al - 1)] * 3,
    }
    if label not in table:
        raise NoClosedForm(f"no closed form for {label}")
    return table[label]()


def closed_form_multiplier(p: int, params, label: Optional[str] = None) -> AbelianInvariants:
    """Closed-form M^(2) for G1..G3 and K1..K14; NoClosedForm otherwise.

    ``label`` forces a particular formula (used to evaluate overlapping labels).
    """
    gp = validate(p, params)
    t, _ = _canonical(gp)
    if label is None:
        label = identify(p, gp)
    if label is None:
        raise NoClosedForm(f"{gp} matches none of the named groups")
    return AbelianInvariants.from_cyclic_orders(_closed_orders(p, label, t))


def epicenter_witness(p: int, params) -> Optional[GroupElement]:
    """Nontrivial element of the 2-epicenter for noncapable groups, else None.

    Candidates, first nontrivial wins: a^(p^beta) if b^(p^beta) = 1,
    b^(p^alpha) if a^(p^alpha) = 1, a^(p^alpha) if sigma < rho; for K8 the
    element a^(2^(alpha-1)).
    """
    gp = validate(p, params)
    cls = canonicalize(p, gp)
    if cls.capable:
        return None
    canon = cls.canonical
    al, be, ga, rh, si = canon.tuple
    if cls.label == "K8":
        return groups.gen_a(canon, p ** (al - 1))
    candidates = []
    if si == ga:
        candidates.append(groups.gen_a(canon, p**be))
    if rh == ga:
        candidates.append(groups.gen_b(canon, p**al))
    if si < rh:
        candidates.append(groups.gen_a(canon, p**al))
    for d in candidates:
        if d != groups.identity():
            return d
    raise RuntimeError(f"no epicenter witness available for {canon} ({cls.label})")


def epicenter_membership(p: int, params, d: GroupElement) -> bool:
    """Is <d> inside the 2-epicenter?  Compares M^(2)(G) with M^(2)(G/<d>)."""
    gp = validate(p, params)
    quotient = groups.quotient_presentation(gp, d)
    return two_nilpotent_multiplier(quotient) == multiplier_of(gp)
