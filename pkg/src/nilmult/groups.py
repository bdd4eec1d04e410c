"""Arithmetic in the class-two groups G_p(alpha, beta, gamma; rho, sigma).

Every element has a unique normal form ``a^i b^j c^k`` with c = [a,b],
0 <= i < p^alpha, 0 <= j < p^beta, 0 <= k < p^gamma.  The rules are

    b^j a^i = a^i b^j c^(-ij)      (class two, [b,a] = c^-1)
    a^(p^alpha) = c^(p^rho),  b^(p^beta) = c^(p^sigma),  c^(p^gamma) = 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from sympy import isprime

from .errors import InadmissibleParams, NotCentral

__all__ = [
    "GroupParams",
    "GroupElement",
    "g_mul",
    "g_inv",
    "g_pow",
    "element_order",
    "center",
    "group_order",
    "elements",
    "is_central",
    "centralizer_of_group",
    "generated_subgroup",
    "central_cyclic_subgroups",
    "quotient_presentation",
]


@dataclass(frozen=True)
class GroupParams:
    """The 5-tuple (alpha, beta, gamma; rho, sigma) together with the prime."""

    p: int
    alpha: int
    beta: int
    gamma: int
    rho: int
    sigma: int

    @classmethod
    def of(cls, p: int, t) -> "GroupParams":
        return cls(int(p), *(int(v) for v in t))

    @property
    def tuple(self) -> tuple[int, int, int, int, int]:
        return (self.alpha, self.beta, self.gamma, self.rho, self.sigma)

    def check(self) -> None:
        """Raise InadmissibleParams naming the first violated condition."""
        p, al, be, ga, rh, si = self.p, *self.tuple
        if not isprime(p):
            raise InadmissibleParams(f"p = {p} is not prime")
        if not al >= be >= ga >= 1:
            raise InadmissibleParams(
                f"need alpha >= beta >= gamma >= 1, got ({al}, {be}, {ga})"
            )
        if not 0 <= rh <= ga:
            raise InadmissibleParams(f"need 0 <= rho <= gamma, got rho = {rh}, gamma = {ga}")
        if not 0 <= si <= ga:
            raise InadmissibleParams(
                f"need 0 <= sigma <= gamma, got sigma = {si}, gamma = {ga}"
            )

    @cached_property
    def moduli(self) -> tuple[int, int, int]:
        return (self.p**self.alpha, self.p**self.beta, self.p**self.gamma)

    def __str__(self) -> str:
        return f"p={self.p} ({self.alpha},{self.beta},{self.gamma};{self.rho},{self.sigma})"


@dataclass(frozen=True, order=True)
class GroupElement:
    """a^i b^j c^k in normal form (see :func:`normalize`)."""

    i: int
    j: int
    k: int

    def __str__(self) -> str:
        return f"a^{self.i} b^{self.j} c^{self.k}"

    def word(self) -> str:
        """The element as a relator in the word grammar."""
        parts = [f"a^{self.i}" if self.i else "", f"b^{self.j}" if self.j else "",
                 f"[a,b]^{self.k}" if self.k else ""]
        return " ".join(s for s in parts if s) or "1"


def normalize(params: GroupParams, i: int, j: int, k: int) -> GroupElement:
    pa, pb, pc = params.moduli
    p = params.p
    q, i = divmod(i, pa)
    k += q * p**params.rho
    q, j = divmod(j, pb)
    k += q * p**params.sigma
    return GroupElement(i, j, k % pc)


def identity() -> GroupElement:
    return GroupElement(0, 0, 0)


def gen_a(params: GroupParams, n: int = 1) -> GroupElement:
    return normalize(params, n, 0, 0)


def gen_b(params: GroupParams, n: int = 1) -> GroupElement:
    return normalize(params, 0, n, 0)


def gen_c(params: GroupParams, n: int = 1) -> GroupElement:
    return normalize(params, 0, 0, n)


def g_mul(params: GroupParams, x: GroupElement, y: GroupElement) -> GroupElement:
    return normalize(params, x.i + y.i, x.j + y.j, x.k + y.k - x.j * y.i)


def g_inv(params: GroupParams, x: GroupElement) -> GroupElement:
    # (a^i b^j c^k)^-1 = c^-k b^-j a^-i = a^-i b^-j c^(-k - ij)
    return normalize(params, -x.i, -x.j, -x.k - x.i * x.j)


def g_pow(params: GroupParams, x: GroupElement, n: int) -> GroupElement:
    if n < 0:
        x, n = g_inv(params, x), -n
    result = identity()
    while n:
        if n & 1:
            result = g_mul(params, result, x)
        n >>= 1
        if n:
            x = g_mul(params, x, x)
    return result


def element_order(params: GroupParams, x: GroupElement) -> int:
    """Order of x; always a power of p, found by repeated p-th powers."""
    order = 1
    while x != identity():
        x = g_pow(params, x, params.p)
        order *= params.p
    return order


def group_order(params: GroupParams) -> int:
    return params.p ** (params.alpha + params.beta + params.gamma)


def elements(params: GroupParams) -> Iterator[GroupElement]:
    pa, pb, pc = params.moduli
    for i in range(pa):
        for j in range(pb):
            for k in range(pc):
                yield GroupElement(i, j, k)


def is_central(params: GroupParams, x: GroupElement) -> bool:
    for g in (gen_a(params), gen_b(params)):
        if g_mul(params, x, g) != g_mul(params, g, x):
            return False
    return True


def center(params: GroupParams) -> list[GroupElement]:
    """Generators a^(p^gamma), [a,b], b^(p^gamma) of Z(G), reduced but not deduplicated."""
    q = params.p**params.gamma
    return [gen_a(params, q), gen_c(params), gen_b(params, q)]


def centralizer_of_group(params: GroupParams) -> set[GroupElement]:
    """Z(G) by exhaustive search."""
    return {x for x in elements(params) if is_central(params, x)}


def generated_subgroup(params: GroupParams, gens) -> set[GroupElement]:
    seen = {identity()}
    frontier = [identity()]
    gens = [g for g in gens if g != identity()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g_mul(params, x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def central_cyclic_subgroups(params: GroupParams) -> list[GroupElement]:
    """One generator for each nontrivial cyclic subgroup of Z(G), smallest first."""
    seen: set[frozenset] = set()
    reps = []
    for x in sorted(generated_subgroup(params, center(params))):
        if x == identity():
            continue
        sub = frozenset(generated_subgroup(params, [x]))
        if sub not in seen:
            seen.add(sub)
            reps.append(x)
    return reps


def quotient_presentation(params: GroupParams, d: GroupElement):
    """Presentation of G/<d> for central d: the defining relators plus d."""
    from .oracle import Presentation, presentation_relators
    from .words import parse_word

    if not is_central(params, d):
        raise NotCentral(f"{d} is not central in {params}")
    base = presentation_relators(params)
    return Presentation(base.p, base.relators + (parse_word(d.word()),))
