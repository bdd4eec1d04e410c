"""Arithmetic in the free nilpotent group of rank 2 and class 4.

Elements of F/gamma_5(F), F free on {a, b}, are kept in collected form

    a^e0 b^e1 c^e2 [c,a]^e3 [c,b]^e4 [c,a,a]^e5 [c,b,a]^e6 [c,b,b]^e7

with c = [a,b].  This is the basic-commutator basis of weight <= 4 for the
ordering a > b.  Commutators are ``[x, y] = x^-1 y^-1 x y`` and longer
brackets are left-normed, ``[x, y, z] = [[x, y], z]``.

Products are computed by collection from the left: the right factor is fed
in one syllable ``g_i^n`` at a time and the uncollected tail of the left
factor is conjugated past it using closed-form commutation rules.  Only
conjugation by powers of ``a`` and ``b`` is nontrivial modulo gamma_5.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

__all__ = [
    "BASIS",
    "WEIGHTS",
    "NfElement",
    "NotInGamma3",
    "identity",
    "generator",
    "mul",
    "inv",
    "pow",
    "comm",
    "gamma3_projection",
    "A",
    "B",
]

BASIS = (
    "a",
    "b",
    "[a,b]",
    "[a,b,a]",
    "[a,b,b]",
    "[a,b,a,a]",
    "[a,b,b,a]",
    "[a,b,b,b]",
)
WEIGHTS = (1, 1, 2, 3, 3, 4, 4, 4)
RANK = len(BASIS)

# indices into the exponent vector
_A, _B, _C, _CA, _CB, _CAA, _CBA, _CBB = range(RANK)


class NotInGamma3(ValueError):
    """Raised when a weight-3 projection is requested for an element outside gamma_3."""


def _binom(n: int, k: int) -> int:
    # polynomial binomial coefficient, valid for negative n
    if n >= 0:
        return comb(n, k)
    num = 1
    for t in range(k):
        num *= n - t
    den = 1
    for t in range(2, k + 1):
        den *= t
    return num // den


@dataclass(frozen=True)
class NfElement:
    """Collected normal form; equality is equality of exponent tuples."""

    exponents: tuple[int, ...] = (0,) * RANK

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if len(exps) != RANK:
            raise ValueError(f"expected {RANK} exponents, got {len(exps)}")
        object.__setattr__(self, "exponents", exps)

    def __mul__(self, other: NfElement) -> NfElement:
        if not isinstance(other, NfElement):
            return NotImplemented
        return mul(self, other)

    def __pow__(self, n: int) -> NfElement:
        return pow(self, n)

    def __invert__(self) -> NfElement:
        return inv(self)

    def __iter__(self):
        return iter(self.exponents)

    def __getitem__(self, i):
        return self.exponents[i]

    def is_identity(self) -> bool:
        return not any(self.exponents)

    def __str__(self) -> str:
        parts = []
        for name, e in zip(BASIS, self.exponents):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return " ".join(parts) if parts else "1"


def identity() -> NfElement:
    return NfElement()


def generator(index: int, n: int = 1) -> NfElement:
    """Basis element ``BASIS[index]`` raised to ``n``."""
    e = [0] * RANK
    e[index] = n
    return NfElement(tuple(e))


A = generator(_A)
B = generator(_B)


def _conjugate_tail(t: Sequence[int], i: int, n: int) -> list[int]:
    """Conjugate c^t0 [c,a]^t1 ... [c,b,b]^t5 by g_i^n, i in {a, b}.

    The subgroup generated by c and the weight 3, 4 basis elements is
    abelian modulo gamma_5, so conjugation acts linearly on exponents.
    """
    c, ca, cb, caa, cba, cbb = t
    if i == _A:
        # c^a = c [c,a], [c,a]^a = [c,a] [c,a,a], [c,b]^a = [c,b] [c,b,a]
        return [c, ca + c * n, cb, caa + c * _binom(n, 2) + ca * n, cba + cb * n, cbb]
    # c^b = c [c,b], [c,a]^b = [c,a] [c,b,a] (mod gamma_5), [c,b]^b = [c,b] [c,b,b]
    return [c, ca, cb + c * n, caa, cba + ca * n, cbb + c * _binom(n, 2) + cb * n]


def _b_conjugate_power(m: int, n: int) -> list[int]:
    """Tail exponents of (b^(a^n))^m = b^m * tail.

    b^(a^n) = b w with w = c^s [c,a]^t [c,a,a]^u, s = -n, t = -C(n,2),
    u = -C(n,3); then (b w)^m = b^m prod_{k<m} w^(b^k).
    """
    s, t, u = -n, -_binom(n, 2), -_binom(n, 3)
    m2, m3 = _binom(m, 2), _binom(m, 3)
    return [s * m, t * m, s * m2, u * m, t * m2, s * m3]


def _mul_syllable(x: Sequence[int], i: int, n: int) -> list[int]:
    """Collect x * g_i^n for an exponent list x."""
    out = list(x)
    if n == 0:
        return out
    if i >= _C or not any(x[i + 1:]):
        # c, [c,a], [c,b] commute with everything after them modulo gamma_5
        out[i] += n
        return out
    if i == _B:
        out[_B] += n
        out[_C:] = _conjugate_tail(x[_C:], _B, n)
        return out
    out[_A] += n
    tail = _conjugate_tail(x[_C:], _A, n)
    if x[_B]:
        tail = [p + q for p, q in zip(tail, _b_conjugate_power(x[_B], n))]
    out[_C:] = tail
    return out


def _mul_lists(x: Sequence[int], y: Sequence[int]) -> list[int]:
    out = list(x)
    for i, n in enumerate(y):
        if n:
            out = _mul_syllable(out, i, n)
    return out


def _inv_list(x: Sequence[int]) -> list[int]:
    out = [0] * RANK
    for i in reversed(range(RANK)):
        if x[i]:
            out = _mul_syllable(out, i, -x[i])
    return out


def _pow_list(x: Sequence[int], n: int) -> list[int]:
    if n < 0:
        x, n = _inv_list(x), -n
    # a single nonzero syllable is its own power
    support = [i for i, e in enumerate(x) if e]
    if len(support) <= 1:
        return [e * n for e in x]
    result = [0] * RANK
    base = list(x)
    while n:
        if n & 1:
            result = _mul_lists(result, base)
        n >>= 1
        if n:
            base = _mul_lists(base, base)
    return result


def mul(x: NfElement, y: NfElement) -> NfElement:
    return NfElement(tuple(_mul_lists(x.exponents, y.exponents)))


def inv(x: NfElement) -> NfElement:
    return NfElement(tuple(_inv_list(x.exponents)))


def pow(x: NfElement, n: int) -> NfElement:  # noqa: A001 - mirrors the group operation name
    return NfElement(tuple(_pow_list(x.exponents, int(n))))


def comm(x: NfElement, y: NfElement, *more: NfElement) -> NfElement:
    """Left-normed commutator ``[x, y, ...]`` with ``[x, y] = x^-1 y^-1 x y``."""
    xe, ye = x.exponents, y.exponents
    out = _mul_lists(_mul_lists(_mul_lists(_inv_list(xe), _inv_list(ye)), xe), ye)
    result = NfElement(tuple(out))
    for z in more:
        result = comm(result, z)
    return result


def product(elements: Iterable[NfElement]) -> NfElement:
    out = [0] * RANK
    for e in elements:
        out = _mul_lists(out, e.exponents)
    return NfElement(tuple(out))


def gamma3_projection(x: NfElement) -> tuple[int, ...]:
    """Coordinates of x in the free abelian group gamma_3/gamma_5.

    Order: ([a,b,a], [a,b,b], [a,b,a,a], [a,b,b,a], [a,b,b,b]).
    """
    if x[_A] or x[_B] or x[_C]:
        raise NotInGamma3(f"{x} has nonzero weight-1 or weight-2 exponents")
    return tuple(x.exponents[_CA:])
