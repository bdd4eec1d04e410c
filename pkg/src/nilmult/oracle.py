"""2-nilpotent multipliers from first principles.

For G = F/R of class at most two, gamma_3(F) lies in R and

    M^(2)(G) = gamma_3(F)/[R,F,F] = (gamma_3/gamma_5) / ([R,F,F] gamma_5/gamma_5).

gamma_3/gamma_5 is free abelian on the five basic commutators of weight 3 and 4.
If the relators r normally generate R then, modulo gamma_5, [R,F,F] is
generated by [r,x,y] and [r,x,y,z] with x, y, z in {a, b}: [R,F] is the
normal closure of the [r,x], [[R,F],F] the normal closure of the [r,x,y],
and conjugating w in gamma_3 by f only multiplies it by [w,f], which is
linear in f modulo gamma_5.  The multiplier is the cokernel of that lattice.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from pathlib import Path

from . import hall
from .errors import NotClassTwo
from .groups import GroupParams
from .lattice import AbelianInvariants, IntLattice, quotient_invariants, smith_invariants
from .words import Word, format_word, from_word, parse_word

__all__ = [
    "Presentation",
    "presentation_relators",
    "relation_lattice",
    "two_nilpotent_multiplier",
    "multiplier_of",
    "read_relators",
]

_GENS = (hall.A, hall.B)


@dataclass(frozen=True)
class Presentation:
    p: int
    relators: tuple[Word, ...]

    def lines(self) -> list[str]:
        return [format_word(w) for w in self.relators]

    def with_relator(self, w: Word | str) -> "Presentation":
        if isinstance(w, str):
            w = parse_word(w)
        return Presentation(self.p, self.relators + (w,))


def read_relators(path: str | Path, p: int = 0) -> Presentation:
    """Relator file: one word per line, ``#`` starts a comment."""
    words = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            words.append(parse_word(line))
    return Presentation(p, tuple(words))


def presentation_relators(params: GroupParams) -> Presentation:
    """Relators [a,b]^(p^gamma), [a,b,a], [a,b,b], a^(p^alpha) [a,b]^(-p^rho), b^(p^beta) [a,b]^(-p^sigma)."""
    params.check()
    p = params.p
    texts = [
        f"[a,b]^{p ** params.gamma}",
        "[a,b,a]",
        "[a,b,b]",
        f"a^{p ** params.alpha} [a,b]^{-p ** params.rho}",
        f"b^{p ** params.beta} [a,b]^{-p ** params.sigma}",
    ]
    return Presentation(p, tuple(parse_word(t) for t in texts))


def _bracket_rows(r: hall.NfElement):
    """gamma_3 coordinates of [r,x,y] and [r,x,y,z] for x, y, z in {a, b}."""
    for x, y in product(_GENS, repeat=2):
        w = hall.comm(r, x, y)
        yield hall.gamma3_projection(w)
        for z in _GENS:
            yield hall.gamma3_projection(hall.comm(w, z))


def relation_lattice(pres: Presentation) -> IntLattice:
    """[R,F,F] gamma_5 / gamma_5 as a sublattice of Z^5."""
    lat = IntLattice(5)
    for w in pres.relators:
        for row in _bracket_rows(from_word(w)):
            if any(row):
                lat.add(row)
    return lat


def _check_class_two(pres: Presentation, lat: IntLattice) -> None:
    # Relators lying in gamma_3 and their brackets [r,x] add R cap gamma_3
    # content; together with [R,F,F] they must reach both weight-3 directions.
    extra = IntLattice(2, [row[:2] for row in lat.rows])
    for w in pres.relators:
        r = from_word(w)
        if r[0] == r[1] == 0:
            for x in _GENS:
                extra.add(hall.gamma3_projection(hall.comm(r, x))[:2])
            if r[2] == 0:
                extra.add(hall.gamma3_projection(r)[:2])
    if smith_invariants(extra) != [1, 1]:
        raise NotClassTwo(
            "relators do not force [a,b,a] and [a,b,b] into R; the presented group "
            "is not visibly of class at most two"
        )


def two_nilpotent_multiplier(pres: Presentation) -> AbelianInvariants:
    """Abelian invariants of M^(2)(F/R) for a class <= 2 presentation."""
    lat = relation_lattice(pres)
    _check_class_two(pres, lat)
    return quotient_invariants(lat)


@lru_cache(maxsize=None)
def multiplier_of(params: GroupParams) -> AbelianInvariants:
    return two_nilpotent_multiplier(presentation_relators(params))
