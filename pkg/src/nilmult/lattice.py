"""Smith normal form over Z and abelian invariants of lattice quotients.

Everything here works on plain lists of Python ints so entries never
overflow; the ambient rank in this package is 5 but nothing depends on it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from sympy import factorint

__all__ = [
    "IntLattice",
    "AbelianInvariants",
    "InfiniteQuotient",
    "smith_normal_form",
    "smith_invariants",
    "quotient_invariants",
    "primary_decomposition",
    "invariant_factors",
]

Matrix = list[list[int]]


class InfiniteQuotient(ValueError):
    """Z^n modulo the lattice is infinite (the rows do not have full rank)."""


@dataclass
class IntLattice:
    """Sublattice of Z^n spanned by ``rows``; rows may be dependent or zero."""

    n: int
    rows: list[list[int]] = field(default_factory=list)

    def __post_init__(self):
        self.rows = [[int(v) for v in r] for r in self.rows]
        for r in self.rows:
            if len(r) != self.n:
                raise ValueError(f"row {r} does not have length {self.n}")

    def add(self, row: Sequence[int]) -> None:
        if len(row) != self.n:
            raise ValueError(f"row {list(row)} does not have length {self.n}")
        self.rows.append([int(v) for v in row])


@dataclass(frozen=True)
class AbelianInvariants:
    """Finite abelian group as sorted prime-power elementary divisors.

    ``AbelianInvariants((3, 3, 9))`` is Z_3 + Z_3 + Z_9; the empty tuple is
    the trivial group.
    """

    divisors: tuple[int, ...] = ()

    def __post_init__(self):
        divs = tuple(sorted(int(d) for d in self.divisors))
        for d in divs:
            if d < 2 or len(factorint(d)) != 1:
                raise ValueError(f"{d} is not a prime power >= 2")
        object.__setattr__(self, "divisors", divs)

    @classmethod
    def from_cyclic_orders(cls, orders) -> "AbelianInvariants":
        """Build from arbitrary cyclic orders, dropping 1s and splitting composites."""
        return cls(primary_decomposition(orders))

    @property
    def order(self) -> int:
        out = 1
        for d in self.divisors:
            out *= d
        return out

    def invariant_factors(self) -> list[int]:
        return invariant_factors(self.divisors)

    def __iter__(self):
        return iter(self.divisors)

    def __len__(self):
        return len(self.divisors)

    def as_list(self) -> list[int]:
        return list(self.divisors)

    def __str__(self) -> str:
        if not self.divisors:
            return "1"
        return " + ".join(f"Z_{d}" for d in self.divisors)


def _swap_rows(m: Matrix, i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: Matrix, i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m: Matrix, src: int, dst: int, k: int) -> None:
    # row[dst] += k * row[src]
    if k:
        rs, rd = m[src], m[dst]
        for c in range(len(rd)):
            rd[c] += k * rs[c]


def _add_col(m: Matrix, src: int, dst: int, k: int) -> None:
    if k:
        for row in m:
            row[dst] += k * row[src]


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(rows: Sequence[Sequence[int]], ncols: int | None = None):
    """Return ``(D, U, V)`` with ``U @ M @ V == D`` and U, V unimodular.

    D is diagonal with nonnegative entries d1 | d2 | ... and zeros last.
    """
    m = [list(map(int, r)) for r in rows]
    nr = len(m)
    nc = ncols if ncols is not None else (len(m[0]) if m else 0)
    U = _identity(nr)
    V = _identity(nc)

    def row_op(kind, *args):
        if kind == "swap":
            _swap_rows(m, *args)
            _swap_rows(U, *args)
        else:
            _add_row(m, *args)
            _add_row(U, *args)

    def col_op(kind, *args):
        if kind == "swap":
            _swap_cols(m, *args)
            _swap_cols(V, *args)
        else:
            _add_col(m, *args)
            _add_col(V, *args)

    t = 0
    while t < min(nr, nc):
        # pivot: smallest nonzero absolute entry in the remaining block
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                v = m[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            row_op("swap", t, pi)
        if pj != t:
            col_op("swap", t, pj)

        while True:
            p = m[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if m[i][t]:
                    row_op("add", t, i, -(m[i][t] // p))
                    if m[i][t]:
                        dirty = True
            for j in range(t + 1, nc):
                if m[t][j]:
                    col_op("add", t, j, -(m[t][j] // p))
                    if m[t][j]:
                        dirty = True
            if dirty:
                # move the smallest leftover in row/column t to the pivot
                cands = [(abs(m[i][t]), i, t) for i in range(t + 1, nr) if m[i][t]]
                cands += [(abs(m[t][j]), t, j) for j in range(t + 1, nc) if m[t][j]]
                _, i, j = min(cands)
                if j == t:
                    row_op("swap", t, i)
                else:
                    col_op("swap", t, j)
                continue
            # row and column cleared; enforce divisibility of the remaining block
            bad = next(
                ((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc) if m[i][j] % p),
                None,
            )
            if bad is None:
                break
            row_op("add", bad[0], t, 1)
        if m[t][t] < 0:
            for c in range(nc):
                m[t][c] = -m[t][c]
            for c in range(nr):
                U[t][c] = -U[t][c]
        t += 1
    return m, U, V


def smith_invariants(lattice: IntLattice) -> list[int]:
    """Nonzero diagonal of the Smith normal form of the row matrix (1s kept)."""
    if not lattice.rows:
        return []
    D, _, _ = smith_normal_form(lattice.rows, lattice.n)
    return [D[i][i] for i in range(min(len(D), lattice.n)) if D[i][i]]


def primary_decomposition(orders) -> list[int]:
    """Split cyclic orders into sorted prime-power parts, dropping 1s."""
    out = []
    for d in orders:
        d = abs(int(d))
        if d == 0:
            raise InfiniteQuotient("a cyclic factor of order 0 is infinite")
        for prime, e in factorint(d).items():
            out.append(prime**e)
    return sorted(out)


def invariant_factors(divisors) -> list[int]:
    """Inverse of :func:`primary_decomposition`: the divisor chain d1 | d2 | ..."""
    by_prime: dict[int, list[int]] = {}
    for d in divisors:
        (prime,) = factorint(d)
        by_prime.setdefault(prime, []).append(d)
    length = max((len(v) for v in by_prime.values()), default=0)
    chain = [1] * length
    for powers in by_prime.values():
        powers = sorted(powers)
        for k, q in enumerate(reversed(powers)):
            chain[length - 1 - k] *= q
    return chain


def quotient_invariants(lattice: IntLattice) -> AbelianInvariants:
    """Elementary divisors of Z^n / rowspan(lattice)."""
    diag = smith_invariants(lattice)
    if len(diag) < lattice.n:
        raise InfiniteQuotient(
            f"lattice has rank {len(diag)} < {lattice.n}; quotient is infinite"
        )
    return AbelianInvariants(tuple(primary_decomposition(diag)))
