"""Abelian invariants of a lattice quotient via Smith normal form."""
from nilmult.lattice import IntLattice, quotient_invariants, smith_normal_form

rows = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
D, U, V = smith_normal_form(rows)
print("D =", D)
print("U =", U)
print("V =", V)

lat = IntLattice(3, rows)
inv = quotient_invariants(lat)
print("Z^3 / L =", inv)
print("invariant factors:", inv.invariant_factors(), " order:", inv.order)
