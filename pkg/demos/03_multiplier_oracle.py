"""The 2-nilpotent multiplier straight from a presentation.

M^(2)(G) = gamma_3(F) / [R,F,F] for class two groups, computed as the
cokernel of the lattice spanned by [r,x,y] and [r,x,y,z].
"""
from nilmult.groups import GroupParams
from nilmult.oracle import Presentation, multiplier_of, presentation_relators, two_nilpotent_multiplier

gp = GroupParams(3, 3, 2, 2, 2, 1)
pres = presentation_relators(gp)
print("relators:", "; ".join(pres.lines()))
print("M^(2) =", multiplier_of(gp))

# any presentation of a class two group works, not only the standard ones
heis = Presentation(5, ()).with_relator("a^5").with_relator("b^5").with_relator("[a,b]^5") \
    .with_relator("[a,b,a]").with_relator("[a,b,b]")
print("Heisenberg group mod 5:", two_nilpotent_multiplier(heis))
abelian = Presentation(3, ()).with_relator("a^9").with_relator("b^3").with_relator("[a,b]")
print("Z_9 x Z_3:", two_nilpotent_multiplier(abelian))
