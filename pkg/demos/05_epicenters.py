"""Testing membership in the 2-epicenter by comparing multipliers.

For central N in a class two group, N lies in Z_2^*(G) exactly when
M^(2)(G) and M^(2)(G/N) have the same order.
"""
from nilmult import groups, theory
from nilmult.groups import GroupParams
from nilmult.oracle import multiplier_of, two_nilpotent_multiplier

for p, t in [(3, (2, 1, 1, 0, 1)), (2, (3, 1, 1, 1, 1)), (3, (2, 2, 2, 2, 2))]:
    gp = GroupParams.of(p, t)
    label = theory.identify(p, t)
    print(f"p={p} {t} {label}: M^(2) = {multiplier_of(gp)}")
    for d in groups.central_cyclic_subgroups(gp)[:6]:
        q = two_nilpotent_multiplier(groups.quotient_presentation(gp, d))
        tag = "in Z_2^*" if q == multiplier_of(gp) else ""
        print(f"    G/<{d.word()}>: {q}  {tag}")
    w = theory.epicenter_witness(p, t)
    print("    witness:", w.word() if w else "none (capable)")

# K14 is noncapable but none of the witness rules applies to it
try:
    theory.epicenter_witness(2, (2, 2, 2, 1, 1))
except RuntimeError as exc:
    print("K14:", exc)
