"""Canonical forms, names and capability for the p-groups of class two on two generators."""
from itertools import product

from nilmult import theory
from nilmult.errors import NoClosedForm

p = 3
seen = {}
for al, be, ga in product(range(1, 3), repeat=3):
    if not al >= be >= ga:
        continue
    for rh, si in product(range(ga + 1), repeat=2):
        cls = theory.canonicalize(p, (al, be, ga, rh, si))
        seen.setdefault(cls.canonical.tuple, []).append((al, be, ga, rh, si))

print(f"p = {p}: {len(seen)} isomorphism classes with exponents <= 2")
for canon, raws in sorted(seen.items()):
    cls = theory.canonicalize(p, canon)
    try:
        closed = theory.closed_form_multiplier(p, canon)
    except NoClosedForm:
        closed = "n/a"
    cap = "capable" if theory.is_capable(p, canon) else "noncapable"
    print(f"  {canon}  family {cls.family:2}  {cls.label or '-':4} {cap:10}  closed {closed}  "
          f"({len(raws)} raw tuples)")
