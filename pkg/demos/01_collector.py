"""Collecting words in the free nilpotent group of class 4 on a, b.

Elements are stored as exponent vectors over the basis
a, b, [a,b], [a,b,a], [a,b,b], [a,b,a,a], [a,b,b,a], [a,b,b,b].
"""
from nilmult import hall
from nilmult.words import from_word

a, b = hall.A, hall.B

# (ab)^2 is not a^2 b^2: moving b past a leaves commutators behind
print("(ab)^2      =", hall.pow(a * b, 2))
print("b a         =", from_word("b a"))

# [a^n, b] grows binomially in n
for n in range(1, 6):
    print(f"[a^{n}, b]    =", hall.comm(hall.pow(a, n), b))

# anything of weight 5 is gone
print("[a,b,a,b,a] =", hall.comm(a, b, a, b, a))

# the weight 3 and 4 part is what the multiplier lattice sees
w = from_word("[a^2 b, b^-1 a]")
print("w           =", w)
print("gamma3 part of [w, a, b] =", hall.gamma3_projection(hall.comm(w, a, b)))
