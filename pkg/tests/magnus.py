"""Magnus embedding of F/gamma_5(F) into Z<<X, Y>> truncated at degree 5.

Independent reference for the collector: a -> 1 + X, b -> 1 + Y, and the
map is injective on F/gamma_5(F).  Series are dicts from words (tuples over
{0, 1}) to integer coefficients.
"""
from itertools import product as iproduct

DEGREE = 4
ONE = {(): 1}


def smul(u, v):
    out = {}
    for w1, c1 in u.items():
        for w2, c2 in v.items():
            if len(w1) + len(w2) > DEGREE:
                continue
            w = w1 + w2
            out[w] = out.get(w, 0) + c1 * c2
    return {w: c for w, c in out.items() if c}


def sinv(u):
    # u = 1 + v, u^-1 = sum (-v)^k
    v = {w: c for w, c in u.items() if w}
    assert u.get((), 0) == 1
    out = dict(ONE)
    term = dict(ONE)
    neg_v = {w: -c for w, c in v.items()}
    for _ in range(DEGREE):
        term = smul(term, neg_v)
        for w, c in term.items():
            out[w] = out.get(w, 0) + c
    return {w: c for w, c in out.items() if c}


def spow(u, n):
    if n < 0:
        u, n = sinv(u), -n
    out = dict(ONE)
    while n:
        if n & 1:
            out = smul(out, u)
        n >>= 1
        if n:
            u = smul(u, u)
    return out


def scomm(u, v):
    return smul(smul(sinv(u), sinv(v)), smul(u, v))


X = {(): 1, (0,): 1}
Y = {(): 1, (1,): 1}
C = scomm(X, Y)
CA = scomm(C, X)
CB = scomm(C, Y)
BASIS_IMAGES = [X, Y, C, CA, CB, scomm(CA, X), scomm(CB, X), scomm(CB, Y)]


def image(exponents):
    out = dict(ONE)
    for g, e in zip(BASIS_IMAGES, exponents):
        if e:
            out = smul(out, spow(g, e))
    return out


def word_image(letters):
    """Image of a word given as (generator index, exponent) pairs."""
    out = dict(ONE)
    for g, e in letters:
        out = smul(out, spow(X if g == 0 else Y, e))
    return out


def all_words():
    for k in range(DEGREE + 1):
        yield from iproduct((0, 1), repeat=k)
