import pytest

from nilmult import groups
from nilmult.errors import InadmissibleParams, NotCentral
from nilmult.groups import GroupElement, GroupParams, element_order, g_inv, g_mul, g_pow
from nilmult.oracle import multiplier_of, two_nilpotent_multiplier


def P(p, *t):
    return GroupParams.of(p, t)


G1 = P(3, 1, 1, 1, 1, 1)
G3 = P(3, 3, 2, 2, 2, 1)
K1 = P(3, 2, 1, 1, 0, 1)


def small_groups(limit=3**6):
    for p in (2, 3):
        for al in range(1, 5):
            for be in range(1, al + 1):
                for ga in range(1, be + 1):
                    if p ** (al + be + ga) > limit:
                        continue
                    for rh in range(ga + 1):
                        for si in range(ga + 1):
                            yield P(p, al, be, ga, rh, si)


def test_check():
    P(3, 2, 1, 1, 0, 1).check()
    for bad in [P(4, 1, 1, 1, 0, 0), P(3, 1, 2, 1, 0, 0), P(2, 2, 2, 2, 3, 0),
                P(3, 1, 1, 0, 0, 0), P(3, 2, 1, 1, -1, 0)]:
        with pytest.raises(InadmissibleParams):
            bad.check()


def test_mul_examples():
    for gp in (G1, G3, K1, P(2, 3, 1, 1, 1, 1)):
        a, b = groups.gen_a(gp), groups.gen_b(gp)
        pa, pb, pc = gp.moduli
        assert g_mul(gp, a, b) == GroupElement(1, 1, 0)
        assert g_mul(gp, b, a) == GroupElement(1, 1, pc - 1)
        assert g_mul(gp, groups.gen_a(gp, pa - 1), a) == GroupElement(0, 0, gp.p**gp.rho % pc)


def test_group_axioms_and_orders():
    for gp in (G1, K1, P(2, 2, 1, 1, 1, 0), P(2, 2, 2, 1, 0, 1)):
        els = list(groups.elements(gp))
        assert len(els) == groups.group_order(gp)
        for x in els[::3]:
            assert g_mul(gp, x, g_inv(gp, x)) == groups.identity()
            assert groups.group_order(gp) % element_order(gp, x) == 0
            for y in els[::5]:
                for z in els[::7]:
                    assert g_mul(gp, g_mul(gp, x, y), z) == g_mul(gp, x, g_mul(gp, y, z))


def test_order_examples():
    assert groups.group_order(G1) == 27
    assert groups.group_order(P(2, 3, 1, 1, 1, 1)) == 32
    assert element_order(G1, groups.identity()) == 1
    assert element_order(G1, groups.gen_c(G1)) == 3
    d = g_mul(G3, groups.gen_a(G3, 9), groups.gen_b(G3, 9))
    assert element_order(G3, d) == 3
    assert g_pow(G3, d, -1) == g_inv(G3, d)


def test_center_examples():
    assert groups.center(G3) == [GroupElement(9, 0, 0), GroupElement(0, 0, 1), GroupElement(0, 0, 3)]  # b^9 = c^3
    # a^3 = c^3 = 1 in G1, so the generators collapse
    assert groups.center(G1) == [GroupElement(0, 0, 0), GroupElement(0, 0, 1), GroupElement(0, 0, 0)]


def test_center_matches_enumeration():
    n = 0
    for gp in small_groups():
        assert groups.generated_subgroup(gp, groups.center(gp)) == groups.centralizer_of_group(gp)
        n += 1
    assert n > 50


def test_order_of_d():
    # |a^(p^(beta+k)) b^(p^(beta+k))| = p^(alpha-beta-k) for the G3 pattern
    for p in (3, 5):
        for al in range(2, 5):
            for be in range(1, al):
                for ga in range(1, be + 1):
                    si = ga - (al - be)
                    if si < 0:
                        continue
                    gp = P(p, al, be, ga, ga, si)
                    for k in range(al - be):
                        q = p ** (be + k)
                        d = g_mul(gp, groups.gen_a(gp, q), groups.gen_b(gp, q))
                        assert element_order(gp, d) == p ** (al - be - k)


def test_quotients():
    base = groups.quotient_presentation(G1, groups.identity())
    assert two_nilpotent_multiplier(base) == multiplier_of(G1)
    # K1 / <a^3> is elementary abelian of rank 2
    q = groups.quotient_presentation(K1, groups.gen_a(K1, 3))
    assert two_nilpotent_multiplier(q).as_list() == [3, 3]
    # b^27 is trivial in G3, so the quotient is G3 again
    d = groups.gen_b(G3, 27)
    assert d == groups.identity()
    assert two_nilpotent_multiplier(groups.quotient_presentation(G3, d)) == multiplier_of(G3)
    with pytest.raises(NotCentral):
        groups.quotient_presentation(G1, groups.gen_a(G1))


def test_central_cyclic_subgroups():
    reps = groups.central_cyclic_subgroups(G1)
    assert len(reps) == 1 and element_order(G1, reps[0]) == 3
    assert all(groups.is_central(G3, x) for x in groups.central_cyclic_subgroups(G3))


def test_words():
    assert GroupElement(0, 0, 0).word() == "1"
    assert GroupElement(2, 1, 3).word() == "a^2 b^1 [a,b]^3"
