import pytest

from nilmult import groups, theory
from nilmult.errors import InadmissibleParams, NoClosedForm
from nilmult.groups import GroupParams
from nilmult.oracle import multiplier_of, two_nilpotent_multiplier


def T(p, *t):
    return GroupParams.of(p, t)


def canonical_tuples(p, top=3):
    seen = set()
    for al in range(1, top + 1):
        for be in range(1, al + 1):
            for ga in range(1, be + 1):
                for rh in range(ga + 1):
                    for si in range(ga + 1):
                        seen.add(theory.canonicalize(p, (al, be, ga, rh, si)).canonical)
    return sorted(seen, key=lambda g: g.tuple)


def test_validate():
    assert theory.validate(3, (2, 1, 1, 0, 1)) == T(3, 2, 1, 1, 0, 1)
    for p, t in [(3, (1, 2, 1, 0, 0)), (2, (2, 2, 2, 3, 0)), (4, (1, 1, 1, 0, 0)), (3, (1, 1, 2, 0, 0))]:
        with pytest.raises(InadmissibleParams):
            theory.validate(p, t)


@pytest.mark.parametrize(
    "p, t, canon, family",
    [
        (3, (2, 2, 1, 1, 0), (2, 2, 1, 0, 1), "2"),
        (2, (2, 2, 2, 2, 1), (2, 2, 2, 2, 2), "3c"),
        (3, (3, 1, 1, 1, 0), (3, 1, 1, 1, 0), "1b"),
        (3, (3, 2, 2, 0, 1), (3, 2, 2, 0, 2), "1a"),
        (3, (3, 2, 2, 2, 1), (3, 2, 2, 2, 1), "1b"),
        (3, (3, 1, 1, 1, 1), (3, 1, 1, 1, 1), "1a"),
        (2, (3, 3, 3, 0, 2), (3, 3, 3, 0, 3), "3a"),
        (2, (2, 2, 2, 1, 1), (2, 2, 2, 1, 1), "3b"),
    ],
)
def test_canonicalize(p, t, canon, family):
    cls = theory.canonicalize(p, t)
    assert cls.canonical.tuple == canon and cls.family == family


def test_family_1c():
    # sigma < rho < gamma and rho < sigma + alpha - beta stays as is
    cls = theory.canonicalize(5, (5, 3, 3, 2, 1))
    assert cls.family == "1c" and cls.canonical.tuple == (5, 3, 3, 2, 1)


@pytest.mark.parametrize("p", [2, 3])
def test_canonicalize_idempotent(p):
    for g in canonical_tuples(p):
        assert theory.canonicalize(p, g).canonical == g


def test_canonical_forms_are_isomorphism_invariants():
    # raw tuples with the same canonical form have the same multiplier
    for p in (2, 3):
        for al in range(1, 3):
            for be in range(1, al + 1):
                for ga in range(1, be + 1):
                    for rh in range(ga + 1):
                        for si in range(ga + 1):
                            raw = T(p, al, be, ga, rh, si)
                            canon = theory.canonicalize(p, raw).canonical
                            assert multiplier_of(raw) == multiplier_of(canon)


@pytest.mark.parametrize(
    "p, t, label",
    [
        (3, (2, 1, 1, 1, 1), "K2"),
        (3, (2, 2, 2, 2, 2), "G1"),
        (2, (3, 1, 1, 1, 1), "K8"),
        (3, (2, 1, 1, 0, 1), "K1"),
        (3, (3, 2, 2, 2, 1), "G3"),
        (2, (2, 1, 1, 1, 1), "G5"),
        (2, (2, 2, 1, 1, 1), "G6"),
        (2, (1, 1, 1, 0, 0), "K14"),
        (3, (1, 1, 1, 0, 1), None),
    ],
)
def test_identify(p, t, label):
    assert theory.identify(p, theory.canonicalize(p, t)) == label


def test_overlapping_labels_reported():
    assert theory.matching_labels(2, (3, 3, 3, 0, 3)) == ["K12", "K13"]


@pytest.mark.parametrize(
    "p, t, capable",
    [
        (3, (2, 2, 2, 2, 2), True),
        (3, (2, 1, 1, 0, 1), False),
        (2, (2, 1, 1, 1, 1), True),
        (3, (2, 2, 1, 1, 1), True),
        (3, (3, 2, 2, 2, 1), True),
        (2, (3, 1, 1, 1, 1), False),
        (2, (3, 2, 2, 2, 1), False),
        (2, (3, 1, 1, 1, 0), False),
    ],
)
def test_is_capable(p, t, capable):
    assert theory.is_capable(p, t) is capable


def test_is_2_capable():
    assert theory.is_2_capable(3, (3, 2, 2, 2, 1))
    assert theory.is_2_capable(2, (2, 2, 1, 1, 1))
    assert not theory.is_2_capable(2, (3, 1, 1, 1, 1))


def test_closed_forms():
    assert theory.closed_form_multiplier(3, (2, 2, 1, 1, 1)).as_list() == [3, 3, 3, 9, 9]
    # K4 at p = 5: sigma < rho < min(gamma, sigma + alpha - beta)
    t = (5, 3, 3, 2, 1)
    assert theory.identify(5, t) == "K4"
    al, be, ga, rh, si = t
    want = sorted([5 ** (rh - si + be), 5**be] + [5**si] * 3)
    assert theory.closed_form_multiplier(5, t).as_list() == want
    assert multiplier_of(T(5, *t)).as_list() == want
    for p, t in [(2, (1, 1, 1, 1, 1)), (2, (2, 1, 1, 1, 1)), (3, (1, 1, 1, 0, 1))]:
        with pytest.raises(NoClosedForm):
            theory.closed_form_multiplier(p, t)
    # K12 and K13 formulas coincide on their common tuples
    t = (3, 3, 3, 0, 3)
    assert (theory.closed_form_multiplier(2, t, "K12")
            == theory.closed_form_multiplier(2, t, "K13")
            == multiplier_of(T(2, *t)))


def test_epicenter_witness():
    assert theory.epicenter_witness(3, (1, 1, 1, 1, 1)) is None
    k1 = T(3, 2, 1, 1, 0, 1)
    assert theory.epicenter_witness(3, k1) == groups.gen_a(k1, 3)
    k8 = T(2, 3, 1, 1, 1, 1)
    assert theory.epicenter_witness(2, k8) == groups.gen_a(k8, 4)
    with pytest.raises(RuntimeError):
        theory.epicenter_witness(2, (2, 2, 2, 1, 1))  # K14: no witness available


def test_epicenter_membership():
    k1 = T(3, 2, 1, 1, 0, 1)
    assert theory.epicenter_membership(3, k1, groups.gen_a(k1, 3))
    g1 = T(3, 1, 1, 1, 1, 1)
    assert not theory.epicenter_membership(3, g1, groups.gen_c(g1))
    for gp in (g1, k1, T(2, 3, 1, 1, 1, 1)):
        assert theory.epicenter_membership(gp.p, gp, groups.identity())
    k8 = T(2, 3, 1, 1, 1, 1)
    assert theory.epicenter_membership(2, k8, theory.epicenter_witness(2, k8))


def test_capable_quotient_drops_multiplier():
    # G1 at p = 3, alpha = 2: every central cyclic quotient has a smaller multiplier
    g = T(3, 2, 2, 2, 2, 2)
    full = multiplier_of(g).order
    for d in groups.central_cyclic_subgroups(g):
        q = groups.quotient_presentation(g, d)
        assert two_nilpotent_multiplier(q).order < full
