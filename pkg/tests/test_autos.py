import random

import pytest
from hypothesis import given, strategies as st

from origami_lab.autos import (
    AffineAuto, affine_autos, brute_force_autos, center, w_mod_sign_origami, fixed_points,
    generated_group, order_histogram, quotient_by_translations, quotient_euler_characteristic,
    quotient_genus, satisfies_relations, translations, w_automorphisms,
)
from origami_lab.core import (
    genus, identity, is_isomorphic, quaternion_origami, torus_grid, w_square,
)
from origami_lab.errors import NotClosed, NotSubgroup, RelationViolated
from origami_lab.wsuite import EXPECTED_FIXED, labelled_fixed_points

from conftest import random_origami

W = quaternion_origami()


def test_group_sizes():
    assert len(translations(W)) == 8
    assert len(affine_autos(W, "-I")) == 8
    assert len(affine_autos(W, "S")) == 8
    autos = w_automorphisms()
    assert len(set(autos.values())) == 16
    assert order_histogram(list(autos.values())) == {1: 1, 2: 7, 4: 8}
    assert len(center(list(autos.values()))) == 4


def test_translations_form_quaternion_group():
    hist = order_histogram(translations(W))
    assert hist == {1: 1, 2: 1, 4: 6}


def test_sigma_fixes_square_one():
    sigma = w_automorphisms()["sigma"]
    assert sigma.derivative == "-I"
    assert sigma.pi[w_square("1")] == w_square("1")
    assert sigma.order() == 2


@pytest.mark.parametrize("name", sorted(EXPECTED_FIXED))
def test_involution_fixed_points(name):
    assert labelled_fixed_points(name) == EXPECTED_FIXED[name]


@pytest.mark.parametrize("name", ["c", "-c", "-1"])
def test_vertex_fixers(name):
    rep = fixed_points(W, w_automorphisms()[name])
    assert rep.kinds() == {"vertices"}
    assert rep.total == 4


@pytest.mark.parametrize("name", ["i", "-i", "j", "-j", "k", "-k"])
def test_free_translations(name):
    assert fixed_points(W, w_automorphisms()[name]).total == 0


def test_quotients():
    autos = w_automorphisms()
    assert quotient_genus(W, generated_group([autos["sigma"]])) == 1
    assert quotient_genus(W, generated_group([autos["c"]])) == 0
    pm = [autos["1"], autos["-1"]]
    assert quotient_genus(W, pm) == 1
    w2 = quotient_by_translations(W, pm)
    assert w2.n == 4 and genus(w2) == 1
    assert is_isomorphic(w2, w_mod_sign_origami())
    assert is_isomorphic(quotient_by_translations(W, translations(W)), torus_grid(1))
    # the whole group of 16: the orbifold is a sphere
    assert quotient_genus(W, list(autos.values())) == 0


def test_quotient_errors():
    autos = w_automorphisms()
    with pytest.raises(NotSubgroup):
        quotient_by_translations(W, [autos["1"], autos["i"]])
    with pytest.raises(NotSubgroup):
        quotient_by_translations(W, [autos["1"], autos["sigma"]])
    t2 = torus_grid(2)
    with pytest.raises(NotClosed):
        order_histogram([autos["1"], autos["i"]])
    bad = AffineAuto(identity(8), "-I")
    with pytest.raises(RelationViolated):
        fixed_points(W, bad)
    # a set that fixes a square cannot act freely
    assert len(translations(t2)) == 4
    assert order_histogram(translations(t2)) == {1: 1, 2: 3}


def test_not_free():
    o = torus_grid(2)
    fake = AffineAuto((0, 1, 3, 2), "I")
    ident = AffineAuto(identity(4), "I")
    assert not satisfies_relations(o, fake)
    with pytest.raises(NotSubgroup):
        quotient_by_translations(o, [ident, fake])


def test_two_square_quotient():
    from origami_lab.core import make_origami
    # two squares on top of each other with a swap in h: translation group {1, swap}
    o = make_origami([1, 0], [1, 0])
    ts = translations(o)
    assert len(ts) == 2
    assert is_isomorphic(quotient_by_translations(o, ts), torus_grid(1))


@given(st.integers(1, 10), st.integers(0, 10**6))
def test_solver_matches_brute_force(n, seed):
    o = random_origami(n, random.Random(seed))
    for d in ("I", "-I", "S", "S^-1"):
        assert affine_autos(o, d) == brute_force_autos(o, d)
        for a in affine_autos(o, d):
            assert satisfies_relations(o, a)


@given(st.integers(1, 10), st.integers(0, 10**6))
def test_translations_act_freely_and_close(n, seed):
    o = random_origami(n, random.Random(seed))
    ts = translations(o)
    order_histogram(ts)  # raises unless closed
    for a in ts:
        if not a.is_identity():
            assert all(a.pi[s] != s for s in range(n))
    # vertices may be fixed, so only chi(X) <= |G| chi(X/G) holds in general
    from origami_lab.core import euler_characteristic
    assert euler_characteristic(o) <= len(ts) * quotient_euler_characteristic(o, ts)
    assert quotient_by_translations(o, ts).n * len(ts) == n


@given(st.integers(1, 8), st.integers(0, 10**6))
def test_minus_identity_quotient_riemann_hurwitz(n, seed):
    o = random_origami(n, random.Random(seed))
    from origami_lab.core import euler_characteristic
    for a in affine_autos(o, "-I"):
        group = generated_group([a])
        if len(group) != 2:
            continue
        fixed = fixed_points(o, a).total
        # chi(X) = 2 chi(X/<a>) - #fixed points
        assert euler_characteristic(o) == 2 * quotient_euler_characteristic(o, group) - fixed
