import numpy as np
import pytest

from origami_lab.core import is_isomorphic, make_origami, quaternion_origami, torus_grid
from origami_lab.veech import (
    S, T, SL2Word, act, cusp_count, in_veech_group, veech_group, veech_index, verify_characteristic_W,
)

from conftest import random_corpus

L3 = make_origami([1, 0, 2], [2, 1, 0])


def test_word_parsing_and_matrices():
    w = SL2Word.parse("S T^-1 S")
    assert w.letters == ("S", "t", "S")
    assert (SL2Word.parse("S'").matrix == np.array([[0, 1], [-1, 0]])).all()
    assert (S.matrix @ S.matrix == -np.eye(2)).all()
    assert (w * w.inverse()).letters == ()
    assert str(SL2Word()) == "1"
    with pytest.raises(ValueError):
        SL2Word(("X",))


def test_w_veech_group():
    res = veech_group(quaternion_origami())
    assert res.index == 1
    assert res.cusps == [1]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_torus_grid_veech_group(n):
    assert veech_index(torus_grid(n)) == 1


def test_l_shape_veech_group():
    res = veech_group(L3)
    assert res.index == 3
    assert res.cusps == [2, 1]
    assert sum(res.cusps) == res.index
    for g in res.generators:
        assert in_veech_group(g, L3)
    assert not in_veech_group(T, L3)


def test_generators_have_determinant_one():
    for g in veech_group(L3).generators:
        assert round(np.linalg.det(g.matrix)) == 1


@pytest.mark.parametrize("o", random_corpus(20), ids=lambda o: f"n{o.n}")
def test_action_relations(o):
    assert is_isomorphic(act(S ** 4, o), o)
    assert is_isomorphic(act((S * T) ** 6, o), o)
    # S^2 is central
    assert is_isomorphic(act(S ** 2 * T, o), act(T * S ** 2, o))


@pytest.mark.parametrize("o", random_corpus(8, seed=3, sizes=range(3, 7)), ids=lambda o: f"n{o.n}")
def test_orbit_and_cusps_consistent(o):
    res = veech_group(o)
    assert sum(res.cusps) == res.index == len(res.orbit)
    assert cusp_count(o) == len(res.cusps)


def test_characteristic_check():
    rep = verify_characteristic_W()
    assert rep.epimorphism_count == 24
    assert rep.all_kernels_equal
    assert rep.rejected_pairs == 40
