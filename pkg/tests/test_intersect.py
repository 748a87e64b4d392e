import pytest
from hypothesis import given, strategies as st

from origami_lab.core import genus, is_isomorphic, singularity_profile
from origami_lab.autos import translations
from origami_lab.errors import Disconnected, TwoTorsionInput, WrongCase
from origami_lab.intersect import (
    CaseKind, EdgeLabeling, GridPoint, base_labeling, branch_set, case1_labeling, classify_case,
    construct_D, construct_D_candidates, cover_from_labeling, holonomy_variants, leaf_swap,
    marked_quadruple, pipeline, rotate90, sweep_D, valid_points, vertex_parity, worker_count,
)


def pts(*pairs, n):
    return {GridPoint(a, b, n) for a, b in pairs}


def test_rotate90():
    assert rotate90(GridPoint(1, 0, 3)) == GridPoint(0, 1, 3)
    assert rotate90(GridPoint(2, 2, 4)) == GridPoint(2, 2, 4)
    for p in (GridPoint(a, b, 5) for a in range(5) for b in range(5)):
        q = p
        for _ in range(4):
            q = rotate90(q)
        assert q == p


@pytest.mark.parametrize("n", range(1, 9))
def test_rotation_fixed_points(n):
    fixed = {p for p in (GridPoint(a, b, n) for a in range(n) for b in range(n)) if rotate90(p) == p}
    expected = {GridPoint(0, 0, n)} | ({GridPoint(n // 2, n // 2, n)} if n % 2 == 0 else set())
    assert fixed == expected


def test_marked_quadruple():
    q = marked_quadruple(GridPoint(1, 0, 3))
    assert set(q.points()) == pts((1, 0), (0, 1), (2, 0), (0, 2), n=3)
    assert len(set(marked_quadruple(GridPoint(1, 1, 4)).points())) == 4
    with pytest.raises(TwoTorsionInput):
        marked_quadruple(GridPoint(2, 2, 4))


def test_classify_examples():
    assert classify_case(GridPoint(2, 1, 5)) == CaseKind.CASE1
    assert classify_case(GridPoint(1, 1, 4)) == CaseKind.CASE3
    assert classify_case(GridPoint(1, 0, 3)) == CaseKind.CASE4
    assert classify_case(GridPoint(1, 2, 5)) == CaseKind.CASE2
    assert classify_case(GridPoint(3, 1, 6)) == CaseKind.CASE5
    with pytest.raises(TwoTorsionInput):
        classify_case(GridPoint(0, 3, 6))


@pytest.mark.parametrize("n", range(3, 10))
def test_cases_are_rotation_invariant(n):
    for p in valid_points(n):
        assert classify_case(rotate90(p)) == classify_case(p)


def test_zero_labeling_is_disconnected():
    with pytest.raises(Disconnected):
        cover_from_labeling(EdgeLabeling.zeros(2))
    assert branch_set(EdgeLabeling.zeros(2)) == set()


def test_unramified_column_cover():
    l = EdgeLabeling.zeros(3)
    l.toggle_v(0, range(3))
    o = cover_from_labeling(l)
    assert o.n == 18 and genus(o) == 1
    assert branch_set(l) == set()


def test_single_edge():
    l = EdgeLabeling.zeros(4)
    l.hlabel[1, 2] = 1
    assert branch_set(l) == pts((1, 2), (2, 2), n=4)


@pytest.mark.parametrize("a,b,n", [(2, 1, 5), (3, 1, 7), (3, 2, 7), (2, 1, 6), (3, 1, 8)])
def test_case1_labeling(a, b, n):
    p = GridPoint(a, b, n)
    l = case1_labeling(p)
    assert branch_set(l) == set(marked_quadruple(p).points())
    # the corners A, B, C, D are unramified
    for x, y in ((b, b), (n - b, b), (n - b, n - b), (b, n - b)):
        assert vertex_parity(l, x, y) == 0
    o = cover_from_labeling(l)
    assert o.n == 2 * n * n and genus(o) == 3
    assert is_isomorphic(o, construct_D(p))


def test_case1_labeling_rejects_other_cases():
    with pytest.raises(WrongCase):
        case1_labeling(GridPoint(1, 2, 5))
    # rotated copies of a case 1 point give the same quadruple
    p = GridPoint(2, 1, 5)
    assert branch_set(case1_labeling(rotate90(p))) == branch_set(case1_labeling(p))


def test_construct_d_small():
    p = GridPoint(1, 0, 3)
    D = construct_D(p)
    assert D.n == 18 and genus(D) == 3
    assert leaf_swap(3) in translations(D)
    assert sum(c.passed for c in construct_D_candidates(p)) == 1
    with pytest.raises(TwoTorsionInput):
        construct_D(GridPoint(2, 2, 4))


@given(st.integers(3, 8).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1), st.integers(0, n - 1))))
def test_d_family_properties(t):
    n, a, b = t
    p = GridPoint(a, b, n)
    if p.is_two_torsion:
        return
    D = construct_D(p)
    prof = singularity_profile(D)
    assert D.n == 2 * n * n and genus(D) == 3
    assert prof.singular_orders == (1, 1, 1, 1)
    assert prof.regular_count == 2 * n * n - 8
    assert is_isomorphic(D, construct_D(rotate90(p)))


@given(st.integers(3, 8).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1), st.integers(0, n - 1))))
def test_holonomy_moves_keep_branch_set(t):
    n, a, b = t
    p = GridPoint(a, b, n)
    if p.is_two_torsion:
        return
    base = base_labeling(p)
    sets = [branch_set(l) for l in holonomy_variants(base)]
    assert all(s == set(marked_quadruple(p).points()) for s in sets)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_pipeline(n):
    cert = pipeline(GridPoint(1, 0, n))
    assert cert.passed, cert.checks
    assert cert.order == n
    if n == 4:
        # the bridge sends (1, 0) to a real point; lambda is real there
        assert abs(cert.lam.imag) < 1e-9
    if n == 3:
        assert abs(cert.lam - (-26.82046169)) < 1e-6


def test_pipeline_rejects_two_torsion():
    with pytest.raises(TwoTorsionInput):
        pipeline(GridPoint(1, 1, 2))


def test_worker_count(monkeypatch):
    monkeypatch.delenv("ORIGAMI_LAB_THREADS", raising=False)
    assert worker_count() == 1
    monkeypatch.setenv("ORIGAMI_LAB_THREADS", "3")
    assert worker_count() == 3
    assert worker_count(2) == 2


def test_parallel_sweep_matches_serial():
    assert sweep_D([3, 4], workers=2) == sweep_D([3, 4], workers=1)
