import cmath
import math
import random
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from origami_lab import elliptic as ell
from origami_lab.elliptic import (
    INFINITY, EllipticPoint, RationalPoly, add, division_polynomial, gauss, lambda_from_torsion, mul,
    neg, point, point_order, rot_c, torsion_points, weierstrass_bridge, weierstrass_p,
)
from origami_lab.errors import OffCurve, TwoTorsionInput
from origami_lab.rootfind import aberth, polynomial_roots

T4 = point(gauss(0, 1), gauss(1, -1))
ORIGIN_2T = point(0, 0)


def close(P, Q, tol=1e-9):
    return ell.points_equal(P, Q, tol)


def random_point(rng):
    x = complex(rng.gauss(0, 1.5), rng.gauss(0, 1.5))
    return EllipticPoint(x, cmath.sqrt(x ** 3 - x))


# -- group law ----------------------------------------------------------------

def test_two_torsion_collinear():
    assert add(point(-1, 0), point(1, 0)) == ORIGIN_2T
    assert mul(2, ORIGIN_2T) is INFINITY or mul(2, ORIGIN_2T).is_infinity


def test_exact_duplication():
    assert mul(2, T4) == ORIGIN_2T
    assert mul(4, T4).is_infinity
    assert point_order(T4) == 4
    # the duplication formula x(2P) = (x^2 + 1)^2 / (4 (x^3 - x)) at x = i
    x = gauss(0, 1)
    assert not ((x * x + 1) ** 2 / (4 * (x ** 3 - x)))


def test_off_curve():
    with pytest.raises(OffCurve):
        add(point(1, 1), ORIGIN_2T)
    with pytest.raises(OffCurve):
        rot_c(EllipticPoint(2j, 0j))


def test_neutral_and_inverse():
    P = T4
    assert add(P, INFINITY) == P
    assert add(P, neg(P)).is_infinity
    assert mul(0, P).is_infinity
    assert mul(-1, P) == neg(P)


@given(st.integers(0, 10**6))
def test_group_axioms_numeric(seed):
    rng = random.Random(seed)
    P, Q, R = (random_point(rng) for _ in range(3))
    tol = 1e-6
    assert close(add(add(P, Q, tol), R, tol), add(P, add(Q, R, tol), tol), tol)
    assert close(add(P, Q), add(Q, P))
    assert add(P, neg(P)).is_infinity
    assert ell.on_curve(add(P, Q), 1e-8)


def test_exact_associativity():
    P = T4
    Q = point(gauss(0, -1), gauss(1, 1))
    R = point(1, 0)
    assert ell.on_curve(Q)
    assert add(add(P, Q), R) == add(P, add(Q, R))


def test_rot_c():
    assert rot_c(ORIGIN_2T) == ORIGIN_2T
    assert rot_c(T4) == point(gauss(0, -1), gauss(1, 1))
    assert rot_c(rot_c(rot_c(rot_c(T4)))) == T4
    assert rot_c(INFINITY).is_infinity


@given(st.integers(0, 10**6), st.integers(1, 7))
def test_rot_c_is_a_homomorphism(seed, n):
    P = random_point(random.Random(seed))
    assert close(rot_c(mul(n, P, 1e-7), 1e-7), mul(n, rot_c(P), 1e-7), 1e-6)


# -- division polynomials -----------------------------------------------------

def test_division_polynomial_examples():
    assert division_polynomial(2) == RationalPoly.of(0, -1, 0, 1)
    assert division_polynomial(3) == RationalPoly.of(-1, 0, -6, 0, 3)
    psi4 = division_polynomial(4)
    assert not psi4(gauss(0, 1)) and not psi4(gauss(0, -1))
    assert division_polynomial(1) == RationalPoly.of(1)


def test_division_polynomial_degrees():
    for n in range(2, 10):
        # roots are the x-coordinates of the n^2 - 1 nonzero torsion points
        expected = (n * n - 1) // 2 if n % 2 else (n * n - 4) // 2 + 3
        assert division_polynomial(n).degree == expected


def test_three_torsion_closed_form():
    # 3x^4 - 6x^2 - 1 = 0  <=>  x^2 = 1 +- 2/sqrt(3)
    with mpmath.workdps(30):
        expect = [complex(s * mpmath.sqrt(1 + t * 2 / mpmath.sqrt(3)))
                  for s in (1, -1) for t in (1, -1)]
    got = division_polynomial(3).roots()
    assert len(got) == 4
    for a in expect:
        assert min(abs(a - b) for b in got) < 1e-12


@pytest.mark.parametrize("n", range(2, 9))
def test_roots_pass_group_law_oracle(n):
    for x in division_polynomial(n).roots():
        P = EllipticPoint(x, cmath.sqrt(x ** 3 - x))
        assert mul(n, P, 1e-8).is_infinity


def test_rational_poly_arithmetic():
    p = RationalPoly.of(1, 2, 3)
    q = RationalPoly.of(-1, 1)
    quo, rem = (p * q + RationalPoly.of(5)).divmod(q)
    assert quo == p and rem == RationalPoly.of(5)
    assert (p - p).coeffs == ()
    assert p(Fraction(1, 2)) == Fraction(1) + 1 + Fraction(3, 4)
    with pytest.raises(ArithmeticError):
        p.exact_div(q)


# -- torsion points -----------------------------------------------------------

def test_torsion_counts():
    assert len(torsion_points(3)) == 8
    assert len(torsion_points(4)) == 12
    assert len(torsion_points(2)) == 3


@pytest.mark.parametrize("n", range(2, 7))
def test_full_torsion_group_size(n):
    assert ell.n_torsion_count(n) == n * n


def test_known_order_four_point_is_enumerated():
    pts = torsion_points(4)
    assert any(close(t.point, T4.to_complex()) for t in pts)


@pytest.mark.parametrize("n", [5, 7, 12])
def test_exact_order(n):
    for t in torsion_points(n):
        assert point_order(t.point, n, 1e-8) == n


def test_no_small_order_among_random_points():
    rng = random.Random(4)
    for _ in range(30):
        assert point_order(random_point(rng), 12, 1e-9) is None


# -- lambda ---------------------------------------------------------------------

def test_lambda_of_order_four_point_exact():
    lam, zeta = lambda_from_torsion(T4)
    assert lam == gauss(2) and zeta == gauss(0, 1)


def test_lambda_rejects_two_torsion():
    for P in (ORIGIN_2T, point(1, 0), point(-1, 0)):
        with pytest.raises(TwoTorsionInput):
            lambda_from_torsion(P)


def test_lambda_of_real_order_three_point():
    with mpmath.workdps(30):
        x = mpmath.sqrt(1 + 2 / mpmath.sqrt(3))
        zeta = (1 + x) / (1 - x)
        expect = float(1 - zeta ** 2)
    real = [t for t in torsion_points(3) if abs(t.point.x.imag) < 1e-12 and t.point.x.real > 0]
    assert len(real) == 2
    for t in real:
        lam, zeta = lambda_from_torsion(t)
        assert abs(lam - expect) < 1e-9
        assert abs((zeta - 1) / (zeta + 1) - t.point.x) < 1e-12
    assert abs(expect - (-26.82046)) < 1e-5


def test_lambda_depends_only_on_x():
    for t in torsion_points(5):
        P = t.point
        l1, _ = lambda_from_torsion(P)
        l2, _ = lambda_from_torsion(neg(P))
        assert abs(l1 - l2) < 1e-9 * max(1, abs(l1))


# -- root finding -----------------------------------------------------------------

def test_aberth_matches_numpy():
    rng = np.random.default_rng(0)
    c = rng.normal(size=12) + 1j * rng.normal(size=12)
    ours = np.sort_complex(aberth(c))
    ref = np.sort_complex(np.roots(c[::-1]))
    assert np.max(np.abs(ours - ref)) < 1e-8


def test_polynomial_roots_rejects_repeated_roots():
    from origami_lab.errors import RootFindingDiverged
    with pytest.raises(RootFindingDiverged):
        polynomial_roots([Fraction(1), Fraction(-2), Fraction(1)])


# -- lattice bridge -------------------------------------------------------------

def test_g2_closed_form():
    with mpmath.workdps(25):
        expect = float(mpmath.gamma(0.25) ** 8 / (16 * mpmath.pi ** 2))
    assert abs(ell.g2_invariant() - expect) < 1e-10 * expect
    assert abs(ell.eisenstein_g2() - math.pi) < 1e-14


def _square_sum(R):
    m, n = np.meshgrid(np.arange(-R, R + 1), np.arange(-R, R + 1))
    w = (m + 1j * n).ravel()
    w = w[w != 0]
    return 60 * np.sum(w ** -4.0).real


def test_g2_direct_lattice_sum():
    # the truncation error of the square sum decays like 1/R^2
    s1, s2 = _square_sum(40), _square_sum(80)
    extrapolated = (4 * s2 - s1) / 3
    assert abs(extrapolated - ell.g2_invariant()) < 1e-4


def test_p_function_against_truncated_lattice_sum():
    z = 0.23 + 0.31j
    R = 200
    m, n = np.meshgrid(np.arange(-R, R + 1), np.arange(-R, R + 1))
    w = (m + 1j * n).ravel()
    w = w[w != 0]
    direct = 1 / z ** 2 + np.sum(1 / (z - w) ** 2 - 1 / w ** 2)
    p, _ = weierstrass_p(z)
    assert abs(p - direct) < 1e-3


@given(st.floats(0.05, 0.95), st.floats(0.05, 0.95))
def test_p_function_differential_equation(a, b):
    z = complex(a, b)
    p, dp = weierstrass_p(z)
    g2 = ell.g2_invariant()
    assert abs(dp ** 2 - (4 * p ** 3 - g2 * p)) < 1e-8 * max(1, abs(p) ** 3)
    h = 1e-5
    fd = (weierstrass_p(z + h)[0] - weierstrass_p(z - h)[0]) / (2 * h)
    assert abs(fd - dp) < 1e-5 * max(1, abs(dp))


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_half_periods(n):
    h = n // 2
    assert close(weierstrass_bridge(h, 0, n), point(1, 0).to_complex(), 1e-6)
    assert close(weierstrass_bridge(0, h, n), point(-1, 0).to_complex(), 1e-6)
    assert close(weierstrass_bridge(h, h, n), point(0, 0).to_complex(), 1e-6)


@pytest.mark.parametrize("n", range(3, 9))
def test_bridge_orders_and_rotation(n):
    for a in range(n):
        for b in range(n):
            if (a, b) == (0, 0):
                continue
            P = weierstrass_bridge(a, b, n)
            assert point_order(P, 12) == n // math.gcd(math.gcd(a, b), n)
            Q = weierstrass_bridge((-b) % n, a, n)
            assert close(Q, rot_c(P), 1e-6)


def test_bridge_rejects_zero():
    with pytest.raises(ValueError):
        weierstrass_bridge(0, 0, 3)
