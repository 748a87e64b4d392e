"""Arithmetic on the curve y^2 = x^3 - x.

Points carry either exact Gaussian-rational coordinates (sympy ``QQ_I``
elements) or Python complex floats.  The group law is the usual chord and
tangent construction with the point at infinity as origin; in numeric mode
the tests ``x1 == x2`` and ``y == 0`` are made relative to a tolerance.
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from sympy.polys.domains import QQ_I

from .errors import ConvergenceBudgetExceeded, OffCurve, TwoTorsionInput
from .rootfind import polynomial_roots

DEFAULT_TOL = 1e-9
NMAX = 12

# Weierstrass coefficients: y^2 = x^3 + A x + B
A_COEF, B_COEF = -1, 0

_QI_TYPE = type(QQ_I(0, 1))


def gauss(re: Any, im: Any = 0):
    """Exact Gaussian rational ``re + im*i``."""
    return QQ_I.convert(Fraction(re)) + QQ_I(0, 1) * QQ_I.convert(Fraction(im))


def _is_exact_value(v) -> bool:
    return isinstance(v, (_QI_TYPE, int, Fraction))


def _to_complex(v) -> complex:
    if isinstance(v, _QI_TYPE):
        return complex(float(Fraction(int(v.x.numerator), int(v.x.denominator))),
                       float(Fraction(int(v.y.numerator), int(v.y.denominator))))
    return complex(v)


@dataclass(frozen=True)
class EllipticPoint:
    """A point of the curve; ``x is None`` encodes the point at infinity."""

    x: Any = None
    y: Any = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @property
    def exact(self) -> bool:
        return self.is_infinity or _is_exact_value(self.x)

    def to_complex(self) -> "EllipticPoint":
        if self.is_infinity:
            return self
        return EllipticPoint(_to_complex(self.x), _to_complex(self.y))

    def __repr__(self):
        if self.is_infinity:
            return "EllipticPoint(Infinity)"
        return f"EllipticPoint({self.x!r}, {self.y!r})"


INFINITY = EllipticPoint()


def point(x, y) -> EllipticPoint:
    """Build a point, converting ints, Fractions and Gaussian rationals to exact mode."""
    if _is_exact_value(x) and _is_exact_value(y):
        return EllipticPoint(QQ_I.convert(x) if not isinstance(x, _QI_TYPE) else x,
                             QQ_I.convert(y) if not isinstance(y, _QI_TYPE) else y)
    return EllipticPoint(complex(_to_complex(x)), complex(_to_complex(y)))


def _rhs(x):
    return x * x * x + A_COEF * x + B_COEF


def curve_residual(P: EllipticPoint) -> float:
    if P.is_infinity:
        return 0.0
    x, y = _to_complex(P.x), _to_complex(P.y)
    return abs(y * y - _rhs(x)) / max(1.0, abs(x) ** 3)


def on_curve(P: EllipticPoint, tol: float = DEFAULT_TOL) -> bool:
    if P.is_infinity:
        return True
    if P.exact:
        return not (P.y * P.y - _rhs(P.x))
    return curve_residual(P) <= tol


def _check(P: EllipticPoint, tol: float):
    if not on_curve(P, tol):
        raise OffCurve(f"{P} is not on y^2 = x^3 - x (residual {curve_residual(P):.3g})")


def _mixed(P: EllipticPoint, Q: EllipticPoint) -> tuple[EllipticPoint, EllipticPoint, bool]:
    if P.exact and Q.exact:
        return P, Q, True
    return P.to_complex(), Q.to_complex(), False


def _close(a, b, exact: bool, tol: float) -> bool:
    if exact:
        return not (a - b)
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def neg(P: EllipticPoint, tol: float = DEFAULT_TOL) -> EllipticPoint:
    _check(P, tol)
    if P.is_infinity:
        return P
    return EllipticPoint(P.x, -P.y)


def _add(P: EllipticPoint, Q: EllipticPoint, tol: float) -> EllipticPoint:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    P, Q, exact = _mixed(P, Q)
    if _close(P.x, Q.x, exact, tol):
        if _close(P.y, -Q.y, exact, tol):
            return INFINITY
        # doubling; y is not small here
        if not exact and abs(P.y) <= tol * max(1.0, abs(P.x) ** 1.5):
            return INFINITY
        slope = (3 * P.x * P.x + A_COEF) / (2 * P.y)
    else:
        slope = (Q.y - P.y) / (Q.x - P.x)
    x3 = slope * slope - P.x - Q.x
    y3 = slope * (P.x - x3) - P.y
    return EllipticPoint(x3, y3)


def add(P: EllipticPoint, Q: EllipticPoint, tol: float = DEFAULT_TOL) -> EllipticPoint:
    _check(P, tol)
    _check(Q, tol)
    return _add(P, Q, tol)


def mul(n: int, P: EllipticPoint, tol: float = DEFAULT_TOL) -> EllipticPoint:
    """``n * P`` by left-to-right double-and-add."""
    _check(P, tol)
    if n < 0:
        n, P = -n, EllipticPoint(P.x, -P.y) if not P.is_infinity else P
    R = INFINITY
    for bit in bin(n)[2:]:
        R = _add(R, R, tol)
        if bit == "1":
            R = _add(R, P, tol)
    return R


def point_order(P: EllipticPoint, nmax: int = NMAX, tol: float = DEFAULT_TOL) -> int | None:
    """Smallest ``k <= nmax`` with ``k * P = 0``, or None."""
    _check(P, tol)
    R = P
    for k in range(1, nmax + 1):
        if R.is_infinity:
            return k
        R = _add(R, P, tol)
    return None


def rot_c(P: EllipticPoint, tol: float = DEFAULT_TOL) -> EllipticPoint:
    """The order-4 automorphism (x, y) -> (-x, i*y)."""
    _check(P, tol)
    if P.is_infinity:
        return P
    if P.exact:
        return EllipticPoint(-P.x, QQ_I(0, 1) * P.y)
    return EllipticPoint(-P.x, 1j * P.y)


def points_equal(P: EllipticPoint, Q: EllipticPoint, tol: float = DEFAULT_TOL) -> bool:
    if P.is_infinity or Q.is_infinity:
        return P.is_infinity and Q.is_infinity
    P, Q, exact = _mixed(P, Q)
    return _close(P.x, Q.x, exact, tol) and _close(P.y, Q.y, exact, tol)


# ---------------------------------------------------------------------------
# polynomials with rational coefficients

@dataclass(frozen=True)
class RationalPoly:
    """Dense polynomial in x, coefficients ascending; the zero polynomial is ``()``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        c = [Fraction(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def of(cls, *coeffs) -> "RationalPoly":
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return RationalPoly(tuple((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0)
                                  for k in range(n)))

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (-other)

    def __mul__(self, other) -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            return RationalPoly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RationalPoly(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RationalPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RationalPoly":
        out = RationalPoly((Fraction(1),))
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "RationalPoly") -> tuple["RationalPoly", "RationalPoly"]:
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k] / other.leading
            if c:
                q[k - d] = c
                for j, y in enumerate(other.coeffs):
                    rem[k - d + j] -= c * y
        return RationalPoly(tuple(q)), RationalPoly(tuple(rem[:d]))

    def exact_div(self, other: "RationalPoly") -> "RationalPoly":
        q, r = self.divmod(other)
        if r.coeffs:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __call__(self, x):
        if isinstance(x, _QI_TYPE):
            acc = QQ_I(0, 0)
            for c in reversed(self.coeffs):
                acc = acc * x + QQ_I.convert(c)
            return acc
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + (c if isinstance(x, Fraction) or isinstance(x, int) else float(c))
        return acc

    def roots(self, tol: float = 1e-12) -> list[complex]:
        return polynomial_roots(self.coeffs, tol=tol)

    def __str__(self):
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c:
                terms.append(f"{c}" + ("" if k == 0 else "*x" if k == 1 else f"*x^{k}"))
        return " + ".join(terms) or "0"


X = RationalPoly.of(0, 1)
ONE = RationalPoly.of(1)
CUBIC = RationalPoly.of(B_COEF, A_COEF, 0, 1)  # x^3 + A x + B = y^2


@lru_cache(maxsize=None)
def _psi(n: int) -> tuple[RationalPoly, int]:
    """Division polynomial as (g, e) meaning psi_n = g * y**e with e in {0, 1}."""
    a, b = A_COEF, B_COEF
    if n == 0:
        return RationalPoly(()), 0
    if n == 1:
        return ONE, 0
    if n == 2:
        return RationalPoly.of(2), 1
    if n == 3:
        return RationalPoly.of(-a * a, 12 * b, 6 * a, 0, 3), 0
    if n == 4:
        return RationalPoly.of(-8 * b * b - a ** 3, -4 * a * b, -5 * a * a, 20 * b, 5 * a, 0, 1) * 4, 1
    m = n // 2

    def term(i, j, k):
        # psi_i * psi_j^3 style products with y-powers folded into the cubic
        gi, ei = _psi(i)
        gj, ej = _psi(j)
        return gi * gj ** k, ei + k * ej

    def fold(poly, e):
        out = poly * (CUBIC ** (e // 2))
        return out, e % 2

    if n % 2:
        # psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
        p1, e1 = fold(*term(m + 2, m, 3))
        p2, e2 = fold(*term(m - 1, m + 1, 3))
        assert e1 == e2 == 0
        return p1 - p2, 0
    # psi_{2m} = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / (2y)
    p1, e1 = fold(*term(m + 2, m - 1, 2))
    p2, e2 = fold(*term(m - 2, m + 1, 2))
    assert e1 == e2
    gm, em = _psi(m)
    inner = gm * (p1 - p2) * Fraction(1, 2)
    if em + e1 == 2:
        # y^2 / y leaves one factor y
        return inner, 1
    # no y in the numerator: divide the cubic out to get y^2 / y
    return inner.exact_div(CUBIC), 1


def division_polynomial(n: int) -> RationalPoly:
    """Polynomial in x whose roots are the x-coordinates of the nonzero n-torsion points.

    For odd ``n`` this is psi_n itself.  For even ``n`` psi_n = y * g(x); we
    return ``(g / 2) * (x^3 - x)``, i.e. psi_n / psi_2 multiplied by the cubic so
    that the 2-torsion x-coordinates are roots as well.  In particular the
    result for ``n = 2`` is ``x^3 - x``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    g, e = _psi(n)
    if e == 0:
        return g
    return g * Fraction(1, 2) * CUBIC


@dataclass(frozen=True)
class TorsionPoint:
    point: EllipticPoint
    order: int


def _sqrt_branch(v: complex) -> complex:
    return cmath.sqrt(v)


def _order_dividing(P: EllipticPoint, n: int, tol: float) -> int | None:
    for d in sorted(d for d in range(1, n + 1) if n % d == 0):
        if mul(d, P, tol).is_infinity:
            return d
    return None


def torsion_points(n: int, nmax: int = NMAX, tol: float = DEFAULT_TOL,
                   threads: int | None = None) -> list[TorsionPoint]:
    """All points of exact order ``n``, numerically, sorted deterministically."""
    if not 2 <= n <= nmax:
        raise ValueError(f"n must lie in [2, {nmax}]")
    xs = division_polynomial(n).roots()

    def lift(x: complex) -> list[TorsionPoint]:
        y = _sqrt_branch(_rhs(x))
        cands = [EllipticPoint(x, y)]
        if abs(y) > 1e-7 * max(1.0, abs(x) ** 1.5):
            cands.append(EllipticPoint(x, -y))
        else:
            cands = [EllipticPoint(x, 0j)]
        return [TorsionPoint(P, n) for P in cands if _order_dividing(P, n, tol) == n]

    if threads and threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            groups = list(ex.map(lift, xs))
    else:
        groups = [lift(x) for x in xs]
    out = [t for g in groups for t in g]
    out.sort(key=lambda t: (round(t.point.x.real, 9), round(t.point.x.imag, 9),
                            round(t.point.y.real, 9), round(t.point.y.imag, 9)))
    return out


def n_torsion_count(n: int, tol: float = DEFAULT_TOL) -> int:
    """Number of points P with n*P = 0, including infinity."""
    return 1 + sum(len(torsion_points(d, nmax=max(n, NMAX), tol=tol))
                   for d in range(2, n + 1) if n % d == 0)


# ---------------------------------------------------------------------------
# Legendre parameter of a torsion point

def lambda_from_torsion(T, tol: float = DEFAULT_TOL):
    """Return ``(lam, zeta)`` with ``zeta = (1 + x)/(1 - x)`` and ``lam = 1 - zeta^2``.

    Accepts a TorsionPoint or a bare EllipticPoint.  Exact input gives exact output.
    """
    P = T.point if isinstance(T, TorsionPoint) else T
    _check(P, tol)
    if P.is_infinity:
        raise TwoTorsionInput("the origin is excluded")
    if P.exact:
        if not P.y:
            raise TwoTorsionInput(f"{P} has order 2")
        one = QQ_I.convert(1)
        zeta = (one + P.x) / (one - P.x)
        return one - zeta * zeta, zeta
    x, y = complex(P.x), complex(P.y)
    if abs(y) <= tol * max(1.0, abs(x) ** 1.5) or abs(1 - x) <= tol:
        raise TwoTorsionInput(f"{P} has order dividing 2")
    zeta = (1 + x) / (1 - x)
    return 1 - zeta * zeta, zeta


# ---------------------------------------------------------------------------
# Weierstrass functions of the Gaussian lattice Z + iZ

def _sigma(k: int, p: int) -> int:
    return sum(d ** p for d in range(1, k + 1) if k % d == 0)


def _q_series(coef: int, p: int, tol: float = 1e-17) -> float:
    """``1 + coef * sum sigma_p(k) q^k`` at q = exp(-2 pi), truncated by a geometric bound."""
    q = math.exp(-2 * math.pi)
    total, k = 0.0, 1
    while True:
        term = _sigma(k, p) * q ** k
        total += term
        # sigma_p(k) <= k^(p+1); the tail is below the next term times a small factor
        if (k + 1) ** (p + 1) * q ** (k + 1) / (1 - q * 2 ** (p + 1)) < tol:
            break
        k += 1
    return 1.0 + coef * total


@lru_cache(maxsize=None)
def eisenstein_g2() -> float:
    """``sum' w^-2`` over Z + iZ, rows summed first (equals pi)."""
    return math.pi ** 2 / 3 * _q_series(-24, 1)


@lru_cache(maxsize=None)
def g2_invariant() -> float:
    """``g2 = 60 sum' w^-4`` for the lattice Z + iZ, from the q-expansion of E4."""
    return 60 * math.pi ** 4 / 45 * _q_series(240, 3)


def _rows_needed(imag_part: float, tol: float, max_terms: int) -> int:
    # |csc(pi w)|^2 <= 4 e^{-2 pi t} / (1 - e^{-2 pi t})^2 for t = |Im w|
    M = 0
    while True:
        t = M + 1 - abs(imag_part)
        r = math.exp(-2 * math.pi * t)
        bound = 2 * 8 * math.pi ** 3 * r / ((1 - r) ** 3 * (1 - math.exp(-2 * math.pi)))
        if bound < tol:
            return M
        M += 1
        if M > max_terms:
            raise ConvergenceBudgetExceeded(f"more than {max_terms} rows needed")


def weierstrass_p(z: complex, tol: float = 1e-14, max_terms: int = 60) -> tuple[complex, complex]:
    """``(P(z), P'(z))`` for the lattice Z + iZ.

    Each horizontal row of lattice points is summed in closed form with
    ``sum_n (w + n)^-2 = pi^2 csc^2(pi w)``; rows decay like ``exp(-2 pi |m|)``.
    """
    re = z.real - math.floor(z.real + 0.5)
    im = z.imag - math.floor(z.imag + 0.5)
    z = complex(re, im)
    M = _rows_needed(im, tol, max_terms)
    p = 0j
    dp = 0j
    for m in range(-M, M + 1):
        w = math.pi * (z + 1j * m)
        s = cmath.sin(w)
        c = cmath.cos(w)
        p += 1 / (s * s)
        dp += c / (s * s * s)
    return math.pi ** 2 * p - eisenstein_g2(), -2 * math.pi ** 3 * dp


def bridge_scale() -> float:
    return (4 / g2_invariant()) ** 0.25


def weierstrass_bridge(a: int, b: int, n: int, tol: float = 1e-14, max_terms: int = 60) -> EllipticPoint:
    """Image of the grid point ``(a, b)`` of the n-by-n torus on y^2 = x^3 - x.

    ``z = (a + i b)/n`` is sent to ``(c^2 P(z), c^3 P'(z)/2)`` with
    ``c = (4/g2)^(1/4)``; the half period 1/2 goes to ``(1, 0)``.
    """
    if not (0 <= a < n and 0 <= b < n) or (a, b) == (0, 0):
        raise ValueError("need 0 <= a, b < n and (a, b) != (0, 0)")
    p, dp = weierstrass_p(complex(a, b) / n, tol, max_terms)
    c = bridge_scale()
    x = c * c * p
    y = c ** 3 * dp / 2
    # snap rounding noise at the 2-torsion points
    if abs(y) < 1e-12 * max(1.0, abs(x) ** 1.5):
        y = 0j
    return EllipticPoint(complex(x), complex(y))
