"""Numeric model of the quartic family Y^4 = X(X - Z)(X - lam Z)Z.

Every square or fourth root that enters a formula is chosen once and stored
in :class:`CurveParams`, so that compositions of maps never mix branches.
Automorphisms are 3x3 matrices acting on column vectors (X, Y, Z); two
matrices define the same map when they are proportional.

Quotient maps ``kappa`` land on the curve B^2 C = A^3 - A C^2, whose affine
chart (A/C, B/C) is the curve of :mod:`origami_lab.elliptic`.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from . import elliptic as ell
from .errors import DegenerateLambda, OffCurve, TwoTorsionInput

TOL = 1e-9
TORSION_TOL = 1e-8
ZETA8 = cmath.exp(1j * cmath.pi / 4)

INVOLUTIONS = ("sigma", "-sigma", "rho", "-rho", "tau", "-tau")
AUT_NAMES = ("1", "c", "-1", "-c", "sigma", "-sigma", "k", "-k",
             "rho", "-rho", "i", "-i", "tau", "-tau", "j", "-j")
IOTA_ALIASES = {"iota0": "1", "iota1": "c", "iota2": "-1", "iota3": "-c"}


# ---------------------------------------------------------------------------
# projective points

@dataclass(frozen=True)
class ProjPoint2:
    """Homogeneous coordinates scaled so the largest coordinate has modulus 1."""

    coords: tuple[complex, complex, complex]

    def __post_init__(self):
        v = np.asarray(self.coords, dtype=complex)
        k = int(np.argmax(np.abs(v)))
        if abs(v[k]) == 0:
            raise ValueError("(0:0:0) is not a projective point")
        v = v / v[k]
        object.__setattr__(self, "coords", tuple(complex(x) for x in v))

    @classmethod
    def of(cls, X, Y, Z) -> "ProjPoint2":
        return cls((complex(X), complex(Y), complex(Z)))

    @property
    def X(self) -> complex:
        return self.coords[0]

    @property
    def Y(self) -> complex:
        return self.coords[1]

    @property
    def Z(self) -> complex:
        return self.coords[2]

    def vec(self) -> np.ndarray:
        return np.asarray(self.coords, dtype=complex)

    def equals(self, other: "ProjPoint2", tol: float = TOL) -> bool:
        a, b = self.vec(), other.vec()
        cross = np.outer(a, b) - np.outer(b, a)
        return float(np.max(np.abs(cross))) <= tol

    def __repr__(self):
        return "(" + " : ".join(f"{c.real:.6g}{c.imag:+.6g}j" for c in self.coords) + ")"


P0 = ProjPoint2.of(0, 0, 1)
P1 = ProjPoint2.of(1, 0, 1)
P_INF = ProjPoint2.of(1, 0, 0)
E_ORIGIN = ProjPoint2.of(0, 1, 0)
E_TWO_TORSION = ProjPoint2.of(0, 0, 1)


def p_lambda(lam: complex) -> ProjPoint2:
    return ProjPoint2.of(lam, 0, 1)


# ---------------------------------------------------------------------------
# parameters

def _principal_root(v: complex, k: int) -> complex:
    return complex(v) ** (1.0 / k) if v != 0 else 0j


@dataclass(frozen=True)
class CurveParams:
    """lam and all root choices used by the formulas.

    ``zeta^2 = 1 - lam``, ``xi^2 = 1 - 1/lam``, ``eta^2 = lam``,
    ``omega^2 = 1 - zeta``, ``omega_rho^4 = 1/(lam (1 + xi)^2)``,
    ``omega_tau^2 = (i/(1 + eta))^3``; the ``_m`` variants are the same
    roots with ``zeta``, ``xi``, ``eta`` negated.  ``mu^4 = 1/lam``.
    """

    lam: complex
    zeta: complex
    xi: complex
    eta: complex
    omega: complex
    omega_rho: complex
    omega_tau: complex
    omega_m: complex
    omega_rho_m: complex
    omega_tau_m: complex
    mu: complex
    zeta8: complex = ZETA8
    tol: float = field(default=TOL, compare=False)

    def __post_init__(self):
        lam = self.lam
        checks = {
            "zeta": (self.zeta ** 2, 1 - lam),
            "xi": (self.xi ** 2, 1 - 1 / lam),
            "eta": (self.eta ** 2, lam),
            "omega": (self.omega ** 2, 1 - self.zeta),
            "omega_m": (self.omega_m ** 2, 1 + self.zeta),
            "omega_rho": (self.omega_rho ** 4, 1 / (lam * (1 + self.xi) ** 2)),
            "omega_rho_m": (self.omega_rho_m ** 4, 1 / (lam * (1 - self.xi) ** 2)),
            "omega_tau": (self.omega_tau ** 2, (1j / (1 + self.eta)) ** 3),
            "omega_tau_m": (self.omega_tau_m ** 2, (1j / (1 - self.eta)) ** 3),
            "mu": (self.mu ** 4, 1 / lam),
            "zeta8": (self.zeta8 ** 4, -1),
        }
        for name, (got, want) in checks.items():
            if abs(got - want) > 1e-12 * max(1.0, abs(want)):
                raise ValueError(f"root {name} is inconsistent: {got} vs {want}")

    @classmethod
    def make(cls, lam: complex, zeta=None, xi=None, eta=None, tol: float = TOL, **roots) -> "CurveParams":
        """Principal-branch roots unless overridden, except ``xi``.

        ``xi`` defaults to ``-i eta zeta / lam`` so that :meth:`orientation` is
        +1: then ``c = iota_1`` and the sixteen named maps compose exactly like
        the automorphisms of the same names on the square-tiled surface.
        """
        lam = complex(lam)
        if abs(lam) <= 1e-12 or abs(lam - 1) <= 1e-12:
            raise DegenerateLambda(f"lambda = {lam} gives a singular curve")
        zeta = complex(zeta) if zeta is not None else _principal_root(1 - lam, 2)
        eta = complex(eta) if eta is not None else _principal_root(lam, 2)
        xi = complex(xi) if xi is not None else -1j * eta * zeta / lam
        for a in (zeta, xi, eta):
            if abs(1 + a) <= 1e-12 or abs(1 - a) <= 1e-12:
                raise DegenerateLambda(f"lambda = {lam} makes a root equal to +-1")
        defaults = dict(
            omega=_principal_root(1 - zeta, 2),
            omega_m=_principal_root(1 + zeta, 2),
            omega_rho=_principal_root(1 / (lam * (1 + xi) ** 2), 4),
            omega_rho_m=_principal_root(1 / (lam * (1 - xi) ** 2), 4),
            omega_tau=_principal_root((1j / (1 + eta)) ** 3, 2),
            omega_tau_m=_principal_root((1j / (1 - eta)) ** 3, 2),
            mu=_principal_root(1 / lam, 4),
        )
        defaults.update({k: complex(v) for k, v in roots.items()})
        return cls(lam, zeta, xi, eta, tol=tol, **defaults)

    def orientation(self) -> int:
        """+1 if ``tau o sigma = beta_{i xi}``, -1 if it is ``beta_{-i xi}``."""
        return 1 if abs(self.eta * self.zeta / (1j * self.lam * self.xi) - 1) < 1e-6 else -1

    def reciprocal(self) -> "CurveParams":
        """Parameters for 1/lam with the roots that make the conjugation identities exact."""
        return CurveParams.make(1 / self.lam, zeta=self.xi, xi=self.zeta, eta=1 / self.eta, tol=self.tol)

    def complement(self) -> "CurveParams":
        """Parameters for 1 - lam, coherent in the same sense as :meth:`reciprocal`."""
        lam = self.lam
        return CurveParams.make(1 - lam, zeta=self.eta, xi=-lam * self.xi / (1 - lam),
                                eta=self.zeta, tol=self.tol)


# ---------------------------------------------------------------------------
# curves

def w_residual(params: CurveParams, P: ProjPoint2) -> float:
    X, Y, Z = P.coords
    return abs(Y ** 4 - X * (X - Z) * (X - params.lam * Z) * Z)


def e_lambda_residual(params: CurveParams, P: ProjPoint2) -> float:
    X, Y, Z = P.coords
    return abs(Y * Y * Z - X * (X - Z) * (X - params.lam * Z))


def e_minus_one_residual(P: ProjPoint2) -> float:
    A, B, C = P.coords
    return abs(B * B * C - (A ** 3 - A * C * C))


def on_curve(which: str, params: CurveParams | None, P: ProjPoint2, tol: float = TOL) -> bool:
    """``which`` is ``"W"``, ``"E_lambda"`` or ``"E_-1"``."""
    if which == "W":
        return w_residual(params, P) <= tol
    if which == "E_lambda":
        return e_lambda_residual(params, P) <= tol
    if which == "E_-1":
        return e_minus_one_residual(P) <= tol
    raise ValueError(f"unknown curve {which!r}")


def _require_w(params: CurveParams, P: ProjPoint2):
    if w_residual(params, P) > params.tol:
        raise OffCurve(f"{P} is not on W_lambda for lambda = {params.lam}")


def sample_points(params: CurveParams, count: int, seed: int, include_branch_points: bool = False) -> list[ProjPoint2]:
    """Points of W_lambda in groups of four over random x; deterministic in ``seed``."""
    rng = np.random.default_rng(seed)
    out: list[ProjPoint2] = []
    if include_branch_points:
        out += [P0, P1, P_INF, p_lambda(params.lam)]
    while len(out) < count:
        x = complex(rng.normal(), rng.normal()) * 1.5
        y0 = _principal_root(x * (x - 1) * (x - params.lam), 4)
        if abs(y0) < 1e-3:
            continue
        out += [ProjPoint2.of(x, y0 * 1j ** k, 1) for k in range(4)]
    return out[:count]


# ---------------------------------------------------------------------------
# automorphisms

def iota(nu: int) -> np.ndarray:
    return np.diag([1, 1j ** nu, 1]).astype(complex)


def alpha(lam: complex, z: complex) -> np.ndarray:
    """(X - lam Z : z Y : X - Z)"""
    return np.array([[1, 0, -lam], [0, z, 0], [1, 0, -1]], dtype=complex)


def beta(lam: complex, x: complex) -> np.ndarray:
    """(X - Z : x Y : X/lam - Z)"""
    return np.array([[1, 0, -1], [0, x, 0], [1 / lam, 0, -1]], dtype=complex)


def gamma(lam: complex, e: complex) -> np.ndarray:
    """(lam Z : e Y : X)"""
    return np.array([[0, 0, lam], [0, e, 0], [1, 0, 0]], dtype=complex)


def aut_matrix(name: str, params: CurveParams) -> np.ndarray:
    name = IOTA_ALIASES.get(name, name)
    lam, z, x, e = params.lam, params.zeta, params.xi, params.eta
    table = {
        "1": lambda: iota(0), "c": lambda: iota(1), "-1": lambda: iota(2), "-c": lambda: iota(3),
        "sigma": lambda: alpha(lam, z), "-sigma": lambda: alpha(lam, -z),
        "k": lambda: alpha(lam, 1j * z), "-k": lambda: alpha(lam, -1j * z),
        "rho": lambda: beta(lam, x), "-rho": lambda: beta(lam, -x),
        "i": lambda: beta(lam, e * z / lam), "-i": lambda: beta(lam, -e * z / lam),
        "tau": lambda: gamma(lam, e), "-tau": lambda: gamma(lam, -e),
        "j": lambda: gamma(lam, lam * x * z / (1 - lam)), "-j": lambda: gamma(lam, -lam * x * z / (1 - lam)),
    }
    if name not in table:
        raise ValueError(f"unknown automorphism {name!r}")
    return table[name]()


def family(name: str) -> str:
    name = IOTA_ALIASES.get(name, name)
    if name in ("1", "c", "-1", "-c"):
        return "iota"
    return {"sigma": "alpha", "k": "alpha", "rho": "beta", "i": "beta",
            "tau": "gamma", "j": "gamma"}[name.lstrip("-")]


def apply_matrix(M: np.ndarray, P: ProjPoint2) -> ProjPoint2:
    return ProjPoint2(tuple(M @ P.vec()))


def apply_aut(name: str, params: CurveParams, P: ProjPoint2) -> ProjPoint2:
    _require_w(params, P)
    return apply_matrix(aut_matrix(name, params), P)


def proportional(M: np.ndarray, N: np.ndarray, tol: float = TOL) -> bool:
    a = M.flatten() / np.max(np.abs(M))
    b = N.flatten() / np.max(np.abs(N))
    k = int(np.argmax(np.abs(a)))
    if abs(b[k]) < 1e-12:
        return False
    return bool(np.max(np.abs(a * b[k] - b * a[k])) <= tol)


def projective_order(M: np.ndarray, limit: int = 12) -> int | None:
    ident = np.eye(3, dtype=complex)
    P = M.copy()
    for k in range(1, limit + 1):
        if proportional(P, ident):
            return k
        P = P @ M
    return None


# ---------------------------------------------------------------------------
# quotient maps to y^2 = x^3 - x

def _kappa_parts(name: str, params: CurveParams, P: ProjPoint2):
    lam = params.lam
    X, Y, Z = P.coords
    if name in ("sigma", "-sigma"):
        z, om = (params.zeta, params.omega) if name == "sigma" else (-params.zeta, params.omega_m)
        main = (-(1 - z) * Y * Y, om * Y * (X - (1 - z) * Z), X * (X - lam * Z))
        alt = (-(1 - z) * Y * Z * (X - Z), om * (X - (1 - z) * Z) * Z * (X - Z), Y ** 3)
    elif name in ("rho", "-rho"):
        x, w = (params.xi, params.omega_rho) if name == "rho" else (-params.xi, params.omega_rho_m)
        main = (-w * w * Y * Y, w * Y * (X - Z / (1 + x)), X * (X - Z))
        alt = (-w * w * Y * Z * (X - lam * Z), w * (X - Z / (1 + x)) * Z * (X - lam * Z), Y ** 3)
    elif name in ("tau", "-tau"):
        e, w = (params.eta, params.omega_tau) if name == "tau" else (-params.eta, params.omega_tau_m)
        u = 1j / (1 + e)
        main = (u * Y * Y, w * Y * (X + e * Z), X * Z)
        alt = (u * Y * (X - Z) * (X - lam * Z), w * (X + e * Z) * (X - Z) * (X - lam * Z), Y ** 3)
    else:
        raise ValueError(f"no quotient map for {name!r}")
    return main, alt


def kappa(name: str, params: CurveParams, P: ProjPoint2) -> ProjPoint2:
    """Quotient of W_lambda by the involution ``name``, as a point (A:B:C) of B^2 C = A^3 - A C^2.

    Of the two equivalent expressions the one with the larger coordinates is
    used, which avoids 0/0 at the points with Y = 0.
    """
    _require_w(params, P)
    main, alt = _kappa_parts(name, params, P)
    chosen = main if max(map(abs, main)) >= max(map(abs, alt)) else alt
    return ProjPoint2(tuple(complex(c) for c in chosen))


def to_affine_E(P: ProjPoint2, tol: float = TOL) -> ell.EllipticPoint:
    A, B, C = P.coords
    if abs(C) <= tol:
        return ell.INFINITY
    return ell.EllipticPoint(complex(A / C), complex(B / C))


def from_affine_E(Q: ell.EllipticPoint) -> ProjPoint2:
    if Q.is_infinity:
        return E_ORIGIN
    Q = Q.to_complex()
    return ProjPoint2.of(Q.x, Q.y, 1)


def rot_c_proj(P: ProjPoint2) -> ProjPoint2:
    """(A:B:C) -> (-A : iB : C)"""
    A, B, C = P.coords
    return ProjPoint2.of(-A, 1j * B, C)


def same_rot_c_orbit(P: ProjPoint2, Q: ProjPoint2, tol: float = TOL) -> bool:
    R = P
    for _ in range(4):
        if R.equals(Q, tol):
            return True
        R = rot_c_proj(R)
    return False


def orbits_equal(A: list[ProjPoint2], B: list[ProjPoint2], tol: float = TOL) -> bool:
    return all(any(a.equals(b, tol) for b in B) for a in A) and all(any(a.equals(b, tol) for a in A) for b in B)


# ---------------------------------------------------------------------------
# fixed points and critical values

def _sign(name: str) -> int:
    return -1 if name.startswith("-") else 1


def fixed_points_formula(name: str, params: CurveParams) -> list[ProjPoint2]:
    """The four fixed points (X : i^nu : Z), nu = 0..3, of an involution."""
    s = _sign(name)
    base = name.lstrip("-")
    if base == "sigma":
        z = s * params.zeta
        Z = 1 / cmath.sqrt(z * (1 + z))
        X = (1 + z) * Z
    elif base == "rho":
        x = s * params.xi
        X = ((1 + x) / (x * x * (1 - x))) ** 0.25
        Z = (1 - x) * X
    elif base == "tau":
        e = s * params.eta
        Z = 1 / cmath.sqrt(1j * e * (e - 1))
        X = e * Z
    else:
        raise ValueError(f"{name!r} is not one of {INVOLUTIONS}")
    return [ProjPoint2.of(X, 1j ** nu, Z) for nu in range(4)]


def critical_value_formula(name: str, params: CurveParams) -> ProjPoint2:
    lam, z, x, e = params.lam, params.zeta, params.xi, params.eta
    sq = cmath.sqrt
    table = {
        "sigma": (-lam, 2 * sq(z * lam), (1 + z) ** 2),
        "-sigma": (lam, 2 * sq(z * lam), (1 - z) ** 2),
        "rho": (x - 1, 2 * e * (1 - x) * sq(x), 1 + x),
        "-rho": (x + 1, 2 * e * (1 + x) * sq(x), 1 - x),
        "tau": (1 - e, 2 * sq(e) * sq((e - 1) / (e + 1)), e + 1),
        "-tau": (1 + e, 2 * sq(e) * sq((e + 1) / (e - 1)), e - 1),
    }
    return ProjPoint2.of(*table[name])


def critical_values(name: str, params: CurveParams) -> list[ProjPoint2]:
    """The closed-form critical value together with its rot_c orbit."""
    Q = critical_value_formula(name, params)
    out = []
    for _ in range(4):
        out.append(Q)
        Q = rot_c_proj(Q)
    return out


def kappa_of_fixed_points(name: str, params: CurveParams) -> list[ProjPoint2]:
    return [kappa(name, params, P) for P in fixed_points_formula(name, params)]


# ---------------------------------------------------------------------------
# isomorphisms between members of the family

def phi_matrix(which: int, params: CurveParams) -> np.ndarray:
    if which == 1:
        return np.array([[0, 0, 1], [0, params.mu, 0], [1, 0, 0]], dtype=complex)
    if which == 2:
        return np.array([[-1, 0, 1], [0, params.zeta8, 0], [0, 0, 1]], dtype=complex)
    raise ValueError("which must be 1 or 2")


def iso_phi(which: int, params: CurveParams, P: ProjPoint2) -> ProjPoint2:
    """phi_1: W_lam -> W_{1/lam}, phi_2: W_lam -> W_{1-lam}."""
    _require_w(params, P)
    return apply_matrix(phi_matrix(which, params), P)


CONJUGATIONS = (
    # (phi, name on the target curve, name on the source curve)
    (1, "sigma", "-rho"),
    (1, "rho", "-sigma"),
    (1, "tau", "tau"),
    (2, "sigma", "-tau"),
    (2, "rho", "rho"),
    (2, "tau", "-sigma"),
)


# ---------------------------------------------------------------------------
# verification report

@dataclass
class Check:
    passed: bool
    detail: str = ""
    max_error: float = 0.0

    def to_json(self) -> dict:
        return {"passed": self.passed, "detail": self.detail, "max_error": self.max_error}


@dataclass
class IdentityReport:
    lam: complex
    seed: int
    checks: dict[str, Check]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def to_json(self) -> dict:
        return {
            "lambda": {"re": self.lam.real, "im": self.lam.imag},
            "seed": self.seed,
            "passed": self.passed,
            "checks": {k: v.to_json() for k, v in self.checks.items()},
        }


def _check(errors: list[float], tol: float, detail: str = "") -> Check:
    worst = max(errors) if errors else 0.0
    return Check(worst <= tol, detail, worst)


def _proj_error(P: ProjPoint2, Q: ProjPoint2) -> float:
    a, b = P.vec(), Q.vec()
    return float(np.max(np.abs(np.outer(a, b) - np.outer(b, a))))


def verify_identities(lam: complex, seed: int = 0, tol: float = TOL, samples: int = 12) -> IdentityReport:
    params = CurveParams.make(lam, tol=tol)
    lam = params.lam
    pts = sample_points(params, samples, seed)
    mats = {n: aut_matrix(n, params) for n in AUT_NAMES}
    checks: dict[str, Check] = {}

    # (a) every map preserves the curve
    errs = [w_residual(params, apply_matrix(M, P)) for M in mats.values() for P in pts]
    checks["a_preserves_curve"] = _check(errs, tol, "16 maps on sample points")

    # (b) orders of the nontrivial elements
    orders = [projective_order(M) for n, M in mats.items() if n != "1"]
    hist = {k: orders.count(k) for k in sorted(set(o for o in orders if o))}
    closed = all(any(proportional(A @ B, C) for C in mats.values()) for A in mats.values() for B in mats.values())
    checks["b_order_table"] = Check(hist == {2: 7, 4: 8} and None not in orders and closed,
                                    f"orders {hist}, closed under composition: {closed}")

    # (c) iota_1 is central
    c = mats["c"]
    checks["c_central"] = Check(all(proportional(c @ M, M @ c) for M in mats.values()), "c commutes with all 16")

    # (d) alpha_z has order 2 for z^2 = 1 - lam and order 4 for z^2 = lam - 1
    a2 = alpha(lam, params.zeta)
    a4 = alpha(lam, 1j * params.zeta)
    sq = a2 @ a2
    expected_sq = np.diag([1 - lam, params.zeta ** 2, 1 - lam])
    ok = (projective_order(a2) == 2 and projective_order(a4) == 4
          and np.max(np.abs(sq - expected_sq)) <= tol * max(1.0, abs(lam)))
    checks["d_alpha_order"] = Check(bool(ok), "alpha_zeta order 2, alpha_{i zeta} order 4")

    # (e) each kappa is invariant under its involution and lands on E_-1
    errs = []
    for name in INVOLUTIONS:
        for P in pts:
            K = kappa(name, params, P)
            errs.append(e_minus_one_residual(K))
            errs.append(_proj_error(K, kappa(name, params, apply_aut(name, params, P))))
    checks["e_kappa"] = _check(errs, tol, "invariance and membership for six quotient maps")

    # (f) (x, y) -> (x, y^2) maps W_lambda to E_lambda
    errs = [e_lambda_residual(params, ProjPoint2.of(P.X * P.Z, P.Y * P.Y, P.Z * P.Z)) for P in pts]
    checks["f_quotient_E_lambda"] = _check(errs, tol)

    # (g) conjugation identities
    targets = {1: params.reciprocal(), 2: params.complement()}
    errs = []
    for which, tgt_name, src_name in CONJUGATIONS:
        phi = phi_matrix(which, params)
        lhs = aut_matrix(tgt_name, targets[which]) @ phi
        rhs = phi @ aut_matrix(src_name, params)
        for P in pts:
            errs.append(_proj_error(apply_matrix(lhs, P), apply_matrix(rhs, P)))
        errs += [w_residual(targets[which], apply_matrix(phi, P)) for P in pts]
    checks["g_conjugations"] = _check(errs, tol, "six identities; phi images on target curves")

    # (h) kappa_sigma(1/lam) o phi_1 equals translation by (0,0) after kappa_{-rho}(lam)
    checks["h_translation_square"] = _translation_square(params, targets[1], pts, tol)
    return IdentityReport(lam, seed, checks)


def _translation_square(params: CurveParams, recip: CurveParams, pts: list[ProjPoint2], tol: float) -> Check:
    """The square commutes up to a fixed power of rot_c set by the branch of omega."""
    two_torsion = ell.EllipticPoint(0j, 0j)
    powers = []
    errs = []
    plain_errs = []
    for P in pts:
        left = kappa("sigma", recip, iso_phi(1, params, P))
        right_E = ell.add(to_affine_E(kappa("-rho", params, P)), two_torsion, tol=tol)
        right = from_affine_E(right_E)
        plain_errs.append(_proj_error(left, from_affine_E(to_affine_E(kappa("-rho", params, P)))))
        best = None
        R = right
        for k in range(4):
            e = _proj_error(left, R)
            if best is None or e < best[1]:
                best = (k, e)
            R = rot_c_proj(R)
        powers.append(best[0])
        errs.append(best[1])
    constant = len(set(powers)) == 1
    untranslated_differs = min(plain_errs) > 1e-3
    worst = max(errs)
    return Check(constant and untranslated_differs and worst <= tol,
                 f"rot_c power {powers[0]}; constant over samples: {constant}; "
                 f"fails without the translation: {untranslated_differs}",
                 worst)


# ---------------------------------------------------------------------------
# torsion criterion

@dataclass
class TheoremReport:
    n: int
    lam: complex
    zeta: complex
    checks: dict[str, bool]
    multiple: str = ""

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lambda": {"re": self.lam.real, "im": self.lam.imag},
            "zeta": {"re": self.zeta.real, "im": self.zeta.imag},
            "n_times_Q": self.multiple,
            "passed": self.passed,
            "checks": dict(self.checks),
        }


def critical_points_on_E(params: CurveParams) -> list[ell.EllipticPoint]:
    """kappa_sigma of the four sigma-fixed points, as points of y^2 = x^3 - x."""
    return [to_affine_E(Q) for Q in kappa_of_fixed_points("sigma", params)]


def theorem_check(T, n: int | None = None, tol: float = TORSION_TOL) -> TheoremReport:
    """Check that the sigma critical values for lambda_T are torsion of order dividing 2n."""
    P = T.point if isinstance(T, ell.TorsionPoint) else T
    if n is None:
        n = T.order if isinstance(T, ell.TorsionPoint) else ell.point_order(P, tol=tol)
    if n is None or n < 3:
        raise TwoTorsionInput("need a torsion point of exact order at least 3")
    lam, zeta = ell.lambda_from_torsion(P, tol=tol)
    lam, zeta = complex(ell._to_complex(lam)), complex(ell._to_complex(zeta))
    params = CurveParams.make(lam, zeta=zeta)
    Qs = critical_points_on_E(params)
    xT = complex(ell._to_complex(P.to_complex().x))
    checks: dict[str, bool] = {}
    checks["x_matches"] = abs(Qs[0].x - xT) <= tol * max(1.0, abs(xT))
    formula = [to_affine_E(Q) for Q in critical_values("sigma", params)]
    checks["formula_matches"] = all(any(ell.points_equal(a, b, tol) for b in formula) for a in Qs)
    multiples = [ell.mul(n, Q, tol) for Q in Qs]
    first = multiples[0]
    fixed = first.is_infinity or (abs(first.x) <= tol and abs(first.y) <= tol)
    checks["n_multiples_agree"] = all(ell.points_equal(m, first, tol) for m in multiples)
    checks["n_multiple_rot_c_fixed"] = fixed
    checks["2n_multiple_zero"] = all(ell.mul(2 * n, Q, tol).is_infinity for Q in Qs)
    label = "Infinity" if first.is_infinity else "(0,0)" if fixed else "other"
    return TheoremReport(n, lam, zeta, checks, label)


def critical_value_order(lam: complex, nmax: int = ell.NMAX, tol: float = TORSION_TOL) -> int | None:
    """Order of the sigma critical value on y^2 = x^3 - x, or None if above ``nmax``."""
    Q = critical_points_on_E(CurveParams.make(lam))[0]
    return ell.point_order(Q, nmax, tol)
