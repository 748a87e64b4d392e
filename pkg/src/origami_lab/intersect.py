"""Double covers of the n x n torus branched over a rotation orbit of grid points.

A cover is encoded by a Z/2 label on every unit edge of the grid: crossing
an edge with label 1 switches the leaf.  The branch points are the lattice
vertices where the four incident labels have odd sum.  For a grid point P
that is not 2-torsion, the four double covers branched over the orbit of P
under the rotation (a, b) -> (-b, a) differ by their holonomy along the two
fundamental loops; :func:`construct_D` keeps the one on which the rotation
lifts with the right fixed-point counts.
"""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import curves
from . import elliptic as ell
from .autos import AffineAuto, affine_autos, fixed_points, translations
from .core import Origami, genus, singularity_profile
from .errors import Disconnected, NotConnected, TwoTorsionInput, UniquenessViolated, WrongCase


@dataclass(frozen=True)
class GridPoint:
    a: int
    b: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("grid size must be positive")
        object.__setattr__(self, "a", self.a % self.n)
        object.__setattr__(self, "b", self.b % self.n)

    @property
    def is_two_torsion(self) -> bool:
        return (2 * self.a) % self.n == 0 and (2 * self.b) % self.n == 0

    @property
    def order(self) -> int:
        return self.n // math.gcd(math.gcd(self.a, self.b), self.n)

    def __iter__(self):
        return iter((self.a, self.b))


def rotate90(p: GridPoint) -> GridPoint:
    return GridPoint(-p.b, p.a, p.n)


@dataclass(frozen=True)
class MarkedQuadruple:
    P: GridPoint
    Q: GridPoint
    R: GridPoint
    S: GridPoint

    def points(self) -> tuple[GridPoint, ...]:
        return (self.P, self.Q, self.R, self.S)


def _require_not_two_torsion(p: GridPoint):
    if p.is_two_torsion:
        raise TwoTorsionInput(f"({p.a}, {p.b}) is a 2-torsion point of the {p.n}x{p.n} grid")


def marked_quadruple(p: GridPoint) -> MarkedQuadruple:
    _require_not_two_torsion(p)
    q = rotate90(p)
    r = rotate90(q)
    return MarkedQuadruple(p, q, r, rotate90(r))


class CaseKind(enum.Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3 = "Case3"
    CASE4 = "Case4"
    CASE5 = "Case5"


def _in_first_triangle(p: GridPoint) -> bool:
    return 0 < 2 * p.b < 2 * p.a < p.n


def classify_case(p: GridPoint) -> CaseKind:
    _require_not_two_torsion(p)
    a, b, n = p.a, p.b, p.n
    if (a - b) % n == 0 or (a + b) % n == 0:
        return CaseKind.CASE3
    if a == 0 or b == 0:
        return CaseKind.CASE4
    if (2 * a) % n == 0 or (2 * b) % n == 0:
        return CaseKind.CASE5
    q = p
    for _ in range(4):
        if _in_first_triangle(q):
            return CaseKind.CASE1
        q = rotate90(q)
    return CaseKind.CASE2


# ---------------------------------------------------------------------------
# labelings

@dataclass
class EdgeLabeling:
    """``vlabel[x, y]``: vertical edge on line x over [y, y+1];
    ``hlabel[x, y]``: horizontal edge on line y over [x, x+1]."""

    n: int
    vlabel: np.ndarray
    hlabel: np.ndarray

    @classmethod
    def zeros(cls, n: int) -> "EdgeLabeling":
        return cls(n, np.zeros((n, n), dtype=np.int8), np.zeros((n, n), dtype=np.int8))

    def copy(self) -> "EdgeLabeling":
        return EdgeLabeling(self.n, self.vlabel.copy(), self.hlabel.copy())

    def toggle_h(self, y: int, xs) -> None:
        for x in xs:
            self.hlabel[x % self.n, y % self.n] ^= 1

    def toggle_v(self, x: int, ys) -> None:
        for y in ys:
            self.vlabel[x % self.n, y % self.n] ^= 1


def square_index(n: int, x: int, y: int, leaf: int) -> int:
    return leaf * n * n + (y % n) * n + (x % n)


def cover_from_labeling(l: EdgeLabeling, name: str | None = None) -> Origami:
    """The double cover whose squares are ``(x, y, leaf)``; see :func:`square_index`."""
    n = l.n
    N = 2 * n * n
    h = [0] * N
    v = [0] * N
    for leaf in (0, 1):
        for y in range(n):
            for x in range(n):
                s = square_index(n, x, y, leaf)
                h[s] = square_index(n, x + 1, y, leaf ^ int(l.vlabel[(x + 1) % n, y]))
                v[s] = square_index(n, x, y + 1, leaf ^ int(l.hlabel[x, (y + 1) % n]))
    try:
        return Origami(tuple(h), tuple(v), name)
    except NotConnected as exc:
        raise Disconnected("the labeling defines two disjoint copies of the torus") from exc


def vertex_parity(l: EdgeLabeling, x: int, y: int) -> int:
    n = l.n
    return int(l.vlabel[x % n, y % n] + l.vlabel[x % n, (y - 1) % n]
               + l.hlabel[x % n, y % n] + l.hlabel[(x - 1) % n, y % n]) % 2


def branch_set(l: EdgeLabeling) -> set[GridPoint]:
    return {GridPoint(x, y, l.n) for x in range(l.n) for y in range(l.n) if vertex_parity(l, x, y)}


def holonomy_variants(l: EdgeLabeling) -> list[EdgeLabeling]:
    """The labeling with a full row and/or a full column of labels switched."""
    out = []
    for row in (0, 1):
        for col in (0, 1):
            m = l.copy()
            if row:
                m.toggle_h(0, range(l.n))
            if col:
                m.toggle_v(0, range(l.n))
            out.append(m)
    return out


def case1_labeling(p: GridPoint) -> EdgeLabeling:
    """Explicit labeling for a point in the open triangle 0 < b < a < n/2 or its rotations.

    Points in the other three triangles of the orbit are first rotated into
    that triangle; the marked quadruple does not change.
    """
    if classify_case(p) != CaseKind.CASE1:
        raise WrongCase(f"({p.a}, {p.b}) mod {p.n} is not a Case1 point")
    while not _in_first_triangle(p):
        p = rotate90(p)
    a, b, n = p.a, p.b, p.n
    l = EdgeLabeling.zeros(n)
    l.toggle_h(b, range(a, n - b))          # P to B
    l.toggle_h(b, range(n - b, n + b))      # B around to A
    l.toggle_v(n - b, range(a, n - b))      # Q to C
    l.toggle_h(n - b, range(n - a, n - b))  # R to C
    l.toggle_v(b, range(n - a, n + b))      # S around to A
    return l


def _path_labeling(n: int, pairs) -> EdgeLabeling:
    """Horizontal-then-vertical lattice paths, going right and up with wrap-around."""
    l = EdgeLabeling.zeros(n)
    for (x0, y0), (x1, y1) in pairs:
        l.toggle_h(y0, range(x0, x0 + (x1 - x0) % n))
        l.toggle_v(x1, range(y0, y0 + (y1 - y0) % n))
    return l


def base_labeling(p: GridPoint) -> EdgeLabeling:
    q = marked_quadruple(p)
    return _path_labeling(p.n, [(tuple(q.P), tuple(q.Q)), (tuple(q.R), tuple(q.S))])


# ---------------------------------------------------------------------------
# the origami D

@dataclass
class CandidateResult:
    holonomy: tuple[int, int]
    connected: bool
    passed: bool
    origami: Origami | None = None
    rotation: AffineAuto | None = None


def rotation_lifts(o: Origami, n: int) -> list[AffineAuto]:
    """Affine automorphisms with derivative S lying over the rotation about vertex (0, 0).

    Square (x, y) of the base goes to (-y-1, x), so square 0 of the cover must
    map to one of the two squares over (n-1, 0).
    """
    cands = [square_index(n, n - 1, 0, leaf) for leaf in (0, 1)]
    return affine_autos(o, "S", candidates=cands)


def _rotation_condition(o: Origami, n: int) -> AffineAuto | None:
    for c in rotation_lifts(o, n):
        if fixed_points(o, c).total == 4 and fixed_points(o, c @ c).total == 4:
            return c
    return None


def construct_D_candidates(p: GridPoint) -> list[CandidateResult]:
    base = base_labeling(p)
    out = []
    for k, l in enumerate(holonomy_variants(base)):
        hol = (k // 2, k % 2)
        try:
            o = cover_from_labeling(l, name=f"D[{p.n}]({p.a},{p.b})")
        except Disconnected:
            out.append(CandidateResult(hol, False, False))
            continue
        c = _rotation_condition(o, p.n)
        out.append(CandidateResult(hol, True, c is not None, o, c))
    return out


def construct_D(p: GridPoint) -> Origami:
    passers = [c for c in construct_D_candidates(p) if c.passed]
    if len(passers) != 1:
        raise UniquenessViolated(f"{len(passers)} double covers satisfy the rotation conditions for "
                                 f"({p.a}, {p.b}) mod {p.n}")
    return passers[0].origami


def leaf_swap(n: int) -> AffineAuto:
    half = n * n
    return AffineAuto(tuple((s + half) % (2 * half) for s in range(2 * half)), "I", "leaf swap")


@dataclass
class DSummary:
    n: int
    a: int
    b: int
    squares: int
    genus: int
    cone_orders: tuple[int, ...]
    regular_points: int
    leaf_swap_is_translation: bool
    passers: int

    def to_json(self) -> dict:
        return {
            "n": self.n, "a": self.a, "b": self.b, "squares": self.squares, "genus": self.genus,
            "cone_orders": list(self.cone_orders), "regular_points": self.regular_points,
            "leaf_swap_is_translation": self.leaf_swap_is_translation, "passers": self.passers,
        }


def summarize_D(p: GridPoint) -> DSummary:
    cands = construct_D_candidates(p)
    passers = [c for c in cands if c.passed]
    if len(passers) != 1:
        return DSummary(p.n, p.a, p.b, 0, -1, (), 0, False, len(passers))
    o = passers[0].origami
    prof = singularity_profile(o)
    swap = leaf_swap(p.n)
    return DSummary(p.n, p.a, p.b, o.n, genus(o), prof.singular_orders, prof.regular_count,
                    swap in translations(o), 1)


def valid_points(n: int) -> list[GridPoint]:
    return [GridPoint(a, b, n) for a in range(n) for b in range(n) if not GridPoint(a, b, n).is_two_torsion]


def worker_count(requested: int | None = None) -> int:
    """An explicit request wins, then ORIGAMI_LAB_THREADS, then a single worker."""
    if requested:
        return max(1, requested)
    env = os.environ.get("ORIGAMI_LAB_THREADS")
    return max(1, int(env)) if env else 1


def _summ(args) -> DSummary:
    return summarize_D(GridPoint(*args))


def sweep_D(ns, workers: int | None = None) -> list[DSummary]:
    """summarize_D over every valid grid point for each n, in a deterministic order."""
    jobs = [(p.a, p.b, p.n) for n in ns for p in valid_points(n)]
    workers = worker_count(workers)
    if workers <= 1:
        return [_summ(j) for j in jobs]
    with ProcessPoolExecutor(workers) as ex:
        return list(ex.map(_summ, jobs, chunksize=8))


# ---------------------------------------------------------------------------
# end to end

@dataclass
class Certificate:
    n: int
    a: int
    b: int
    order: int
    lam: complex
    zeta: complex
    torsion_point: ell.EllipticPoint
    checks: dict[str, bool]
    origami: Origami

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        T = self.torsion_point
        return {
            "n": self.n,
            "a": self.a,
            "b": self.b,
            "order": self.order,
            "lambda": {"re": self.lam.real, "im": self.lam.imag},
            "zeta": {"re": self.zeta.real, "im": self.zeta.imag},
            "torsion_point": {"x": {"re": T.x.real, "im": T.x.imag}, "y": {"re": T.y.real, "im": T.y.imag}},
            "identification": "z = (a + i b)/n -> (c^2 P(z), c^3 P'(z)/2), c = (4/g2)^(1/4)",
            "passed": self.passed,
            "checks": dict(self.checks),
        }


def pipeline(p: GridPoint, tol: float = curves.TORSION_TOL) -> Certificate:
    _require_not_two_torsion(p)
    order = p.order
    D = construct_D(p)
    T = ell.weierstrass_bridge(p.a, p.b, p.n)
    found = ell.point_order(T, max(order, ell.NMAX), tol)
    report = curves.theorem_check(T, order, tol)
    prof = singularity_profile(D)
    checks = {
        "D_squares": D.n == 2 * p.n * p.n,
        "D_genus_3": genus(D) == 3,
        "D_four_simple_zeros": prof.singular_orders == (1, 1, 1, 1),
        "bridge_order": found == order,
    }
    checks.update({f"theorem_{k}": v for k, v in report.checks.items()})
    return Certificate(p.n, p.a, p.b, order, report.lam, report.zeta, T, checks, D)
