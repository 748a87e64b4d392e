"""Affine automorphisms of origamis with derivative in {I, -I, S, S^-1}.

An affine automorphism permutes the squares; its derivative fixes how the
neighbours of a square are carried along.  Fixed points and quotient Euler
characteristics are computed on a subdivision of every square into four
quadrants, whose cells are addressed by local coordinates scaled by 4:
the lower-left corner is ``(0, 0)``, the center ``(2, 2)``, the midpoint of
the bottom edge ``(2, 0)`` and so on.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .core import (
    Q_ELEMENTS, W_LABELS, Origami, Perm, Quat, compose, cycle_index, identity,
    quaternion_origami, torus_grid, w_square,
)
from .errors import NotClosed, NotFreeOnSquares, NotSubgroup, RelationViolated

DERIVATIVES = {
    "I": ((1, 0), (0, 1)),
    "-I": ((-1, 0), (0, -1)),
    "S": ((0, -1), (1, 0)),
    "S^-1": ((0, 1), (-1, 0)),
}
_BY_MATRIX = {m: name for name, m in DERIVATIVES.items()}


def derivative_product(a: str, b: str) -> str:
    (p, q), (r, s) = DERIVATIVES[a]
    (w, x), (y, z) = DERIVATIVES[b]
    return _BY_MATRIX[((p * w + q * y, p * x + q * z), (r * w + s * y, r * x + s * z))]


@dataclass(frozen=True)
class AffineAuto:
    pi: Perm
    derivative: str = "I"
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.derivative not in DERIVATIVES:
            raise ValueError(f"unsupported derivative {self.derivative!r}")

    def __matmul__(self, other: "AffineAuto") -> "AffineAuto":
        """``self @ other`` applies ``other`` first."""
        return AffineAuto(compose(self.pi, other.pi), derivative_product(self.derivative, other.derivative))

    def is_identity(self) -> bool:
        return self.derivative == "I" and self.pi == identity(len(self.pi))

    def order(self) -> int:
        k, g = 1, self
        while not g.is_identity():
            g = self @ g
            k += 1
        return k


def _targets(o: Origami, derivative: str) -> tuple[Perm, Perm]:
    """Permutations A, B with pi(h(s)) = A(pi(s)) and pi(v(s)) = B(pi(s))."""
    if derivative == "I":
        return o.h, o.v
    if derivative == "-I":
        return o.h_inv(), o.v_inv()
    if derivative == "S":
        return o.v, o.h_inv()
    return o.v_inv(), o.h


def satisfies_relations(o: Origami, a: AffineAuto) -> bool:
    A, B = _targets(o, a.derivative)
    return all(a.pi[o.h[s]] == A[a.pi[s]] and a.pi[o.v[s]] == B[a.pi[s]] for s in range(o.n))


def _solve(o: Origami, A: Perm, B: Perm, image_of_zero: int) -> Perm | None:
    pi = [-1] * o.n
    pi[0] = image_of_zero
    todo = [0]
    while todo:
        s = todo.pop()
        for nb, tgt in ((o.h[s], A[pi[s]]), (o.v[s], B[pi[s]])):
            if pi[nb] < 0:
                pi[nb] = tgt
                todo.append(nb)
            elif pi[nb] != tgt:
                return None
    if len(set(pi)) != o.n:
        return None
    return tuple(pi)


def affine_autos(o: Origami, derivative: str = "I", candidates=None) -> list[AffineAuto]:
    """All affine automorphisms with the given derivative.

    An automorphism is determined by the image of square 0, so at most ``n``
    candidates are tried; ``candidates`` restricts them further.
    """
    A, B = _targets(o, derivative)
    out = []
    for t in (range(o.n) if candidates is None else candidates):
        pi = _solve(o, A, B, t)
        if pi is not None:
            out.append(AffineAuto(pi, derivative))
    return out


def brute_force_autos(o: Origami, derivative: str = "I") -> list[AffineAuto]:
    """Check every candidate image of square 0 against all relations directly."""
    A, B = _targets(o, derivative)
    found = []
    for t in range(o.n):
        pi = _solve(o, A, B, t)
        if pi is None:
            continue
        a = AffineAuto(pi, derivative)
        if satisfies_relations(o, a):
            found.append(a)
    return found


def translations(o: Origami) -> list[AffineAuto]:
    return affine_autos(o, "I")


def all_autos(o: Origami, derivatives=("I", "-I")) -> list[AffineAuto]:
    return [a for d in derivatives for a in affine_autos(o, d)]


# ---------------------------------------------------------------------------
# cells of the quadrant subdivision

class _Cells:
    def __init__(self, o: Origami):
        self.o = o
        self.vertex_of = cycle_index(o.commutator())
        self.vertex_rep = {}
        for s, k in enumerate(self.vertex_of):
            self.vertex_rep.setdefault(k, s)

    def canon(self, s: int, x: int, y: int):
        if x == 4:
            s, x = self.o.h[s], 0
        if y == 4:
            s, y = self.o.v[s], 0
        if x == 0 and y == 0:
            return ("V", self.vertex_of[s])
        return ("C", s, x, y)

    def all_cells(self):
        yield from (("V", k) for k in self.vertex_rep)
        for s in range(self.o.n):
            for x in range(4):
                for y in range(4):
                    if x or y:
                        yield ("C", s, x, y)

    @staticmethod
    def dim(cell) -> int:
        if cell[0] == "V":
            return 0
        return (cell[2] % 2) + (cell[3] % 2)

    def image(self, a: AffineAuto, cell):
        if cell[0] == "V":
            s, x, y = self.vertex_rep[cell[1]], 0, 0
        else:
            _, s, x, y = cell
        (p, q), (r, t) = DERIVATIVES[a.derivative]
        dx, dy = x - 2, y - 2
        return self.canon(a.pi[s], p * dx + q * dy + 2, r * dx + t * dy + 2)


@dataclass
class FixedPointReport:
    fixed_square_centers: list[int]
    fixed_vertical_edge_midpoints: list[tuple[int, int]]  # (left square, right square)
    fixed_horizontal_edge_midpoints: list[tuple[int, int]]  # (lower square, upper square)
    fixed_vertices: list[int]  # indices into core.vertex_cycles

    @property
    def total(self) -> int:
        return (len(self.fixed_square_centers) + len(self.fixed_vertical_edge_midpoints)
                + len(self.fixed_horizontal_edge_midpoints) + len(self.fixed_vertices))

    def kinds(self) -> set[str]:
        names = ("centers", "vertical_edges", "horizontal_edges", "vertices")
        lists = (self.fixed_square_centers, self.fixed_vertical_edge_midpoints,
                 self.fixed_horizontal_edge_midpoints, self.fixed_vertices)
        return {n for n, l in zip(names, lists) if l}


def fixed_points(o: Origami, a: AffineAuto) -> FixedPointReport:
    if not satisfies_relations(o, a):
        raise RelationViolated(f"permutation does not satisfy the {a.derivative} relations")
    cells = _Cells(o)
    hinv, vinv = o.h_inv(), o.v_inv()
    centers, vedges, hedges = [], [], []
    for s in range(o.n):
        for (x, y), bucket, entry in (
            ((2, 2), centers, s),
            ((0, 2), vedges, (hinv[s], s)),
            ((2, 0), hedges, (vinv[s], s)),
        ):
            c = ("C", s, x, y)
            if cells.image(a, c) == c:
                bucket.append(entry)
    verts = [k for k in sorted(cells.vertex_rep) if cells.image(a, ("V", k)) == ("V", k)]
    return FixedPointReport(centers, vedges, hedges, verts)


def generated_group(gens: list[AffineAuto]) -> list[AffineAuto]:
    n = len(gens[0].pi)
    ident = AffineAuto(identity(n), "I")
    group = {ident}
    frontier = [ident]
    while frontier:
        g = frontier.pop()
        for x in gens:
            y = x @ g
            if y not in group:
                group.add(y)
                frontier.append(y)
    return sorted(group, key=lambda g: (g.derivative, g.pi))


def quotient_euler_characteristic(o: Origami, group: list[AffineAuto]) -> int:
    """Euler characteristic of the surface modulo a finite group of automorphisms.

    Only 0-cells may have nontrivial stabilizers; this holds for every group
    of affine automorphisms because a derivative other than ``I`` moves every
    cell of positive dimension of the quadrant subdivision.
    """
    cells = _Cells(o)
    seen = set()
    chi = 0
    for c in cells.all_cells():
        if c in seen:
            continue
        orbit = {cells.image(g, c) for g in group}
        if _Cells.dim(c) > 0 and len(orbit) != len(group):
            raise AssertionError(f"cell {c} has a nontrivial stabilizer")
        seen |= orbit
        chi += (-1) ** _Cells.dim(c)
    return chi


def quotient_genus(o: Origami, group: list[AffineAuto]) -> int:
    return (2 - quotient_euler_characteristic(o, group)) // 2


def quotient_by_translations(o: Origami, sub: list[AffineAuto]) -> Origami:
    if any(a.derivative != "I" or not satisfies_relations(o, a) for a in sub):
        raise NotSubgroup("all elements must be translation automorphisms of the origami")
    elems = set(sub)
    ident = AffineAuto(identity(o.n), "I")
    if ident not in elems or any((a @ b) not in elems for a in elems for b in elems):
        raise NotSubgroup("the given automorphisms are not closed under composition")
    for a in elems:
        if a != ident and any(a.pi[s] == s for s in range(o.n)):
            raise NotFreeOnSquares("a nontrivial element fixes a square")
    orbit_of = [-1] * o.n
    reps = []
    for s in range(o.n):
        if orbit_of[s] < 0:
            for a in elems:
                orbit_of[a.pi[s]] = len(reps)
            reps.append(s)
    h = tuple(orbit_of[o.h[s]] for s in reps)
    v = tuple(orbit_of[o.v[s]] for s in reps)
    name = f"{o.name}/{len(elems)}" if o.name else None
    return Origami(h, v, name)


def order_histogram(autos: list[AffineAuto]) -> dict[int, int]:
    elems = set(autos)
    for a in elems:
        for b in elems:
            if (a @ b) not in elems:
                raise NotClosed("the automorphisms are not closed under composition")
    return dict(sorted(Counter(a.order() for a in elems).items()))


def center(group: list[AffineAuto]) -> list[AffineAuto]:
    return [z for z in group if all(z @ g == g @ z for g in group)]


# ---------------------------------------------------------------------------
# the automorphism group of W

def left_translation(q: Quat) -> AffineAuto:
    """Left multiplication by ``q`` on the square labels of W."""
    index = {g: s for s, g in enumerate(W_LABELS)}
    return AffineAuto(tuple(index[q * g] for g in W_LABELS), "I", str(q))


def w_automorphisms() -> dict[str, AffineAuto]:
    """The sixteen elements of Aut(W) by name.

    ``sigma`` is the rotation by pi about the center of square 1; ``tau``,
    ``rho`` and ``c`` are ``i*sigma``, ``j*sigma`` and ``k*sigma``.
    """
    w = quaternion_origami()
    one = w_square("1")
    (sigma,) = [a for a in affine_autos(w, "-I") if a.pi[one] == one]
    out = {str(q): left_translation(q) for q in Q_ELEMENTS}
    for name, q in (("sigma", "1"), ("tau", "i"), ("rho", "j"), ("c", "k")):
        g = left_translation(Quat.parse(q))
        out[name] = _named(g @ sigma, name)
        out["-" + name] = _named(left_translation(Quat.parse("-" + q)) @ sigma, "-" + name)
    return out


def _named(a: AffineAuto, name: str) -> AffineAuto:
    return AffineAuto(a.pi, a.derivative, name)


def w_mod_sign_origami() -> Origami:
    """The 2 x 2 square torus, which W/{+-1} should be isomorphic to."""
    return torus_grid(2)
