"""Origamis as pairs of permutations of unit squares.

Squares are numbered ``0..n-1``.  ``h[s]`` is the square to the right of
``s`` and ``v[s]`` the square on top of ``s``.  Permutations are stored as
tuples of images; ``compose(p, q)`` applies ``q`` first.
"""

from __future__ import annotations

import json
import random
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import NotBijection, NotConnected

Perm = tuple[int, ...]


# ---------------------------------------------------------------------------
# permutation helpers

def as_perm(images: Iterable[int]) -> Perm:
    p = tuple(int(x) for x in images)
    if sorted(p) != list(range(len(p))):
        raise NotBijection(f"not a permutation of 0..{len(p) - 1}: {p}")
    return p


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """Return ``p o q`` (apply ``q`` first)."""
    return tuple(p[x] for x in q)


def inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def cycles(p: Sequence[int]) -> list[list[int]]:
    """Cycles of ``p``, each starting at its smallest element, sorted by start."""
    seen = [False] * len(p)
    out = []
    for s in range(len(p)):
        if seen[s]:
            continue
        cyc = []
        t = s
        while not seen[t]:
            seen[t] = True
            cyc.append(t)
            t = p[t]
        out.append(cyc)
    return out


def cycle_index(p: Sequence[int]) -> list[int]:
    """Map each point to the index of its cycle in ``cycles(p)``."""
    idx = [0] * len(p)
    for k, cyc in enumerate(cycles(p)):
        for s in cyc:
            idx[s] = k
    return idx


def perm_order(p: Sequence[int]) -> int:
    from math import lcm

    out = 1
    for cyc in cycles(p):
        out = lcm(out, len(cyc))
    return out


def random_perm(n: int, rng: random.Random) -> Perm:
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


# ---------------------------------------------------------------------------
# origamis

@dataclass(frozen=True)
class Origami:
    h: Perm
    v: Perm
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.h) != len(self.v):
            raise NotBijection("h and v act on different numbers of squares")
        if len(self.h) == 0:
            raise NotBijection("an origami needs at least one square")
        as_perm(self.h)
        as_perm(self.v)
        if len(_orbit(self.h, self.v, 0)) != len(self.h):
            raise NotConnected("<h, v> does not act transitively on the squares")

    @property
    def n(self) -> int:
        return len(self.h)

    @property
    def n_squares(self) -> int:
        return len(self.h)

    def h_inv(self) -> Perm:
        return inverse(self.h)

    def v_inv(self) -> Perm:
        return inverse(self.v)

    def commutator(self) -> Perm:
        """``v h v^-1 h^-1``: the next square around the lower-left corner of ``s``."""
        return compose(self.v, compose(self.h, compose(self.v_inv(), self.h_inv())))

    def relabel(self, p: Sequence[int]) -> "Origami":
        """Rename square ``s`` to ``p[s]``."""
        pinv = inverse(p)
        h = tuple(p[self.h[pinv[s]]] for s in range(self.n))
        v = tuple(p[self.v[pinv[s]]] for s in range(self.n))
        return Origami(h, v, self.name)

    def __str__(self):
        return f"Origami({self.name or ''} n={self.n} {to_cycle_text(self)})"


def _orbit(h: Sequence[int], v: Sequence[int], start: int) -> set[int]:
    seen = {start}
    todo = [start]
    while todo:
        s = todo.pop()
        for t in (h[s], v[s]):
            if t not in seen:
                seen.add(t)
                todo.append(t)
    return seen


def make_origami(h: Iterable[int], v: Iterable[int], name: str | None = None) -> Origami:
    h, v = tuple(h), tuple(v)
    if len(h) != len(v):
        raise NotBijection(f"h has {len(h)} entries but v has {len(v)}")
    return Origami(as_perm(h), as_perm(v), name)


def torus_grid(n: int) -> Origami:
    """The n x n subdivided torus; square ``(x, y)`` has index ``y*n + x``."""
    if n < 1:
        raise ValueError("torus_grid needs n >= 1")
    h = tuple(y * n + (x + 1) % n for y in range(n) for x in range(n))
    v = tuple(((y + 1) % n) * n + x for y in range(n) for x in range(n))
    return Origami(h, v, f"E[{n}]")


# ---------------------------------------------------------------------------
# quaternion group and W

_UNIT_TABLE = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


@dataclass(frozen=True, order=True)
class Quat:
    """Element ``sign * unit`` of the quaternion group Q."""

    sign: int
    unit: str

    def __mul__(self, other: "Quat") -> "Quat":
        s, u = _UNIT_TABLE[(self.unit, other.unit)]
        return Quat(self.sign * other.sign * s, u)

    def __neg__(self) -> "Quat":
        return Quat(-self.sign, self.unit)

    def inverse(self) -> "Quat":
        return self if self.unit == "1" else -self

    def order(self) -> int:
        if self.unit != "1":
            return 4
        return 1 if self.sign == 1 else 2

    def __str__(self):
        return ("" if self.sign == 1 else "-") + self.unit

    @classmethod
    def parse(cls, text: str) -> "Quat":
        text = text.strip()
        sign = -1 if text.startswith("-") else 1
        unit = text.lstrip("+-") or "1"
        if unit not in "1ijk" or len(unit) != 1:
            raise ValueError(f"not a quaternion unit: {text!r}")
        return cls(sign, unit)


ONE, I, J, K = Quat(1, "1"), Quat(1, "i"), Quat(1, "j"), Quat(1, "k")

# square order used by quaternion_origami(): 1, i, -1, -i, j, -k, -j, k
W_LABELS: tuple[Quat, ...] = (ONE, I, -ONE, -I, J, -K, -J, K)
Q_ELEMENTS: tuple[Quat, ...] = W_LABELS


def cayley_origami(labels: Sequence[Quat], right: Quat, up: Quat, name: str | None = None) -> Origami:
    """Squares labelled by ``labels``; right neighbour of g is g*right, top neighbour g*up."""
    index = {g: s for s, g in enumerate(labels)}
    h = tuple(index[g * right] for g in labels)
    v = tuple(index[g * up] for g in labels)
    return Origami(h, v, name)


def quaternion_origami() -> Origami:
    return cayley_origami(W_LABELS, I, J, name="W")


def w_square(label: str) -> int:
    """Index of the square of W carrying the quaternion ``label`` (e.g. ``"-k"``)."""
    return W_LABELS.index(Quat.parse(label))


# ---------------------------------------------------------------------------
# invariants

@dataclass(frozen=True)
class SingularityProfile:
    cone_orders: tuple[int, ...]  # sorted, largest first; 0 = regular marked point
    vertex_count: int

    @property
    def singular_orders(self) -> tuple[int, ...]:
        return tuple(k for k in self.cone_orders if k > 0)

    @property
    def regular_count(self) -> int:
        return sum(1 for k in self.cone_orders if k == 0)


@dataclass(frozen=True)
class CylinderDecomposition:
    cylinders: tuple[tuple[int, int], ...]  # (circumference, height), sorted

    @property
    def area(self) -> int:
        return sum(c * h for c, h in self.cylinders)


def vertex_cycles(o: Origami) -> list[list[int]]:
    """Vertices as cycles of squares sharing their lower-left corner."""
    return cycles(o.commutator())


def genus(o: Origami) -> int:
    # 2 - 2g = V - E + F = V - 2N + N
    chi = len(vertex_cycles(o)) - o.n
    return (2 - chi) // 2


def euler_characteristic(o: Origami) -> int:
    return len(vertex_cycles(o)) - o.n


def singularity_profile(o: Origami) -> SingularityProfile:
    orders = sorted((len(c) - 1 for c in vertex_cycles(o)), reverse=True)
    return SingularityProfile(tuple(orders), len(orders))


def stratum(o: Origami) -> tuple[int, ...]:
    return singularity_profile(o).singular_orders


def horizontal_cylinders(o: Origami) -> CylinderDecomposition:
    comm = o.commutator()
    rows = cycles(o.h)
    row_of = cycle_index(o.h)
    parent = list(range(len(rows)))

    def find(r):
        while parent[r] != r:
            parent[r] = parent[parent[r]]
            r = parent[r]
        return r

    for r, row in enumerate(rows):
        # upper-left corner of s is the lower-left corner of v(s)
        if all(comm[o.v[s]] == o.v[s] for s in row):
            a, b = find(r), find(row_of[o.v[row[0]]])
            if a != b:
                parent[a] = b

    groups: dict[int, list[int]] = {}
    for r in range(len(rows)):
        groups.setdefault(find(r), []).append(r)
    cyl = sorted((len(rows[g[0]]), len(g)) for g in groups.values())
    return CylinderDecomposition(tuple(cyl))


def rotate_origami(o: Origami) -> Origami:
    """Quarter turn: the new horizontal direction is the old vertical one."""
    return Origami(o.v, o.h_inv(), o.name)


def vertical_cylinders(o: Origami) -> CylinderDecomposition:
    return horizontal_cylinders(rotate_origami(o))


# ---------------------------------------------------------------------------
# isomorphism

def _bfs_relabel(o: Origami, start: int) -> tuple[Perm, Perm]:
    label = [-1] * o.n
    label[start] = 0
    order = [start]
    nxt = 1
    q = deque([start])
    while q:
        s = q.popleft()
        for t in (o.h[s], o.v[s]):
            if label[t] < 0:
                label[t] = nxt
                nxt += 1
                order.append(t)
                q.append(t)
    h = tuple(label[o.h[s]] for s in order)
    v = tuple(label[o.v[s]] for s in order)
    return h, v


def canonical_key(o: Origami) -> tuple[Perm, Perm]:
    return min(_bfs_relabel(o, s) for s in range(o.n))


def canonical_form(o: Origami) -> Origami:
    h, v = canonical_key(o)
    return Origami(h, v, o.name)


def is_isomorphic(a: Origami, b: Origami) -> bool:
    if a.n != b.n:
        return False
    return canonical_key(a) == canonical_key(b)


# ---------------------------------------------------------------------------
# file formats

def to_dict(o: Origami) -> dict:
    d = {"n": o.n, "h": list(o.h), "v": list(o.v)}
    if o.name is not None:
        d["name"] = o.name
    return d


def from_dict(d: dict) -> Origami:
    o = make_origami(d["h"], d["v"], d.get("name"))
    if "n" in d and int(d["n"]) != o.n:
        raise ValueError(f"declared n={d['n']} but permutations have length {o.n}")
    return o


def dumps(o: Origami) -> str:
    return json.dumps(to_dict(o), sort_keys=True)


def loads(text: str) -> Origami:
    text = text.strip()
    if text.startswith("{"):
        return from_dict(json.loads(text))
    return parse_cycle_text(text)


def _format_cycles(p: Perm) -> str:
    return "".join("(" + ",".join(str(s + 1) for s in c) + ")" for c in cycles(p))


def to_cycle_text(o: Origami) -> str:
    """1-based cycle notation; fixed points are written so that n is recoverable."""
    return f"h={_format_cycles(o.h)}; v={_format_cycles(o.v)}"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_cycles(text: str) -> list[list[int]]:
    text = text.strip()
    if re.sub(r"\s", "", _CYCLE_RE.sub("", text)) not in ("", "()"):
        raise ValueError(f"cannot parse cycle notation {text!r}")
    out = []
    for m in _CYCLE_RE.finditer(text):
        body = m.group(1).strip()
        if body:
            out.append([int(x) - 1 for x in re.split(r"[,\s]+", body)])
    return out


def parse_cycle_text(text: str, n: int | None = None) -> Origami:
    parts = {}
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        key, _, body = chunk.partition("=")
        parts[key.strip()] = _parse_cycles(body)
    if set(parts) != {"h", "v"}:
        raise ValueError("expected 'h=...; v=...'")
    labels = [s for cyc in parts["h"] + parts["v"] for s in cyc]
    if min(labels, default=0) < 0:
        raise ValueError("cycle labels are 1-based")
    size = max(max(labels, default=-1) + 1, n or 0, 1)
    perms = []
    for key in ("h", "v"):
        img = list(range(size))
        seen = set()
        for cyc in parts[key]:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if a in seen:
                    raise NotBijection(f"{key}: label {a + 1} appears twice")
                seen.add(a)
                img[a] = b
        perms.append(img)
    return make_origami(perms[0], perms[1])
