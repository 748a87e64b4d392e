"""SL(2,Z) action on origamis and Veech groups as orbit stabilizers."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .core import (
    ONE, Q_ELEMENTS, I, J, Origami, Quat, canonical_key, cayley_origami, compose, cycles,
    inverse, is_isomorphic, quaternion_origami,
)

# 's' and 't' denote S^-1 and T^-1
_MATRICES = {
    "S": np.array([[0, -1], [1, 0]], dtype=np.int64),
    "s": np.array([[0, 1], [-1, 0]], dtype=np.int64),
    "T": np.array([[1, 1], [0, 1]], dtype=np.int64),
    "t": np.array([[1, -1], [0, 1]], dtype=np.int64),
}
_INVERSE_LETTER = {"S": "s", "s": "S", "T": "t", "t": "T"}
_PRETTY = {"S": "S", "s": "S^-1", "T": "T", "t": "T^-1"}


def _reduce(letters) -> tuple[str, ...]:
    out: list[str] = []
    for x in letters:
        if out and out[-1] == _INVERSE_LETTER[x]:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class SL2Word:
    letters: tuple[str, ...] = ()

    def __post_init__(self):
        bad = [x for x in self.letters if x not in _MATRICES]
        if bad:
            raise ValueError(f"unknown letters {bad}; use S, s, T, t")

    @classmethod
    def parse(cls, text: str) -> "SL2Word":
        """Accepts e.g. ``"S T^-1 S"``, ``"STs"`` or ``""`` for the identity."""
        text = text.replace("^-1", "'").replace("⁻¹", "'").replace(" ", "")
        letters = []
        for ch in text:
            if ch == "'":
                letters[-1] = _INVERSE_LETTER[letters[-1].upper()]
            else:
                letters.append(ch)
        return cls(tuple(letters))

    @property
    def matrix(self) -> np.ndarray:
        m = np.eye(2, dtype=np.int64)
        for x in self.letters:
            m = m @ _MATRICES[x]
        return m

    def __mul__(self, other: "SL2Word") -> "SL2Word":
        return SL2Word(_reduce(self.letters + other.letters))

    def __pow__(self, k: int) -> "SL2Word":
        if k < 0:
            return self.inverse() ** (-k)
        return SL2Word(_reduce(self.letters * k))

    def inverse(self) -> "SL2Word":
        return SL2Word(tuple(_INVERSE_LETTER[x] for x in reversed(self.letters)))

    def reduced(self) -> "SL2Word":
        return SL2Word(_reduce(self.letters))

    def __str__(self):
        return " ".join(_PRETTY[x] for x in self.letters) or "1"

    def __len__(self):
        return len(self.letters)


S, T = SL2Word(("S",)), SL2Word(("T",))


def _act_letter(x: str, h, v) -> tuple:
    if x == "S":
        return v, inverse(h)
    if x == "s":
        return inverse(v), h
    if x == "T":
        return h, compose(v, inverse(h))
    return h, compose(v, h)


def act(g: SL2Word | str, o: Origami) -> Origami:
    """Act on ``o`` by ``g``; the rightmost letter acts first."""
    if isinstance(g, str):
        g = SL2Word.parse(g)
    h, v = o.h, o.v
    for x in reversed(g.letters):
        h, v = _act_letter(x, h, v)
    return Origami(h, v, o.name)


@dataclass
class VeechResult:
    index: int
    orbit: list[Origami]
    coset_table: list[dict[str, int]]  # coset_table[i]["S"] = index of S . orbit[i]
    coset_reps: list[SL2Word]
    generators: list[SL2Word]
    cusps: list[int] = field(default_factory=list)

    @property
    def cusp_count(self) -> int:
        return len(self.cusps)

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "cusp_widths": list(self.cusps),
            "generators": [
                {"word": str(g), "matrix": g.matrix.tolist()} for g in self.generators
            ],
        }


def veech_group(o: Origami, check: bool = True) -> VeechResult:
    base_key = canonical_key(o)
    orbit = [Origami(*base_key, o.name)]
    index = {base_key: 0}
    reps = [SL2Word()]
    table: list[dict[str, int]] = []
    q = deque([0])
    while q:
        i = q.popleft()
        while len(table) <= i:
            table.append({})
        for x in ("S", "T"):
            key = canonical_key(act(SL2Word((x,)), orbit[i]))
            j = index.get(key)
            if j is None:
                j = len(orbit)
                index[key] = j
                orbit.append(Origami(*key, o.name))
                reps.append(SL2Word((x,)) * reps[i])
                q.append(j)
            table[i][x] = j

    # Schreier generators: rep_j^-1 x rep_i for every edge i --x--> j
    gens: list[SL2Word] = []
    seen = set()
    for i in range(len(orbit)):
        for x in ("S", "T"):
            j = table[i][x]
            w = reps[j].inverse() * SL2Word((x,)) * reps[i]
            if len(w) and w.letters not in seen:
                seen.add(w.letters)
                gens.append(w)

    cusp_perm = [table[i]["T"] for i in range(len(orbit))]
    widths = sorted((len(c) for c in cycles(cusp_perm)), reverse=True)
    res = VeechResult(len(orbit), orbit, table, reps, gens, widths)
    if check:
        for g in gens:
            if not is_isomorphic(act(g, o), o):
                raise AssertionError(f"generator {g} does not stabilize the origami")
    return res


def veech_index(o: Origami) -> int:
    return veech_group(o, check=False).index


def cusp_count(o: Origami) -> int:
    return veech_group(o, check=False).cusp_count


def in_veech_group(g: SL2Word, o: Origami) -> bool:
    return is_isomorphic(act(g, o), o)


# ---------------------------------------------------------------------------
# characteristic subgroup check for W

@dataclass
class CharacteristicReport:
    epimorphism_count: int
    all_kernels_equal: bool
    all_extend_to_automorphisms: bool
    rejected_pairs: int
    pairs: list[tuple[Quat, Quat]]


def generates_q(a: Quat, b: Quat) -> bool:
    """Whether ``a`` and ``b`` generate the whole quaternion group."""
    group = {ONE}
    frontier = [ONE]
    while frontier:
        g = frontier.pop()
        for x in (a, b):
            y = g * x
            if y not in group:
                group.add(y)
                frontier.append(y)
    return len(group) == 8


def extension_to_automorphism(a: Quat, b: Quat) -> dict[Quat, Quat] | None:
    """Extend i -> a, j -> b to a map Q -> Q; return it if it is an automorphism."""
    images = {ONE: ONE, -ONE: -ONE, I: a, -I: -a, J: b, -J: -b}
    images[I * J] = a * b
    images[-(I * J)] = -(a * b)
    if len(set(images.values())) != 8:
        return None
    for x, y in itertools.product(Q_ELEMENTS, repeat=2):
        if images[x * y] != images[x] * images[y]:
            return None
    return images


def verify_characteristic_W() -> CharacteristicReport:
    w = quaternion_origami()
    pairs, rejected = [], 0
    kernels_equal = extends = True
    for a, b in itertools.product(Q_ELEMENTS, repeat=2):
        if not generates_q(a, b):
            rejected += 1
            continue
        pairs.append((a, b))
        phi = extension_to_automorphism(a, b)
        if phi is None:
            extends = False
            continue
        # beta = phi o alpha has the kernel of alpha iff the induced covers agree
        cover = cayley_origami(Q_ELEMENTS, a, b)
        if not is_isomorphic(cover, w):
            kernels_equal = False
    return CharacteristicReport(len(pairs), kernels_equal and extends, extends, rejected, pairs)
