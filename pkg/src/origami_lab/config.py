"""Run configurations shared by the CLI and the scripts."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field

from .curves import TOL, TORSION_TOL
from .elliptic import NMAX


@dataclass(frozen=True)
class NumericConfig:
    tol: float = TOL
    torsion_tol: float = TORSION_TOL
    nmax: int = NMAX


@dataclass(frozen=True)
class IdentitySweepConfig:
    seed: int = 2024
    random_lambdas: int = 20
    fixed_lambdas: tuple[complex, ...] = (2, 1j, 1 / 3)
    samples: int = 12
    min_distance: float = 0.1  # keep random lambda away from 0 and 1
    numeric: NumericConfig = field(default_factory=NumericConfig)

    radius: float = 3.0

    def lambdas(self) -> list[complex]:
        """Seeded draws from the square of half-width ``radius``, then the fixed values."""
        rng = random.Random(self.seed)
        out: list[complex] = []
        while len(out) < self.random_lambdas:
            z = complex(rng.uniform(-self.radius, self.radius), rng.uniform(-self.radius, self.radius))
            if abs(z) >= self.min_distance and abs(z - 1) >= self.min_distance:
                out.append(z)
        return out + [complex(z) for z in self.fixed_lambdas]

    def to_json(self) -> dict:
        d = asdict(self)
        d["fixed_lambdas"] = [{"re": complex(z).real, "im": complex(z).imag} for z in self.fixed_lambdas]
        return d


@dataclass(frozen=True)
class DSweepConfig:
    n_min: int = 3
    n_max: int = 8
    workers: int | None = None
