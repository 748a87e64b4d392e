"""Simultaneous polynomial root finding (Aberth-Ehrlich) with residual checks."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from .errors import RootFindingDiverged


def _horner_with_derivative(coeffs: np.ndarray, z: complex) -> tuple[complex, complex]:
    # coeffs are ascending
    p = 0j
    dp = 0j
    for c in coeffs[::-1]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def relative_residual(coeffs: Sequence, z: complex) -> float:
    c = np.asarray([complex(x) for x in coeffs])
    p = 0j
    scale = 0.0
    az = abs(z)
    for k in range(len(c) - 1, -1, -1):
        p = p * z + c[k]
    for k, ck in enumerate(c):
        scale += abs(ck) * az ** k
    return abs(p) / scale if scale else abs(p)


def aberth(coeffs: Sequence, tol: float = 1e-14, maxiter: int = 500) -> np.ndarray:
    """All complex roots of ``sum(coeffs[k] z**k)`` by Aberth-Ehrlich iteration."""
    c = np.asarray([complex(x) for x in coeffs])
    while len(c) and c[-1] == 0:
        c = c[:-1]
    deg = len(c) - 1
    if deg < 1:
        return np.zeros(0, dtype=complex)
    c = c / c[-1]
    # Fujiwara bound for the initial circle
    radius = 2 * max(abs(c[deg - k]) ** (1.0 / k) for k in range(1, deg + 1))
    radius = max(radius, 1e-3)
    z = np.array([radius * cmath.exp(1j * (2 * math.pi * k / deg + 0.4)) for k in range(deg)])
    converged = np.zeros(deg, dtype=bool)
    for _ in range(maxiter):
        for k in range(deg):
            if converged[k]:
                continue
            p, dp = _horner_with_derivative(c, z[k])
            if p == 0:
                converged[k] = True
                continue
            ratio = p / dp if dp != 0 else 1e-3
            diff = z[k] - np.delete(z, k)
            s = np.sum(1.0 / diff)
            step = ratio / (1 - ratio * s)
            z[k] -= step
            if abs(step) <= tol * max(1.0, abs(z[k])):
                converged[k] = True
        if converged.all():
            break
    return z


def polish(coeffs: Sequence[Fraction], z: complex, dps: int = 40, steps: int = 8) -> complex:
    """Newton steps in extended precision on exact coefficients."""
    with mpmath.workdps(dps):
        c = [mpmath.mpf(x.numerator) / x.denominator for x in coeffs][::-1]
        dc = [k * ck for k, ck in zip(range(len(c) - 1, 0, -1), c[:-1])]
        w = mpmath.mpc(z)
        for _ in range(steps):
            d = mpmath.polyval(dc, w)
            if d == 0:
                break
            w = w - mpmath.polyval(c, w) / d
        return complex(w)


def polynomial_roots(coeffs: Sequence[Fraction], tol: float = 1e-12, dedup: float = 1e-8) -> list[complex]:
    """Simple roots of a polynomial with rational coefficients, accepted by residual.

    Aberth iteration is tried first; if it leaves a root with a large residual
    or two roots closer than ``dedup`` the companion-matrix eigenvalues are
    used as starting points instead.  Every root is polished in extended
    precision before the residual test.
    """
    deg = len(coeffs) - 1
    if deg < 1:
        return []
    for attempt in ("aberth", "companion"):
        if attempt == "aberth":
            raw = aberth(coeffs)
        else:
            raw = np.roots([complex(x) for x in coeffs[::-1]])
        roots = [polish(coeffs, complex(z)) for z in raw]
        if all(relative_residual(coeffs, z) <= tol for z in roots) and _separated(roots, dedup):
            return roots
    raise RootFindingDiverged(f"could not isolate the {deg} roots to residual {tol}")


def _separated(roots: list[complex], radius: float) -> bool:
    pts = sorted(roots, key=lambda z: (z.real, z.imag))
    for i, a in enumerate(pts):
        for b in pts[i + 1:]:
            if b.real - a.real > radius:
                break
            if abs(a - b) <= radius * max(1.0, abs(a)):
                return False
    return True
