"""Torus points, monomial evaluation, Weyl denominators and regularity tests.

A torus point is a tuple of angles in radians.  Monomials with half-integer
exponents are evaluated literally on the stored angles, i.e. the angle vector
itself is the chosen lift to the double cover: eval_monomial(theta, mu) is
e^{i <mu, theta>} whatever representative the caller supplied.  Integral
exponents are 2*pi-periodic; half-integral ones change sign under
theta_k -> theta_k + 2*pi, which is the intended double-cover behaviour.
"""

from __future__ import annotations

import cmath
import math
from typing import Callable, Sequence

from .errors import SingularPoint
from .rootsys import RootSystem, Weight

TorusPoint = tuple[float, ...]

REGULARITY_TOL = 1e-9


def torus_point(angles: Sequence[float]) -> TorusPoint:
    pt = tuple(float(a) for a in angles)
    if any(not math.isfinite(a) for a in pt):
        raise ValueError("angles must be finite")
    return pt


def canonical_angles(theta: Sequence[float]) -> TorusPoint:
    """The representative with every angle in [0, 2*pi)."""
    return tuple(float(a) % (2 * math.pi) for a in theta)


def pairing(mu: Weight, theta: Sequence[float]) -> float:
    if len(mu) != len(theta):
        raise ValueError(f"dimension mismatch: {len(mu)} vs {len(theta)}")
    return sum(float(c) * t for c, t in zip(mu, theta))


def eval_monomial(theta: Sequence[float], mu: Weight) -> complex:
    """e^{i <mu, theta>}, unit modulus."""
    return cmath.exp(1j * pairing(mu, theta))


def root_factor(alpha: Weight, theta: Sequence[float]) -> complex:
    """h^{alpha/2} - h^{-alpha/2} = 2i sin(alpha(theta)/2)."""
    half = pairing(alpha, theta) / 2.0
    return 2j * math.sin(half)


def weyl_denominator(rs: RootSystem, theta: Sequence[float]) -> complex:
    """Product of h^{alpha/2} - h^{-alpha/2} over the positive roots."""
    out = complex(1.0)
    for alpha in rs.positive_roots:
        out *= root_factor(alpha, theta)
    return out


def restricted_denominator(
    rs: RootSystem,
    subset_predicate: Callable[[Weight], bool],
    theta: Sequence[float],
    min_factor: float | None = None,
) -> complex:
    """Same product restricted to the positive roots selected by the predicate.

    With min_factor set, any selected factor of modulus below it raises
    SingularPoint instead of silently producing a huge quotient downstream.
    """
    out = complex(1.0)
    for alpha in rs.positive_roots:
        if not subset_predicate(alpha):
            continue
        f = root_factor(alpha, theta)
        if min_factor is not None and abs(f) < min_factor:
            raise SingularPoint(f"denominator factor for root {alpha} has modulus {abs(f):.2e}")
        out *= f
    return out


def is_regular(rs: RootSystem, theta: Sequence[float], tol: float = REGULARITY_TOL) -> bool:
    """True iff |sin(alpha(theta)/2)| >= tol for every positive root."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if len(theta) != rs.rank:
        raise ValueError("dimension mismatch")
    return all(abs(math.sin(pairing(a, theta) / 2.0)) >= tol for a in rs.positive_roots)


def random_regular(rs: RootSystem, rng, tol: float = 1e-3, max_tries: int = 10000) -> TorusPoint:
    """Sample angles uniformly in (0, 2*pi) until the point is tol-regular."""
    for _ in range(max_tries):
        theta = tuple(rng.uniform(0.0, 2 * math.pi) for _ in range(rs.rank))
        if is_regular(rs, theta, tol):
            return theta
    raise SingularPoint(f"no {tol}-regular point found in {max_tries} draws")
