"""Weyl character and dimension formulas, a Gelfand-Tsetlin/Schur oracle,
and torus quadrature for inner products of class functions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .errors import CapExceeded, QuadratureUnreliable, SingularPoint
from .rootsys import (
    RootSystem,
    Weight,
    act,
    is_dominant,
    rho,
    sign,
    weight_add,
    weight_dot,
    weyl_elements,
    weyl_order,
)
from .torus import eval_monomial, is_regular, weyl_denominator

SCHUR_WEIGHT_CAP = 12
SCHUR_LENGTH_CAP = 5


@dataclass(frozen=True)
class QuadratureGrid:
    """Uniform product grid theta_j = 2*pi*(j + 1/2)/N per axis.

    The half-step offset dodges the Weyl-denominator zeros, and the average
    over the grid is exact for trigonometric polynomials with per-axis
    frequencies strictly below N.
    """

    n_points: int
    rank: int

    def __post_init__(self):
        if self.n_points < 2:
            raise ValueError("need at least 2 points per angle")

    def axis(self) -> np.ndarray:
        j = np.arange(self.n_points)
        return 2.0 * np.pi * (j + 0.5) / self.n_points

    def points(self) -> np.ndarray:
        """All grid points as an (N^rank, rank) array."""
        axes = np.meshgrid(*([self.axis()] * self.rank), indexing="ij")
        return np.stack([a.reshape(-1) for a in axes], axis=-1)


def weyl_character(rs: RootSystem, lam: Weight, theta: Sequence[float]) -> complex:
    """Alternating-sum-over-denominator character value at a regular point."""
    if not is_dominant(rs, lam):
        raise ValueError(f"{lam} is not dominant for {rs.family}{rs.rank}")
    if not is_regular(rs, theta):
        raise SingularPoint(f"{theta} is singular for {rs.family}{rs.rank}")
    lam_rho = weight_add(lam, rho(rs))
    num = complex(0.0)
    for w in weyl_elements(rs):
        num += sign(w) * eval_monomial(theta, act(w, lam_rho))
    return num / weyl_denominator(rs, theta)


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """prod <lam+rho, alpha> / <rho, alpha> over positive roots, exactly."""
    if not is_dominant(rs, lam):
        raise ValueError(f"{lam} is not dominant for {rs.family}{rs.rank}")
    r = rho(rs)
    lam_rho = weight_add(lam, r)
    out = Fraction(1)
    for alpha in rs.positive_roots:
        out *= weight_dot(lam_rho, alpha) / weight_dot(r, alpha)
    assert out.denominator == 1 and out > 0, f"non-integral dimension {out} for {lam}"
    return int(out)


def _gt_patterns(top: tuple[int, ...]):
    """Yield Gelfand-Tsetlin patterns below the given top row."""
    if len(top) == 1:
        yield [top]
        return
    lo_hi = list(zip(top[1:], top[:-1]))
    ranges = [range(lo, hi + 1) for lo, hi in lo_hi]

    def rows(i: int, current: list[int]):
        if i == len(ranges):
            yield tuple(current)
            return
        start = ranges[i].start
        stop = min(ranges[i].stop, current[-1] + 1) if current else ranges[i].stop
        for v in range(start, stop):
            yield from rows(i + 1, current + [v])

    for row in rows(0, []):
        for rest in _gt_patterns(row):
            yield [top] + rest


def schur_oracle(lam: Sequence[int], x: Sequence, weight_cap: int = SCHUR_WEIGHT_CAP, length_cap: int = SCHUR_LENGTH_CAP):
    """Schur polynomial s_lam(x) by brute-force Gelfand-Tsetlin enumeration.

    Exact when the x are exact (Fraction/int); independent of the Weyl
    quotient formula, so it serves as its oracle.
    """
    lam = tuple(int(v) for v in lam)
    n = len(x)
    if len(lam) != n:
        raise ValueError("weight length must match number of variables")
    if any(a < b for a, b in zip(lam, lam[1:])) or lam[-1] < 0:
        raise ValueError(f"{lam} is not a partition")
    if sum(lam) > weight_cap or n > length_cap:
        raise CapExceeded(f"|lam|={sum(lam)}, n={n} beyond caps ({weight_cap}, {length_cap})")
    total = 0
    for pattern in _gt_patterns(lam):
        rowsums = [sum(row) for row in reversed(pattern)]  # length 1 row first
        term = 1
        prev = 0
        for k, s in enumerate(rowsums):
            term = term * x[k] ** (s - prev)
            prev = s
        total = total + term
    return total


def character_values_on_grid(rs: RootSystem, lam: Weight, points: np.ndarray) -> np.ndarray:
    """Vectorized Weyl-formula character values; NaN at singular points."""
    num = character_numerators_on_grid(rs, lam, points)
    den = np.ones(points.shape[0], dtype=complex)
    for alpha in rs.positive_roots:
        a = np.array([float(c) for c in alpha])
        den *= 2j * np.sin(points @ a / 2.0)
    with np.errstate(invalid="ignore", divide="ignore"):
        return num / den


def denominator_sq_on_grid(rs: RootSystem, points: np.ndarray) -> np.ndarray:
    out = np.ones(points.shape[0])
    for alpha in rs.positive_roots:
        a = np.array([float(c) for c in alpha])
        out *= 4.0 * np.sin(points @ a / 2.0) ** 2
    return out


def character_numerators_on_grid(rs: RootSystem, lam: Weight, points: np.ndarray) -> np.ndarray:
    """Alternating Weyl numerator values; finite on the whole grid.

    chi_lam * conj(chi_mu) * |Delta|^2 equals numerator_lam * conj(numerator_mu)
    pointwise, which sidesteps the removable wall singularities entirely.
    """
    lam_rho = weight_add(lam, rho(rs))
    num = np.zeros(points.shape[0], dtype=complex)
    for w in weyl_elements(rs):
        wlr = np.array([float(c) for c in act(w, lam_rho)])
        num += sign(w) * np.exp(1j * points @ wlr)
    return num


def torus_inner_product(
    f: Callable[[Sequence[float]], complex] | np.ndarray,
    g: Callable[[Sequence[float]], complex] | np.ndarray,
    rs_K: RootSystem,
    grid: QuadratureGrid,
    skip_tol: float = 1e-12,
    max_skip_fraction: float = 0.01,
) -> complex:
    """(1/|W_K|) * grid average of f * conj(g) * |Delta_0|^2.

    f and g may be callables on angle tuples or precomputed value arrays
    aligned with grid.points().  Evaluations on the singular set contribute
    zero: continuous class functions make the weighted integrand vanish
    there, so undefined f/g values at weight-zero points are harmless.
    Non-finite values away from the singular set are skipped and counted;
    more than max_skip_fraction of those raises QuadratureUnreliable.
    """
    if grid.rank != rs_K.rank:
        raise ValueError("grid rank must match the root system rank")
    pts = grid.points()
    weight_sq = denominator_sq_on_grid(rs_K, pts)
    singular = weight_sq < skip_tol

    def values(h):
        if isinstance(h, np.ndarray):
            return np.asarray(h, dtype=complex)
        out = np.zeros(pts.shape[0], dtype=complex)
        for i, p in enumerate(pts):
            if singular[i]:
                continue
            out[i] = h(tuple(p))
        return out

    fv, gv = values(f), values(g)
    if fv.shape[0] != pts.shape[0] or gv.shape[0] != pts.shape[0]:
        raise ValueError("value arrays must align with grid.points()")
    finite = np.isfinite(fv) & np.isfinite(gv)
    keep = finite & ~singular
    skipped = int((~finite & ~singular).sum())
    if skipped > max_skip_fraction * pts.shape[0]:
        raise QuadratureUnreliable(f"{skipped} of {pts.shape[0]} regular grid points skipped")
    total = np.sum(fv[keep] * np.conj(gv[keep]) * weight_sq[keep]) / pts.shape[0]
    return complex(total) / weyl_order(rs_K)
