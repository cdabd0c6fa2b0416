"""Fourier transforms of coadjoint orbits for compact unitary groups.

The finite Weyl sum

    F(X) = (-1)^{n(lam)} sum_{w in W(k)/W(k)^lam} e^{i<w lam, X>}
           / prod_{alpha in P_lam} i <w alpha, X>

with P_lam = {alpha : <lam, alpha> > 0} is validated against two
independent oracles for U(n): a Haar Monte-Carlo average of
e^{i tr(diag(x) U diag(lam) U*)} and the exact determinant closed form of
the unitary-group exponential integral.  The determinant formula for the
Haar average carries the constant prod_{k=1}^{n-1} k!; dividing the
normalized Haar average by that constant and multiplying by the Liouville
prefactor prod_{alpha in P_lam} <lam, alpha> reproduces F(X), which is the
calibration the tests pin at a reference point.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import MonteCarloOnly, SingularPoint
from .rootsys import RootSystem, Weight, act, build_root_system, weight_dot, weyl_elements

REG_TOL = 1e-9


@dataclass(frozen=True)
class OrbitParameter:
    lam: Weight
    roots: tuple[Weight, ...]  # P_lam, the roots paired positively with lam
    n_noncompact: int


def orbit_parameter(rs_g: RootSystem, rs_k: RootSystem, lam: Sequence) -> OrbitParameter:
    lam = tuple(Fraction(v) for v in lam)
    if len(lam) != rs_g.rank:
        raise ValueError("dimension mismatch")
    compact = set(rs_k.positive_roots) | {tuple(-c for c in a) for a in rs_k.positive_roots}
    p_lam = tuple(a for a in rs_g.all_roots if weight_dot(lam, a) > 0)
    n_nc = sum(1 for a in p_lam if a not in compact)
    return OrbitParameter(lam, p_lam, n_nc)


def liouville_normalization(op: OrbitParameter) -> float:
    """prod over P_lam of <lam, alpha>; strictly positive by construction."""
    out = Fraction(1)
    for alpha in op.roots:
        out *= weight_dot(op.lam, alpha)
    return float(out)


def _coset_representatives(rs_k: RootSystem, lam: Weight):
    seen = set()
    for w in weyl_elements(rs_k):
        image = act(w, lam)
        if image not in seen:
            seen.add(image)
            yield w


def rdv_fourier(
    rs_g: RootSystem, rs_k: RootSystem, op: OrbitParameter, X: Sequence[float], tol: float = REG_TOL
) -> complex:
    """The Weyl-sum expression for the orbit Fourier transform at X."""
    if len(X) != rs_g.rank:
        raise ValueError("dimension mismatch")
    x = tuple(float(v) for v in X)
    if any(not math.isfinite(v) for v in x):
        raise ValueError("X must be finite")
    for alpha in op.roots:
        if abs(sum(float(c) * v for c, v in zip(alpha, x))) < tol:
            raise SingularPoint(f"X pairs to ~0 with root {alpha}")
    total = complex(0.0)
    for w in _coset_representatives(rs_k, op.lam):
        wlam = act(w, op.lam)
        num = np.exp(1j * sum(float(c) * v for c, v in zip(wlam, x)))
        den = complex(1.0)
        for alpha in op.roots:
            walpha = act(w, alpha)
            den *= 1j * sum(float(c) * v for c, v in zip(walpha, x))
        total += num / den
    return (-1) ** op.n_noncompact * total


def _max_workers() -> int:
    raw = os.environ.get("HOWECHAR_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def haar_unitaries(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Batch of Haar-distributed n x n unitaries via QR with phase fix."""
    z = (rng.standard_normal((count, n, n)) + 1j * rng.standard_normal((count, n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.einsum("bii->bi", r)
    return q * (d / np.abs(d))[:, None, :]


@dataclass(frozen=True)
class OracleEstimate:
    value: complex
    stderr: float | None
    method: str


def hciz_mean(lam: Sequence[float], X: Sequence[float]) -> complex:
    """Exact Haar average of e^{i tr(diag(X) U diag(lam) U*)}.

    det(e^{i lam_j x_k}) / [ (i)^{n(n-1)/2} V(x) V(lam) ] times
    prod_{k=1}^{n-1} k!, with V the decreasing-order Vandermonde
    prod_{j<k}(v_j - v_k).  Needs distinct lam and distinct x.
    """
    lam = [float(v) for v in lam]
    x = [float(v) for v in X]
    n = len(lam)
    if len(x) != n:
        raise ValueError("dimension mismatch")

    def vandermonde(v):
        out = 1.0
        for i in range(n):
            for j in range(i + 1, n):
                out *= v[i] - v[j]
        return out

    v_lam, v_x = vandermonde(lam), vandermonde(x)
    if abs(v_lam) < 1e-12:
        raise MonteCarloOnly("lam has (nearly) repeated entries; determinant form degenerates")
    if abs(v_x) < 1e-12:
        raise SingularPoint("X has (nearly) repeated entries")
    M = np.exp(1j * np.outer(lam, x))
    cn = math.prod(math.factorial(k) for k in range(1, n))
    return complex(cn * np.linalg.det(M) / ((1j) ** (n * (n - 1) // 2) * v_lam * v_x))


def orbit_integral_oracle(
    n: int,
    lam: Sequence,
    X: Sequence[float],
    n_samples: int = 10**6,
    seed: int = 0,
    method: str = "mc",
    batch: int = 4096,
) -> OracleEstimate:
    """Independent estimates of the orbit Fourier transform for U(n).

    method='mc' draws Haar unitaries and averages the exponential trace;
    method='hciz' evaluates the determinant closed form.  Both are scaled
    by the Liouville prefactor over the superfactorial constant so they
    target the same quantity as rdv_fourier.
    """
    lam_f = [float(v) for v in lam]
    x = [float(v) for v in X]
    if len(lam_f) != n or len(x) != n:
        raise ValueError("dimension mismatch")
    rs = build_root_system("A", n)
    op = orbit_parameter(rs, rs, [Fraction(v) for v in lam])
    scale = liouville_normalization(op) / math.prod(math.factorial(k) for k in range(1, n))
    if method == "hciz":
        return OracleEstimate(scale * hciz_mean(lam_f, x), None, "hciz")
    if method != "mc":
        raise ValueError(f"unknown method {method!r}")
    Lam = np.diag(lam_f).astype(complex)
    xdiag = np.array(x)
    rng = np.random.default_rng(seed)
    workers = _max_workers()

    def run_batch(count: int, r: np.random.Generator) -> np.ndarray:
        u = haar_unitaries(n, count, r)
        diag = np.einsum("bij,jk,bik->bi", u, Lam, np.conj(u))
        return np.exp(1j * diag.real @ xdiag)

    samples: list[np.ndarray] = []
    remaining = n_samples
    if workers == 1:
        while remaining > 0:
            c = min(batch, remaining)
            samples.append(run_batch(c, rng))
            remaining -= c
    else:
        from concurrent.futures import ThreadPoolExecutor

        streams = rng.spawn(workers)
        shares = [n_samples // workers] * workers
        shares[0] += n_samples - sum(shares)
        with ThreadPoolExecutor(max_workers=workers) as ex:
            futures = []
            for share, stream in zip(shares, streams):
                futures.append(ex.submit(lambda s, r: [run_batch(min(batch, s - i), r) for i in range(0, s, batch)], share, stream))
            for f in futures:
                samples.extend(f.result())
    vals = np.concatenate(samples)
    mean = complex(vals.mean())
    stderr = float(np.sqrt((np.abs(vals - mean) ** 2).mean() / len(vals)))
    return OracleEstimate(scale * mean, abs(scale) * stderr, "mc")
