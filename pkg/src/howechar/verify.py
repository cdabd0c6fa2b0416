"""Self-contained invariant suite behind the `verify` subcommand.

Each check prints one pass/fail line; run_suite returns False if anything
fails.  The quick tier keeps every check's ranges small enough to finish
in well under five minutes; the full tier widens the sampling.
"""

from __future__ import annotations

import cmath
import itertools
import random
import time
from fractions import Fraction

import numpy as np

from .howe import (
    PairKind,
    dual_pair,
    eta_cosets,
    eta_cosets_brute_force,
    support_interval,
    validate_weight,
    z_subsystem,
    z_weyl,
)
from .orbits import orbit_integral_oracle, orbit_parameter, rdv_fourier
from .rootsys import act, build_root_system, compose, rho, sign, weyl_elements
from .thetachar import theta_character, theta_eval, theta_numerator_form, theta_u1_closed, vandermonde_identity_check
from .torus import eval_monomial, random_regular, weyl_denominator
from .weylchar import QuadratureGrid, character_numerators_on_grid, schur_oracle, weyl_character, weyl_dimension


def _check(name: str, fn) -> bool:
    start = time.time()
    try:
        fn()
        print(f"PASS  {name}  ({time.time() - start:.1f}s)")
        return True
    except Exception as exc:  # noqa: BLE001 - report and keep going
        print(f"FAIL  {name}: {type(exc).__name__}: {exc}")
        return False


def _partitions(total_max: int, length: int):
    def rec(rest, prev, acc):
        if len(acc) == length:
            yield tuple(acc)
            return
        for v in range(min(rest, prev), -1, -1):
            yield from rec(rest - v, v, acc + [v])

    yield from rec(total_max, total_max, [])


def check_group_laws(rng: random.Random) -> None:
    for family, rank in (("A", 4), ("B", 3), ("C", 3), ("D", 3)):
        rs = build_root_system(family, rank)
        elements = list(weyl_elements(rs))
        for _ in range(50):
            w1, w2 = rng.choice(elements), rng.choice(elements)
            mu = tuple(Fraction(rng.randint(-5, 5)) for _ in range(rank))
            assert act(w1, act(w2, mu)) == act(compose(w1, w2), mu)
            assert sign(compose(w1, w2)) == sign(w1) * sign(w2)
        two_rho = tuple(2 * c for c in rho(rs))
        total = [Fraction(0)] * rank
        for alpha in rs.positive_roots:
            total = [a + b for a, b in zip(total, alpha)]
        assert tuple(total) == two_rho


def check_schur_agreement(rng: random.Random, n_points: int) -> None:
    for n in (2, 3):
        rs = build_root_system("A", n)
        for lam in _partitions(4, n):
            for _ in range(n_points):
                theta = random_regular(rs, rng, 5e-2)
                x = [cmath.exp(1j * t) for t in theta]
                a = weyl_character(rs, tuple(Fraction(v) for v in lam), theta)
                b = schur_oracle(lam, x)
                assert abs(a - b) <= 1e-9 * max(1.0, abs(b)), (lam, theta, a, b)
            assert weyl_dimension(rs, tuple(Fraction(v) for v in lam)) == schur_oracle(lam, [1] * n)


def check_orthogonality() -> None:
    rs = build_root_system("A", 2)
    grid = QuadratureGrid(32, 2)
    pts = grid.points()
    lams = [t for t in _partitions(3, 2)]
    nums = {lam: character_numerators_on_grid(rs, tuple(Fraction(v) for v in lam), pts) for lam in lams}
    for la, lb in itertools.product(lams, repeat=2):
        ip = np.mean(nums[la] * np.conj(nums[lb])) / 2.0
        expect = 1.0 if la == lb else 0.0
        assert abs(ip - expect) < 1e-9, (la, lb, ip)


def check_identity(quick: bool) -> None:
    top = 5 if quick else 8
    for total in range(2, top + 1):
        for p in range(1, total):
            q = total - p
            for k in range(0, total - 1):
                verdict = vandermonde_identity_check(p, q, k, mode="deterministic-grid")
                assert verdict.status == "proved", (p, q, k, verdict)


def check_m_independence(rng: random.Random) -> None:
    for p, q in ((1, 1), (2, 1), (2, 2)):
        pair = dual_pair(PairKind.UU, 1, p=p, q=q)
        for lam1 in range(-q + 1, p):
            nu = [Fraction(q - p, 2) + lam1]
            tc0 = theta_character(pair, nu, m=0)
            tc1 = theta_character(pair, nu, m=1)
            ratios = []
            for _ in range(6):
                th = random_regular(pair.rs_gprime, rng, 5e-2)
                ratios.append(theta_eval(tc0, th) / theta_eval(tc1, th))
            r = np.array(ratios)
            assert np.abs(r - r.mean()).max() <= 1e-9 * abs(r.mean()), (p, q, lam1, r)


def check_closed_form(rng: random.Random) -> None:
    for p, q in ((1, 1), (2, 1), (1, 2), (2, 2)):
        pair = dual_pair(PairKind.UU, 1, p=p, q=q)
        for lam1 in (-q, 0, p):
            nu = [Fraction(q - p, 2) + lam1]
            tc = theta_character(pair, nu)
            ratios = []
            for _ in range(6):
                th = random_regular(pair.rs_gprime, rng, 5e-2)
                ratios.append(theta_u1_closed(p, q, lam1, tc.m, th) / theta_eval(tc, th))
            r = np.array(ratios)
            assert np.abs(r - r.mean()).max() <= 1e-9 * abs(r.mean()), (p, q, lam1, r)


def check_numerator_consistency(rng: random.Random) -> None:
    cases = [
        (PairKind.UU, 2, dict(p=2, q=2), (1, 0)),
        (PairKind.OEVEN_SP, 2, dict(m=3), (2, 0)),
        (PairKind.OODD_SP, 2, dict(m=2), (1, 1)),
        (PairKind.UH_OSTAR, 2, dict(m=3), (2, 1)),
    ]
    for kind, n, sizes, nu in cases:
        pair = dual_pair(kind, n, **sizes)
        tc = theta_character(pair, nu)
        ratios = []
        for _ in range(6):
            th = random_regular(pair.rs_gprime, rng, 5e-2)
            ratios.append(theta_numerator_form(tc, th) / (weyl_denominator(pair.rs_gprime, th) * theta_eval(tc, th)))
        r = np.array(ratios)
        assert np.abs(r - r.mean()).max() <= 1e-9 * abs(r.mean()), (kind, r)


def check_denominator_identity(rng: random.Random) -> None:
    instances = [
        (PairKind.UU, 2, dict(p=2, q=2), 1),
        (PairKind.OEVEN_SP, 1, dict(m=2), 1),
        (PairKind.OODD_SP, 1, dict(m=3), 1),
        (PairKind.UH_OSTAR, 1, dict(m=3), 1),
    ]
    for kind, n, sizes, m in instances:
        pair = dual_pair(kind, n, **sizes)
        sub = z_subsystem(pair, m if kind is PairKind.UU else pair.n)
        rz = rho(sub)
        group = list(z_weyl(pair, m if kind is PairKind.UU else pair.n))
        for _ in range(20):
            th = tuple(rng.uniform(0.1, 6.2) for _ in range(pair.rank_gprime))
            lhs = weyl_denominator(sub, th)
            rhs = sum(sign(w) * eval_monomial(th, act(w, rz)) for w in group)
            assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs)), (kind, lhs, rhs)


def check_eta_cosets() -> None:
    for n, p, q in ((2, 2, 2), (3, 3, 3), (4, 3, 3)):
        pair = dual_pair(PairKind.UU, n, p=p, q=q)
        for nu_ints in itertools.product(range(-2, 3), repeat=n):
            if any(nu_ints[i] < nu_ints[i + 1] for i in range(n - 1)):
                continue
            shift = Fraction(q - p, 2)
            try:
                cd = validate_weight(pair, [shift + v for v in nu_ints])
            except Exception:
                continue
            iv = support_interval(pair, cd)
            for m in range(max(iv.lo, pair.n - q, 0), min(iv.hi, p, n) + 1):
                reps = eta_cosets(pair, iv, m)
                assert len(reps) == eta_cosets_brute_force(pair, iv, m), (n, nu_ints, m)
                assert len({tuple(sorted(r.perm[:m])) for r in reps}) == len(reps)


def check_rdv(rng: random.Random, n_samples: int) -> None:
    for n in (2, 3):
        rs = build_root_system("A", n)
        for _ in range(10):
            lam = []
            while len(set(lam)) != n:
                lam = [rng.randint(-6, 6) for _ in range(n)]
            X = [rng.uniform(-3, 3) for _ in range(n)]
            while min(abs(X[i] - X[j]) for i in range(n) for j in range(i + 1, n)) < 0.1:
                X = [rng.uniform(-3, 3) for _ in range(n)]
            op = orbit_parameter(rs, rs, lam)
            a = rdv_fourier(rs, rs, op, X)
            b = orbit_integral_oracle(n, lam, X, method="hciz").value
            assert abs(a - b) <= 1e-10 * abs(b), (lam, X, a, b)
    est = orbit_integral_oracle(2, [1, 0], [1.0, -0.5], n_samples=n_samples, seed=11, method="mc")
    rs2 = build_root_system("A", 2)
    truth = rdv_fourier(rs2, rs2, orbit_parameter(rs2, rs2, [1, 0]), [1.0, -0.5])
    assert abs(est.value - truth) <= 3 * est.stderr, (est, truth)


def check_ktypes() -> None:
    from .thetachar import ktype_expansion

    pair = dual_pair(PairKind.UU, 1, p=1, q=1)
    for lam1 in range(-3, 4):
        tc = theta_character(pair, [lam1])
        kt = ktype_expansion(tc, depth=12)
        assert all(v == 1 for v in kt.values()), (lam1, kt)
        keys = list(kt)
        steps = {tuple(b - a for a, b in zip(keys[i], keys[i + 1])) for i in range(len(keys) - 1)}
        assert len(steps) == 1, (lam1, steps)
    for kind, sizes, nu in (
        (PairKind.OEVEN_SP, dict(m=2), (2,)),
        (PairKind.OODD_SP, dict(m=1), (1,)),
        (PairKind.UH_OSTAR, dict(m=2), (1,)),
    ):
        tc = theta_character(dual_pair(kind, 1, **sizes), nu)
        kt = ktype_expansion(tc, depth=12)
        assert next(iter(kt.values())) == 1
        assert all(v >= 0 for v in kt.values())


def run_suite(quick: bool = False) -> bool:
    rng = random.Random(20240601)
    checks = [
        ("weyl group laws and 2*rho", lambda: check_group_laws(rng)),
        ("weyl character vs schur oracle", lambda: check_schur_agreement(rng, 5 if quick else 20)),
        ("character orthogonality on the offset grid", check_orthogonality),
        ("partial-fraction identity (deterministic)", lambda: check_identity(quick)),
        ("m-independence for rank-one pairs", lambda: check_m_independence(rng)),
        ("closed forms vs double sum", lambda: check_closed_form(rng)),
        ("numerator form vs Delta * theta", lambda: check_numerator_consistency(rng)),
        ("subsystem denominator identity", lambda: check_denominator_identity(rng)),
        ("eta coset counts vs brute force", check_eta_cosets),
        ("orbit transform vs determinant and Monte-Carlo oracles", lambda: check_rdv(rng, 10**5 if quick else 10**6)),
        ("K-type ladders", check_ktypes),
    ]
    ok = True
    for name, fn in checks:
        ok = _check(name, fn) and ok
    print("VERIFY", "OK" if ok else "FAILED")
    return ok
