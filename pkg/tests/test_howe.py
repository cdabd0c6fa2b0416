from fractions import Fraction

import pytest

from howechar.errors import NotInCorrespondence
from howechar.howe import (
    dual_pair,
    embed_point,
    embedded_index_set,
    eta_cosets,
    eta_cosets_brute_force,
    kprime_weyl,
    kprime_weyl_order,
    project,
    rho_z,
    support_interval,
    validate_weight,
    z_subsystem,
    z_weyl,
)
from howechar.rootsys import weight

F = Fraction


def test_pair_root_data():
    uu = dual_pair("uu", 2, p=2, q=1)
    assert uu.rs_g.family == "A" and uu.rs_gprime.family == "A"
    assert len(uu.rs_gprime.compact_positive_roots) == 1  # e1 - e2 inside U(2) x U(1)
    oe = dual_pair("oeven-sp", 2, m=3)
    assert oe.rs_g.family == "D" and oe.rs_gprime.family == "C"
    assert len(oe.rs_gprime.compact_positive_roots) == 3
    oo = dual_pair("oodd-sp", 1, m=2)
    assert oo.rs_g.family == "B"
    uh = dual_pair("uh-ostar", 2, m=3)
    assert uh.rs_g.family == "C" and uh.rs_gprime.family == "D"
    with pytest.raises(ValueError):
        dual_pair("uu", 3, p=1, q=1)
    with pytest.raises(ValueError):
        dual_pair("oeven-sp", 3, m=2)


def test_rho_g_values():
    assert dual_pair("uu", 3, p=2, q=2).rho_g == weight(1, 0, -1)
    assert dual_pair("oeven-sp", 2, m=2).rho_g == weight(1, 0)
    assert dual_pair("oodd-sp", 2, m=2).rho_g == weight("3/2", "1/2")
    assert dual_pair("uh-ostar", 2, m=2).rho_g == weight(2, 1)


def test_validate_weight_examples():
    pair = dual_pair("uu", 1, p=1, q=1)
    cd = validate_weight(pair, [-2])
    assert cd.mu == weight(-2) and cd.mu_prime == weight(-2)
    oe = dual_pair("oeven-sp", 1, m=2)
    cd2 = validate_weight(oe, [0])
    assert cd2.mu == weight(0) and cd2.mu_prime == weight(0)


def test_validate_weight_rejections():
    pair = dual_pair("uu", 2, p=1, q=1)
    with pytest.raises(NotInCorrespondence):
        validate_weight(pair, [3, 1])  # two positive entries, q = 1
    with pytest.raises(NotInCorrespondence):
        validate_weight(pair, [-1, -2])  # two negative entries, p = 1
    # one positive and one negative entry is admissible
    validate_weight(pair, [3, -1])
    with pytest.raises(NotInCorrespondence):
        validate_weight(dual_pair("uu", 1, p=2, q=1), [1])  # needs half-integers
    with pytest.raises(NotInCorrespondence):
        validate_weight(pair, [0, 1])  # not decreasing
    with pytest.raises(NotInCorrespondence):
        validate_weight(dual_pair("oodd-sp", 2, m=2), [1, -1])


def test_mu_prime_reversal_is_involution():
    pair = dual_pair("uu", 3, p=2, q=2)
    cd = validate_weight(pair, [1, 0, -1])
    assert tuple(reversed(cd.mu_prime)) == cd.mu


def test_support_interval_u1_case_table():
    for p in range(1, 5):
        for q in range(1, 5):
            pair = dual_pair("uu", 1, p=p, q=q)
            for lam1 in range(-q - 2, p + 3):
                cd = validate_weight(pair, [F(q - p, 2) + lam1])
                iv = support_interval(pair, cd)
                if lam1 <= -q:
                    assert (iv.lo, iv.hi) == (1, 1), (p, q, lam1)
                elif lam1 >= p:
                    assert (iv.lo, iv.hi) == (0, 0), (p, q, lam1)
                else:
                    assert (iv.lo, iv.hi) == (0, 1), (p, q, lam1)


def test_support_interval_oeven_examples():
    oe = dual_pair("oeven-sp", 1, m=2)
    iv3 = support_interval(oe, validate_weight(oe, [3]))
    assert (iv3.lo, iv3.hi) == (0, 0)
    assert iv3.a == (F(2),)
    iv0 = support_interval(oe, validate_weight(oe, [0]))
    assert (iv0.lo, iv0.hi) == (0, 1)
    assert iv0.a == (F(-1),) and iv0.b == (F(-1),)


def test_support_monotone_in_nu():
    pair = dual_pair("uu", 2, p=3, q=3)
    prev = None
    for t in range(-3, 4):
        cd = validate_weight(pair, [t + 1, t])
        iv = support_interval(pair, cd)
        if prev is not None:
            assert iv.lo <= prev[0] and iv.hi <= prev[1]
        prev = (iv.lo, iv.hi)


def test_embedded_index_set_and_project():
    uu = dual_pair("uu", 2, p=2, q=2)
    assert embedded_index_set(uu, 1) == (0, 3)
    assert embedded_index_set(uu, 2) == (0, 1)
    theta = (0.1, 0.2, 0.3, 0.4)
    assert project(uu, 1, theta) == (0.1, 0.4)
    assert project(uu, 2, theta) == (0.1, 0.2)
    oe = dual_pair("oeven-sp", 2, m=3)
    assert embedded_index_set(oe, 2) == (0, 1)
    assert project(oe, 2, (0.5, 0.6, 0.7)) == (0.5, 0.6)
    with pytest.raises(ValueError):
        embedded_index_set(uu, 3)


def test_project_inverts_embedding():
    for pair, m in ((dual_pair("uu", 2, p=2, q=2), 1), (dual_pair("uh-ostar", 2, m=3), 2)):
        theta = (0.7, -0.3)
        assert project(pair, m, embed_point(pair, m, theta)) == theta
        assert len(embedded_index_set(pair, m)) == pair.n


def test_kprime_weyl_counts():
    assert len(list(kprime_weyl(dual_pair("uu", 1, p=2, q=1)))) == 2 == kprime_weyl_order(dual_pair("uu", 1, p=2, q=1))
    assert len(list(kprime_weyl(dual_pair("oeven-sp", 1, m=3)))) == 6
    assert len(list(kprime_weyl(dual_pair("uh-ostar", 1, m=2)))) == 2


def test_eta_cosets_uu_examples():
    p11 = dual_pair("uu", 1, p=1, q=1)
    iv = support_interval(p11, validate_weight(p11, [0]))
    assert len(eta_cosets(p11, iv, 1)) == 1
    p22 = dual_pair("uu", 2, p=2, q=2)
    iv22 = support_interval(p22, validate_weight(p22, [-3, -4]))
    assert (iv22.lo, iv22.hi) == (2, 2)
    assert len(eta_cosets(p22, iv22, 2)) == 1
    iv_free = support_interval(p22, validate_weight(p22, [0, 0]))
    assert (iv_free.lo, iv_free.hi) == (0, 2)
    reps = eta_cosets(p22, iv_free, 1)
    assert sorted(tuple(sorted(r.perm[:1])) for r in reps) == [(0,), (1,)]


def test_eta_cosets_uu_against_brute_force():
    for n, p, q in ((3, 3, 3), (4, 4, 4), (5, 5, 5)):
        pair = dual_pair("uu", n, p=p, q=q)
        for nu in ((0,) * n, tuple(range(n, 0, -1)), tuple(-k for k in range(n))):
            cd = validate_weight(pair, list(nu))
            iv = support_interval(pair, cd)
            for m in range(max(iv.lo, 0), min(iv.hi, n) + 1):
                reps = eta_cosets(pair, iv, m)
                assert len(reps) == eta_cosets_brute_force(pair, iv, m)


def test_eta_cosets_signed_pairs():
    oe = dual_pair("oeven-sp", 2, m=3)
    iv = support_interval(oe, validate_weight(oe, [0, 0]))  # both middle signs free
    assert (iv.lo, iv.hi) == (0, 2)
    reps = eta_cosets(oe, iv, 2)
    assert all(r.perm == (0, 1) for r in reps)
    assert {r.signs for r in reps} == {(1, 1), (-1, -1)}  # even flip count only
    oe22 = dual_pair("oeven-sp", 2, m=2)
    iv22 = support_interval(oe22, validate_weight(oe22, [0, 0]))
    assert (iv22.lo, iv22.hi) == (0, 1)  # second coordinate flip is forced
    assert {r.signs for r in eta_cosets(oe22, iv22, 2)} == {(1, -1)}
    oo = dual_pair("oodd-sp", 2, m=3)
    iv2 = support_interval(oo, validate_weight(oo, [0, 0]))
    assert (iv2.lo, iv2.hi) == (0, 1)
    assert {r.signs for r in eta_cosets(oo, iv2, 2)} == {(1, -1), (-1, -1)}
    uh = dual_pair("uh-ostar", 1, m=2)
    iv3 = support_interval(uh, validate_weight(uh, [0]))
    assert [r.signs for r in eta_cosets(uh, iv3, 1)] == [(1,)]


def test_rho_z_examples():
    uu = dual_pair("uu", 2, p=2, q=2)
    assert rho_z(uu, 1) == weight(0, "1/2", "-1/2", 0)
    assert rho_z(uu, 2) == weight(0, 0, "1/2", "-1/2")
    oe = dual_pair("oeven-sp", 1, m=2)
    assert rho_z(oe, 1) == weight(0, 1)
    full = dual_pair("uu", 2, p=1, q=1)
    assert rho_z(full, 1) == weight(0, 0)
    assert len(list(z_weyl(full, 1))) == 1


def test_z_weyl_sizes():
    assert len(list(z_weyl(dual_pair("uu", 2, p=2, q=2), 1))) == 2  # S_2 on the complement
    assert len(list(z_weyl(dual_pair("oeven-sp", 1, m=2), 1))) == 2  # C_1 block
    assert len(list(z_weyl(dual_pair("uh-ostar", 1, m=2), 1))) == 1  # D_1 block is trivial
    assert len(list(z_weyl(dual_pair("uh-ostar", 1, m=3), 1))) == 4  # D_2 block


def test_z_subsystem_roots():
    oe = dual_pair("oeven-sp", 1, m=2)
    assert z_subsystem(oe, 1).positive_roots == (weight(0, 2),)


def test_kprime_weyl_cap():
    from howechar.errors import CapExceeded

    big = dual_pair("oeven-sp", 1, m=11)
    with pytest.raises(CapExceeded):
        next(kprime_weyl(big))
