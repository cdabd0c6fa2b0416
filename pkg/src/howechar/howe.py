"""The four compact dual pairs: root data for both members, weight
admissibility, support intervals, torus embeddings, and the Weyl-group
enumerations the character formulas consume.

Pair kinds, with the compact member first:

    UU        (U(n), U(p,q)),            n <= p+q
    OEVEN_SP  (O(2n), Sp(2m, R)),        n <= m
    OODD_SP   (O(2n+1), Sp(2m, R)),      n <= m
    UH_OSTAR  (U(n, H), O*(2m)),         n <= m

All index sets in this module are 0-based; documentation follows the usual
1-based conventions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import CapExceeded, NotInCorrespondence
from .rootsys import (
    ENUMERATION_CAP,
    RootSystem,
    Weight,
    WeylElement,
    build_root_system,
    weight_add,
)


class PairKind(Enum):
    UU = "uu"
    OEVEN_SP = "oeven-sp"
    OODD_SP = "oodd-sp"
    UH_OSTAR = "uh-ostar"


# (family of g, family of g', compact roots of g' are A-type blocks)
_PAIR_FAMILIES = {
    PairKind.UU: ("A", "A"),
    PairKind.OEVEN_SP: ("D", "C"),
    PairKind.OODD_SP: ("B", "C"),
    PairKind.UH_OSTAR: ("C", "D"),
}


def _block_compact_roots(rank: int, blocks: Sequence[tuple[int, int]]) -> tuple[Weight, ...]:
    """Positive roots e_i - e_j with i < j inside each [start, stop) block."""
    out = []
    for start, stop in blocks:
        for i in range(start, stop):
            for j in range(i + 1, stop):
                v = [Fraction(0)] * rank
                v[i], v[j] = Fraction(1), Fraction(-1)
                out.append(tuple(v))
    return tuple(sorted(out))


@dataclass(frozen=True)
class DualPairSpec:
    kind: PairKind
    n: int
    p: int = 0  # UU only
    q: int = 0  # UU only
    m: int = 0  # the other three

    @property
    def rank_gprime(self) -> int:
        return self.p + self.q if self.kind is PairKind.UU else self.m

    @property
    def rs_g(self) -> RootSystem:
        fam = _PAIR_FAMILIES[self.kind][0]
        if fam == "D" and self.n == 1:
            # so(2) has no roots; keep an empty D-type placeholder
            return RootSystem("D", 1, ())
        return build_root_system(fam, self.n)

    @property
    def rs_gprime(self) -> RootSystem:
        fam = _PAIR_FAMILIES[self.kind][1]
        rs = build_root_system(fam, self.rank_gprime)
        if self.kind is PairKind.UU:
            blocks = [(0, self.p), (self.p, self.p + self.q)]
        else:
            blocks = [(0, self.m)]
        return rs.with_compact_roots(_block_compact_roots(rs.rank, blocks))

    @property
    def kprime_blocks(self) -> tuple[tuple[int, int], ...]:
        if self.kind is PairKind.UU:
            return ((0, self.p), (self.p, self.p + self.q))
        return ((0, self.m),)

    @property
    def central_shift(self) -> Fraction:
        if self.kind is PairKind.UU:
            return Fraction(self.q - self.p, 2)
        if self.kind is PairKind.OODD_SP:
            return Fraction(-(2 * self.n + 1), 2)
        return Fraction(-self.n)

    @property
    def half_shift(self) -> Fraction:
        """The shift s with a_k = mu'_k - s and b_k = -mu'_k - s."""
        if self.kind is PairKind.UU:
            return Fraction(self.p + self.q - self.n - 1, 2)
        if self.kind is PairKind.OEVEN_SP:
            return Fraction(self.m - self.n)
        if self.kind is PairKind.OODD_SP:
            return Fraction(self.m - self.n) - Fraction(1, 2)
        return Fraction(self.m - self.n - 1)

    @property
    def rho_g(self) -> Weight:
        n = self.n
        if self.kind is PairKind.UU:
            return tuple(Fraction(n - 2 * a - 1, 2) for a in range(n))
        if self.kind is PairKind.OEVEN_SP:
            return tuple(Fraction(n - 1 - a) for a in range(n))
        if self.kind is PairKind.OODD_SP:
            return tuple(Fraction(n - 1 - a) + Fraction(1, 2) for a in range(n))
        return tuple(Fraction(n - a) for a in range(n))

    @property
    def bilinear_scale(self) -> float:
        """B(x, y) = scale * sum x_k y_k on the torus coordinates."""
        import math

        return -2 * math.pi if self.kind is PairKind.UH_OSTAR else -math.pi

    @property
    def orientation(self) -> int:
        """Sign relating e_a to the torus angles: h^{e_a} = e^{o * i * theta_a}.

        The Sp pairs carry the opposite convention from the unitary and
        quaternionic ones; evaluation exponents are scaled by o so the
        formal expansions run toward lowest weights in a single chamber.
        """
        return -1 if self.kind in (PairKind.OEVEN_SP, PairKind.OODD_SP) else 1


def dual_pair(kind: PairKind | str, n: int, p: int | None = None, q: int | None = None, m: int | None = None) -> DualPairSpec:
    kind = PairKind(kind) if not isinstance(kind, PairKind) else kind
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind is PairKind.UU:
        if p is None or q is None or p < 1 or q < 1:
            raise ValueError("UU needs p >= 1 and q >= 1")
        if n > p + q:
            raise ValueError(f"rank condition n <= p+q violated: {n} > {p + q}")
        return DualPairSpec(kind, n, p=p, q=q)
    if m is None or m < 1:
        raise ValueError(f"{kind.value} needs m >= 1")
    if n > m:
        raise ValueError(f"rank condition n <= m violated: {n} > {m}")
    return DualPairSpec(kind, n, m=m)


@dataclass(frozen=True)
class CorrespondenceData:
    pair: DualPairSpec
    nu: Weight
    mu: Weight
    mu_prime: Weight


@dataclass(frozen=True)
class SupportInterval:
    lo: int
    hi: int
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]


def validate_weight(pair: DualPairSpec, nu: Sequence) -> CorrespondenceData:
    """Check nu against the pair's admissibility rules; fill mu and mu'."""
    nu = tuple(Fraction(v) for v in nu)
    if len(nu) != pair.n:
        raise NotInCorrespondence(f"weight length {len(nu)} != n = {pair.n}")
    if any(nu[i] < nu[i + 1] for i in range(len(nu) - 1)):
        raise NotInCorrespondence(f"{nu} is not weakly decreasing")
    if pair.kind is PairKind.UU:
        ints = [v - pair.central_shift for v in nu]
        if any(v.denominator != 1 for v in ints):
            raise NotInCorrespondence(f"entries of {nu} must lie in (q-p)/2 + Z")
        n_pos = sum(1 for v in ints if v > 0)
        n_neg = sum(1 for v in ints if v < 0)
        if n_pos > pair.q:
            raise NotInCorrespondence(f"{n_pos} positive entries exceed q = {pair.q}")
        if n_neg > pair.p:
            raise NotInCorrespondence(f"{n_neg} negative entries exceed p = {pair.p}")
    else:
        if any(v.denominator != 1 for v in nu):
            raise NotInCorrespondence(f"{nu} must be integral")
        if nu[-1] < 0:
            raise NotInCorrespondence(f"{nu} must be nonnegative")
    mu = weight_add(nu, pair.rho_g)
    mu_prime = tuple(reversed(mu))
    return CorrespondenceData(pair, nu, mu, mu_prime)


def support_interval(pair: DualPairSpec, cd: CorrespondenceData) -> SupportInterval:
    """Endpoints from the a_k >= 1 / b_k >= 1 case table.

    mu' is strictly increasing, so b is decreasing and a increasing:
    lo = #{k : b_k >= 1} and hi = n - #{k : a_k >= 1}.
    """
    s = pair.half_shift
    a = tuple(mp - s for mp in cd.mu_prime)
    b = tuple(-mp - s for mp in cd.mu_prime)
    lo = max((k + 1 for k in range(pair.n) if b[k] >= 1), default=0)
    hi = min((k + 1 for k in range(pair.n) if a[k] >= 1), default=pair.n + 1) - 1
    assert lo <= hi, f"empty support interval ({lo}, {hi}) for {cd.nu}"
    return SupportInterval(lo, hi, a, b)


def structural_m_range(pair: DualPairSpec) -> tuple[int, int]:
    """The m values for which the torus embedding exists at all."""
    if pair.kind is PairKind.UU:
        return max(pair.n - pair.q, 0), min(pair.p, pair.n)
    return pair.n, pair.n


def embedded_index_set(pair: DualPairSpec, m: int) -> tuple[int, ...]:
    """0-based positions of the embedded small torus inside the big one.

    UU sends coordinate j to position j for j < m and to position
    p+q-n+j for j >= m; the other pairs embed as the first n coordinates.
    """
    if pair.kind is not PairKind.UU:
        return tuple(range(pair.n))
    lo, hi = structural_m_range(pair)
    if not lo <= m <= hi:
        raise ValueError(f"m = {m} outside the embeddable range [{lo}, {hi}]")
    N = pair.p + pair.q
    return tuple(range(m)) + tuple(N - pair.n + j for j in range(m, pair.n))


def project(pair: DualPairSpec, m: int, theta_prime: Sequence[float]) -> tuple[float, ...]:
    """pr_m: pick the embedded angles, in the small-torus coordinate order."""
    if len(theta_prime) != pair.rank_gprime:
        raise ValueError("dimension mismatch")
    return tuple(theta_prime[i] for i in embedded_index_set(pair, m))


def embed_point(pair: DualPairSpec, m: int, theta: Sequence[float]) -> tuple[float, ...]:
    """Section of project: place small-torus angles at their embedded slots."""
    if len(theta) != pair.n:
        raise ValueError("dimension mismatch")
    out = [0.0] * pair.rank_gprime
    for k, pos in enumerate(embedded_index_set(pair, m)):
        out[pos] = float(theta[k])
    return tuple(out)


def _block_permutations(rank: int, blocks: Sequence[tuple[int, int]], cap: int) -> Iterator[WeylElement]:
    sizes = [stop - start for start, stop in blocks]
    if max(sizes) > cap:
        raise CapExceeded(f"block sizes {sizes} exceed enumeration cap {cap}")
    pools = [itertools.permutations(range(start, stop)) for start, stop in blocks]
    fixed = sorted(set(range(rank)) - {i for start, stop in blocks for i in range(start, stop)})
    for combo in itertools.product(*pools):
        perm = [0] * rank
        for (start, stop), images in zip(blocks, combo):
            for off, img in enumerate(images):
                perm[start + off] = img
        for i in fixed:
            perm[i] = i
        yield WeylElement(tuple(perm), (1,) * rank)


def kprime_weyl(pair: DualPairSpec, cap: int = ENUMERATION_CAP) -> Iterator[WeylElement]:
    """W(K', h') as block permutations of the big torus coordinates."""
    yield from _block_permutations(pair.rank_gprime, pair.kprime_blocks, cap)


def kprime_weyl_order(pair: DualPairSpec) -> int:
    import math

    if pair.kind is PairKind.UU:
        return math.factorial(pair.p) * math.factorial(pair.q)
    return math.factorial(pair.m)


def eta_cosets(pair: DualPairSpec, interval: SupportInterval, m: int, cap: int = ENUMERATION_CAP) -> list[WeylElement]:
    """Coset representatives for the outer alternating sum of the character.

    UU: representatives of {eta in S_n : eta({1..m}) contains {1..lo} and
    eta({m+1..n}) contains {hi+1..n}} modulo S_m x S_{n-m}, one per image
    set eta({1..m}), each order-preserving on {1..m} and its complement.

    Signed pairs: one representative per admissible sign pattern, with the
    permutation part the identity (the pure permutations stabilize the
    embedding cone and are absorbed by the W(K') sum).  The constrained
    signs match the orientation of the embedding cone, which is the
    positive orthant for the Sp pairs and the negative orthant for the
    quaternionic pair: Sp pairs pin +1 on {1..lo} and -1 on {hi+1..n},
    the O* pair the opposite.  Free middle signs run over all choices,
    except that for the even orthogonal pair the free flips are
    constrained to an even count.
    """
    n = pair.n
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds enumeration cap {cap}")
    lo, hi = interval.lo, interval.hi
    if pair.kind is PairKind.UU:
        if not lo <= m <= hi:
            raise ValueError(f"m = {m} outside the support interval [{lo}, {hi}]")
        reps = []
        for extra in itertools.combinations(range(lo, hi), m - lo):
            image = list(range(lo)) + list(extra)
            complement = [j for j in range(n) if j not in set(image)]
            perm = tuple(image + complement)
            reps.append(WeylElement(perm, (1,) * n))
        return reps
    head = -1 if pair.kind is PairKind.UH_OSTAR else 1
    reps = []
    n_free = hi - lo
    for bits in itertools.product((1, -1), repeat=n_free):
        if pair.kind is PairKind.OEVEN_SP and bits.count(-1) % 2 != 0:
            continue
        signs = (head,) * lo + bits + (-head,) * (n - hi)
        reps.append(WeylElement(tuple(range(n)), signs))
    return reps


def eta_cosets_brute_force(pair: DualPairSpec, interval: SupportInterval, m: int) -> int:
    """Independent count of UU cosets by filtering all n! permutations."""
    if pair.kind is not PairKind.UU:
        raise ValueError("brute-force path is defined for the UU rule only")
    n, lo, hi = pair.n, interval.lo, interval.hi
    need_low = set(range(lo))
    need_high = set(range(hi, n))
    images = set()
    for perm in itertools.permutations(range(n)):
        image = set(perm[:m])
        if need_low <= image and need_high <= (set(range(n)) - image):
            images.add(frozenset(image))
    return len(images)


def vanishing_positive_roots(pair: DualPairSpec, m: int) -> tuple[Weight, ...]:
    """Positive roots of g' that vanish on the embedded torus h'(m)."""
    embedded = set(embedded_index_set(pair, m))
    out = []
    for alpha in pair.rs_gprime.positive_roots:
        if all(alpha[i] == 0 for i in embedded):
            out.append(alpha)
    return tuple(out)


def rho_z(pair: DualPairSpec, m: int) -> Weight:
    """Half-sum of the positive roots vanishing on the embedded torus."""
    acc = [Fraction(0)] * pair.rank_gprime
    for alpha in vanishing_positive_roots(pair, m):
        for k, c in enumerate(alpha):
            acc[k] += c
    return tuple(c / 2 for c in acc)


def z_weyl(pair: DualPairSpec, m: int, cap: int = ENUMERATION_CAP) -> Iterator[WeylElement]:
    """Weyl group of the vanishing-root subsystem, acting on all coordinates.

    UU leaves an A-type block on the complement indices; the Sp pairs leave
    a C-type block (signed permutations); the O* pair a D-type block (even
    sign changes).
    """
    N = pair.rank_gprime
    complement = sorted(set(range(N)) - set(embedded_index_set(pair, m)))
    k = len(complement)
    if k > cap:
        raise CapExceeded(f"complement size {k} exceeds enumeration cap {cap}")
    if k == 0:
        yield WeylElement(tuple(range(N)), (1,) * N)
        return
    family = {"A": "A", "C": "C", "D": "D"}[_PAIR_FAMILIES[pair.kind][1]]
    for perm_small in itertools.permutations(range(k)):
        sign_pools: Iterator[tuple[int, ...]]
        if family == "A":
            sign_pools = iter([(1,) * k])
        else:
            sign_pools = itertools.product((1, -1), repeat=k)
        for bits in sign_pools:
            if family == "D" and bits.count(-1) % 2 != 0:
                continue
            perm = list(range(N))
            signs = [1] * N
            for slot, img in enumerate(perm_small):
                perm[complement[slot]] = complement[img]
                signs[complement[slot]] = bits[slot]
            yield WeylElement(tuple(perm), tuple(signs))


def z_subsystem(pair: DualPairSpec, m: int) -> RootSystem:
    """The vanishing-root subsystem packaged as a RootSystem on all coords."""
    fam = {"A": "A", "C": "C", "D": "D"}[_PAIR_FAMILIES[pair.kind][1]]
    return RootSystem(fam, pair.rank_gprime, tuple(sorted(vanishing_positive_roots(pair, m))))
