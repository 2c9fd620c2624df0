"""Parity distribution of the counters: even-count scans against the
sqrt(X/3) threshold, the mod-2 pentagonal recurrence, odd-witness intervals,
and the recursive interval tower that pins infinitely many odd values of
p_{mp,p} for suitable residue classes.

Everything here works on bit-packed parity series end to end; exact integer
series enter only when a witness's actual value is wanted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import pairwise

from .errors import VerificationError
from .partitions import MexParams
from .series import ParitySeries, pentagonal_pairs, theta_exponents


@dataclass(frozen=True)
class NeighborSet:
    """n minus each generalized pentagonal number not exceeding n."""

    n: int
    members: frozenset[int]

    @classmethod
    def of(cls, n: int) -> "NeighborSet":
        if n < 0:
            raise ValueError(f"n must be non-negative, got {n}")
        return cls(n, frozenset(n - u for _, u in pentagonal_pairs(n)))

    def __len__(self) -> int:
        return len(self.members)


def in_odd_interval(n: int) -> bool:
    """Whether |NeighborSet.of(n)| is odd, by the interval characterization.

    The size is 2k-1 exactly when u_{-(k-1)} <= n < u_k, so odd sizes happen
    on the ranges [(k-1)(3k-2)/2, k(3k-1)/2).
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    k = 1
    while True:
        lo = (k - 1) * (3 * k - 2) // 2
        if n < lo:
            return False
        if n < k * (3 * k - 1) // 2:
            return True
        k += 1


@dataclass(frozen=True)
class ScanReport:
    """Even/odd tallies of one counter over n = 1..X, with the scan threshold."""

    params: MexParams
    X: int
    even_count: int
    odd_count: int
    threshold: float
    meets_threshold: bool
    witnesses: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        return {
            "params": {"m": self.params.m, "t": self.params.t},
            "X": self.X,
            "even_count": self.even_count,
            "odd_count": self.odd_count,
            "threshold": self.threshold,
            "meets_threshold": self.meets_threshold,
            "witnesses": None if self.witnesses is None else list(self.witnesses),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ScanReport":
        wits = d["witnesses"]
        return cls(
            params=MexParams(d["params"]["m"], d["params"]["t"]),
            X=d["X"],
            even_count=d["even_count"],
            odd_count=d["odd_count"],
            threshold=d["threshold"],
            meets_threshold=d["meets_threshold"],
            witnesses=None if wits is None else tuple(wits),
        )


def theta_parity_series(params: MexParams, order: int) -> ParitySeries:
    """Theta coefficients mod 2: one bit per exponent.

    The signs die mod 2 and the exponents strictly increase, so no bit ever
    cancels.
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    bits = 0
    for _, e in theta_exponents(params, order):
        bits |= 1 << e
    return ParitySeries(bits, order)


def p_mtt_parity_series(params: MexParams, order: int) -> ParitySeries:
    """Counter parities 0..order in one xor-convolution.

    The reciprocal of the Euler-product parity (Newton on bitsets) times the
    theta parity; integer-free, so scans to 1e5 stay well under a second.
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    euler_bits = 0
    for _, u in pentagonal_pairs(order):
        euler_bits |= 1 << u
    recip = ParitySeries(euler_bits, order).invert_unit()
    return recip * theta_parity_series(params, order)


def theta_exponent_test(params: MexParams, v: int) -> int | None:
    """The index k >= 1 whose theta exponent equals v, if one exists.

    The exponents are strictly increasing in k, so an incremental scan with
    early exit decides membership exactly; no floating-point root finding.
    """
    if v < 0:
        raise ValueError(f"v must be non-negative, got {v}")
    for k, e in theta_exponents(params, v):
        if k >= 1 and e == v:
            return k
    return None


def parity_recurrence_check(
    params: MexParams, n: int, parities: ParitySeries | None = None
) -> tuple[int, int]:
    """Both sides of the mod-2 pentagonal recurrence at n.

    Returns (computed, expected): the xor of counter parities at n minus each
    generalized pentagonal number, and the indicator of n being a theta
    exponent.  They agree for every n >= 1; a shared `parities` series avoids
    recomputation across a scan.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if parities is None or parities.order < n:
        parities = p_mtt_parity_series(params, n)
    computed = 0
    for _, u in pentagonal_pairs(n):
        computed ^= parities.bit(n - u)
    expected = 0 if theta_exponent_test(params, n) is None else 1
    return computed, expected


def odd_interval_witness(
    params: MexParams, r: int, parities: ParitySeries | None = None
) -> int | None:
    """Least n in [2r-1, r(3r-1)/2] where the counter is odd.

    Applicable for r >= 2.  When r(3r-1) is not of the form 2*e_k (a doubled
    theta exponent), a witness must exist; finding none then raises
    VerificationError.  When r(3r-1) is of that form the guarantee is off and
    a fruitless scan returns None.
    """
    if r < 2:
        raise ValueError(f"r must be at least 2, got {r}")
    lo = 2 * r - 1
    hi = r * (3 * r - 1) // 2
    if parities is None or parities.order < hi:
        parities = p_mtt_parity_series(params, hi)
    witness = parities.first_odd_in(lo, hi)
    if witness is None:
        # r(3r-1) is even, so "2*e_k = r(3r-1)" reduces to a plain exponent test
        if theta_exponent_test(params, r * (3 * r - 1) // 2) is None:
            raise VerificationError(
                f"no odd value of p_{{{params.A},{params.a}}} in [{lo}, {hi}] "
                f"although the witness hypothesis holds at r={r}",
                m=params.m,
                t=params.t,
                r=r,
            )
        return None
    return witness


def nonrepresentable_as_theta(s: int, p: int, m: int) -> bool:
    """Whether s(3s-1) avoids the value set {(m*k^2-(m-2)*k)*p : k >= 1}.

    Exhaustive in k until the values pass the target.  Under the residue
    preconditions (s = 2 mod 3, p = 1 mod 3, m not divisible by 3) the answer
    is always True; False would be a verification failure upstream.  p must
    additionally be prime for the guarantee; primality is the caller's duty
    and is not tested here.
    """
    if s < 1 or s % 3 != 2:
        raise ValueError(f"s must be positive and congruent to 2 mod 3, got {s}")
    if p < 1 or p % 3 != 1:
        raise ValueError(f"p must be positive and congruent to 1 mod 3, got {p}")
    if m < 1 or m % 3 == 0:
        raise ValueError(f"m must be positive and not divisible by 3, got {m}")
    target = s * (3 * s - 1)
    k = 1
    while True:
        value = (m * k * k - (m - 2) * k) * p
        if value == target:
            return False
        if value > target:
            return True
        k += 1


def pentagonal_tower(s: int, limit: int) -> list[int]:
    """a_0 = s, a_{next} = a(3a-1)/2, kept while <= limit.

    Each element is the generalized pentagonal number indexed by the previous
    one.  Every element stays congruent to 2 mod 3 and consecutive elements
    leave room for the witness interval [2a-1, a_next]; both facts are
    asserted because the tower construction relies on them.
    """
    if s < 2 or s % 3 != 2:
        raise ValueError(f"tower seed must be >= 2 and congruent to 2 mod 3, got {s}")
    tower = [s]
    while True:
        a = tower[-1]
        nxt = a * (3 * a - 1) // 2
        if nxt > limit:
            return tower
        assert nxt % 3 == 2, f"tower left its residue class at {nxt}"
        assert nxt - (2 * a - 1) >= 2, f"degenerate witness interval after {a}"
        tower.append(nxt)


def parity_scan(
    params: MexParams,
    X: int,
    include_witnesses: bool = False,
    parities: ParitySeries | None = None,
) -> ScanReport:
    """Tally even and odd counter values over n = 1..X.

    n = 0 is excluded: the empty partition makes every counter 1 there, which
    says nothing about the even count.  The threshold sqrt(X/3) is recorded
    and compared, never asserted; at desk scale the margin is what matters.
    """
    if X < 1:
        raise ValueError(f"X must be at least 1, got {X}")
    if parities is None or parities.order < X:
        parities = p_mtt_parity_series(params, X)
    odd = parities.count_odd(1, X)
    even = X - odd
    threshold = math.sqrt(X / 3)
    return ScanReport(
        params=params,
        X=X,
        even_count=even,
        odd_count=odd,
        threshold=threshold,
        meets_threshold=even >= threshold,
        witnesses=tuple(parities.odd_positions(1, X)) if include_witnesses else None,
    )


def odd_witness_tower(m: int, p: int, X: int, s: int = 2) -> list[tuple[tuple[int, int], int]]:
    """One odd value of p_{mp,p} in every tower interval [2a_k - 1, a_{k+1}] below X.

    Preconditions pin the residue classes the construction needs: m positive
    and not divisible by 3, p a prime congruent to 1 mod 3 (trial division,
    desk-scale p), seed s congruent to 2 mod 3, X >= s.  Returns
    ((lo, hi), witness) per complete interval; any interval without one is a
    verification failure.
    """
    if m < 1 or m % 3 == 0:
        raise ValueError(f"m must be positive and not divisible by 3, got {m}")
    if p % 3 != 1 or not _is_prime(p):
        raise ValueError(f"p must be a prime congruent to 1 mod 3, got {p}")
    if X < s:
        raise ValueError(f"X must be at least the tower seed, got X={X}, s={s}")
    tower = pentagonal_tower(s, X)
    if len(tower) < 2:
        return []
    params = MexParams(m=m, t=p)
    parities = p_mtt_parity_series(params, tower[-1])
    results = []
    for a_k, a_next in pairwise(tower):
        witness = odd_interval_witness(params, a_k, parities=parities)
        if witness is None:
            # unreachable when the residue preconditions hold; treat a hole
            # in the tower as a failed verification, not a soft miss
            raise VerificationError(
                f"tower interval [{2 * a_k - 1}, {a_next}] lost its witness guarantee",
                m=m,
                p=p,
                a_k=a_k,
            )
        results.append(((2 * a_k - 1, a_next), witness))
    return results


def theta_odd_density(
    params: MexParams, X: int, num_checkpoints: int = 200
) -> list[tuple[int, int, float]]:
    """Empirical density of odd theta-parity coefficients among 1..x.

    Rows (x, odd_count, odd_count/x) at roughly evenly spaced checkpoints up
    to X.  The support thins out like sqrt(x), so the density decays toward
    zero; this curve is reported as data, the decay is not asserted.
    """
    if X < 1:
        raise ValueError(f"X must be at least 1, got {X}")
    if num_checkpoints < 1:
        raise ValueError(f"need at least one checkpoint, got {num_checkpoints}")
    exponents = [e for _, e in theta_exponents(params, X) if e >= 1]
    step = max(1, X // num_checkpoints)
    xs = list(range(step, X + 1, step))
    if xs[-1] != X:
        xs.append(X)
    rows = []
    i = 0
    for x in xs:
        while i < len(exponents) and exponents[i] <= x:
            i += 1
        rows.append((x, i, i / x))
    return rows


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True
