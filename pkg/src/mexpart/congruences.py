"""Ramanujan-type congruence verification for the counter family.

The transfer principle: when every p(an+b) is divisible by k, the identity
route writes p_{mat,at}(an+b) as a signed sum of exactly such terms, so the
same divisibility follows for the counter.  All arithmetic here runs on
residue tables; the full integers would be astronomical and are never built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import HypothesisError
from .mexfun import p_mtt_identity
from .partitions import MexParams
from .series import partition_table_mod

RAMANUJAN_PRIMES = (5, 7, 11)


@dataclass(frozen=True)
class CongruenceReport:
    """Outcome of checking p_{mat,at}(an+b) = 0 mod `modulus` over 0..n_max."""

    modulus: int
    progression: tuple[int, int]  # (a, b)
    m: int
    t: int
    n_max: int
    failures: tuple[int, ...]
    residues_checked: int

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "progression": list(self.progression),
            "m": self.m,
            "t": self.t,
            "n_max": self.n_max,
            "failures": list(self.failures),
            "residues_checked": self.residues_checked,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CongruenceReport":
        return cls(
            modulus=d["modulus"],
            progression=(d["progression"][0], d["progression"][1]),
            m=d["m"],
            t=d["t"],
            n_max=d["n_max"],
            failures=tuple(d["failures"]),
            residues_checked=d["residues_checked"],
        )


def delta(prime: int, k: int) -> int:
    """Least positive d with 24*d = 1 mod prime^k.

    The progression offset of the classical congruence families: 4, 5, 6 for
    primes 5, 7, 11 at k = 1.  Any prime coprime to 24 works; 2 and 3 raise.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if prime < 2:
        raise ValueError(f"prime must be at least 2, got {prime}")
    modulus = prime**k
    if math.gcd(24, modulus) != 1:
        raise ValueError(f"24 is not invertible modulo {prime}^{k}")
    return pow(24, -1, modulus)


def verify_transfer(a: int, b: int, modulus: int, m: int, t: int, n_max: int) -> CongruenceReport:
    """Check p_{mat,at}(an+b) = 0 mod `modulus` for n = 0..n_max.

    The hypothesis p(aj+b) = 0 mod `modulus` is never trusted: it is
    re-verified over the whole range the identity route touches, and a
    violation raises HypothesisError (bad input) rather than polluting the
    failure list (theorem failure).  That guards against off-by-ones in the
    progression offset as much as in the recurrence.
    """
    if a < 1:
        raise ValueError(f"progression step a must be positive, got {a}")
    if b < 0:
        raise ValueError(f"progression offset b must be non-negative, got {b}")
    if modulus < 2:
        raise ValueError(f"modulus must be at least 2, got {modulus}")
    if m < 1 or t < 1:
        raise ValueError(f"m and t must be positive, got m={m}, t={t}")
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    table = partition_table_mod(a * n_max + b, modulus)
    for j in range(n_max + 1):
        residue = table[a * j + b]
        if residue:
            raise HypothesisError(
                f"p({a}*{j}+{b}) = {residue} mod {modulus}: "
                "the progression does not satisfy the divisibility hypothesis",
                n=j,
                residue=residue,
                modulus=modulus,
            )
    params = MexParams(m=m, t=a * t)
    failures = []
    for n in range(n_max + 1):
        if p_mtt_identity(params, a * n + b, table) % modulus:
            failures.append(n)
    return CongruenceReport(
        modulus=modulus,
        progression=(a, b),
        m=m,
        t=t,
        n_max=n_max,
        failures=tuple(failures),
        residues_checked=n_max + 1,
    )


def verify_ramanujan_family(prime: int, k: int, m: int, t: int, n_max: int) -> CongruenceReport:
    """One classical family at power k: progression (prime^k, delta(prime, k)).

    Family moduli: 5^k and 11^k for primes 5 and 11, but 7^(floor(k/2)+1) for
    prime 7; the 7-family gains a power only every other step and that
    asymmetry is easy to get wrong, so it is spelled out here once.
    """
    if prime not in RAMANUJAN_PRIMES:
        raise ValueError(f"family prime must be one of {RAMANUJAN_PRIMES}, got {prime}")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    a = prime**k
    b = delta(prime, k)
    modulus = 7 ** (k // 2 + 1) if prime == 7 else prime**k
    return verify_transfer(a, b, modulus, m, t, n_max)
