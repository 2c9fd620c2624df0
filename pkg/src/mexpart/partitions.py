"""Ground truth: partition enumeration, the mex statistic, and the
enumeration-based counter that every faster route is checked against.

A partition of n is a non-increasing sequence of positive integers summing to
n.  For a modulus A and residue a with 1 <= a <= A, mex(parts, A, a) is the
smallest positive integer congruent to a mod A that is not a part.  The
counter counts partitions of n whose mex lands in the residue class a mod 2A.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

# p(80) is about 1.6e7, roughly a minute of full enumeration; nothing refuses
# larger n, but the CLI warns past this point.
ORACLE_CEILING = 80


@dataclass(frozen=True)
class Partition:
    """A non-increasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        prev = None
        for p in self.parts:
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
            if prev is not None and p > prev:
                raise ValueError("parts must be non-increasing")
            prev = p

    @property
    def n(self) -> int:
        """The number being partitioned; 0 for the empty partition."""
        return sum(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class MexParams:
    """The (m, t) pair selecting one counter of the family.

    The induced mex parameters are modulus A = m*t and residue a = t.
    """

    m: int
    t: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.t < 1:
            raise ValueError(f"m and t must be positive, got m={self.m}, t={self.t}")

    @property
    def A(self) -> int:
        return self.m * self.t

    @property
    def a(self) -> int:
        return self.t


def _check_mod_pair(A: int, a: int) -> None:
    if A < 1:
        raise ValueError(f"modulus A must be positive, got {A}")
    if not 1 <= a <= A:
        raise ValueError(f"residue a must satisfy 1 <= a <= A, got a={a}, A={A}")


def _partition_tuples(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n as plain tuples, lexicographically decreasing.

    Each step decrements the last part exceeding 1 and redistributes the
    freed amount greedily, which is the classic successor rule for this
    order.
    """
    if n == 0:
        yield ()
        return
    parts = [n]
    while True:
        yield tuple(parts)
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        rem = len(parts) - i  # the trailing ones plus the unit taken below
        parts[i] -= 1
        cap = parts[i]
        del parts[i + 1:]
        while rem > 0:
            chunk = min(cap, rem)
            parts.append(chunk)
            rem -= chunk


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, lexicographically decreasing.

    The order is fixed so that enumeration-based runs are reproducible
    byte for byte.  n = 0 yields exactly the empty partition.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    for parts in _partition_tuples(n):
        yield Partition(parts)


def mex(parts: Iterable[int], A: int, a: int) -> int:
    """Smallest positive integer congruent to a mod A that is not a part.

    Membership is tested against a set rather than by a sorted scan: the
    answer can exceed the largest part (e.g. parts 4+1 with A=3, a=1 give 7),
    so the cost is O(len(parts) + answer/A).
    """
    _check_mod_pair(A, a)
    present = set(parts)
    x = a
    while x in present:
        x += A
    return x


def p_Aa_oracle(n: int, A: int, a: int) -> int:
    """Count partitions of n with mex in the class a mod 2A, by definition.

    Full enumeration; exact at any n, practical up to ORACLE_CEILING.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    _check_mod_pair(A, a)
    period = 2 * A
    count = 0
    # mex inlined: this loop runs p(n) times
    for parts in _partition_tuples(n):
        present = set(parts)
        x = a
        while x in present:
            x += A
        if x % period == a:
            count += 1
    return count


def partition_count_oracle(n: int) -> int:
    """p(n) by counting the enumeration stream."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return sum(1 for _ in _partition_tuples(n))
