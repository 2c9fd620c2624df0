"""Truncated formal power series over Python's arbitrary-precision integers,
plus the handful of specific series everything else is built from: the Euler
product, its reciprocal (the partition series), and the alternating
theta-type sums attached to the mex counter family.

A parallel bit-packed representation carries the same series mod 2.  Its
convolution is a shift-and-xor over the sparser operand's set bits and its
inversion is Newton doubling on big-int bitsets, which keeps parity scans up
to 1e5 cheap while the exact integer series stay at the few-thousand scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .partitions import MexParams


def pentagonal_pairs(limit: int) -> Iterator[tuple[int, int]]:
    """(k, k(3k-1)/2) for every integer k with value <= limit, value-ascending.

    The positive and negative branches interleave as 0, 1, 2, 5, 7, 12, 15...
    """
    if limit < 0:
        return
    yield 0, 0
    j = 1
    while True:
        u_pos = j * (3 * j - 1) // 2
        if u_pos > limit:
            return
        yield j, u_pos
        u_neg = j * (3 * j + 1) // 2
        if u_neg <= limit:
            yield -j, u_neg
        j += 1


def theta_exponents(params: MexParams, limit: int) -> Iterator[tuple[int, int]]:
    """(n, e_n) with e_n = t*(m*n^2 - (m-2)*n)/2, ascending, while e_n <= limit.

    The numerator n*(m*n - m + 2) is always even (n and m*n - m + 2 cannot
    both be odd), but the division is asserted rather than assumed.
    """
    m, t = params.m, params.t
    n = 0
    while True:
        num = n * (m * n - m + 2)
        assert num % 2 == 0, f"theta exponent numerator {num} not even at n={n}"
        e = t * (num // 2)
        if e > limit:
            return
        yield n, e
        n += 1


@dataclass(frozen=True)
class TruncatedSeries:
    """Exact integer coefficients 0..order of a formal power series in q.

    Arithmetic between series of different truncation orders truncates to the
    shorter one, so composite expressions remain exact on every coefficient
    they keep.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least its constant coefficient")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> "TruncatedSeries":
        return cls(tuple(int(c) for c in coeffs))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        if order >= self.order:
            return self
        return TruncatedSeries(self.coeffs[: order + 1])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coeffs[j] + other.coeffs[j] for j in range(n + 1)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coeffs[j] - other.coeffs[j] for j in range(n + 1)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product truncated to the shorter operand.

        Schoolbook, but walking only nonzero terms, so products against the
        sparse theta and Euler series cost O(order * sqrt(order)).
        """
        n = min(self.order, other.order)
        terms_a = [(i, c) for i, c in enumerate(self.coeffs[: n + 1]) if c]
        terms_b = [(i, c) for i, c in enumerate(other.coeffs[: n + 1]) if c]
        if len(terms_a) > len(terms_b):
            terms_a, terms_b = terms_b, terms_a
        out = [0] * (n + 1)
        for i, c in terms_a:
            for j, d in terms_b:
                if i + j > n:
                    break
                out[i + j] += c * d
        return TruncatedSeries(tuple(out))

    def invert_unit(self) -> "TruncatedSeries":
        """Reciprocal series g with self * g = 1 up to the truncation order.

        Triangular recurrence g_n = f0^-1 * (delta_{n,0} - sum f_k g_{n-k});
        the constant term must be +1 or -1, anything else is not invertible
        over the integers and raises ValueError.
        """
        f0 = self.coeffs[0]
        if f0 not in (1, -1):
            raise ValueError(f"constant term {f0} is not a unit; cannot invert")
        n_max = self.order
        nonzero = [(k, c) for k, c in enumerate(self.coeffs) if c and k]
        g = [0] * (n_max + 1)
        g[0] = f0
        for n in range(1, n_max + 1):
            acc = 0
            for k, c in nonzero:
                if k > n:
                    break
                acc += c * g[n - k]
            g[n] = -f0 * acc
        return TruncatedSeries(tuple(g))


@dataclass(frozen=True)
class ParitySeries:
    """A series reduced mod 2, packed into one int (bit j = coefficient of q^j)."""

    bits: int
    order: int

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be non-negative, got {self.order}")
        if self.bits < 0 or self.bits >> (self.order + 1):
            raise ValueError("bit pattern extends beyond the truncation order")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "ParitySeries":
        packed = 0
        for j, b in enumerate(bits):
            if b & 1:
                packed |= 1 << j
        return cls(packed, len(bits) - 1)

    def bit(self, j: int) -> int:
        if not 0 <= j <= self.order:
            raise IndexError(f"index {j} outside 0..{self.order}")
        return (self.bits >> j) & 1

    def bit_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.order + 1)]

    def count_odd(self, lo: int, hi: int) -> int:
        """Number of set bits in positions lo..hi inclusive."""
        if lo < 0 or hi > self.order or lo > hi:
            raise IndexError(f"range {lo}..{hi} outside 0..{self.order}")
        window = (self.bits >> lo) & ((1 << (hi - lo + 1)) - 1)
        return window.bit_count()

    def odd_positions(self, lo: int = 0, hi: int | None = None) -> list[int]:
        """Positions of set bits in lo..hi, ascending."""
        hi = self.order if hi is None else hi
        window = (self.bits >> lo) & ((1 << (hi - lo + 1)) - 1)
        out = []
        while window:
            low = window & -window
            out.append(lo + low.bit_length() - 1)
            window ^= low
        return out

    def first_odd_in(self, lo: int, hi: int) -> int | None:
        """Least position in lo..hi with a set bit, or None."""
        window = (self.bits >> lo) & ((1 << (hi - lo + 1)) - 1)
        if window == 0:
            return None
        return lo + (window & -window).bit_length() - 1

    def __mul__(self, other: "ParitySeries") -> "ParitySeries":
        """Xor-convolution truncated to the shorter operand.

        Word-level: shift-and-xor once per set bit of the sparser operand.
        """
        n = min(self.order, other.order)
        mask = (1 << (n + 1)) - 1
        a = self.bits & mask
        b = other.bits & mask
        if a.bit_count() > b.bit_count():
            a, b = b, a
        acc = 0
        while a:
            low = a & -a
            acc ^= b << (low.bit_length() - 1)
            a ^= low
        return ParitySeries(acc & mask, n)

    def invert_unit(self) -> "ParitySeries":
        """Reciprocal mod 2 by Newton doubling.

        If g inverts f to precision w, then g + g*(1 + f*g) inverts it to 2w
        (the error term squares).  The constant bit must be 1.
        """
        if not self.bits & 1:
            raise ValueError("constant bit is 0; cannot invert mod 2")
        n = self.order
        g = 1
        prec = 1
        while prec <= n:
            prec = min(2 * prec, n + 1)
            mask = (1 << prec) - 1
            err = (_gf2_mul(self.bits & mask, g) & mask) ^ 1
            g = (g ^ _gf2_mul(err, g)) & mask
        return ParitySeries(g, n)


def _gf2_mul(a: int, b: int) -> int:
    if a.bit_count() > b.bit_count():
        a, b = b, a
    acc = 0
    while a:
        low = a & -a
        acc ^= b << (low.bit_length() - 1)
        a ^= low
    return acc


def parity_reduce(f: TruncatedSeries) -> ParitySeries:
    """Coefficients mod 2 (signs die).

    Ring homomorphism: reducing a product equals the xor-convolution of the
    reductions, which the test suite exercises on random series.
    """
    bits = 0
    for j, c in enumerate(f.coeffs):
        if c & 1:
            bits |= 1 << j
    return ParitySeries(bits, f.order)


def euler_product(order: int) -> TruncatedSeries:
    """prod_{j>=1} (1 - q^j) truncated at `order`.

    By Euler's pentagonal number theorem the expansion is supported on the
    generalized pentagonal numbers k(3k-1)/2 with coefficient (-1)^k.
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    coeffs = [0] * (order + 1)
    for k, u in pentagonal_pairs(order):
        coeffs[u] = -1 if k & 1 else 1
    return TruncatedSeries(tuple(coeffs))


def partition_series(order: int) -> TruncatedSeries:
    """Coefficients p(0..order) of the reciprocal Euler product.

    Computed by the pentagonal recurrence
    p(n) = sum_{k != 0} (-1)^(k+1) p(n - k(3k-1)/2),
    which agrees coefficientwise with euler_product(order).invert_unit().
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    p = [0] * (order + 1)
    p[0] = 1
    pent = [(k, u) for k, u in pentagonal_pairs(order) if k]
    for n in range(1, order + 1):
        acc = 0
        for k, u in pent:
            if u > n:
                break
            if k & 1:
                acc += p[n - u]
            else:
                acc -= p[n - u]
        p[n] = acc
    return TruncatedSeries(tuple(p))


def partition_table_mod(order: int, modulus: int) -> list[int]:
    """Residues p(0..order) mod `modulus`, by the same pentagonal recurrence.

    Exact residue arithmetic throughout; p(n) itself is astronomically large
    long before the congruence checks stop caring.
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    if modulus < 2:
        raise ValueError(f"modulus must be at least 2, got {modulus}")
    p = [0] * (order + 1)
    p[0] = 1
    pent = [(k, u) for k, u in pentagonal_pairs(order) if k]
    for n in range(1, order + 1):
        acc = 0
        for k, u in pent:
            if u > n:
                break
            if k & 1:
                acc += p[n - u]
            else:
                acc -= p[n - u]
        p[n] = acc % modulus
    return p


def mex_theta(params: MexParams, order: int) -> TruncatedSeries:
    """The alternating sparse sum with (-1)^n at exponent t*(m*n^2-(m-2)*n)/2.

    m = 1 puts the support on triangular numbers scaled by t; m = 2 on t*n^2.
    Multiplying by the partition series turns it into the counter series.
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    coeffs = [0] * (order + 1)
    for n, e in theta_exponents(params, order):
        coeffs[e] = -1 if n & 1 else 1
    return TruncatedSeries(tuple(coeffs))
