"""The production routes for the counter family p_{mt,t}(n).

Three independent ways to the same number: full enumeration (the definition),
coefficient extraction from the generating function, and a finite identity in
ordinary partition numbers.  The dispatcher can run them against each other;
disagreement is a VerificationError, never a warning.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .errors import VerificationError
from .partitions import ORACLE_CEILING, MexParams, p_Aa_oracle
from .series import TruncatedSeries, mex_theta, partition_series, pentagonal_pairs

ROUTES = ("oracle", "series", "identity")


class PentagonalIndex(NamedTuple):
    """A generalized pentagonal number u = k(3k-1)/2 with its index k."""

    k: int
    u: int


def generalized_pentagonals_upto(X: int) -> list[PentagonalIndex]:
    """All (k, u) with 0 <= u <= X, sorted by u ascending.

    There are Theta(sqrt(X)) of them, which is what makes neighbor-set
    and scan arguments cheap.
    """
    if X < 0:
        raise ValueError(f"X must be non-negative, got {X}")
    return [PentagonalIndex(k, u) for k, u in pentagonal_pairs(X)]


def p_mtt_series(params: MexParams, order: int) -> TruncatedSeries:
    """Counter values p_{mt,t}(0..order) as coefficients: the partition series
    times the alternating theta sum."""
    return partition_series(order) * mex_theta(params, order)


def p_mtt_identity(params: MexParams, n: int, p_table: Sequence[int]) -> int:
    """Counter value at n from a table of ordinary partition numbers.

    Evaluates p(n) + sum_r p(n - t*r*(2rm-m+2)) - sum_s p(n - t*(2s-1)*(sm-m+1)),
    each sum stopping once its shifted argument turns negative (p of a
    negative integer is zero).  Handing in a table of residues mod k yields
    the counter's residue mod k; the congruence checks rely on that.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if len(p_table) < n + 1:
        raise ValueError(f"p_table holds {len(p_table)} values, need at least {n + 1}")
    m, t = params.m, params.t
    total = p_table[n]
    r = 1
    while True:
        shift = t * r * (2 * r * m - m + 2)
        if shift > n:
            break
        total += p_table[n - shift]
        r += 1
    s = 1
    while True:
        shift = t * (2 * s - 1) * (s * m - m + 1)
        if shift > n:
            break
        total -= p_table[n - shift]
        s += 1
    return total


def p_mtt(
    params: MexParams,
    n: int,
    route: str = "series",
    *,
    checked: bool = False,
    p_table: Sequence[int] | None = None,
) -> int:
    """Counter value by the requested route.

    With checked=True every other route is recomputed as well (enumeration
    only up to ORACLE_CEILING unless it is the route that was asked for) and
    any disagreement raises VerificationError carrying all computed values.
    Checked mode is the CLI default; library hot paths leave it off.
    """
    if route not in ROUTES:
        raise ValueError(f"route must be one of {ROUTES}, got {route!r}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    values: dict[str, int] = {}
    for rt in (ROUTES if checked else (route,)):
        if rt == "oracle":
            if rt != route and n > ORACLE_CEILING:
                continue  # cross-checks stay at desk scale
            values[rt] = p_Aa_oracle(n, params.A, params.a)
        elif rt == "series":
            values[rt] = p_mtt_series(params, n)[n]
        else:
            table = p_table if p_table is not None else partition_series(n).coeffs
            values[rt] = p_mtt_identity(params, n, table)
    if checked and len(set(values.values())) > 1:
        raise VerificationError(
            f"routes disagree at m={params.m}, t={params.t}, n={n}: {values}",
            **values,
        )
    return values[route]
