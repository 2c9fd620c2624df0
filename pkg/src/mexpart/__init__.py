"""Mex-conditioned partition counters.

For a modulus A and residue a, mex(parts, A, a) is the smallest positive
integer congruent to a mod A that is not a part; the counter p_[A,a](n)
counts partitions of n whose mex falls in the class a mod 2A.  This package
computes the (A, a) = (m*t, t) family by three independent routes
(enumeration, generating function, partition identity) and mechanically
verifies its parity distribution and Ramanujan-type congruences.
"""

__version__ = "0.1.0"

from .congruences import (
    RAMANUJAN_PRIMES,
    CongruenceReport,
    delta,
    verify_ramanujan_family,
    verify_transfer,
)
from .errors import HypothesisError, VerificationError
from .mexfun import (
    ROUTES,
    PentagonalIndex,
    generalized_pentagonals_upto,
    p_mtt,
    p_mtt_identity,
    p_mtt_series,
)
from .parity import (
    NeighborSet,
    ScanReport,
    in_odd_interval,
    nonrepresentable_as_theta,
    odd_interval_witness,
    odd_witness_tower,
    p_mtt_parity_series,
    parity_recurrence_check,
    parity_scan,
    pentagonal_tower,
    theta_exponent_test,
    theta_odd_density,
    theta_parity_series,
)
from .partitions import (
    ORACLE_CEILING,
    MexParams,
    Partition,
    enumerate_partitions,
    mex,
    p_Aa_oracle,
    partition_count_oracle,
)
from .series import (
    ParitySeries,
    TruncatedSeries,
    euler_product,
    mex_theta,
    parity_reduce,
    partition_series,
    partition_table_mod,
    pentagonal_pairs,
    theta_exponents,
)

__all__ = [
    "CongruenceReport",
    "HypothesisError",
    "MexParams",
    "NeighborSet",
    "ORACLE_CEILING",
    "ParitySeries",
    "Partition",
    "PentagonalIndex",
    "RAMANUJAN_PRIMES",
    "ROUTES",
    "ScanReport",
    "TruncatedSeries",
    "VerificationError",
    "delta",
    "enumerate_partitions",
    "euler_product",
    "generalized_pentagonals_upto",
    "in_odd_interval",
    "mex",
    "mex_theta",
    "nonrepresentable_as_theta",
    "odd_interval_witness",
    "odd_witness_tower",
    "p_Aa_oracle",
    "p_mtt",
    "p_mtt_identity",
    "p_mtt_parity_series",
    "p_mtt_series",
    "parity_reduce",
    "parity_recurrence_check",
    "parity_scan",
    "partition_count_oracle",
    "partition_series",
    "partition_table_mod",
    "pentagonal_pairs",
    "pentagonal_tower",
    "theta_exponent_test",
    "theta_exponents",
    "theta_odd_density",
    "theta_parity_series",
    "verify_ramanujan_family",
    "verify_transfer",
]
