"""Congruence transfer and the classical divisibility families."""

from __future__ import annotations

import random

import pytest

from mexpart import (
    CongruenceReport,
    HypothesisError,
    MexParams,
    delta,
    p_mtt_series,
    verify_ramanujan_family,
    verify_transfer,
)


class TestDelta:
    @pytest.mark.parametrize("prime,expected", [(5, 4), (7, 5), (11, 6)])
    def test_classical_offsets(self, prime, expected):
        assert delta(prime, 1) == expected

    @pytest.mark.parametrize("prime", [5, 7, 11, 13, 23])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_defining_property(self, prime, k):
        d = delta(prime, k)
        assert 1 <= d < prime**k
        assert (24 * d) % prime**k == 1

    def test_non_coprime_rejected(self):
        with pytest.raises(ValueError):
            delta(2, 1)
        with pytest.raises(ValueError):
            delta(3, 2)

    def test_bad_k_rejected(self):
        with pytest.raises(ValueError):
            delta(5, 0)


class TestVerifyTransfer:
    def test_classical_progression_transfers(self):
        report = verify_transfer(5, 4, 5, 1, 1, 200)
        assert report.ok
        assert report.failures == ()
        assert report.residues_checked == 201
        assert report.progression == (5, 4)

    def test_hypothesis_violation_detected(self):
        # p on the even progression is not uniformly even (p(0)=1, p(4)=5, ...)
        with pytest.raises(HypothesisError) as err:
            verify_transfer(2, 0, 2, 1, 1, 50)
        assert err.value.values["modulus"] == 2

    def test_single_point_range(self):
        report = verify_transfer(5, 4, 5, 1, 1, 0)
        assert report.residues_checked == 1
        assert report.ok

    def test_bad_arguments_rejected(self):
        with pytest.raises(ValueError):
            verify_transfer(0, 4, 5, 1, 1, 10)
        with pytest.raises(ValueError):
            verify_transfer(5, -1, 5, 1, 1, 10)
        with pytest.raises(ValueError):
            verify_transfer(5, 4, 1, 1, 1, 10)
        with pytest.raises(ValueError):
            verify_transfer(5, 4, 5, 0, 1, 10)
        with pytest.raises(ValueError):
            verify_transfer(5, 4, 5, 1, 1, -1)

    def test_report_roundtrip(self):
        report = verify_transfer(5, 4, 5, 2, 3, 25)
        assert CongruenceReport.from_dict(report.to_dict()) == report


class TestRamanujanFamilies:
    def test_family_five(self):
        report = verify_ramanujan_family(5, 1, 3, 2, 200)
        assert report.ok
        assert report.progression == (5, 4)
        assert report.modulus == 5

    def test_family_seven_power_two(self):
        report = verify_ramanujan_family(7, 2, 1, 1, 40)
        assert report.ok
        assert report.modulus == 49
        assert report.progression == (49, delta(7, 2))
        assert delta(7, 2) == 47

    def test_family_seven_modulus_grows_every_other_step(self):
        assert verify_ramanujan_family(7, 1, 1, 1, 10).modulus == 7
        assert verify_ramanujan_family(7, 2, 1, 1, 10).modulus == 49
        assert verify_ramanujan_family(7, 3, 1, 1, 2).modulus == 49

    def test_family_eleven(self):
        report = verify_ramanujan_family(11, 1, 2, 1, 100)
        assert report.ok
        assert report.progression == (11, 6)

    def test_unknown_family_rejected(self):
        with pytest.raises(ValueError):
            verify_ramanujan_family(13, 1, 1, 1, 10)

    def test_spot_reverification_by_series_route(self):
        # independent route: full-integer series coefficients reduced mod 5
        rng = random.Random(20240801)
        prime, k, m, t = 5, 1, 2, 1
        report = verify_ramanujan_family(prime, k, m, t, 60)
        assert report.ok
        a, b = report.progression
        params = MexParams(m=m, t=a * t)
        picks = rng.sample(range(61), 5)
        series = p_mtt_series(params, a * max(picks) + b)
        for n in picks:
            assert series[a * n + b] % report.modulus == 0
