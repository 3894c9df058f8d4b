"""Seed family: derived integers, chains, membership, splitting, certificates."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from nctorus import (
    BadInput,
    BadSeed,
    ChainFailure,
    DEFAULT_KAPPAS,
    IndeterminateSign,
    Interval,
    Kappas,
    NotCoprime,
    SeedParams,
    ThetaLinear,
    certify,
    certify_grid,
    derive,
    gdelta_cover,
    interval,
    lemma31_arithmetic,
    member,
    seed_grid,
    verify_chain,
    verify_identities,
)
from nctorus.gclass import chain_parts

F = Fraction

CHAIN_LINKS = (
    "outer_lo_lt_rs",
    "rs_lt_window_lo",
    "window_lo_lt_window_hi",
    "window_hi_lt_pq",
    "pq_lt_outer_hi",
)

IDENTITY_NAMES = (
    "ps_qr_unimodular",
    "sA_Br_unimodular",
    "two_s_eq_B_plus_4m2",
    "s2_q2_eq_4m2_B",
    "one_rs_pq_eq_4m2_A",
    "rm2_minus_s_halfshift",
    "kq_pm_gap",
    "ks_mr_gap",
)


@st.composite
def valid_seeds(draw, max_km: int = 15, odd_only: bool = False):
    grid = seed_grid(max_km, odd_only=odd_only)
    return draw(st.sampled_from(grid))


class TestSeedValidation:
    def test_rejects_bad_seeds(self):
        for k, m in ((0, 3), (1, 0), (1, 2), (2, 4), (3, 6), (2, 3)):
            with pytest.raises(BadSeed):
                SeedParams(k, m)

    def test_accepts_valid(self):
        assert SeedParams(1, 3).to_json() == {"k": 1, "m": 3}
        SeedParams(19, 39)


class TestDerive:
    def test_frozen_small_seed(self):
        d = derive(SeedParams(1, 3))
        assert (d.n, d.q, d.s, d.p, d.r, d.A, d.B) == (13, 169, 205, 108, 131, 239, 374)

    def test_frozen_next_seed(self):
        d = derive(SeedParams(1, 5))
        assert (d.n, d.q, d.s, d.p, d.r, d.A, d.B) == (21, 441, 541, 172, 211, 383, 982)

    @given(valid_seeds())
    def test_unimodular_rows(self, seed):
        d = derive(seed)
        assert d.p * d.s - d.q * d.r == 1
        assert d.s * d.A - d.B * d.r == 1
        assert d.s - d.q == 4 * seed.m * seed.m


class TestIdentities:
    def test_names_in_order(self):
        names = tuple(name for name, _ in verify_identities(SeedParams(1, 3)))
        assert names == IDENTITY_NAMES

    @given(valid_seeds())
    def test_all_hold(self, seed):
        assert all(flag for _, flag in verify_identities(seed))


class TestKappas:
    def test_default(self):
        assert DEFAULT_KAPPAS.k1 == F(3, 4)
        assert DEFAULT_KAPPAS.k2 == F(1, 2)

    def test_rejections(self):
        with pytest.raises(BadInput):
            Kappas(F(3, 5), F(3, 10))  # sum not above one
        with pytest.raises(BadInput):
            Kappas(F(1, 2), F(1, 2))  # k1 must exceed 1/2
        with pytest.raises(BadInput):
            Kappas(F(5, 4), F(1, 2))  # k1 must stay below 1
        with pytest.raises(BadInput):
            Kappas(F(3, 4), F(3, 5))  # k2 must stay at or below 1/2
        with pytest.raises(BadInput):
            Kappas(F(3, 4), F(0, 1))  # k2 must be positive

    def test_boundary_accepted(self):
        Kappas(F(99, 100), F(1, 2))
        Kappas(F(2, 3), F(1, 2))


class TestChain:
    def test_link_names(self):
        parts = chain_parts(SeedParams(1, 3), DEFAULT_KAPPAS)
        assert tuple(parts) == CHAIN_LINKS

    @given(valid_seeds())
    def test_holds_on_grid_defaults(self, seed):
        assert verify_chain(seed, DEFAULT_KAPPAS)

    def test_breaks_under_extreme_slack(self):
        kap = Kappas(F(99, 100), F(1, 2))
        parts = chain_parts(SeedParams(1, 3), kap)
        assert parts["rs_lt_window_lo"] is False
        with pytest.raises(ChainFailure) as err:
            interval(SeedParams(1, 3), kap)
        assert "rs_lt_window_lo" in str(err.value)


class TestInterval:
    def test_frozen_endpoints(self):
        iv = interval(SeedParams(1, 3), DEFAULT_KAPPAS)
        # (pq - k1)/q^2 and (rs + k2)/s^2 with the derived integers for 1/3
        assert iv.lo == F(108 * 169 * 4 - 3, 4 * 169 * 169)
        assert iv.hi == F(131 * 205 * 2 + 1, 2 * 205 * 205)

    @given(valid_seeds())
    def test_nested_between_ratios(self, seed):
        d = derive(seed)
        iv = interval(seed, DEFAULT_KAPPAS)
        assert F(d.r, d.s) < iv.lo < iv.hi < F(d.p, d.q)
        assert F(2 * seed.k * seed.m - 1, 2 * seed.m * seed.m) < F(d.r, d.s)
        assert F(d.p, d.q) < F(2 * seed.k, seed.m)

    @given(valid_seeds())
    def test_width_below_inverse_q_squared(self, seed):
        d = derive(seed)
        iv = interval(seed, DEFAULT_KAPPAS)
        assert iv.width() < F(1, d.q * d.q)

    def test_cover_returns_one_interval_per_seed(self):
        seeds = [SeedParams(1, 3), SeedParams(2, 5)]
        ivs = gdelta_cover(seeds, DEFAULT_KAPPAS)
        assert len(ivs) == 2
        assert all(isinstance(iv, Interval) for iv in ivs)
        assert ivs[0] == interval(seeds[0], DEFAULT_KAPPAS)


class TestMember:
    def test_rejects_theta_outside_unit_interval(self):
        with pytest.raises(BadInput):
            member(F(3, 2))
        with pytest.raises(BadInput):
            member(0)

    def test_generic_rational_misses(self):
        assert member(F(1, 2), kmax=10) == []

    def test_midpoint_recovered(self):
        seed = SeedParams(1, 3)
        theta = interval(seed, DEFAULT_KAPPAS).midpoint()
        assert seed in member(theta, DEFAULT_KAPPAS, kmax=3)

    def test_grid_sizes(self):
        assert len(seed_grid(5, odd_only=True)) == 3
        assert len(seed_grid(5, odd_only=False)) == 4
        assert len(seed_grid(40, odd_only=True)) == 158


class TestLemma31:
    def test_rejects_degenerate_pairs(self):
        window = Interval(F(1, 3), F(1, 2))
        with pytest.raises(NotCoprime):
            lemma31_arithmetic(2, 4, ThetaLinear(0, 1), window)
        with pytest.raises(BadInput):
            lemma31_arithmetic(0, 1, ThetaLinear(0, 1), window)
        with pytest.raises(BadInput):
            lemma31_arithmetic(3, -1, ThetaLinear(0, 1), window)

    def test_frozen_modular_data(self):
        # N=5, M=3: the inverse of 3 mod 5 is 2, and 1 = 2*3 - 1*5
        window = Interval(F(3, 5), F(7, 10))
        t = ThetaLinear(F(-3, 8), F(5, 8))  # exactly (5*theta - 3)/8
        rec = lemma31_arithmetic(5, 3, t, window)
        assert (rec.c, rec.d) == (2, -1)
        assert rec.K == 0
        assert rec.L == F(1, 8)
        assert rec.identity_ok
        assert rec.positive_ok and rec.upper_ok and rec.bound_ok and rec.ok
        assert rec.trace_h == ThetaLinear(F(-15, 8), F(25, 8))

    def test_indeterminate_window_raises(self):
        # t crosses zero inside the window: no sign decision is possible
        window = Interval(F(1, 4), F(3, 4))
        with pytest.raises(IndeterminateSign):
            lemma31_arithmetic(5, 3, ThetaLinear(-1, 2), window)

    @given(st.integers(min_value=1, max_value=30), st.integers(min_value=1, max_value=30))
    def test_identity_for_random_pairs(self, N, M):
        if gcd(N, M) != 1:
            return
        # a t proportional to the divisor makes every sign decidable
        window = Interval(F(M, N) + F(1, 100 * N), F(M, N) + F(2, 100 * N))
        t = ThetaLinear(F(-M, 8), F(N, 8))
        rec = lemma31_arithmetic(N, M, t, window)
        assert rec.identity_ok


class TestCertify:
    def test_frozen_certificate(self):
        cert = certify(SeedParams(1, 3), DEFAULT_KAPPAS)
        assert cert.overall
        assert cert.sum_ok
        assert cert.tau0 == ThetaLinear(8604, -13464)
        assert cert.tau0_formula_ok and cert.tau0_positive
        assert cert.tau_f == cert.tau0 and cert.flat_trace_ok
        assert cert.tau_f == 4 * cert.tau_g
        assert cert.lemma31.N == 3 and cert.lemma31.M == 1
        assert cert.lemma31.ok

    def test_vector_sum_is_unit_vector(self):
        cert = certify(SeedParams(2, 5), DEFAULT_KAPPAS)
        assert cert.vector_sum == cert.vector_expected
        assert cert.vector_expected.trace == ThetaLinear(1, 0)

    def test_even_denominator_rejected(self):
        with pytest.raises(NotCoprime):
            certify(SeedParams(1, 4), DEFAULT_KAPPAS)

    def test_grid(self):
        certs = certify_grid(7, DEFAULT_KAPPAS)
        assert len(certs) == len(seed_grid(7, odd_only=True))
        assert all(c.overall for c in certs)

    def test_json_shape(self):
        obj = certify(SeedParams(1, 3), DEFAULT_KAPPAS).to_json()
        assert obj["seed"] == {"k": 1, "m": 3}
        assert obj["overall"] is True
        assert obj["vectors"]["sum_ok"] is True
        assert set(obj["lemma31"]) >= {"N", "M", "c", "d", "K", "L", "identity_ok"}
