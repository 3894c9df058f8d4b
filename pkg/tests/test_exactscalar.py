"""Exact scalar kernel: Gaussian rationals, phase sums, theta-linear forms."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nctorus import (
    BadInput,
    DomainPhase,
    GaussRat,
    Interval,
    PhaseScalar,
    ThetaLinear,
    ThetaPoly,
    parse_rat,
    poly_identity,
    rat_str,
    root_of_unity,
    tl_sign,
)
from nctorus.exactscalar import GR_I, GR_ONE, GR_ZERO, PS_ONE, PS_ZERO, ps_conj, ps_mul

from conftest import fractions_small, gauss_rats, phase_scalars, quarter_fractions

F = Fraction


class TestGaussRat:
    def test_frozen_arithmetic(self):
        a = GaussRat(1, 2)
        b = GaussRat(3, -1)
        assert a * b == GaussRat(5, 5)
        assert a + b == GaussRat(4, 1)
        assert a - b == GaussRat(-2, 3)
        assert -a == GaussRat(-1, -2)
        assert GR_I * GR_I == GaussRat(-1, 0)

    def test_i_power_cycle(self):
        assert GaussRat.i_power(0) == GR_ONE
        assert GaussRat.i_power(1) == GR_I
        assert GaussRat.i_power(2) == GaussRat(-1, 0)
        assert GaussRat.i_power(3) == GaussRat(0, -1)
        assert GaussRat.i_power(-1) == GaussRat(0, -1)
        assert GaussRat.i_power(101) == GR_I

    def test_str_grammar_compatible(self):
        assert str(GaussRat(1, 0)) == "1"
        assert str(GaussRat(0, 1)) == "i"
        assert str(GaussRat(0, -1)) == "-1*i"
        assert str(GaussRat(F(1, 2), F(-1, 2))) == "1/2 + -1/2*i"
        assert str(GaussRat(-2, 1)) == "-2 + i"
        assert str(GR_ZERO) == "0"

    @given(gauss_rats(), gauss_rats(), gauss_rats())
    def test_ring_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert a * (b * c) == (a * b) * c
        assert a * b == b * a
        assert a + b == b + a

    @given(gauss_rats(), gauss_rats())
    def test_conjugate_is_ring_involution(self, a, b):
        assert a.conjugate().conjugate() == a
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()

    @given(gauss_rats())
    def test_json_round_trip(self, a):
        assert GaussRat.from_json(a.to_json()) == a


class TestRootOfUnity:
    def test_quarter_values(self):
        assert root_of_unity(0) == GR_ONE
        assert root_of_unity(F(1, 4)) == GR_I
        assert root_of_unity(F(1, 2)) == GaussRat(-1, 0)
        assert root_of_unity(F(3, 4)) == GaussRat(0, -1)
        assert root_of_unity(1) == GR_ONE
        assert root_of_unity(F(-1, 4)) == GaussRat(0, -1)

    def test_rejects_non_quarter(self):
        with pytest.raises(DomainPhase):
            root_of_unity(F(1, 3))
        with pytest.raises(DomainPhase):
            root_of_unity(F(1, 8))

    @given(quarter_fractions(), quarter_fractions())
    def test_additive_on_quarter_lattice(self, s, t):
        assert root_of_unity(s + t) == root_of_unity(s) * root_of_unity(t)


class TestPhaseScalar:
    def test_frozen_cases(self):
        x = PhaseScalar.phase(1) + PhaseScalar.phase(-1)
        y = PhaseScalar.phase(2)
        assert ps_mul(x, y) == PhaseScalar.phase(3) + PhaseScalar.phase(1)
        assert PhaseScalar.phase(1) - PhaseScalar.phase(1) == PS_ZERO
        assert PhaseScalar.from_gauss(GR_ONE) == PS_ONE
        assert PS_ONE.as_constant() == GR_ONE

    def test_as_constant_rejects_genuine_phase(self):
        with pytest.raises(DomainPhase):
            PhaseScalar.phase(1).as_constant()

    def test_shift_translates_exponents(self):
        x = PhaseScalar.phase(F(1, 2), GR_I) + PS_ONE
        assert x.shift(F(3, 2)) == PhaseScalar.phase(2, GR_I) + PhaseScalar.phase(F(3, 2))

    def test_rebase_changes_parameter(self):
        # e(theta r) with theta = -theta' + 1: e(r) |-> e(r) e(theta')^{-r}
        x = PhaseScalar.phase(1)
        assert x.rebase(-1, 1) == PhaseScalar.phase(-1)
        x = PhaseScalar.phase(F(1, 2))
        assert x.rebase(-1, 1) == PhaseScalar.phase(F(-1, 2), GaussRat(-1, 0))
        # theta = 4 theta' - 1: e(-r) is 1 at integer r, so only the stretch remains
        assert PhaseScalar.phase(1).rebase(4, -1) == PhaseScalar.phase(4)
        # a genuine quarter offset contributes a fourth root of unity
        assert PhaseScalar.phase(1).rebase(4, F(-1, 4)) == PhaseScalar.phase(4, GaussRat(0, -1))

    def test_rebase_rejects_non_quarter_offset(self):
        with pytest.raises(DomainPhase):
            PhaseScalar.phase(F(1, 3)).rebase(1, F(1, 2))

    @given(phase_scalars(), phase_scalars(), phase_scalars())
    def test_ring_axioms(self, a, b, c):
        assert ps_mul(a, ps_mul(b, c)) == ps_mul(ps_mul(a, b), c)
        assert ps_mul(a, b) == ps_mul(b, a)
        assert ps_mul(a + b, c) == ps_mul(a, c) + ps_mul(b, c)

    @given(phase_scalars(), phase_scalars())
    def test_conjugation_involution(self, a, b):
        assert ps_conj(ps_conj(a)) == a
        assert ps_conj(ps_mul(a, b)) == ps_mul(ps_conj(a), ps_conj(b))

    @given(phase_scalars(), fractions_small(), fractions_small())
    def test_shift_additive(self, a, r, s):
        assert a.shift(r).shift(s) == a.shift(r + s)
        assert a.shift(0) == a

    @given(phase_scalars(dens=(1, 2, 4)), st.integers(min_value=-3, max_value=3),
           st.integers(min_value=-3, max_value=3))
    def test_rebase_is_ring_map(self, a, lam, mu):
        # integer offsets and quarter-lattice exponents keep rebase total
        b = PhaseScalar.phase(F(1, 2), GaussRat(1, 1))
        assert ps_mul(a, b).rebase(lam, mu) == ps_mul(a.rebase(lam, mu), b.rebase(lam, mu))
        assert (a + b).rebase(lam, mu) == a.rebase(lam, mu) + b.rebase(lam, mu)

    @given(phase_scalars())
    def test_rebase_identity(self, a):
        assert a.rebase(1, 0) == a


class TestThetaLinear:
    def test_basics(self):
        t = ThetaLinear(1, -2)
        assert t.at(F(1, 4)) == F(1, 2)
        assert t + t == ThetaLinear(2, -4)
        assert 3 * t == ThetaLinear(3, -6)
        assert t - t == ThetaLinear(0, 0)
        assert t.to_json() == {"const": "1/1", "theta": "-2/1"}
        assert ThetaLinear.from_json(t.to_json()) == t

    def test_str(self):
        assert str(ThetaLinear(1, -2)) == "1 + -2*theta"
        assert str(ThetaLinear(F(1, 2), F(3, 4))) == "1/2 + 3/4*theta"


class TestInterval:
    def test_rejects_empty(self):
        with pytest.raises(BadInput):
            Interval(F(1, 2), F(1, 2))
        with pytest.raises(BadInput):
            Interval(F(2, 3), F(1, 3))

    def test_contains_open(self):
        iv = Interval(F(1, 3), F(1, 2))
        assert iv.contains(F(2, 5))
        assert not iv.contains(F(1, 3))
        assert not iv.contains(F(1, 2))
        assert iv.width() == F(1, 6)
        assert iv.midpoint() == F(5, 12)
        assert iv.contains(iv.midpoint())


class TestTlSign:
    def test_definite_signs(self):
        window = Interval(F(1, 4), F(1, 3))
        assert tl_sign(ThetaLinear(0, 1), window) == 1
        assert tl_sign(ThetaLinear(0, -1), window) == -1
        assert tl_sign(ThetaLinear(1, -3), window) == 1  # 1 - 3*theta > 0 on (1/4, 1/3)
        assert tl_sign(ThetaLinear(-1, 3), window) == -1

    def test_endpoint_zero_is_tolerated_on_open_window(self):
        window = Interval(F(1, 4), F(1, 3))
        # 1 - 4*theta vanishes at the left endpoint, negative inside
        assert tl_sign(ThetaLinear(1, -4), window) == -1
        # 1 - 3*theta vanishes at the right endpoint, positive inside
        assert tl_sign(ThetaLinear(1, -3), window) == 1

    def test_indeterminate_when_crossing(self):
        window = Interval(F(1, 4), F(1, 2))
        assert tl_sign(ThetaLinear(-1, 3), window) is None

    def test_identically_zero_reports_zero(self):
        window = Interval(F(1, 4), F(1, 2))
        assert tl_sign(ThetaLinear(0, 0), window) == 0

    @given(fractions_small(max_num=6), fractions_small(max_num=6))
    def test_sign_matches_midpoint_value_when_definite(self, c, s):
        window = Interval(F(1, 5), F(2, 5))
        t = ThetaLinear(c, s)
        sign = tl_sign(t, window)
        value = t.at(window.midpoint())
        if sign is not None and value != 0:
            assert (value > 0) == (sign == 1)


class TestThetaPoly:
    def test_identity_checking(self):
        lhs = ThetaPoly((1, 2)) * ThetaPoly((3, -1))  # (1+2x)(3-x) = 3+5x-2x^2
        assert poly_identity(lhs, ThetaPoly((3, 5, -2)))
        assert not poly_identity(lhs, ThetaPoly((3, 5, -1)))
        assert poly_identity(ThetaPoly((0, 0, 0)), ThetaPoly.constant(0))

    def test_from_linear(self):
        assert ThetaPoly.from_linear(ThetaLinear(2, -3)) == ThetaPoly((2, -3))
        assert ThetaPoly.from_linear(ThetaLinear(2, 0)).degree() == 0

    @given(st.lists(st.integers(-5, 5), max_size=4), st.lists(st.integers(-5, 5), max_size=4))
    def test_ring_commutes(self, a, b):
        pa, pb = ThetaPoly(tuple(a)), ThetaPoly(tuple(b))
        assert pa * pb == pb * pa
        assert pa + pb == pb + pa


class TestRatText:
    def test_denominator_always_explicit(self):
        assert rat_str(F(0)) == "0/1"
        assert rat_str(F(-3)) == "-3/1"
        assert rat_str(F(5, 7)) == "5/7"

    @given(fractions_small(max_num=20, dens=(1, 2, 3, 4, 7, 12)))
    def test_round_trip(self, x):
        assert parse_rat(rat_str(x)) == x

    def test_parse_errors(self):
        for bad in ("", "1/0", "1/-2", "x"):
            with pytest.raises(BadInput):
                parse_rat(bad)
