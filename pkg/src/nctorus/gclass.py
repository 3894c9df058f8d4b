"""The two-integer parameter family, its interval class, and certificates.

A seed is a reduced fraction k/m in (0, 1/2).  From it we derive seven
integers (n, q, s, p, r, A, B) tied together by exact unimodular and
divisibility identities, and an open rational interval

    ( (pq - kappa1)/q^2 , (rs + kappa2)/s^2 )

pinched between the convergent-like fractions r/s and p/q.  Any theta in
the interval admits the full decomposition certificate: the negatively
charged projection vector for (p, q) plus the parity image of the
positively charged vector for (r, s) plus a flat remainder of trace
4m^2(A - B*theta) add up exactly to the identity's vector.  certify()
assembles the whole record; every inequality is decided with exact
integer cross-multiplication and every identity with exact rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .chern import ChernVector, chern_one, flat_vector, gamma_top, top_eb_minus, top_eq_plus
from .errors import BadInput, BadSeed, ChainFailure, IndeterminateSign, NotCoprime
from .exactscalar import (
    Interval,
    RationalLike,
    ThetaLinear,
    ThetaPoly,
    as_fraction,
    poly_identity,
    rat_str,
    tl_sign,
)

_HALF = Fraction(1, 2)


def _lt(a: Fraction, b: Fraction) -> bool:
    # exact integer cross-multiplication, no division
    return a.numerator * b.denominator < b.numerator * a.denominator


@dataclass(frozen=True)
class SeedParams:
    """A reduced fraction k/m strictly inside (0, 1/2)."""

    k: int
    m: int

    def __post_init__(self):
        if self.k < 1 or self.m < 1:
            raise BadSeed(f"seed needs k, m >= 1, got ({self.k}, {self.m})")
        if math.gcd(self.k, self.m) != 1:
            raise BadSeed(f"seed k/m must be reduced, got {self.k}/{self.m}")
        if 2 * self.k >= self.m:
            raise BadSeed(f"seed must satisfy 2k < m, got ({self.k}, {self.m})")

    def to_json(self) -> Dict[str, int]:
        return {"k": self.k, "m": self.m}


@dataclass(frozen=True)
class DerivedParams:
    """The seven derived integers; construction re-verifies their relations."""

    n: int
    q: int
    s: int
    p: int
    r: int
    A: int
    B: int

    def __post_init__(self):
        checks = (
            self.p * self.s - self.q * self.r == 1,
            self.s * self.A - self.B * self.r == 1,
            2 * self.s == self.B + (self.s - self.q),  # 2s = B + 4m^2 with 4m^2 = s - q
            self.s * self.s - self.q * self.q == (self.s - self.q) * self.B,
            1 + self.r * self.s - self.p * self.q == (self.s - self.q) * self.A,
        )
        if not all(checks):
            raise ValueError(f"derived parameters are internally inconsistent: {self}")

    def to_json(self) -> Dict[str, int]:
        return {"n": self.n, "q": self.q, "s": self.s, "p": self.p, "r": self.r, "A": self.A, "B": self.B}


@dataclass(frozen=True)
class Kappas:
    """Interval slack parameters with 0 < k2 <= 1/2 < k1 < 1 and k1 + k2 > 1."""

    k1: Fraction
    k2: Fraction

    def __post_init__(self):
        k1 = as_fraction(self.k1)
        k2 = as_fraction(self.k2)
        object.__setattr__(self, "k1", k1)
        object.__setattr__(self, "k2", k2)
        if not (0 < k2 <= _HALF < k1 < 1):
            raise BadInput(f"need 0 < k2 <= 1/2 < k1 < 1, got k1={k1}, k2={k2}")
        if not k1 + k2 > 1:
            raise BadInput(f"need k1 + k2 > 1, got k1={k1}, k2={k2}")

    def to_json(self) -> Dict[str, str]:
        return {"k1": rat_str(self.k1), "k2": rat_str(self.k2)}


DEFAULT_KAPPAS = Kappas(Fraction(3, 4), Fraction(1, 2))


def derive(seed: SeedParams) -> DerivedParams:
    """Compute the seven derived integers for a seed."""
    k, m = seed.k, seed.m
    n = 4 * m * k + 1
    q = n * n
    s = n * n + 4 * m * m
    p = 4 * k * k * (2 * n + 1)
    r = p + 2 * n - 3
    a_val = 64 * k**3 * m + 8 * k * m + 24 * k * k - 1
    b_val = 2 * (16 * k * k * m * m + 8 * k * m + 2 * m * m + 1)
    return DerivedParams(n=n, q=q, s=s, p=p, r=r, A=a_val, B=b_val)


def verify_identities(seed: SeedParams) -> List[Tuple[str, bool]]:
    """Evaluate the eight exact identities tying seed and derived integers."""
    k, m = seed.k, seed.m
    d = derive(seed)
    n, q, s, p, r, A, B = d.n, d.q, d.s, d.p, d.r, d.A, d.B
    m2 = m * m
    return [
        ("ps_qr_unimodular", p * s - q * r == 1),
        ("sA_Br_unimodular", s * A - B * r == 1),
        ("two_s_eq_B_plus_4m2", 2 * s == B + 4 * m2),
        ("s2_q2_eq_4m2_B", s * s - q * q == 4 * m2 * B),
        ("one_rs_pq_eq_4m2_A", 1 + r * s - p * q == 4 * m2 * A),
        (
            "rm2_minus_s_halfshift",
            Fraction(r * m2) - s * (2 * k * m - _HALF) == 4 * k * k * m2 + m2 + 2 * k * m + _HALF,
        ),
        ("kq_pm_gap", 2 * k * q - p * m == 4 * k * k * m + 2 * k),
        ("ks_mr_gap", 2 * k * s - m * (r + 4) == 4 * k * k * m + 2 * k - 3 * m),
    ]


def chain_parts(seed: SeedParams, kappas: Kappas = DEFAULT_KAPPAS) -> Dict[str, bool]:
    """The five chain inequalities pinching the interval, each named."""
    k, m = seed.k, seed.m
    d = derive(seed)
    q, s, p, r = d.q, d.s, d.p, d.r
    lo_outer = Fraction(2 * k * m - _HALF, m * m)
    rs = Fraction(r, s)
    win_lo = Fraction(p * q - kappas.k1, q * q)
    win_hi = Fraction(r * s + kappas.k2, s * s)
    pq = Fraction(p, q)
    hi_outer = Fraction(2 * k, m)
    return {
        "outer_lo_lt_rs": _lt(lo_outer, rs),
        "rs_lt_window_lo": _lt(rs, win_lo),
        "window_lo_lt_window_hi": _lt(win_lo, win_hi),
        "window_hi_lt_pq": _lt(win_hi, pq),
        "pq_lt_outer_hi": _lt(pq, hi_outer),
    }


def verify_chain(seed: SeedParams, kappas: Kappas = DEFAULT_KAPPAS) -> bool:
    """True iff the whole five-link inequality chain holds."""
    return all(chain_parts(seed, kappas).values())


def interval(seed: SeedParams, kappas: Kappas = DEFAULT_KAPPAS) -> Interval:
    """The seed's open interval; refuses to build one off a broken chain."""
    parts = chain_parts(seed, kappas)
    if not all(parts.values()):
        failed = [name for name, ok in parts.items() if not ok]
        raise ChainFailure(f"chain fails for seed ({seed.k}, {seed.m}): {', '.join(failed)}")
    d = derive(seed)
    lo = Fraction(d.p * d.q - kappas.k1, d.q * d.q)
    hi = Fraction(d.r * d.s + kappas.k2, d.s * d.s)
    return Interval(lo, hi)


def gdelta_cover(seeds: Sequence[SeedParams], kappas: Kappas = DEFAULT_KAPPAS) -> List[Interval]:
    """One interval per seed: a finite layer of the nested-union class."""
    return [interval(seed, kappas) for seed in seeds]


def seed_grid(max_km: int, odd_only: bool = True) -> List[SeedParams]:
    """All valid seeds with k, m <= max_km, sorted by (m, k).

    odd_only keeps only odd m, for which gcd(m, m-2k) = 1 is automatic.
    """
    out: List[SeedParams] = []
    for m in range(1, max_km + 1):
        if odd_only and m % 2 == 0:
            continue
        for k in range(1, min(max_km, (m - 1) // 2) + 1):
            if 2 * k < m and math.gcd(k, m) == 1:
                out.append(SeedParams(k, m))
    return out


def member(theta: RationalLike, kappas: Kappas = DEFAULT_KAPPAS, kmax: int = 40) -> List[SeedParams]:
    """All seeds with k, m <= kmax whose interval contains theta.

    theta is an exact rational stand-in for the irrational of interest.
    Seeds whose chain fails under these kappas are skipped.
    """
    theta = as_fraction(theta)
    if not 0 < theta < 1:
        raise BadInput(f"theta must lie in (0, 1), got {theta}")
    hits: List[SeedParams] = []
    for seed in seed_grid(kmax, odd_only=False):
        parts = chain_parts(seed, kappas)
        if not all(parts.values()):
            continue
        if interval(seed, kappas).contains(theta):
            hits.append(seed)
    return hits


@dataclass(frozen=True)
class Lemma31Record:
    """Outcome of the modular-splitting arithmetic for one (N, M, t, window)."""

    N: int
    M: int
    c: int
    d: int
    K: int
    L: int
    t: ThetaLinear
    identity_ok: bool
    positive_ok: bool
    upper_ok: bool
    trace_h: ThetaLinear

    @property
    def bound_ok(self) -> bool:
        return self.positive_ok and self.upper_ok

    @property
    def ok(self) -> bool:
        return self.identity_ok and self.bound_ok

    def to_json(self) -> Dict[str, object]:
        return {
            "N": self.N,
            "M": self.M,
            "c": self.c,
            "d": self.d,
            "K": self.K,
            "L": self.L,
            "t": self.t.to_json(),
            "identity_ok": self.identity_ok,
            "positive_ok": self.positive_ok,
            "upper_ok": self.upper_ok,
            "bound_ok": self.bound_ok,
            "trace_h": self.trace_h.to_json(),
        }


def lemma31_arithmetic(N: int, M: int, t: ThetaLinear, window: Interval) -> Lemma31Record:
    """Split t = m + n*theta across the modular pair (N, M).

    Solves cM + dN = 1 with the canonical representative 0 <= c < N, forms
    K = M*n + N*m and L = d*n - c*m, and verifies the denominator-cleared
    identity K*(c*theta + d) + L*(N*theta - M) = t as an exact polynomial
    identity.  The two bounds 0 < t and t < (N*theta - M)/4 are decided by
    endpoint signs over the window; an endpoint disagreement raises
    IndeterminateSign rather than guessing.
    """
    if N < 1 or M < 1:
        raise BadInput(f"need positive N, M, got ({N}, {M})")
    if math.gcd(N, M) != 1:
        raise NotCoprime(f"N and M must be coprime, got ({N}, {M})")
    c = pow(M, -1, N)
    d = (1 - c * M) // N
    mm, nn = t.const, t.slope
    K_frac = M * nn + N * mm
    L_frac = d * nn - c * mm
    lhs = K_frac * ThetaPoly((d, c)) + L_frac * ThetaPoly((-M, N))
    identity_ok = poly_identity(lhs, ThetaPoly.from_linear(t))
    sign_t = tl_sign(t, window)
    margin = ThetaLinear(Fraction(-M, 4), Fraction(N, 4)) - t
    sign_margin = tl_sign(margin, window)
    if sign_t is None or sign_margin is None:
        raise IndeterminateSign(
            f"window {window} does not decide the bounds for t = {t} over (N, M) = ({N}, {M})"
        )
    trace_h = N * t
    return Lemma31Record(
        N=N,
        M=M,
        c=c,
        d=d,
        K=int(K_frac) if K_frac.denominator == 1 else K_frac,
        L=int(L_frac) if L_frac.denominator == 1 else L_frac,
        t=t,
        identity_ok=identity_ok,
        positive_ok=sign_t == 1,
        upper_ok=sign_margin == 1,
        trace_h=trace_h,
    )


@dataclass(frozen=True)
class Certificate:
    """Full decomposition certificate for one seed."""

    seed: SeedParams
    derived: DerivedParams
    kappas: Kappas
    interval: Interval
    identities: Dict[str, bool]
    chain: Dict[str, bool]
    minus_vector: ChernVector
    gamma_plus_vector: ChernVector
    flat_vector: ChernVector
    vector_sum: ChernVector
    vector_expected: ChernVector
    sum_ok: bool
    tau0: ThetaLinear
    tau0_formula_ok: bool
    tau0_positive: bool
    kappa2_below_s_over_B: bool
    tau_g: ThetaLinear
    tau_f: ThetaLinear
    flat_trace_ok: bool
    lemma31: Lemma31Record
    overall: bool

    def to_json(self) -> Dict[str, object]:
        return {
            "seed": self.seed.to_json(),
            "derived": self.derived.to_json(),
            "kappas": self.kappas.to_json(),
            "interval": self.interval.to_json(),
            "identities": dict(self.identities),
            "chain": dict(self.chain),
            "vectors": {
                "minus": self.minus_vector.to_json(),
                "gamma_plus": self.gamma_plus_vector.to_json(),
                "flat": self.flat_vector.to_json(),
                "sum": self.vector_sum.to_json(),
                "expected": self.vector_expected.to_json(),
                "sum_ok": self.sum_ok,
            },
            "tau0": self.tau0.to_json(),
            "tau0_formula_ok": self.tau0_formula_ok,
            "tau0_positive": self.tau0_positive,
            "kappa2_below_s_over_B": self.kappa2_below_s_over_B,
            "tau_g": self.tau_g.to_json(),
            "tau_f": self.tau_f.to_json(),
            "flat_trace_ok": self.flat_trace_ok,
            "lemma31": self.lemma31.to_json(),
            "overall": self.overall,
        }


def certify(seed: SeedParams, kappas: Kappas = DEFAULT_KAPPAS) -> Certificate:
    """Assemble and check the full certificate for one seed.

    The three-part vector sum, the flat trace formula, its positivity on
    the interval, and the modular-splitting record are all verified; the
    certificate's overall flag is the conjunction of every check.
    """
    k, m = seed.k, seed.m
    if math.gcd(m, m - 2 * k) != 1:
        raise NotCoprime(
            f"seed ({k}, {m}) has gcd(m, m-2k) = {math.gcd(m, m - 2 * k)}; "
            "the modular splitting needs them coprime"
        )
    d = derive(seed)
    identities = dict(verify_identities(seed))
    chain = chain_parts(seed, kappas)
    window = interval(seed, kappas)  # raises ChainFailure when the chain breaks

    minus_v = top_eb_minus(d.p, d.q)
    gplus_v = gamma_top(top_eq_plus(d.r, d.s))
    tau0 = ThetaLinear(1 + d.r * d.s - d.p * d.q, -(d.s * d.s - d.q * d.q))
    flat_v = flat_vector(tau0)
    total = minus_v + gplus_v + flat_v
    expected = chern_one()
    sum_ok = total == expected

    m2 = m * m
    tau0_formula_ok = tau0 == ThetaLinear(4 * m2 * d.A, -4 * m2 * d.B)
    tau0_positive = tl_sign(ThetaLinear(d.A, -d.B), window) == 1
    kappa_route = kappas.k2 * d.B < d.s  # with 2s = B + 4m^2 this pins A - B*theta > 0

    # split t = m*(A - B*theta), re-expressed in the complementary
    # coordinate 1 - theta, across (N, M) = (m, m - 2k); the window
    # reflects accordingly.
    t_comp = ThetaLinear(m * (d.A - d.B), m * d.B)
    reflected = Interval(1 - window.hi, 1 - window.lo)
    rec = lemma31_arithmetic(m, m - 2 * k, t_comp, reflected)

    tau_g = ThetaLinear(m2 * d.A, -m2 * d.B)
    tau_f = 4 * tau_g
    flat_trace_ok = tau_f == tau0

    overall = (
        all(identities.values())
        and all(chain.values())
        and sum_ok
        and tau0_formula_ok
        and tau0_positive
        and kappa_route
        and rec.ok
        and flat_trace_ok
    )
    return Certificate(
        seed=seed,
        derived=d,
        kappas=kappas,
        interval=window,
        identities=identities,
        chain=chain,
        minus_vector=minus_v,
        gamma_plus_vector=gplus_v,
        flat_vector=flat_v,
        vector_sum=total,
        vector_expected=expected,
        sum_ok=sum_ok,
        tau0=tau0,
        tau0_formula_ok=tau0_formula_ok,
        tau0_positive=tau0_positive,
        kappa2_below_s_over_B=kappa_route,
        tau_g=tau_g,
        tau_f=tau_f,
        flat_trace_ok=flat_trace_ok,
        lemma31=rec,
        overall=overall,
    )


def certify_grid(max_km: int, kappas: Kappas = DEFAULT_KAPPAS) -> List[Certificate]:
    """Certificates for the whole odd-m grid, ordered by (m, k)."""
    return [certify(seed, kappas) for seed in seed_grid(max_km, odd_only=True)]
