"""The canonical trace and the five unbounded trace functionals.

On a monomial U^m V^n the functionals are given by divisor-delta patterns
times pure phases in the element's own parameter symbol:

    psi_10 = e(-param/4 (m+n)^2) [2 | m-n]      psi_20 = e(-param/2 mn) [2|m][2|n]
    psi_11 = e(-param/4 (m+n)^2) [2 | m-n-1]    psi_21 = e(-param/2 mn) [2|m-1][2|n-1]
                                                psi_22 = e(-param/2 mn) [2 | m-n-1]

and tau picks the (0, 0) coefficient.  All values are returned as full
PhaseScalars; deciding whether a value is phase-free is the caller's
business.  The check_* functions verify the structural laws (alpha-trace,
invariance under the Fourier automorphism, parity behaviour, and the
relations through the swap isomorphism nu) by exhaustive enumeration of
monomial windows, which suffices because every delta pattern is 2-periodic.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Dict, List

from .exactscalar import PS_ZERO, GaussRat, PhaseScalar, ps_conj
from .ncalgebra import (
    ONE_MINUS_THETA,
    THETA,
    NCElement,
    Param,
    gamma,
    monomial,
    mul,
    nu,
    sigma,
    star,
)


class TraceKind(enum.Enum):
    t10 = "t10"
    t11 = "t11"
    t20 = "t20"
    t21 = "t21"
    t22 = "t22"
    tau = "tau"


ALL_KINDS = tuple(TraceKind)
UNBOUNDED_KINDS = (TraceKind.t10, TraceKind.t11, TraceKind.t20, TraceKind.t21, TraceKind.t22)


def psi(kind: TraceKind, x: NCElement) -> PhaseScalar:
    """Linear extension of the monomial trace formulas to x."""
    acc: dict = {}
    if kind is TraceKind.tau:
        c = x.terms.get((0, 0))
        return c if c is not None else PS_ZERO
    quarter = kind is TraceKind.t10 or kind is TraceKind.t11
    for (m, n), c in x.terms.items():
        if kind is TraceKind.t10:
            if (m - n) % 2:
                continue
        elif kind is TraceKind.t11:
            if (m - n - 1) % 2:
                continue
        elif kind is TraceKind.t20:
            if m % 2 or n % 2:
                continue
        elif kind is TraceKind.t21:
            if (m - 1) % 2 or (n - 1) % 2:
                continue
        else:  # t22
            if (m - n - 1) % 2:
                continue
        if quarter:
            value = c.shift(Fraction(-(m + n) ** 2, 4))
        else:
            value = c.shift(Fraction(-m * n, 2))
        for r, g in value.terms.items():
            prev = acc.get(r)
            s = g if prev is None else prev + g
            if s:
                acc[r] = s
            elif prev is not None:
                del acc[r]
    return PhaseScalar._raw(acc)


def psi_star(kind: TraceKind, x: NCElement) -> PhaseScalar:
    """Hermitian adjoint functional: conjugate of psi on the adjoint element."""
    return ps_conj(psi(kind, star(x)))


def _monomials(window: int, param: Param = THETA) -> List[NCElement]:
    rng = range(-window, window + 1)
    one = PhaseScalar.one()
    return [monomial(param, one, m, n) for m in rng for n in rng]


def check_alpha_trace(kind: TraceKind, power: int, window: int) -> bool:
    """Exhaustive check of psi(xy) = psi(sigma^power(y) x) on the window."""
    if power not in (1, 2):
        raise ValueError("power must be 1 or 2")
    if window < 1:
        raise ValueError("window must be >= 1")
    monos = _monomials(window)
    for y in monos:
        ay = sigma(y)
        if power == 2:
            ay = sigma(ay)
        for x in monos:
            if psi(kind, mul(x, y)) != psi(kind, mul(ay, x)):
                return False
    return True


def check_sigma_invariance(kind: TraceKind, window: int) -> bool:
    """Exhaustive check of psi(sigma(x)) = psi(x) on the window."""
    if window < 1:
        raise ValueError("window must be >= 1")
    for x in _monomials(window):
        if psi(kind, sigma(x)) != psi(kind, x):
            return False
    return True


def check_parity_flip(window: int) -> bool:
    """Parity flips exactly psi_11 and psi_22 and fixes the other three."""
    if window < 1:
        raise ValueError("window must be >= 1")
    flipped = (TraceKind.t11, TraceKind.t22)
    fixed = (TraceKind.t10, TraceKind.t20, TraceKind.t21)
    for x in _monomials(window):
        gx = gamma(x)
        for kind in flipped:
            if psi(kind, gx) != -psi(kind, x):
                return False
        for kind in fixed:
            if psi(kind, gx) != psi(kind, x):
                return False
    return True


# Scalar factors relating psi^theta after nu to psi^(1-theta) before it;
# None marks the two functionals that compose through the adjoint instead.
_NU_FACTORS = {
    TraceKind.t10: None,
    TraceKind.t11: None,
    TraceKind.t20: GaussRat(1),
    TraceKind.t21: GaussRat(-1),
    TraceKind.t22: GaussRat(1),
}


def check_nu_relations(window: int) -> bool:
    """Exhaustive check of the five trace relations through nu.

    psi_10 nu = (psi_10)^*  and  psi_11 nu = -i (psi_11)^*  on the source
    algebra, while psi_2j nu = (+1, -1, +1) psi_2j.  Right-hand sides are
    computed in the source parameter 1-theta and rebased to theta for the
    comparison.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    minus_i = GaussRat(0, -1)
    for x in _monomials(window, ONE_MINUS_THETA):
        nx = nu(x)
        for kind, factor in _NU_FACTORS.items():
            lhs = psi(kind, nx)
            if factor is None:
                rhs = psi_star(kind, x).rebase(-1, 1)
                if kind is TraceKind.t11:
                    rhs = rhs * minus_i
            else:
                rhs = psi(kind, x).rebase(-1, 1) * factor
            if lhs != rhs:
                return False
    return True


def run_trace_suite(window: int = 6) -> Dict[str, bool]:
    """All trace-law checks at one window, keyed by law name."""
    results: Dict[str, bool] = {}
    results["t10_sigma_trace"] = check_alpha_trace(TraceKind.t10, 1, window)
    results["t11_sigma_trace"] = check_alpha_trace(TraceKind.t11, 1, window)
    results["t20_sigma2_trace"] = check_alpha_trace(TraceKind.t20, 2, window)
    results["t21_sigma2_trace"] = check_alpha_trace(TraceKind.t21, 2, window)
    results["t22_sigma2_trace"] = check_alpha_trace(TraceKind.t22, 2, window)
    for kind in ALL_KINDS:
        results[f"{kind.value}_sigma_invariant"] = check_sigma_invariance(kind, window)
    results["parity_flip"] = check_parity_flip(window)
    results["nu_relations"] = check_nu_relations(window)
    return results
