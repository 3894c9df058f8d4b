"""Numeric clock/shift witness of the order-four matrix Fourier transform.

The clock matrix u = diag(e(j*p/q)) and the cyclic shift v satisfy
vu = e(p/q) uv, and for gcd(p, q) = 1 they generate the full matrix
algebra irreducibly.  The transform sending u -> v, v -> u* is then inner:
a unitary W with W u W* = v and W v W* = u*.  W is found here by
extracting the null space of the stacked linear system

    (u^T (x) I - I (x) v) vec(W) = 0
    (v^T (x) I - I (x) u*) vec(W) = 0

and checking the solution space is one-dimensional, which doubles as a
numeric witness of irreducibility.  The null vector is rescaled to
unitarity and phase-normalized so output is deterministic.  All checks
use double precision with Frobenius-norm residuals against TOL.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from .errors import BadInput, NoIntertwiner, NotUnitary

#: residual tolerance for all verification norms (double precision, q <= 64)
TOL = 1e-9
#: relative singular-value threshold separating null directions
NULL_TOL = 1e-8

CMatrix = np.ndarray


def _check_pair(q: int, p: int) -> None:
    if q < 1:
        raise BadInput(f"matrix size must be >= 1, got {q}")
    if math.gcd(p, q) != 1:
        raise BadInput(f"need gcd(p, q) = 1, got ({p}, {q})")


def clock(q: int, p: int) -> CMatrix:
    """Diagonal matrix with entries e(j*p/q), j = 0..q-1."""
    _check_pair(q, p)
    j = np.arange(q)
    return np.diag(np.exp(2j * np.pi * p * j / q))


def shift(q: int) -> CMatrix:
    """Cyclic shift: entry 1 at (j, j+1 mod q); with clock u, vu = e(p/q) uv."""
    if q < 1:
        raise BadInput(f"matrix size must be >= 1, got {q}")
    v = np.zeros((q, q), dtype=complex)
    j = np.arange(q)
    v[j, (j + 1) % q] = 1.0
    return v


def _svd_rows(stacked: CMatrix):
    """Economy SVD returning (singular values, right vectors as rows).

    The divide-and-conquer driver occasionally fails to converge on these
    highly structured stacks; multiplying on the left by a seeded diagonal
    unitary leaves singular values and right singular vectors untouched
    while breaking the degeneracy pattern, so retry under such jitters.
    """
    try:
        _, sing, vh = np.linalg.svd(stacked, full_matrices=False)
        return sing, vh
    except np.linalg.LinAlgError:
        pass
    rng = np.random.default_rng(0)
    last: np.linalg.LinAlgError
    for _ in range(4):
        phases = np.exp(2j * np.pi * rng.random(stacked.shape[0]))
        try:
            _, sing, vh = np.linalg.svd(phases[:, None] * stacked, full_matrices=False)
            return sing, vh
        except np.linalg.LinAlgError as exc:
            last = exc
    raise last


def _null_space_unique(stacked: CMatrix, q: int) -> CMatrix:
    """The single null direction of the stacked system, reshaped to q x q.

    Raises NoIntertwiner unless exactly one singular value sits below the
    null threshold (relative to the largest).
    """
    sing, vh = _svd_rows(stacked)
    scale = sing[0] if sing.size and sing[0] > 0 else 1.0
    nullity = int(np.sum(sing < NULL_TOL * scale))
    if nullity != 1:
        raise NoIntertwiner(f"solution space has dimension {nullity}, expected 1")
    w = vh[-1].conj().reshape((q, q), order="F")
    return w


def _solve_intertwiner(a1: CMatrix, b1: CMatrix, a2: CMatrix, b2: CMatrix) -> CMatrix:
    """Unitary W with W a1 = b1 W and W a2 = b2 W, unique up to phase."""
    q = a1.shape[0]
    eye = np.eye(q)
    stacked = np.vstack(
        [
            np.kron(a1.T, eye) - np.kron(eye, b1),
            np.kron(a2.T, eye) - np.kron(eye, b2),
        ]
    )
    w = _null_space_unique(stacked, q)
    # intertwiners between irreducible pairs are scalar multiples of
    # unitaries, so one global rescale suffices
    w = w * (math.sqrt(q) / np.linalg.norm(w))
    unit_resid = np.linalg.norm(w.conj().T @ w - eye)
    if unit_resid > TOL:
        raise NotUnitary(f"rescaled solution is not unitary: residual {unit_resid:.3e}")
    # deterministic phase: first nonzero entry of the first row positive real
    row = w[0]
    idx = int(np.argmax(np.abs(row) > NULL_TOL))
    pivot = row[idx]
    if abs(pivot) > NULL_TOL:
        w = w * (abs(pivot) / pivot)
    return w


def fourier_intertwiner(q: int, p: int) -> CMatrix:
    """Unitary W with W u W* = v and W v W* = u* for the (q, p) clock/shift pair."""
    _check_pair(q, p)
    u = clock(q, p)
    v = shift(q)
    return _solve_intertwiner(u, v, v, u.conj().T)


@dataclass(frozen=True)
class IntertwinerReport:
    """Residual summary for one (q, p) pair."""

    q: int
    p: int
    resid_u: float
    resid_v: float
    resid_unitary: float
    order_four_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.resid_u <= TOL
            and self.resid_v <= TOL
            and self.resid_unitary <= TOL
            and self.order_four_ok
        )

    def to_json(self) -> Dict[str, object]:
        return {
            "q": self.q,
            "p": self.p,
            "resid_u": self.resid_u,
            "resid_v": self.resid_v,
            "resid_unitary": self.resid_unitary,
            "order_four_ok": self.order_four_ok,
            "ok": self.ok,
        }


def _conj_by(w: CMatrix, x: CMatrix) -> CMatrix:
    return w @ x @ w.conj().T


def _order_four_ok(w: CMatrix, u: CMatrix, v: CMatrix) -> bool:
    q = u.shape[0]
    u2 = _conj_by(w, _conj_by(w, u))
    v2 = _conj_by(w, _conj_by(w, v))
    u4 = _conj_by(w, _conj_by(w, u2))
    v4 = _conj_by(w, _conj_by(w, v2))
    w4 = np.linalg.matrix_power(w, 4)
    scalar = np.trace(w4) / q
    return bool(
        np.linalg.norm(u2 - u.conj().T) <= TOL
        and np.linalg.norm(v2 - v.conj().T) <= TOL
        and np.linalg.norm(u4 - u) <= TOL
        and np.linalg.norm(v4 - v) <= TOL
        and np.linalg.norm(w4 - scalar * np.eye(q)) <= TOL
    )


def verify_order_four(q: int, p: int) -> bool:
    """Conjugation by W squares to the adjoint map on generators, order four overall.

    Checks W^2 u W^-2 = u*, W^2 v W^-2 = v*, fourth powers returning to u, v,
    and W^4 being a scalar multiple of the identity, all within TOL.
    """
    _check_pair(q, p)
    return _order_four_ok(fourier_intertwiner(q, p), clock(q, p), shift(q))


def intertwiner_report(q: int, p: int) -> IntertwinerReport:
    """Solve once and measure every residual for one pair."""
    w = fourier_intertwiner(q, p)
    u = clock(q, p)
    v = shift(q)
    resid_u = float(np.linalg.norm(_conj_by(w, u) - v))
    resid_v = float(np.linalg.norm(_conj_by(w, v) - u.conj().T))
    resid_unitary = float(np.linalg.norm(w.conj().T @ w - np.eye(q)))
    return IntertwinerReport(
        q=q,
        p=p,
        resid_u=resid_u,
        resid_v=resid_v,
        resid_unitary=resid_unitary,
        order_four_ok=_order_four_ok(w, u, v),
    )


def matrix_to_json(w: CMatrix) -> List[List[List[float]]]:
    """Dense dump as rows of [re, im] pairs."""
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(w)]
