"""Dirichlet-series layer: coefficient vectors for both sides of the
zeta(s)/zeta(2s) identity, its exact coefficient-wise verification, the
2-adic generating-function lemma, and truncated double-sum evaluation of
the Shintani and double Dirichlet series.
"""

import time
from dataclasses import dataclass

from . import arith


def _require_odd_disc(D):
    if D % 2 == 0 or not arith.is_discriminant(D):
        raise ValueError("D must be an odd discriminant")


def coeffs_A(D, N):
    """[A(D, 4m) for m = 1..N]."""
    _require_odd_disc(D)
    return [arith.count_sqrt_mod(D, 4 * m) for m in range(1, N + 1)]


def _chihat_a(D, N):
    # chi_D(m^) a(D, m) for m = 1..N
    return [arith.field_character(D, arith.m_hat(D, m)) * arith.wmds_coeff(D, m)
            for m in range(1, N + 1)]


def coeffs_rhs(D, N):
    """Coefficients of 2 zeta(s)/zeta(2s) * sum chi_D(m^) a(D, m) m^-s.

    Dirichlet convolution of the squarefree indicator with the
    character-weighted multiplicative coefficients, times 2.
    """
    _require_odd_disc(D)
    chihat_a = _chihat_a(D, N)
    out = [0] * N
    for d in range(1, N + 1):
        if not arith.is_squarefree(d):
            continue
        for m in range(d, N + 1, d):
            out[m - 1] += chihat_a[m // d - 1]
    return [2 * v for v in out]


def verify_prop2(D, N):
    """Entrywise comparison of the two coefficient vectors up to N."""
    t0 = time.monotonic()
    lhs = coeffs_A(D, N)
    rhs = coeffs_rhs(D, N)
    failure = None
    for m in range(1, N + 1):
        if lhs[m - 1] != rhs[m - 1]:
            failure = {
                "inputs": {"disc": D, "m": m},
                "expected": lhs[m - 1],
                "actual": rhs[m - 1],
            }
            break
    return {
        "suite": "prop2",
        "status": "pass" if failure is None else "fail",
        "cases_run": N,
        "first_failure": failure,
        "elapsed_ms": int((time.monotonic() - t0) * 1000),
    }


# -- 2-adic lemma ------------------------------------------------------------

def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        for j, qj in enumerate(q):
            out[i + j] += pi * qj
    return out


def _poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def verify_ptilde2(D, lmax):
    """Check the dyadic case tables by brute force, then the constant-2
    generating-function ratio symbolically (as rational functions in 2^-s).
    """
    t0 = time.monotonic()
    _require_odd_disc(D)
    failure = None
    cases = 0

    a4 = arith.count_sqrt_brute(D, 4)
    want_a4 = 2 if D % 8 in (1, 5) else 0
    cases += 1
    if a4 != want_a4:
        failure = {"inputs": {"disc": D, "modulus": 4},
                   "expected": want_a4, "actual": a4}
    tail = 4 if D % 8 == 1 else 0
    for l in range(1, lmax + 1):
        cases += 1
        got = arith.count_sqrt_brute(D, 2 ** (l + 2))
        if got != tail and failure is None:
            failure = {"inputs": {"disc": D, "modulus": 2 ** (l + 2)},
                       "expected": tail, "actual": got}

    # ratio as rational functions in T = 2^-s:
    #   lhs = a4 + tail*T/(1-T),  reference = (1-T^2)/(1-T) * 1/(1-chi*T)
    # constant-2 identity <=> lhs_num * ref_den == 2 * lhs_den * ref_num
    chi = arith.kronecker(D, 2)
    lhs_num = _poly_trim([a4, tail - a4])        # a4(1-T) + tail*T
    lhs_den = [1, -1]                            # 1 - T
    ref_num = [1, 0, -1]                         # 1 - T^2
    ref_den = _poly_mul([1, -1], [1, -chi])      # (1-T)(1-chi*T)
    left = _poly_trim(_poly_mul(lhs_num, ref_den))
    right = _poly_trim([2 * v for v in _poly_mul(lhs_den, ref_num)])
    cases += 1
    if left != right and failure is None:
        failure = {"inputs": {"disc": D},
                   "expected": "ratio identically 2",
                   "actual": {"left": left, "right": right}}
    return {
        "suite": "ptilde2",
        "status": "pass" if failure is None else "fail",
        "cases_run": cases,
        "first_failure": failure,
        "elapsed_ms": int((time.monotonic() - t0) * 1000),
        "ratio": 2 if failure is None else None,
    }


# -- truncated double sums ---------------------------------------------------

@dataclass(frozen=True)
class TruncatedDoubleSum:
    s: complex
    w: complex
    amax: int
    dmax: int
    value: complex
    xi1: complex
    xi2: complex


class _KahanSum:
    """Compensated accumulation of complex doubles."""

    def __init__(self):
        self.total = 0j
        self._c = 0j

    def add(self, x):
        y = x - self._c
        t = self.total + y
        self._c = (t - self.total) - y
        self.total = t


def shintani_Z(s, w, amax, dmax):
    """Partial sum of Z(s, w) = xi1 + xi2 over a <= amax, d <= dmax."""
    xi = []
    for sign in (1, -1):
        acc = _KahanSum()
        for a in range(1, amax + 1):
            for d in range(1, dmax + 1):
                cnt = arith.count_sqrt_mod(sign * d, 4 * a)
                if cnt:
                    acc.add(cnt * a ** (-s) * d ** (-w))
        xi.append(acc.total)
    return TruncatedDoubleSum(s, w, amax, dmax, xi[0] + xi[1], xi[0], xi[1])


def wmds_Z(s, w, mmax, Dset):
    """Partial sum of the quadratic double Dirichlet series over the
    explicit discriminant list Dset and m <= mmax."""
    acc = _KahanSum()
    for D in Dset:
        _require_odd_disc(D)
        for m in range(1, mmax + 1):
            a = arith.wmds_coeff(D, m)
            if a == 0:
                continue
            chi = arith.field_character(D, arith.m_hat(D, m))
            if chi == 0:
                continue
            acc.add(chi * a * m ** (-s) * abs(D) ** (-w))
    return acc.total
