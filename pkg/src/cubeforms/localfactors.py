"""Non-archimedean local computations as exact truncated power series in
the formal variable q (semantics q = p^(-1/2)): the Macdonald spherical
function, congruence-count weighted local integrals, and the split/inert
base-change over adjoint L-factor ratios.
"""

import time
from fractions import Fraction

from . import arith


class TruncatedSeries:
    """Power series with exact rational coefficients, fixed truncation order.

    Supports ring operations and inversion of units (nonzero constant
    term); every operation truncates back to `order`.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [Fraction(c) for c in coeffs[: order + 1]]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = cs

    @classmethod
    def constant(cls, value, order):
        return cls([Fraction(value)], order)

    @classmethod
    def one_minus(cls, coeff, power, order):
        """1 - coeff * q^power."""
        cs = [Fraction(0)] * (order + 1)
        cs[0] = Fraction(1)
        if power <= order:
            cs[power] -= Fraction(coeff)
        return cls(cs, order)

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order)
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"cannot combine with {type(other).__name__}")
        if other.order != self.order:
            raise ValueError("truncation orders differ")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        return TruncatedSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        other = self._coerce(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def inverse(self):
        if self.coeffs[0] == 0:
            raise ValueError("constant term must be nonzero")
        n = self.order
        c0 = self.coeffs[0]
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / c0
        for k in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += self.coeffs[j] * out[k - j]
            out[k] = -acc / c0
        return TruncatedSeries(out, n)

    def shift(self, k):
        """Multiply by q^k."""
        return TruncatedSeries([Fraction(0)] * k + self.coeffs, self.order)

    def truncate(self, order):
        return TruncatedSeries(self.coeffs, order)

    def is_constant(self, value):
        return self.coeffs[0] == value and all(c == 0 for c in self.coeffs[1:])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedSeries({self.coeffs!r}, order={self.order})"


def _check_alpha(alpha):
    alpha = Fraction(alpha)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    if alpha * alpha == 1:
        raise ValueError("alpha^2 = 1 is rejected (degenerate parameter)")
    return alpha


def macdonald(alpha, p, n, order=None):
    """Spherical function value sigma(p^n) as an exact series in q.

    sigma(p^n) = q^n/(1+q^2) * ( a^n (1 - a^-2 q^2)/(1 - a^-2)
                               + a^-n (1 - a^2 q^2)/(1 - a^2) ).
    """
    alpha = _check_alpha(alpha)
    if n < 0:
        raise ValueError("n must be non-negative")
    if order is None:
        order = n + 2
    c_plus = 1 / (1 - alpha ** -2)
    c_minus = 1 / (1 - alpha ** 2)
    # degree-2 numerator polynomial in q
    p0 = alpha ** n * c_plus + alpha ** -n * c_minus
    p2 = -(alpha ** (n - 2) * c_plus + alpha ** (-n + 2) * c_minus)
    num = TruncatedSeries([p0, 0, p2], order).shift(n)
    return num * TruncatedSeries.one_minus(-1, 2, order).inverse()


def local_A_integral(D, p, alpha, lmax):
    """Sum over l of A(D, p^l) sigma(p^l), truncated at order lmax.

    Requires p odd and coprime to 2D (unramified place): the congruence
    count is 1 at l = 0 and then 2 (split) or 0 (inert) for all l >= 1.
    """
    if p == 2 or not arith.is_prime(p):
        raise ValueError("p must be an odd prime")
    if D % p == 0:
        raise ValueError("ramified place (p divides D) is out of scope")
    if not arith.is_discriminant(D):
        raise ValueError("D must be a discriminant")
    alpha = _check_alpha(alpha)
    chi = arith.kronecker(D, p)
    total = TruncatedSeries.constant(0, lmax)
    for l in range(lmax + 1):
        count = 1 if l == 0 else (2 if chi == 1 else 0)
        if count:
            total = total + count * macdonald(alpha, p, l, order=lmax)
    return total


def _product(factors, order):
    out = TruncatedSeries.constant(1, order)
    for f in factors:
        out = out * f
    return out


def lfactor_split(alpha, order):
    """Base change L_p(1/2, pi_E) at a split place: [(1-aq)(1-q/a)]^-2."""
    alpha = _check_alpha(alpha)
    den = _product([
        TruncatedSeries.one_minus(alpha, 1, order),
        TruncatedSeries.one_minus(alpha, 1, order),
        TruncatedSeries.one_minus(1 / alpha, 1, order),
        TruncatedSeries.one_minus(1 / alpha, 1, order),
    ], order)
    return den.inverse()


def lfactor_inert(alpha, order):
    """Base change L_p(1/2, pi_E) at an inert place: the factor in q^2."""
    alpha = _check_alpha(alpha)
    den = _product([
        TruncatedSeries.one_minus(alpha ** 2, 2, order),
        TruncatedSeries.one_minus(alpha ** -2, 2, order),
    ], order)
    return den.inverse()


def lfactor_adjoint(alpha, order):
    """L_p(1, Ad) = [(1-a^2 q^2)(1-q^2)(1-a^-2 q^2)]^-1."""
    alpha = _check_alpha(alpha)
    den = _product([
        TruncatedSeries.one_minus(alpha ** 2, 2, order),
        TruncatedSeries.one_minus(1, 2, order),
        TruncatedSeries.one_minus(alpha ** -2, 2, order),
    ], order)
    return den.inverse()


def lfactor_ratio_split(alpha, order):
    """(1-q^2)/(1-q^4) * L_p(1/2, pi_E) / L_p(1, Ad), split base change."""
    pre = TruncatedSeries.one_minus(1, 2, order) * \
        TruncatedSeries.one_minus(1, 4, order).inverse()
    return pre * lfactor_split(alpha, order) * lfactor_adjoint(alpha, order).inverse()


def lfactor_ratio_inert(alpha, order):
    """(1+q^2)/(1-q^4) * L_p(1/2, pi_E) / L_p(1, Ad); identically 1."""
    one_plus = TruncatedSeries([1, 0, 1], order)
    pre = one_plus * TruncatedSeries.one_minus(1, 4, order).inverse()
    return pre * lfactor_inert(alpha, order) * lfactor_adjoint(alpha, order).inverse()


def split_product_form(alpha, order):
    """The intermediate closed form of the split computation:
    (1-q^2)(1+aq)(1+q/a) / [(1+q^2)(1-aq)(1-q/a)]."""
    alpha = _check_alpha(alpha)
    num = _product([
        TruncatedSeries.one_minus(1, 2, order),
        TruncatedSeries.one_minus(-alpha, 1, order),
        TruncatedSeries.one_minus(-1 / alpha, 1, order),
    ], order)
    den = _product([
        TruncatedSeries([1, 0, 1], order),
        TruncatedSeries.one_minus(alpha, 1, order),
        TruncatedSeries.one_minus(1 / alpha, 1, order),
    ], order)
    return num * den.inverse()


def orbit_count_wprime(D, p, l):
    """Local orbit count at level p^l: the p-part A(D, p^l) of the
    congruence count, for odd p."""
    if p == 2 or not arith.is_prime(p):
        raise ValueError("p must be an odd prime")
    if l < 0:
        raise ValueError("l must be non-negative")
    return arith.count_sqrt_mod(D, p ** l)


def verify_local_identities(alphas=(2, Fraction(3, 2), 5, Fraction(7, 3)),
                            order=40, D_split=-23, p_split=3,
                            D_inert=5, p_inert=3):
    """Split and inert local integral identities at truncation `order`."""
    t0 = time.monotonic()
    failure = None
    cases = 0
    for alpha in alphas:
        cases += 1
        split_int = local_A_integral(D_split, p_split, alpha, order)
        split_ratio = lfactor_ratio_split(alpha, order)
        middle = split_product_form(alpha, order)
        inert_int = local_A_integral(D_inert, p_inert, alpha, order)
        inert_ratio = lfactor_ratio_inert(alpha, order)
        ok = (split_int == split_ratio == middle
              and inert_int.is_constant(1) and inert_ratio.is_constant(1))
        if not ok:
            failure = {
                "inputs": {"alpha": str(Fraction(alpha)), "order": order},
                "expected": "split chain equal, inert chain constant 1",
                "actual": {
                    "split_integral": [str(c) for c in split_int.coeffs[:6]],
                    "split_ratio": [str(c) for c in split_ratio.coeffs[:6]],
                    "inert_integral": [str(c) for c in inert_int.coeffs[:6]],
                },
            }
            break
    return {
        "suite": "local",
        "status": "pass" if failure is None else "fail",
        "cases_run": cases,
        "first_failure": failure,
        "elapsed_ms": int((time.monotonic() - t0) * 1000),
    }
