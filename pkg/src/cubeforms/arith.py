"""Exact integer arithmetic: quadratic congruence counts, Kronecker symbols,
double-Dirichlet-series coefficients, discriminant predicates, class numbers.

All functions are pure and operate on plain Python integers.
"""

from math import gcd, isqrt

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n):
    """Factor n >= 1 by trial division; returns {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def valuation(n, p):
    """Largest e with p^e | n (n != 0)."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def squarefree_part(D):
    """D0 in the decomposition D = D0 * D1^2 with D0 squarefree (sign kept)."""
    if D == 0:
        raise ValueError("0 has no squarefree part")
    sign = -1 if D < 0 else 1
    out = 1
    for p, e in factorize(abs(D)).items():
        if e % 2:
            out *= p
    return sign * out


def is_squarefree(n):
    return abs(squarefree_part(n)) == abs(n)


def is_discriminant(D):
    return D != 0 and D % 4 in (0, 1)


def is_fundamental(D):
    """Fundamental discriminant test; D = 1 is excluded by convention."""
    if D == 1 or not is_discriminant(D):
        return False
    if D % 4 == 1:
        return is_squarefree(D)
    k = D // 4
    return k % 4 in (2, 3) and is_squarefree(k)


def count_sqrt_brute(d, a):
    """Brute-force #{x mod a : x^2 = d (mod a)}; the independent oracle."""
    if a < 1:
        raise ValueError("modulus must be positive")
    d %= a
    return sum(1 for x in range(a) if (x * x - d) % a == 0)


def _count_unit_sqrt(d0, p, j):
    # solutions of x^2 = d0 (mod p^j) with p coprime to d0, j >= 1
    if p == 2:
        if j == 1:
            return 1
        if j == 2:
            return 2 if d0 % 4 == 1 else 0
        return 4 if d0 % 8 == 1 else 0
    return 2 if pow(d0 % p, (p - 1) // 2, p) == 1 else 0


def _count_sqrt_pp(d, p, l):
    # exact count modulo p^l, any prime p, any integer d
    if l == 0:
        return 1
    d %= p ** l
    if d == 0:
        return p ** (l // 2)
    k = valuation(d, p)
    if k % 2:
        return 0
    return p ** (k // 2) * _count_unit_sqrt(d // p ** k, p, l - k)


def count_sqrt_mod(d, a):
    """A(d, a) = #{x mod a : x^2 = d (mod a)}, by CRT over prime powers."""
    if a < 1:
        raise ValueError("modulus must be positive")
    out = 1
    for p, l in factorize(a).items():
        out *= _count_sqrt_pp(d, p, l)
        if out == 0:
            return 0
    return out


def count_sqrt_prime_power(d, p, l):
    """A(d, p^l) for odd prime p via the closed-form case analysis.

    Writing d = d0 * p^k with p coprime to d0: p^floor(l/2) when k >= l,
    zero when k < l is odd, and 2 p^(k/2) or 0 (by the residue character
    of d0 mod p) when k < l is even.
    """
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    if l < 0:
        raise ValueError("exponent must be non-negative")
    if l == 0:
        return 1
    if d % p ** l == 0:
        return p ** (l // 2)
    k = valuation(d, p)
    if k >= l:
        return p ** (l // 2)
    if k % 2:
        return 0
    d0 = d // p ** k
    if pow(d0 % p, (p - 1) // 2, p) == 1:
        return 2 * p ** (k // 2)
    return 0


def kronecker(D, n):
    """Kronecker symbol (D/n)."""
    if n == 0:
        return 1 if D in (1, -1) else 0
    if D % 2 == 0 and n % 2 == 0:
        return 0
    result = 1
    if n < 0:
        n = -n
        if D < 0:
            result = -result
    while n % 2 == 0:
        n //= 2
        if D % 8 in (3, 5):
            result = -result
    # now n odd positive: Jacobi symbol with reciprocity
    D %= n
    while D:
        while D % 2 == 0:
            D //= 2
            if n % 8 in (3, 5):
                result = -result
        if D % 4 == 3 and n % 4 == 3:
            result = -result
        D, n = n % D, D
    return result if n == 1 else 0


def field_discriminant(D):
    """Fundamental discriminant of the quadratic algebra Q(sqrt(D))."""
    d0 = squarefree_part(D)
    return d0 if d0 % 4 == 1 else 4 * d0


def field_character(D, n):
    """chi_D(n): the quadratic character attached to Q(sqrt(D)), i.e. the
    Kronecker symbol of the associated fundamental discriminant."""
    return kronecker(field_discriminant(D), n)


def _a_pp(p, k, l):
    # prime-power coefficient: min(p^(k/2), p^(l/2)) for even min(k, l), else 0
    m = min(k, l)
    if m % 2:
        return 0
    return p ** (m // 2)


def wmds_coeff(D, m):
    """a(D, m): product of the prime-power coefficients over p^k||D, p^l||m."""
    if m < 1:
        raise ValueError("m must be positive")
    if not is_discriminant(D):
        raise ValueError("D must be a discriminant")
    out = 1
    for p, l in factorize(m).items():
        out *= _a_pp(p, valuation(D, p), l)
        if out == 0:
            return 0
    return out


def m_hat(D, m):
    """Largest divisor of m coprime to the squarefree part of D."""
    if m < 1:
        raise ValueError("m must be positive")
    d0 = abs(squarefree_part(D))
    g = gcd(m, d0)
    while g > 1:
        m //= g
        g = gcd(m, d0)
    return m


def class_number(D):
    """h(D) for a negative fundamental discriminant, by form enumeration."""
    from . import qforms

    return len(qforms.enumerate_class_group(D))
