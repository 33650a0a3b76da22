"""Binary quadratic forms au^2 + buv + cv^2: SL2 action, reduction of
definite forms, Gauss composition, class-group enumeration, Heegner points.
"""

from fractions import Fraction
from math import gcd, isqrt
from typing import NamedTuple

from . import arith


class Form(NamedTuple):
    a: int
    b: int
    c: int


class HeegnerPoint(NamedTuple):
    re: Fraction
    im_sq: Fraction


def disc(Q):
    a, b, c = Q
    return b * b - 4 * a * c


def is_primitive(Q):
    return gcd(gcd(Q[0], Q[1]), Q[2]) == 1


def evaluate(Q, u, v):
    a, b, c = Q
    return a * u * u + b * u * v + c * v * v


def act(g, Q):
    """Substitution action: (g.Q)(u, v) = Q(g11 u + g21 v, g12 u + g22 v)."""
    (g11, g12), (g21, g22) = g
    if g11 * g22 - g12 * g21 != 1:
        raise ValueError("matrix must have determinant 1")
    a = evaluate(Q, g11, g12)
    c = evaluate(Q, g21, g22)
    b = evaluate(Q, g11 + g21, g12 + g22) - a - c
    return Form(a, b, c)


def is_reduced(Q):
    a, b, c = Q
    if not (-a < b <= a <= c):
        return False
    if (a == c or a == abs(b)) and b < 0:
        return False
    return True


def reduce(Q):
    """The unique reduced representative of a positive-definite form."""
    a, b, c = Q
    D = disc(Q)
    if D >= 0:
        raise ValueError("only definite forms (negative discriminant)")
    if a <= 0:
        raise ValueError("leading coefficient must be positive")
    while True:
        if c < a or (c == a and b < 0):
            a, b, c = c, -b, a
            continue
        # translate b into (-a, a]
        b2 = b % (2 * a)
        if b2 > a:
            b2 -= 2 * a
        if b2 != b:
            b, c = b2, (b2 * b2 - D) // (4 * a)
            continue
        if a == abs(b) and b < 0:
            b = -b
            continue
        return Form(a, b, c)


def principal_form(D):
    if not arith.is_discriminant(D):
        raise ValueError("not a discriminant")
    if D % 4 == 1:
        return Form(1, 1, (1 - D) // 4)
    return Form(1, 0, -D // 4)


def inverse(Q):
    a, b, c = Q
    return reduce(Form(a, -b, c))


def _coprime_representative(Q, coprime_to):
    # SL2-equivalent form whose leading coefficient is coprime to `coprime_to`
    for bound in (2, 4, 8, 16, 32):
        for u in range(-bound, bound + 1):
            for v in range(-bound, bound + 1):
                if gcd(u, v) != 1:
                    continue
                val = evaluate(Q, u, v)
                if val != 0 and gcd(val, coprime_to) == 1:
                    # extend (u, v) to an SL2 matrix with top row (u, v)
                    g0, r, s = _xgcd(u, v)
                    if g0 < 0:
                        r, s = -r, -s
                    return act(((u, v), (-s, r)), Q)
    raise ValueError("no coprime representative found (imprimitive form?)")


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def compose(Q1, Q2):
    """Gauss composition of primitive definite forms of equal discriminant.

    Uses united (concordant) forms: replace Q2 by an equivalent form whose
    leading coefficient is coprime to that of Q1, align the middle
    coefficients by CRT, and read off the product.
    """
    D = disc(Q1)
    if disc(Q2) != D:
        raise ValueError("discriminants must match")
    if not (is_primitive(Q1) and is_primitive(Q2)):
        raise ValueError("forms must be primitive")
    Q1 = reduce(Form(*Q1))
    Q2 = reduce(Form(*Q2))
    a1, b1, _ = Q1
    a2, b2, _ = _coprime_representative(Q2, a1)
    # B = b1 (mod 2 a1), B = b2 (mod 2 a2); b1, b2 share the parity of D
    g, inv, _ = _xgcd(a1 % a2, a2)
    assert g == 1
    k = (inv * ((b2 - b1) // 2)) % a2
    B = b1 + 2 * a1 * k
    A = a1 * a2
    C = (B * B - D) // (4 * A)
    return reduce(Form(A, B, C))


def enumerate_class_group(D):
    """All reduced primitive forms of negative fundamental discriminant D."""
    if D >= 0:
        raise ValueError("only negative discriminants")
    if not arith.is_fundamental(D):
        raise ValueError("only fundamental discriminants")
    out = []
    for a in range(1, isqrt(-D // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a:
                continue
            if b < 0 and (a == c or a == -b):
                continue
            if gcd(gcd(a, b), c) == 1:
                out.append(Form(a, b, c))
    # positive b before its negative at the same a (conventional listing)
    out.sort(key=lambda Q: (Q.a, -Q.b))
    return out


def stabilizer_order(Q):
    """Order of the SL2 stabilizer modulo +-1 (3 for disc -3, 2 for -4)."""
    D = disc(Q)
    if D == -3:
        return 3
    if D == -4:
        return 2
    return 1


def heegner_point(Q):
    """Upper half-plane root z = (-b + i sqrt(|D|)) / (2a), stored exactly."""
    a, b, _ = Q
    D = disc(Q)
    if D >= 0:
        raise ValueError("only definite forms")
    if a <= 0:
        raise ValueError("leading coefficient must be positive")
    return HeegnerPoint(Fraction(-b, 2 * a), Fraction(-D, 4 * a * a))
