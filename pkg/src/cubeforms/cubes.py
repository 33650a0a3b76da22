"""2x2x2 integer cubes: slicings, associated quadratic forms, discriminant,
the triple SL2 action, Borel relative invariants and characters, the
constructive existence lemma, orbit counting and the composition-law check.

A cube (a, b, c, d, e, f, g, h) has front face [[a, b], [c, d]] and back
face [[e, f], [g, h]].
"""

import time
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from . import arith, qforms
from .qforms import Form


class Cube(NamedTuple):
    a: object
    b: object
    c: object
    d: object
    e: object
    f: object
    g: object
    h: object


class CubeInvariants(NamedTuple):
    D: int
    m: int
    n: int
    x: int
    y: int


class BorelElement(NamedTuple):
    b1: tuple  # lower-triangular 2x2, rows ((r1, 0), (u1, s1))
    b2: tuple  # lower-triangular 2x2
    g3: tuple  # invertible 2x2


ZERO = Cube(0, 0, 0, 0, 0, 0, 0, 0)

# entry indices of (M, N) for each of the three slicings
_SLICES = (
    ((0, 1, 2, 3), (4, 5, 6, 7)),
    ((0, 4, 2, 6), (1, 5, 3, 7)),
    ((0, 4, 1, 5), (2, 6, 3, 7)),
)


def slices(A):
    """The three pairs (M_i, N_i) of opposite 2x2 faces."""
    out = []
    for mi, ni in _SLICES:
        M = ((A[mi[0]], A[mi[1]]), (A[mi[2]], A[mi[3]]))
        N = ((A[ni[0]], A[ni[1]]), (A[ni[2]], A[ni[3]]))
        out.append((M, N))
    return tuple(out)


def _det2(M):
    return M[0][0] * M[1][1] - M[0][1] * M[1][0]


def qform(A, i):
    """Associated form Q_i(u, v) = -det(M_i u - N_i v)."""
    M, N = slices(A)[i - 1]
    ca = -_det2(M)
    cc = -_det2(N)
    MN = ((M[0][0] - N[0][0], M[0][1] - N[0][1]),
          (M[1][0] - N[1][0], M[1][1] - N[1][1]))
    cb = -_det2(MN) - ca - cc
    return Form(ca, cb, cc)


def disc(A):
    a, b, c, d, e, f, g, h = A
    return (-a * h + b * g + c * f - d * e) ** 2 - 4 * (a * d - b * c) * (e * h - f * g)


def _act_slice(A, i, g):
    # g acts on the stacked pair (M_i; N_i) by row combination
    (g11, g12), (g21, g22) = g
    mi, ni = _SLICES[i - 1]
    vals = list(A)
    for pm, pn in zip(mi, ni):
        m, n = vals[pm], vals[pn]
        vals[pm] = g11 * m + g12 * n
        vals[pn] = g21 * m + g22 * n
    return Cube(*vals)


def act(g1, g2, g3, A):
    """Triple action: g_i transforms the i-th slicing; the slots commute."""
    for g in (g1, g2, g3):
        if _det2(g) != 1:
            raise ValueError("slot matrices must have determinant 1")
    A = _act_slice(A, 1, g1)
    A = _act_slice(A, 2, g2)
    A = _act_slice(A, 3, g3)
    return A


def borel_invariants(A):
    """(D, m, n) = (disc(A), Q_1(1, 0), Q_2(1, 0))."""
    a, b, c, d, e, f, g, h = A
    return disc(A), -(a * d - b * c), -(a * g - c * e)


def is_projective(A):
    """True when all three associated forms are primitive."""
    for i in (1, 2, 3):
        Q = qform(A, i)
        if Q == (0, 0, 0) or gcd(gcd(Q.a, Q.b), Q.c) != 1:
            return False
    return True


def _is_lower_triangular(M):
    return M[0][1] == 0


def characters(g):
    """(chi1, chi2, chi3) of a Borel element."""
    d1, d2, d3 = _det2(g.b1), _det2(g.b2), _det2(g.g3)
    r1 = g.b1[0][0]
    r2 = g.b2[0][0]
    chi1 = (d1 * d2 * d3) ** 2
    chi2 = r1 * r1 * d2 * d3
    chi3 = d1 * r2 * r2 * d3
    return chi1, chi2, chi3


def borel_act(g, A):
    """Rational Borel-triple action; D, m, n transform by the characters."""
    if not (_is_lower_triangular(g.b1) and _is_lower_triangular(g.b2)):
        raise ValueError("b1, b2 must be lower triangular")
    for M in (g.b1, g.b2, g.g3):
        if _det2(M) == 0:
            raise ValueError("singular slot matrix")
    A = _act_slice(A, 1, g.b1)
    A = _act_slice(A, 2, g.b2)
    A = _act_slice(A, 3, g.g3)
    return A


def _crt_pair(residues):
    # residues: list of (value, modulus) with pairwise coprime moduli
    x, m = 0, 1
    for r, q in residues:
        g, inv, _ = qforms._xgcd(m % q, q)
        x = x + m * ((inv * (r - x)) % q)
        m *= q
    return x % m, m


def construct_cube(D, m, n, x, y):
    """Build a cube with disc D, Q_1 = (m, x, s), Q_2 = (n, y, t), a = 0.

    Follows the constructive proof: c = |gcd(m, n, (x+y)/2)|, b = m/c,
    e = n/c, f = -(x+y)/(2c), then h by CRT so that f | s + e h and
    f | t + b h, finally g = (s + e h)/f and d = (t + b h)/f.
    """
    if m == 0 or n == 0:
        raise ValueError("m and n must be nonzero")
    if not 0 <= x <= 2 * abs(m) - 1:
        raise ValueError("x out of range [0, 2|m| - 1]")
    if not 0 <= y <= 2 * abs(n) - 1:
        raise ValueError("y out of range [0, 2|n| - 1]")
    if (x * x - D) % (4 * m):
        raise ValueError("congruence x^2 = D (mod 4m) fails")
    if (y * y - D) % (4 * n):
        raise ValueError("congruence y^2 = D (mod 4n) fails")
    s = (x * x - D) // (4 * m)
    t = (y * y - D) // (4 * n)
    half = (x + y) // 2
    c = abs(gcd(gcd(m, n), half))
    b = m // c
    e = n // c
    f = -(half // c)
    if f == 0:
        # only x = y = 0; then b s = e t with gcd(b, e) = 1, so e | s
        h, r = divmod(-s, e)
        if r or b * h != -t:
            raise ValueError("inconsistent f = 0 case")
        d = g = 0
    else:
        residues = []
        for p, k in arith.factorize(abs(f)).items():
            q = p ** k
            if e % p:
                _, inv, _ = qforms._xgcd(e % q, q)
                residues.append(((-s * inv) % q, q))
            else:
                _, inv, _ = qforms._xgcd(b % q, q)
                residues.append(((-t * inv) % q, q))
        h, _ = _crt_pair(residues)
        g = (s + e * h) // f
        d = (t + b * h) // f
        assert (s + e * h) % f == 0 and (t + b * h) % f == 0
    A = Cube(0, b, c, d, e, f, g, h)
    assert disc(A) == D
    assert qform(A, 1) == (m, x, s)
    assert qform(A, 2) == (n, y, t)
    return A


def invariant_tuple(A):
    """(D, m, n, x, y) with x, y normalized into their translation windows."""
    D, m, n = borel_invariants(A)
    if D == 0 or m == 0 or n == 0:
        raise ValueError("degenerate cube (vanishing invariant)")
    x = qform(A, 1).b % (2 * abs(m))
    y = qform(A, 2).b % (2 * abs(n))
    return CubeInvariants(D, m, n, x, y)


def count_orbits(D, m, n):
    """B(D, m, n), the number of Borel-triple integral orbits, as a Fraction."""
    if m == 0 or n == 0:
        raise ValueError("m and n must be nonzero")
    if not arith.is_discriminant(D):
        raise ValueError("D must be a discriminant")
    D1 = 1
    for p, e in arith.factorize(abs(D)).items():
        D1 *= p ** (e // 2)
    total = 0
    for d in _divisors(gcd(gcd(D1, m), n)):
        total += d * arith.count_sqrt_mod(D // (d * d), abs(4 * m // d)) \
                   * arith.count_sqrt_mod(D // (d * d), abs(4 * n // d))
    return Fraction(total, 4)


def _divisors(n):
    n = abs(n)
    out = [1]
    for p, e in arith.factorize(n).items():
        out = [d * p ** i for d in out for i in range(e + 1)]
    return sorted(out)


def solutions_in_window(D, m):
    """All x in [0, 2|m| - 1] with x^2 = D (mod 4m)."""
    return [x for x in range(2 * abs(m)) if (x * x - D) % (4 * m) == 0]


def _rand_fraction(rng, bound=9):
    num = rng.randint(-bound, bound)
    den = rng.randint(1, bound)
    return Fraction(num, den)


def random_borel_element(rng, bound=9):
    """Random invertible Borel element with rational entries."""
    while True:
        r1, r2 = _rand_fraction(rng, bound), _rand_fraction(rng, bound)
        s1, s2 = _rand_fraction(rng, bound), _rand_fraction(rng, bound)
        u1, u2 = _rand_fraction(rng, bound), _rand_fraction(rng, bound)
        g3 = ((_rand_fraction(rng, bound), _rand_fraction(rng, bound)),
              (_rand_fraction(rng, bound), _rand_fraction(rng, bound)))
        if r1 * s1 != 0 and r2 * s2 != 0 and _det2(g3) != 0:
            return BorelElement(((r1, 0), (u1, s1)), ((r2, 0), (u2, s2)), g3)


def verify_characters(seed=0, cases=10000, bound=9):
    """Seeded random check that D, m, n scale by chi1, chi2, chi3."""
    import random

    t0 = time.monotonic()
    rng = random.Random(seed)
    failure = None
    for i in range(cases):
        A = Cube(*(rng.randint(-bound, bound) for _ in range(8)))
        g = random_borel_element(rng, bound)
        chi1, chi2, chi3 = characters(g)
        D0, m0, n0 = borel_invariants(A)
        D1, m1, n1 = borel_invariants(borel_act(g, A))
        if (D1, m1, n1) != (chi1 * D0, chi2 * m0, chi3 * n0):
            failure = {
                "inputs": {"cube": list(A), "case": i},
                "expected": [str(chi1 * D0), str(chi2 * m0), str(chi3 * n0)],
                "actual": [str(D1), str(m1), str(n1)],
            }
            break
    return {
        "suite": "characters",
        "status": "pass" if failure is None else "fail",
        "cases_run": cases,
        "first_failure": failure,
        "elapsed_ms": int((time.monotonic() - t0) * 1000),
    }


def verify_composition_law(D):
    """Check the cube composition law at discriminant D < 0 odd fundamental.

    Enumerates one cube per pair of form classes through the constructive
    lemma and confirms the class map [A] -> ([Q1], [Q2]) is a bijection
    with [Q1][Q2][Q3] principal throughout.
    """
    t0 = time.monotonic()
    if not (D < 0 and D % 2 and arith.is_fundamental(D)):
        raise ValueError("D must be a negative odd fundamental discriminant")
    classes = qforms.enumerate_class_group(D)
    one = qforms.principal_form(D)
    failure = None
    seen_pairs = {}
    cases = 0
    for Q1 in classes:
        mm, xx = Q1.a, Q1.b % (2 * Q1.a)
        for Q2 in classes:
            nn, yy = Q2.a, Q2.b % (2 * Q2.a)
            cases += 1
            A = construct_cube(D, mm, nn, xx, yy)
            r1 = qforms.reduce(qform(A, 1))
            r2 = qforms.reduce(qform(A, 2))
            r3 = qforms.reduce(qform(A, 3))
            ok = (
                is_projective(A)
                and r1 == Q1
                and r2 == Q2
                and qforms.compose(qforms.compose(r1, r2), r3) == one
            )
            if not ok and failure is None:
                failure = {
                    "inputs": {"disc": D, "class1": list(Q1), "class2": list(Q2)},
                    "expected": "projective cube with [Q1][Q2][Q3] principal",
                    "actual": {"Q1": list(r1), "Q2": list(r2), "Q3": list(r3)},
                }
            if (r1, r2) in seen_pairs and failure is None:
                failure = {
                    "inputs": {"disc": D},
                    "expected": "distinct class pairs",
                    "actual": {"pair": [list(r1), list(r2)]},
                }
            seen_pairs[(r1, r2)] = A
    h = len(classes)
    complete = len(seen_pairs) == h * h
    if not complete and failure is None:
        failure = {
            "inputs": {"disc": D},
            "expected": h * h,
            "actual": len(seen_pairs),
        }
    return {
        "suite": "composition",
        "status": "pass" if failure is None else "fail",
        "cases_run": cases,
        "first_failure": failure,
        "elapsed_ms": int((time.monotonic() - t0) * 1000),
        "disc": D,
        "class_number": h,
        "cube_classes": len(seen_pairs),
    }
