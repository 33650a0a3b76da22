"""Pairs of 4x4 alternating forms: Pfaffian (normalized so that the
standard symplectic matrix has Pfaffian +1), associated quadratic form,
fusion from cubes, the twisted SL2 x SL4 action and relative invariants.
"""

import time
from typing import NamedTuple

from .qforms import Form


class AltFormPair(NamedTuple):
    first: tuple   # 4x4 alternating matrix, rows as tuples
    second: tuple


def alt_matrix(r, a, b, c, d, l):
    """Alternating matrix with upper triangle (r, a, b; c, d; l)."""
    return ((0, r, a, b),
            (-r, 0, c, d),
            (-a, -c, 0, l),
            (-b, -d, -l, 0))


def pair_from_coeffs(r1, a, b, c, d, l1, r2, e, f, g, h, l2):
    return AltFormPair(alt_matrix(r1, a, b, c, d, l1),
                       alt_matrix(r2, e, f, g, h, l2))


def is_alternating(M):
    return all(M[i][j] == -M[j][i] for i in range(4) for j in range(i, 4))


def pfaffian(M):
    """Pfaffian with Pfaff([[0, I], [-I, 0]]) = 1; in the coordinate
    pattern (r, a, b, c, d, l) this is ad - bc - rl."""
    if not is_alternating(M):
        raise ValueError("matrix must be alternating")
    return M[0][2] * M[1][3] - M[0][3] * M[1][2] - M[0][1] * M[2][3]


def det4(M):
    total = 0
    for perm, sign in _PERMS:
        p = sign
        for i, j in enumerate(perm):
            p *= M[i][j]
        total += p
    return total


def _perms4():
    from itertools import permutations
    out = []
    for perm in permutations(range(4)):
        sign = 1
        perm_l = list(perm)
        for i in range(4):
            for j in range(i + 1, 4):
                if perm_l[i] > perm_l[j]:
                    sign = -sign
        out.append((perm, sign))
    return out


_PERMS = _perms4()


def _combine(M, N, cm, cn):
    return tuple(tuple(cm * M[i][j] + cn * N[i][j] for j in range(4))
                 for i in range(4))


def qform_F(F):
    """Q_F(u, v) = -Pfaff(M u - N v), coefficients by evaluation."""
    M, N = F
    ca = -pfaffian(M)
    cc = -pfaffian(_combine(M, N, 0, -1))
    cb = -pfaffian(_combine(M, N, 1, -1)) - ca - cc
    return Form(ca, cb, cc)


def disc(F):
    Q = qform_F(F)
    return Q.b * Q.b - 4 * Q.a * Q.c


def fuse(A):
    """Fusion of a cube into a pair of alternating forms; Q_F = Q_1."""
    a, b, c, d, e, f, g, h = A
    return pair_from_coeffs(0, a, b, c, d, 0, 0, e, f, g, h, 0)


def _mat4_mul(X, Y):
    return tuple(tuple(sum(X[i][k] * Y[k][j] for k in range(4))
                       for j in range(4)) for i in range(4))


def _transpose(X):
    return tuple(tuple(X[j][i] for j in range(4)) for i in range(4))


def _congruence(g, M):
    return _mat4_mul(_mat4_mul(g, M), _transpose(g))


def act_24(g1, g, F):
    """(g1, g).(M, N) = (s gMg^t + t gNg^t, u gMg^t + v gNg^t)."""
    (s, t), (u, v) = g1
    M = _congruence(g, F.first)
    N = _congruence(g, F.second)
    return AltFormPair(_combine(M, N, s, t), _combine(M, N, u, v))


def invariants_W(F):
    """(disc, P0, P1) = (disc Q_F, r2, -Pfaff(M)) for F with r1 = 0."""
    if F.first[0][1] != 0:
        raise ValueError("F must lie in W (vanishing r1 entry)")
    return disc(F), F.second[0][1], -pfaffian(F.first)


def verify_fusion(seed=0, cases=10000, bound=50):
    """Seeded random check that Q_fuse(A) = Q_1(A) with disc preserved."""
    import random

    from . import cubes

    t0 = time.monotonic()
    rng = random.Random(seed)
    failure = None
    for i in range(cases):
        A = cubes.Cube(*(rng.randint(-bound, bound) for _ in range(8)))
        F = fuse(A)
        if qform_F(F) != cubes.qform(A, 1) or disc(F) != cubes.disc(A):
            failure = {
                "inputs": {"cube": list(A), "case": i},
                "expected": list(cubes.qform(A, 1)),
                "actual": list(qform_F(F)),
            }
            break
    return {
        "suite": "fusion",
        "status": "pass" if failure is None else "fail",
        "cases_run": cases,
        "first_failure": failure,
        "elapsed_ms": int((time.monotonic() - t0) * 1000),
    }
