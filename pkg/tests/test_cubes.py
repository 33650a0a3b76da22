import random
from fractions import Fraction

import pytest

from cubeforms import arith, cubes, qforms
from cubeforms.cubes import Cube

IDENT = ((1, 0), (0, 1))
GENS = (((1, 1), (0, 1)), ((1, 0), (1, 1)), ((0, 1), (-1, 0)))


def random_sl2(rng, words=6):
    g = IDENT
    for _ in range(words):
        h = rng.choice(GENS)
        g = tuple(tuple(sum(g[i][k] * h[k][j] for k in range(2))
                        for j in range(2)) for i in range(2))
    return g


def test_slices():
    A = Cube(1, 2, 3, 4, 5, 6, 7, 8)
    (M1, N1), (M2, N2), (M3, N3) = cubes.slices(A)
    assert M1 == ((1, 2), (3, 4)) and N1 == ((5, 6), (7, 8))
    assert M2 == ((1, 5), (3, 7)) and N2 == ((2, 6), (4, 8))
    assert M3 == ((1, 5), (2, 6)) and N3 == ((3, 7), (4, 8))
    assert cubes.slices(cubes.ZERO) == tuple(
        ((((0, 0), (0, 0)), ((0, 0), (0, 0)))) for _ in range(3))


def test_qform_examples():
    A = Cube(0, 1, 1, 0, 1, 0, 0, -1)
    assert cubes.qform(A, 1) == (1, 0, 1)
    for i in (1, 2, 3):
        assert cubes.qform(cubes.ZERO, i) == (0, 0, 0)
    B = Cube(0, 1, 1, -6, 1, -1, -6, 0)
    assert cubes.qform(B, 1) == (1, 1, 6)


def test_qform_matches_displayed_polynomials():
    rng = random.Random(2)
    for _ in range(300):
        a, b, c, d, e, f, g, h = (rng.randint(-9, 9) for _ in range(8))
        A = Cube(a, b, c, d, e, f, g, h)
        assert cubes.qform(A, 1) == (-(a * d - b * c),
                                     -(-a * h + b * g + c * f - d * e),
                                     -(e * h - f * g))
        assert cubes.qform(A, 2) == (-(a * g - c * e),
                                     -(-a * h - b * g + c * f + d * e),
                                     -(b * h - d * f))
        assert cubes.qform(A, 3) == (-(a * f - b * e),
                                     -(-a * h + b * g - c * f + d * e),
                                     -(c * h - d * g))


def test_disc():
    assert cubes.disc(Cube(0, 1, 1, 0, 1, 0, 0, -1)) == -4
    assert cubes.disc(cubes.ZERO) == 0
    assert cubes.disc(Cube(0, 1, 1, -6, 1, -1, -6, 0)) == -23


def test_disc_equals_form_discs():
    rng = random.Random(4)
    for _ in range(300):
        A = Cube(*(rng.randint(-9, 9) for _ in range(8)))
        D = cubes.disc(A)
        for i in (1, 2, 3):
            assert qforms.disc(cubes.qform(A, i)) == D


def test_act_examples():
    A = Cube(0, 1, 1, 0, 1, 0, 0, -1)
    assert cubes.act(IDENT, IDENT, IDENT, A) == A
    g = ((1, 0), (1, 1))
    assert cubes.act(g, IDENT, IDENT, A) == Cube(0, 1, 1, 0, 1, 1, 1, -1)


def test_act_preserves_disc_and_classes():
    rng = random.Random(9)
    for _ in range(300):
        A = Cube(*(rng.randint(-9, 9) for _ in range(8)))
        g1, g2, g3 = (random_sl2(rng) for _ in range(3))
        B = cubes.act(g1, g2, g3, A)
        assert cubes.disc(B) == cubes.disc(A)
        # slot j != i leaves Q_i unchanged as a polynomial only up to
        # SL2-equivalence; check class invariance on definite forms
        for i in (1, 2, 3):
            Qa, Qb = cubes.qform(A, i), cubes.qform(B, i)
            if qforms.disc(Qa) < 0 and Qa.a > 0 and Qb.a > 0:
                assert qforms.reduce(Qa) == qforms.reduce(Qb)


def test_slot_actions_commute():
    rng = random.Random(13)
    for _ in range(100):
        A = Cube(*(rng.randint(-9, 9) for _ in range(8)))
        g1, g2, g3 = (random_sl2(rng) for _ in range(3))
        B = cubes._act_slice(cubes._act_slice(cubes._act_slice(A, 3, g3), 2, g2), 1, g1)
        assert B == cubes.act(g1, g2, g3, A)


def test_borel_invariants():
    assert cubes.borel_invariants(Cube(0, 1, 1, -6, 1, -1, -6, 0)) == (-23, 1, 1)
    assert cubes.borel_invariants(cubes.ZERO) == (0, 0, 0)
    assert cubes.borel_invariants(Cube(0, 1, 1, 0, 1, 0, 0, -1)) == (-4, 1, 1)


def test_borel_act_characters():
    rng = random.Random(17)
    A = Cube(*(Fraction(rng.randint(-9, 9)) for _ in range(8)))
    g = cubes.BorelElement(((1, 0), (0, 1)), ((1, 0), (0, 1)), ((1, 0), (0, 1)))
    assert cubes.borel_act(g, A) == A
    g = cubes.BorelElement(((2, 0), (0, 1)), ((1, 0), (0, 1)), ((1, 0), (0, 1)))
    assert cubes.characters(g)[1] == 4
    D0, m0, n0 = cubes.borel_invariants(A)
    _, m1, _ = cubes.borel_invariants(cubes.borel_act(g, A))
    assert m1 == 4 * m0
    # det-1 lower-triangular parts fix D
    g = cubes.BorelElement(((Fraction(1, 2), 0), (3, 2)),
                           ((Fraction(-1, 3), 0), (1, -3)), ((2, 1), (1, 1)))
    assert cubes.characters(g)[0] == 1
    assert cubes.borel_invariants(cubes.borel_act(g, A))[0] == D0


def test_borel_act_rejects_bad_elements():
    A = cubes.ZERO
    with pytest.raises(ValueError):
        cubes.borel_act(cubes.BorelElement(((1, 1), (0, 1)), IDENT, IDENT), A)
    with pytest.raises(ValueError):
        cubes.borel_act(cubes.BorelElement(IDENT, IDENT, ((1, 1), (1, 1))), A)


def test_verify_characters_suite():
    rep = cubes.verify_characters(seed=1, cases=500)
    assert rep["status"] == "pass"
    assert rep["cases_run"] == 500


def test_is_projective():
    A = Cube(0, 1, 1, -6, 1, -1, -6, 0)
    assert cubes.is_projective(A)
    assert not cubes.is_projective(Cube(*(2 * v for v in A)))
    assert not cubes.is_projective(cubes.ZERO)


def test_construct_cube_examples():
    A = cubes.construct_cube(-23, 1, 1, 1, 1)
    assert A == Cube(0, 1, 1, -6, 1, -1, -6, 0)
    assert cubes.qform(A, 1) == (1, 1, 6) and cubes.qform(A, 2) == (1, 1, 6)
    with pytest.raises(ValueError, match="x\\^2 = D"):
        cubes.construct_cube(-23, 1, 1, 0, 1)
    A = cubes.construct_cube(-4, 1, 1, 0, 0)
    assert cubes.qform(A, 1) == (1, 0, 1) and cubes.qform(A, 2) == (1, 0, 1)


def test_construct_cube_postconditions_small():
    for D in (-23, -7, 5, -15, 45, -24, 8):
        for m in list(range(-6, 0)) + list(range(1, 7)):
            for n in list(range(-6, 0)) + list(range(1, 7)):
                for x in cubes.solutions_in_window(D, m):
                    for y in cubes.solutions_in_window(D, n):
                        A = cubes.construct_cube(D, m, n, x, y)
                        assert A.a == 0
                        from math import gcd
                        assert gcd(gcd(A.b, A.e), A.f) == 1
                        assert cubes.disc(A) == D
                        assert cubes.qform(A, 1)[:2] == (m, x)
                        assert cubes.qform(A, 2)[:2] == (n, y)


def test_invariant_tuple():
    A = Cube(0, 1, 1, -6, 1, -1, -6, 0)
    assert cubes.invariant_tuple(A) == (-23, 1, 1, 1, 1)
    assert cubes.invariant_tuple(Cube(0, 1, 1, 0, 1, 0, 0, -1)) == (-4, 1, 1, 0, 0)
    with pytest.raises(ValueError):
        cubes.invariant_tuple(cubes.ZERO)


def test_invariant_tuple_stable_under_discrete_borel():
    lower = ((1, 0), (1, 1))
    rng = random.Random(23)
    A = cubes.construct_cube(-23, 2, 3, 1, 1)
    t = cubes.invariant_tuple(A)
    for g1 in (IDENT, lower):
        for g2 in (IDENT, lower):
            for g3 in (IDENT, lower, ((1, 0), (-1, 1))):
                assert cubes.invariant_tuple(cubes.act(g1, g2, g3, A)) == t
    # longer random words in the discrete Borel triple
    for _ in range(50):
        B = A
        for _ in range(rng.randint(1, 6)):
            k1, k2, k3 = (rng.randint(-3, 3) for _ in range(3))
            B = cubes.act(((1, 0), (k1, 1)), ((1, 0), (k2, 1)), ((1, 0), (k3, 1)), B)
        assert cubes.invariant_tuple(B) == t


def test_count_orbits():
    assert cubes.count_orbits(-23, 1, 1) == 1
    assert cubes.count_orbits(-23, 2, 3) == 4
    assert cubes.count_orbits(5, 1, 1) == 1
    with pytest.raises(ValueError):
        cubes.count_orbits(-23, 0, 1)


def test_count_orbits_matches_enumeration():
    for D in (-23, -7, 5, -15):
        for m in (-4, -2, -1, 1, 2, 3, 4, 6):
            for n in (-3, -1, 1, 2, 5):
                count = cubes.count_orbits(D, m, n)
                tuples = set()
                for x in cubes.solutions_in_window(D, m):
                    for y in cubes.solutions_in_window(D, n):
                        tuples.add(cubes.invariant_tuple(cubes.construct_cube(D, m, n, x, y)))
                assert count == len(tuples)
                assert count == Fraction(arith.count_sqrt_mod(D, abs(4 * m))
                                         * arith.count_sqrt_mod(D, abs(4 * n)), 4)


def test_verify_composition_law():
    for D, h in ((-7, 1), (-15, 2), (-23, 3), (-31, 3)):
        rep = cubes.verify_composition_law(D)
        assert rep["status"] == "pass"
        assert rep["class_number"] == h
        assert rep["cube_classes"] == h * h
    with pytest.raises(ValueError):
        cubes.verify_composition_law(-4)
