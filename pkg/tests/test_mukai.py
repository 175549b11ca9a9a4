import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kummer_cones.errors import DegenerateWall, NotOrthogonal, VerticalWall
from kummer_cones.mukai import (
    MukaiVector,
    NSVector,
    bb_pairing,
    in_positive_cone,
    mukai_pairing,
    theta_v,
    theta_v_inverse,
    wall_slope,
    wall_vectors_from_solution,
)
from kummer_cones.pell import SurfaceParams, is_trivial_pell, solution_sequence

P1 = SurfaceParams(1, 3)


@pytest.mark.parametrize(
    "x,y,n,expected",
    [
        ((1, 0, -3), (1, 0, -3), 1, 6),
        ((1, 0, -3), (1, 0, -3), 17, 6),
        ((0, 1, 0), (0, 1, 0), 1, 2),
        ((1, 1, 1), (1, 0, -3), 1, 2),
    ],
)
def test_mukai_pairing(x, y, n, expected):
    assert mukai_pairing(MukaiVector(*x), MukaiVector(*y), SurfaceParams(n, 3)) == expected


def test_v_constructor():
    assert MukaiVector.v(SurfaceParams(5, 7)) == MukaiVector(1, 0, -7)
    assert MukaiVector.v(P1).square(P1) == 6


def test_bb_pairing():
    h, delta = NSVector(1, 0), NSVector(0, 1)
    assert bb_pairing(h, h, P1) == 2
    assert bb_pairing(delta, delta, P1) == -6
    assert bb_pairing(h, delta, P1) == 0


@pytest.mark.parametrize(
    "w,expected",
    [((0, 1, 0), (1, 0)), ((1, 0, 3), (0, 1)), ((2, 5, 6), (5, 2))],
)
def test_theta_v(w, expected):
    assert theta_v(MukaiVector(*w), P1) == NSVector(*expected)


def test_theta_v_rejects_non_orthogonal():
    with pytest.raises(NotOrthogonal):
        theta_v(MukaiVector(1, 0, 0), P1)


def test_theta_v_is_an_isometry():
    rng = random.Random(20181)
    for _ in range(2000):
        p = SurfaceParams(rng.randint(1, 300), rng.randint(3, 9))
        x = theta_v_inverse(NSVector(rng.randint(-1000, 1000), rng.randint(-1000, 1000)), p)
        y = theta_v_inverse(NSVector(rng.randint(-1000, 1000), rng.randint(-1000, 1000)), p)
        assert mukai_pairing(x, MukaiVector.v(p), p) == 0
        assert bb_pairing(theta_v(x, p), theta_v(y, p), p) == mukai_pairing(x, y, p)


@pytest.mark.parametrize(
    "w,expected", [((1, 0), True), ((0, 1), False), ((2, -1), True), ((-1, 0), False), ((1, -1), False)]
)
def test_in_positive_cone(w, expected):
    assert in_positive_cone(NSVector(*w), P1) is expected


@pytest.mark.parametrize(
    "X,Y,n,sign,u,d,g",
    [
        (3, 2, 1, 0, (1, 1, 1), 2, 3),
        (12, 7, 1, 0, (4, 6, 9), 3, 2),
        (12, 7, 1, 1, (-1, -2, -4), 1, 6),
        (6, 5, 2, 0, (1, 1, 2), 1, 6),
        (0, 1, 1, 0, (1, 0, 0), 3, 2),
        (0, 1, 1, 1, (0, 0, -1), 1, 6),
    ],
)
def test_wall_vectors_from_solution(X, Y, n, sign, u, d, g):
    rep = wall_vectors_from_solution(X, Y, SurfaceParams(n, 3))[sign]
    assert (rep.u, rep.d, rep.g) == (MukaiVector(*u), d, g)
    assert rep.source == ((X, Y) if sign == 0 else (-X, -Y))


@pytest.mark.parametrize(
    "u,n,expected",
    [((1, 1, 1), 1, Fraction(1, 2)), ((-1, -2, -4), 1, Fraction(4, 7)), ((0, 0, -1), 1, 0), ((0, 0, -1), 50, 0)],
)
def test_wall_slope(u, n, expected):
    assert wall_slope(MukaiVector(*u), SurfaceParams(n, 3)) == expected


def test_wall_slope_errors():
    with pytest.raises(DegenerateWall):
        wall_slope(MukaiVector(2, 0, -6), P1)
    with pytest.raises(VerticalWall):
        wall_slope(MukaiVector(1, 1, -3), P1)


def test_wall_slope_is_orthogonal_direction():
    # the ray h - Q delta really is orthogonal to u inside v^perp
    for u in [MukaiVector(1, 1, 1), MukaiVector(4, 6, 9), MukaiVector(3, 2, 8)]:
        for n in (1, 6):
            p = SurfaceParams(n, 3)
            q = wall_slope(u, p)
            ray = theta_v_inverse(NSVector(q.denominator, -q.numerator), p)
            pair = mukai_pairing(u, ray, p)
            # sign of c is free, so one of u and its mirror is orthogonal
            mirror = MukaiVector(u.r, -u.c, u.a)
            assert pair == 0 or mukai_pairing(mirror, ray, p) == 0


solutions = st.tuples(st.integers(1, 300), st.sampled_from([3, 4, 5, 6, 8]), st.integers(0, 8)).filter(
    lambda t: not is_trivial_pell(SurfaceParams(t[0], t[1]))
)


@given(solutions)
def test_wall_vector_invariants(t):
    n, l, k = t
    p = SurfaceParams(n, l)
    s = solution_sequence(p, k)[-1]
    plus, minus = wall_vectors_from_solution(s.X, s.Y, p, s.k)
    v = MukaiVector.v(p)
    for rep in (plus, minus):
        assert rep.u.square(p) == 0
        assert rep.u.is_primitive()
        assert mukai_pairing(rep.u, v, p) == rep.d > 0
        assert rep.d * rep.g == 2 * l
    if s.k > 0:
        assert wall_slope(plus.u, p) == wall_slope(minus.u, p) == Fraction(n * s.X, l * s.Y)
    # the same walls come out of (-X, -Y), with the reports swapped
    swapped = wall_vectors_from_solution(-s.X, -s.Y, p)
    assert (swapped[0].u, swapped[1].u) == (minus.u, plus.u)


def test_l3_content_matches_gcd_with_six():
    from math import gcd

    for n in range(1, 80):
        p = SurfaceParams(n, 3)
        if is_trivial_pell(p):
            continue
        for s in solution_sequence(p, 5):
            for rep in wall_vectors_from_solution(s.X, s.Y, p):
                X, Y = rep.source
                assert rep.d in (1, 2, 3, 6)
                assert rep.g in (1, 2, 3, 6)
                if rep.d <= 3:
                    assert gcd(Y + 1, X, 6) == rep.g in (2, 3, 6)
