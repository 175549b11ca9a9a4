from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummer_cones.errors import IntegrityError, TrivialPell
from kummer_cones.pell import (
    PellSolution,
    SurfaceParams,
    factorize,
    fundamental_solution,
    is_trivial_pell,
    next_solution,
    pell_unit,
    plain_pell_sequence,
    solution_sequence,
)

from conftest import scan_pell


@pytest.mark.parametrize("n,l,expected", [(3, 3, True), (1, 3, False), (1, 4, True), (12, 3, True), (2, 8, True)])
def test_is_trivial_pell(n, l, expected):
    assert is_trivial_pell(SurfaceParams(n, l)) is expected


def test_params_validation():
    with pytest.raises(ValueError):
        SurfaceParams(0, 3)
    with pytest.raises(ValueError):
        SurfaceParams(1, 2)
    assert SurfaceParams(18).m == 6
    with pytest.raises(ValueError):
        SurfaceParams(4).m


@pytest.mark.parametrize(
    "n,l,expected",
    [
        (1, 3, (3, 2)),
        (6, 3, (2, 3)),
        (2, 4, (4, 3)),
        (9, 3, (1, 2)),
        (18, 3, (2, 5)),
        (24, 3, (1, 3)),
    ],
)
def test_fundamental_solution_examples(n, l, expected):
    f = fundamental_solution(SurfaceParams(n, l))
    assert f.pair == expected
    assert f.k == 1
    # the naive scan sees the same first positive solution
    assert scan_pell(n, l, 50)[1] == expected


def test_fundamental_solution_trivial():
    with pytest.raises(TrivialPell):
        fundamental_solution(SurfaceParams(3, 3))
    with pytest.raises(TrivialPell):
        solution_sequence(SurfaceParams(27, 3), 2)


@pytest.mark.parametrize("l", [3, 4, 5, 8])
def test_fundamental_matches_scan(l):
    for n in range(1, 121):
        p = SurfaceParams(n, l)
        if is_trivial_pell(p):
            continue
        scanned = scan_pell(n, l, 3000)
        if len(scanned) > 1:
            assert fundamental_solution(p).pair == scanned[1], n


def test_large_fundamental_solution():
    # D = 3 * 61 / 3: the classic Y^2 - 61 W^2 = 1 unit
    assert pell_unit(61) == (1766319049, 226153980)
    f = fundamental_solution(SurfaceParams(183, 3))
    assert f.residual(SurfaceParams(183, 3)) == 0
    assert f.Y == 1766319049


@pytest.mark.parametrize(
    "n,l,start,expected",
    [
        (6, 3, (2, 3, 1), (12, 17)),
        (1, 3, (0, 1, 0), (3, 2)),
        (9, 3, (4, 7, 2), (15, 26)),
    ],
)
def test_next_solution(n, l, start, expected):
    s = next_solution(SurfaceParams(n, l), PellSolution(*start))
    assert s.pair == expected
    assert s.k == start[2] + 1


def test_next_solution_matches_proof_formulas():
    # second and third solutions written out in terms of (X1, Y1) and m = n/3
    for m in range(2, 120):
        n = 3 * m
        p = SurfaceParams(n)
        if is_trivial_pell(p):
            continue
        x1, y1 = fundamental_solution(p).pair
        seq = solution_sequence(p, 3)
        assert seq[2].pair == (2 * x1 * y1, y1 * y1 + m * x1 * x1)
        assert seq[3].pair == (3 * x1 * y1 * y1 + m * x1**3, y1 * (y1 * y1 + 3 * m * x1 * x1))


def test_next_solution_rejects_bad_input():
    with pytest.raises(IntegrityError):
        # X_1 = 6 for 9Y^2 - 2X^2 = 9, and 2*6*1 is not divisible by 9
        next_solution(SurfaceParams(2, 9), PellSolution(1, 1, 0))


@pytest.mark.parametrize(
    "n,l,K,expected",
    [
        (1, 3, 3, [(0, 1), (3, 2), (12, 7), (45, 26)]),
        (6, 3, 2, [(0, 1), (2, 3), (12, 17)]),
        (5, 3, 0, [(0, 1)]),
    ],
)
def test_solution_sequence(n, l, K, expected):
    seq = solution_sequence(SurfaceParams(n, l), K)
    assert [s.pair for s in seq] == expected
    assert [s.k for s in seq] == list(range(K + 1))
    assert scan_pell(n, l, expected[-1][0])[: K + 1] == expected


nontrivial = st.tuples(st.integers(1, 500), st.sampled_from([3, 4, 5, 8])).filter(
    lambda t: not is_trivial_pell(SurfaceParams(*t))
)


@settings(max_examples=300, deadline=None)
@given(nontrivial)
def test_sequence_stays_on_conic_and_increases(nl):
    p = SurfaceParams(*nl)
    seq = solution_sequence(p, 15)
    for s in seq:
        assert p.l * s.Y**2 - p.n * s.X**2 == p.l
        assert p.n * s.X**2 < p.l * s.Y**2
    for a, b in zip(seq, seq[1:]):
        assert a.X * b.Y < b.X * a.Y


def slope_within(q: Fraction, eps: Fraction) -> bool:
    """0 < 1/sqrt(3) - q < eps for the wall slope q, without floating point."""
    return 3 * q * q < 1 and 3 * (q + eps) ** 2 > 1


def test_convergence_n1():
    eps = Fraction(1, 1000)
    seq = solution_sequence(SurfaceParams(1, 3), 15)
    slopes = [Fraction(s.X, 3 * s.Y) for s in seq]
    assert all(slope_within(q, eps) for q in slopes[5:])
    assert not slope_within(slopes[1], eps)


def test_caution_mod3_laws():
    for m in range(2, 201):
        if isqrt(m) ** 2 == m:
            continue
        for y, x in plain_pell_sequence(m, 15):
            assert y * y - m * x * x == 1
            if m % 3 == 0:
                assert y % 3
            elif m % 3 == 1:
                assert x % 3 == 0 and y % 3
            else:
                assert (x % 3 == 0) != (y % 3 == 0)


def test_factorize():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(1) == {}
    assert factorize(97) == {97: 1}
