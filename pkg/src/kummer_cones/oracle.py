"""Brute-force cross-checks that do not use any Pell theory.

The wall set Gamma is defined by four inequalities on a Mukai vector u:

    <u, v - u> > 0,   u^2 >= 0,   (v - u)^2 >= 0,   <u, v>^2 > v^2 u^2.

Writing s = u^2 and d = <u, v>, the first three give 0 <= s < d <= l + s/2,
so s < 2l and d takes finitely many values.  For fixed (s, d) and rank r the
third component is a = l*r - d and c is pinned (up to sign) by
2n*c^2 = s + 2*r*a.  Looping over r therefore lists every member of Gamma
inside a box exactly; each candidate is re-checked against the raw
inequalities anyway.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt

from .errors import DegenerateWall, Incomplete, VerticalWall
from .mukai import MukaiVector, mukai_pairing, wall_slope
from .pell import PellSolution, SurfaceParams, is_square, is_trivial_pell

__all__ = [
    "EnumerationBounds",
    "DEFAULT_BOUND",
    "in_gamma",
    "in_gamma_m",
    "admissible_invariants",
    "enumerate_gamma",
    "enumerate_gamma_naive",
    "boundary_walls",
    "oracle_nef_boundary",
    "oracle_movable_boundary",
    "brute_pell",
    "verify_lemma_isotropic",
]

DEFAULT_BOUND = 2048


@dataclass(frozen=True)
class EnumerationBounds:
    """Box |r|, |c|, |a| <= max_component."""

    max_component: int = DEFAULT_BOUND

    def __post_init__(self):
        if self.max_component < 1:
            raise ValueError("max_component must be at least 1")


def in_gamma(u: MukaiVector, p: SurfaceParams) -> bool:
    v = MukaiVector.v(p)
    w = v - u
    uu = mukai_pairing(u, u, p)
    uv = mukai_pairing(u, v, p)
    return (
        mukai_pairing(u, w, p) > 0
        and uu >= 0
        and mukai_pairing(w, w, p) >= 0
        and uv * uv > mukai_pairing(v, v, p) * uu
    )


def in_gamma_m(u: MukaiVector, p: SurfaceParams) -> bool:
    return (
        in_gamma(u, p)
        and mukai_pairing(u, u, p) == 0
        and mukai_pairing(u, MukaiVector.v(p), p) in (1, 2)
    )


def admissible_invariants(p: SurfaceParams) -> list[tuple[int, int]]:
    """All (u^2, <u, v>) pairs the Gamma inequalities allow."""
    v2 = 2 * p.l
    out = []
    for s in range(0, v2):
        for d in range(s + 1, p.l + s // 2 + 1):
            # (v-u)^2 = v^2 - 2d + s
            if v2 - 2 * d + s >= 0 and d * d > v2 * s:
                out.append((s, d))
    return out


# Above this many r values per (s, d) the scan switches to numpy.
_VECTOR_THRESHOLD = 200_000
_CHUNK = 4_000_000


def _r_interval(p: SurfaceParams, d: int, B: int) -> tuple[int, int]:
    # |a| = |l*r - d| <= B restricts r to an interval
    return max(-B, -((B - d) // p.l)), min(B, (B + d) // p.l)


def _scan_python(p: SurfaceParams, s: int, d: int, B: int):
    two_n = 2 * p.n
    r_lo, r_hi = _r_interval(p, d, B)
    for r in range(r_lo, r_hi + 1):
        a = p.l * r - d
        num = s + 2 * r * a
        if num < 0 or num % two_n:
            continue
        c2 = num // two_n
        c = isqrt(c2)
        if c * c == c2 and c <= B:
            yield r, c, a


def _scan_numpy(p: SurfaceParams, s: int, d: int, B: int):
    import numpy as np

    two_n = 2 * p.n
    r_lo, r_hi = _r_interval(p, d, B)
    for start in range(r_lo, r_hi + 1, _CHUNK):
        r = np.arange(start, min(start + _CHUNK, r_hi + 1), dtype=np.int64)
        a = p.l * r - d
        num = s + 2 * r * a
        keep = (num >= 0) & (num % two_n == 0)
        r, a, c2 = r[keep], a[keep], num[keep] // two_n
        c = np.floor(np.sqrt(c2.astype(np.float64))).astype(np.int64)
        # float sqrt is off by at most one at these magnitudes
        for shift in (-1, 0, 1):
            cc = np.maximum(c + shift, 0)
            hit = (cc * cc == c2) & (cc <= B)
            for ri, ci, ai in zip(r[hit].tolist(), cc[hit].tolist(), a[hit].tolist()):
                yield ri, ci, ai


def enumerate_gamma(
    p: SurfaceParams,
    b: EnumerationBounds = EnumerationBounds(),
    invariants: list[tuple[int, int]] | None = None,
) -> list[MukaiVector]:
    """Every u in Gamma with all components bounded by ``b``.

    ``invariants`` restricts the scan to some (u^2, <u, v>) pairs; by
    default all pairs the inequalities allow are scanned.
    """
    B = b.max_component
    allowed = admissible_invariants(p)
    if invariants is None:
        invariants = allowed
    found = set()
    for s, d in invariants:
        if (s, d) not in allowed:
            continue
        r_lo, r_hi = _r_interval(p, d, B)
        # int64 must hold 2*r*a comfortably
        wide = 2 * max(abs(r_lo), abs(r_hi)) * (B + d) + s >= 2**62
        if r_hi - r_lo < _VECTOR_THRESHOLD or wide:
            hits = _scan_python(p, s, d, B)
        else:
            hits = _scan_numpy(p, s, d, B)
        for r, c, a in hits:
            found.add(MukaiVector(r, c, a))
            found.add(MukaiVector(r, -c, a))
    out = sorted(found, key=lambda u: (u.r, u.c, u.a))
    assert all(in_gamma(u, p) for u in out)
    return out


def enumerate_gamma_naive(p: SurfaceParams, b: EnumerationBounds) -> list[MukaiVector]:
    """Full triple loop over the box; only for small bounds."""
    B = b.max_component
    rng = range(-B, B + 1)
    return [MukaiVector(r, c, a) for r, c, a in product(rng, rng, rng) if in_gamma(MukaiVector(r, c, a), p)]


def boundary_walls(p: SurfaceParams, vectors) -> list[tuple[Fraction, MukaiVector]]:
    """(slope, u) for every vector whose wall meets the positive cone."""
    out = []
    for u in vectors:
        try:
            q = wall_slope(u, p)
        except (DegenerateWall, VerticalWall):
            continue
        # h - q*delta lies in P^+ iff 2n - 2l q^2 > 0
        if p.l * q * q < p.n:
            out.append((q, u))
    out.sort(key=lambda t: (t[0], t[1].r, t[1].c, t[1].a))
    return out


def _nearest_positive(walls, p: SurfaceParams, b: EnumerationBounds) -> Fraction:
    positive = [q for q, _ in walls if q > 0]
    if not positive:
        raise Incomplete(f"no positive-slope wall within bound {b.max_component} for {p}",
                         bound=b.max_component)
    return min(positive)


def _require_visible(expected: MukaiVector | None, b: EnumerationBounds, p: SurfaceParams):
    if expected is not None and expected.height > b.max_component:
        raise Incomplete(
            f"predicted wall {tuple(expected)} lies outside bound {b.max_component} for {p}",
            needed=expected.height,
            bound=b.max_component,
        )


def _trivial_answer(p: SurfaceParams) -> Fraction:
    return Fraction(isqrt(p.n * p.l), p.l)


def oracle_nef_boundary(n: int, b: EnumerationBounds = EnumerationBounds(), check: bool = True) -> Fraction:
    """Least positive slope among Gamma walls for Km^2(A).

    With ``check`` the closed-form boundary vector must fit in the box,
    otherwise Incomplete is raised instead of a possibly wrong answer.
    """
    p = SurfaceParams(n, 3)
    if is_trivial_pell(p):
        return _trivial_answer(p)
    if check:
        from .cones import nef_boundary_km2

        _require_visible(nef_boundary_km2(n).u, b, p)
    return _nearest_positive(boundary_walls(p, enumerate_gamma(p, b)), p, b)


def oracle_movable_boundary(p: SurfaceParams, b: EnumerationBounds = EnumerationBounds(), check: bool = True) -> Fraction:
    """Least positive slope among Gamma_m walls (u^2 = 0, <u, v> in {1, 2})."""
    if is_trivial_pell(p):
        return _trivial_answer(p)
    if check:
        from .cones import movable_boundary_general, movable_boundary_km2

        rep = movable_boundary_km2(p.n) if p.l == 3 else movable_boundary_general(p.n, p.l)
        _require_visible(rep.u, b, p)
    scanned = enumerate_gamma(p, b, invariants=[(0, 1), (0, 2)])
    gm = [u for u in scanned if in_gamma_m(u, p)]
    return _nearest_positive(boundary_walls(p, gm), p, b)


def brute_pell(p: SurfaceParams, x_max: int) -> list[PellSolution]:
    """Every solution of lY^2 - nX^2 = l with 0 <= X <= x_max and Y > 0."""
    out = []
    for X in range(x_max + 1):
        t = p.l + p.n * X * X
        if t % p.l == 0 and is_square(t // p.l):
            out.append(PellSolution(X, isqrt(t // p.l), len(out)))
    return out


def verify_lemma_isotropic(p: SurfaceParams, b: EnumerationBounds) -> bool:
    """Every u in Gamma, or its complement v - u, is isotropic with pairing in (0, l]."""
    if p.l > 4:
        raise ValueError("the isotropy lemma is stated for l <= 4")
    v = MukaiVector.v(p)

    def good(x: MukaiVector) -> bool:
        return mukai_pairing(x, x, p) == 0 and 0 < mukai_pairing(x, v, p) <= p.l

    return all(good(u) or good(v - u) for u in enumerate_gamma(p, b))
