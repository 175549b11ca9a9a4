"""Nef and movable cones of generalized Kummer manifolds of Picard rank two.

Every cone here is spanned by ``h`` and a ray ``h - Q*delta`` with an exact
rational slope ``Q``.  For the 4-fold (l = 3) the boundary is computed twice:
once by looking up the classification table of the fundamental Pell
solution, and once by walking the Pell solutions until a wall vector with an
admissible pairing appears.  The two must agree, and any divergence raises.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import IntegrityError, InternalError, TrivialPell
from .mukai import (
    MukaiVector,
    NSVector,
    WallVectorReport,
    bb_pairing,
    mukai_pairing,
    wall_slope,
    wall_vectors_from_solution,
)
from .pell import (
    PellSolution,
    SurfaceParams,
    factorize,
    fundamental_solution,
    is_square,
    is_trivial_pell,
    next_solution,
    pell_unit,
    solution_sequence,
)

__all__ = [
    "Ray",
    "Cone",
    "BoundaryReport",
    "TableRow",
    "ChamberModel",
    "Chamber",
    "MAX_PELL_INDEX",
    "NEF_PAIRINGS",
    "MOVABLE_PAIRINGS",
    "classify_km2",
    "table_indices",
    "table_boundary_slopes",
    "nef_boundary_km2",
    "movable_boundary_km2",
    "nef_equals_movable_criterion",
    "hilbert_chow_movable_boundary_test",
    "lemma41_congruence_test",
    "st_factorization",
    "chamber_decomposition_km2",
    "movable_boundary_general",
    "wall_sequence",
]

MAX_PELL_INDEX = 8
NEF_PAIRINGS = frozenset({1, 2, 3})
MOVABLE_PAIRINGS = frozenset({1, 2})


@dataclass(frozen=True)
class Ray:
    """The ray R_{>=0}(p*h + q*delta), stored primitive with p >= 0."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or (self.p == 0 and self.q == 0):
            raise ValueError(f"bad ray ({self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"ray ({self.p}, {self.q}) is not primitive")

    @classmethod
    def from_slope(cls, slope: Fraction) -> "Ray":
        """The ray through h - slope*delta."""
        slope = Fraction(slope)
        return cls(slope.denominator, -slope.numerator)

    @property
    def slope(self) -> Fraction:
        """Q with the ray through h - Q*delta."""
        return Fraction(-self.q, self.p)

    def as_ns(self) -> NSVector:
        return NSVector(self.p, self.q)

    def square(self, p: SurfaceParams) -> int:
        return bb_pairing(self.as_ns(), self.as_ns(), p)


H_RAY = Ray(1, 0)


@dataclass(frozen=True)
class Cone:
    left: Ray
    right: Ray

    def __post_init__(self):
        if not self.left.slope < self.right.slope:
            raise ValueError(f"degenerate or misordered cone {self.left}, {self.right}")

    def contains_slope(self, slope: Fraction) -> bool:
        return self.left.slope <= slope <= self.right.slope


@dataclass(frozen=True)
class BoundaryReport:
    """The non-trivial boundary ray of a cone and the wall that cuts it out.

    ``u``, ``d`` and ``pell_index`` are None when the Pell equation only has
    trivial solutions; then the boundary is the edge of the positive cone.
    """

    cone: Cone
    boundary_slope: Fraction
    u: MukaiVector | None = None
    d: int | None = None
    pell_index: int | None = None
    source: tuple[int, int] | None = None

    @property
    def ray(self) -> Ray:
        return self.cone.right


class TableRow(enum.Enum):
    N_NOT_DIV_3 = "NDivisibleCase_3ndivn"
    X1_DIV_3 = "X1div3"
    X1_EVEN_Y1_DIV_3 = "X1even_Y1div3"
    X1_EVEN_Y1_NDIV_3 = "X1even_Y1ndiv3"
    X1_ODD_Y1_DIV_3 = "X1odd_Y1div3"
    X1_ODD_Y1_NDIV_3 = "X1odd_Y1ndiv3"
    M_SQUARE = "MSquare"


# Pell indices (nef, movable) of the boundary walls for each row.
_TABLE = {
    TableRow.N_NOT_DIV_3: (1, 1),
    TableRow.X1_DIV_3: (1, 1),
    TableRow.X1_EVEN_Y1_DIV_3: (1, 2),
    TableRow.X1_EVEN_Y1_NDIV_3: (1, 3),
    TableRow.X1_ODD_Y1_DIV_3: (2, 2),
    TableRow.X1_ODD_Y1_NDIV_3: (2, 3),
}


class ChamberModel(enum.Enum):
    SELF = "SelfModel"
    FLOP = "FlopModel"
    MODULI_KUMMER = "ModuliKummer"


@dataclass(frozen=True)
class Chamber:
    """One ample cone inside the movable cone.

    ``iso_to_original`` is "yes", "no", "unknown", or None for the chamber
    of Km^2(A) itself.
    """

    cone: Cone
    index: int
    model: ChamberModel
    u: MukaiVector | None = None
    iso_to_original: str | None = None


def _km2(n: int) -> SurfaceParams:
    return SurfaceParams(n, 3)


def classify_km2(n: int) -> TableRow:
    p = _km2(n)
    if n % 3:
        return TableRow.N_NOT_DIV_3
    if is_square(p.m):
        return TableRow.M_SQUARE
    f = fundamental_solution(p)
    if f.X % 3 == 0:
        return TableRow.X1_DIV_3
    if f.X % 2 == 0:
        return TableRow.X1_EVEN_Y1_DIV_3 if f.Y % 3 == 0 else TableRow.X1_EVEN_Y1_NDIV_3
    return TableRow.X1_ODD_Y1_DIV_3 if f.Y % 3 == 0 else TableRow.X1_ODD_Y1_NDIV_3


def table_indices(n: int) -> tuple[int, int] | None:
    """Pell indices (nef, movable) of the two boundaries; None if trivial."""
    return _TABLE.get(classify_km2(n))


def _trivial_slope(p: SurfaceParams) -> Fraction:
    # sqrt(n/l) = sqrt(n*l)/l, rational exactly when n*l is a square.
    root = isqrt(p.n * p.l)
    if root * root != p.n * p.l:
        raise IntegrityError(f"sqrt({p.n}/{p.l}) is irrational")
    return Fraction(root, p.l)


def _pell_slope(p: SurfaceParams, s: PellSolution) -> Fraction:
    return Fraction(p.n * s.X, p.l * s.Y)


def table_boundary_slopes(n: int) -> tuple[Fraction, Fraction]:
    """(nef, movable) boundary slopes read off the classification table."""
    p = _km2(n)
    ks = table_indices(n)
    if ks is None:
        q = _trivial_slope(p)
        return q, q
    seq = solution_sequence(p, max(ks))
    return _pell_slope(p, seq[ks[0]]), _pell_slope(p, seq[ks[1]])


def _trivial_report(p: SurfaceParams) -> BoundaryReport:
    q = _trivial_slope(p)
    return BoundaryReport(Cone(H_RAY, Ray.from_slope(q)), q)


def _walk(p: SurfaceParams, allowed: frozenset) -> BoundaryReport:
    s = fundamental_solution(p)
    while True:
        if s.k > MAX_PELL_INDEX:
            raise InternalError(f"no admissible wall up to k = {MAX_PELL_INDEX} for {p}")
        hits = [w for w in wall_vectors_from_solution(s.X, s.Y, p, s.k) if w.d in allowed]
        if hits:
            w = min(hits, key=lambda rep: rep.d)
            slope = wall_slope(w.u, p)
            if slope != _pell_slope(p, s):
                raise IntegrityError(f"wall slope mismatch at {s}")
            return BoundaryReport(
                Cone(H_RAY, Ray.from_slope(slope)), slope, w.u, w.d, s.k, w.source
            )
        s = next_solution(p, s)


def _checked(n: int, allowed: frozenset, column: int) -> BoundaryReport:
    p = _km2(n)
    if is_trivial_pell(p):
        return _trivial_report(p)
    rep = _walk(p, allowed)
    expected = table_boundary_slopes(n)[column]
    if rep.boundary_slope != expected:
        raise IntegrityError(
            f"n={n}: walk gives {rep.boundary_slope}, table gives {expected}"
        )
    return rep


def nef_boundary_km2(n: int) -> BoundaryReport:
    """Nef cone of Km^2(A): the first wall with <u, v> in {1, 2, 3}."""
    return _checked(n, NEF_PAIRINGS, 0)


def movable_boundary_km2(n: int) -> BoundaryReport:
    """Movable cone of Km^2(A): the first wall with <u, v> in {1, 2}."""
    return _checked(n, MOVABLE_PAIRINGS, 1)


def nef_equals_movable_criterion(n: int) -> bool:
    """Sufficient condition for Nef = Mov; it is not claimed to be necessary."""
    return n % 3 != 0 or n % 9 == 3


def hilbert_chow_movable_boundary_test(n: int) -> bool:
    p = _km2(n)
    f = fundamental_solution(p)
    if f.X % 2 == 0:
        return True
    return n % 3 == 0 and f.X % 6 in (1, 5) and f.Y % 3 == 0


def lemma41_congruence_test(Y: int, n: int) -> bool:
    """Y = -1 mod p for every odd prime p | n, and Y = -1 mod 4 if n is even."""
    primes = factorize(n)
    if any((Y + 1) % q for q in primes if q > 2):
        return False
    return n % 2 == 1 or (Y + 1) % 4 == 0


def st_factorization(u: MukaiVector, n: int) -> tuple[int, int] | None:
    """(s, t) with u = +-(s a^2, abH, t b^2) and st = n, if u has that shape."""
    if u.r < 0 or (u.r == 0 and u.a < 0):
        u = -u
    if u.c == 0 or u.r <= 0 or u.a <= 0:
        return None
    a = gcd(u.r, u.c)
    b = u.c // a
    s, rs = divmod(u.r, a * a)
    t, rt = divmod(u.a, b * b)
    if rs or rt or s * t != n:
        return None
    return s, t


def _iso_label(Y: int, n: int, end_A_is_Z: bool) -> str:
    if not end_A_is_Z:
        return "unknown"
    return "yes" if lemma41_congruence_test(Y, n) else "no"


def chamber_decomposition_km2(n: int, end_A_is_Z: bool = False) -> list[Chamber]:
    """Chambers of Mov(Km^2(A)), ordered away from h."""
    row = classify_km2(n)
    nef = nef_boundary_km2(n)
    mov = movable_boundary_km2(n)
    first = Chamber(nef.cone, 1, ChamberModel.SELF)
    if row not in (
        TableRow.X1_EVEN_Y1_DIV_3,
        TableRow.X1_EVEN_Y1_NDIV_3,
        TableRow.X1_ODD_Y1_NDIV_3,
    ):
        return [first]

    p = _km2(n)
    rays = [Ray.from_slope(_pell_slope(p, s)) for s in solution_sequence(p, 3)]
    if row is TableRow.X1_EVEN_Y1_DIV_3:
        iso = _iso_label(mov.source[1], n, end_A_is_Z)
        return [first, Chamber(Cone(rays[1], rays[2]), 2, ChamberModel.MODULI_KUMMER, mov.u, iso)]
    if row is TableRow.X1_EVEN_Y1_NDIV_3:
        iso = _iso_label(mov.source[1], n, end_A_is_Z)
        return [
            first,
            Chamber(Cone(rays[1], rays[2]), 2, ChamberModel.FLOP, iso_to_original="unknown"),
            Chamber(Cone(rays[2], rays[3]), 3, ChamberModel.MODULI_KUMMER, mov.u, iso),
        ]
    # X1 odd and 3 does not divide Y1: the boundary vector pairs to 2 with v,
    # so the far model is never Km^2(A) again.
    return [first, Chamber(Cone(rays[2], rays[3]), 2, ChamberModel.FLOP, mov.u, "no")]


def movable_boundary_general(n: int, l: int) -> BoundaryReport:
    """Movable cone of Km^{l-1}(A) from Y^2 - l*n*Z^2 = 1."""
    p = SurfaceParams(n, l)
    if is_trivial_pell(p):
        return _trivial_report(p)
    y1, z1 = pell_unit(l * n)
    for Y, Z in ((y1, z1), (-y1, -z1)):
        if (Y + 1) % l == 0:
            r, c, a = (Y + 1) // l, Z, Y - 1
            g = gcd(r, c, a)
            if g == 1:
                u, d = MukaiVector(r, c, a), 2
            elif g == 2:
                u, d = MukaiVector(r // 2, c // 2, a // 2), 1
            else:
                raise IntegrityError(f"content {g} for n={n}, l={l}")
            slope = Fraction(n * z1, y1)
            k, source = 1, (l * Z, Y)
            break
    else:
        y2, z2 = y1 * y1 + l * n * z1 * z1, 2 * y1 * z1
        u, d = -MukaiVector(n * z1 * z1, z1 * y1, y1 * y1), 1
        slope = Fraction(n * z2, y2)
        k, source = 2, (l * z2, y2)
    if mukai_pairing(u, u, p) != 0 or mukai_pairing(u, MukaiVector.v(p), p) != d:
        raise IntegrityError(f"bad boundary vector {u} for n={n}, l={l}")
    if wall_slope(u, p) != slope:
        raise IntegrityError(f"slope mismatch for {u}: {wall_slope(u, p)} vs {slope}")
    return BoundaryReport(Cone(H_RAY, Ray.from_slope(slope)), slope, u, d, k, source)


def wall_sequence(n: int, count: int) -> list[tuple[PellSolution, Fraction, WallVectorReport | None]]:
    """Walls h - (nX_k/3Y_k) delta for k = 0..count.

    Each entry carries the wall vector of least pairing among those with
    <u, v> in {1, 2, 3}, or None when neither sign is admissible.
    """
    p = _km2(n)
    if is_trivial_pell(p):
        raise TrivialPell(f"3Y^2 - {n}X^2 = 3 has only (0, +-1)")
    out = []
    for s in solution_sequence(p, count):
        hits = [w for w in wall_vectors_from_solution(s.X, s.Y, p, s.k) if w.d in NEF_PAIRINGS]
        best = min(hits, key=lambda rep: rep.d) if hits else None
        out.append((s, _pell_slope(p, s), best))
    return out
