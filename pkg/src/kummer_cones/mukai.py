"""The algebraic Mukai lattice Z + ZH + Z of a Picard-rank-one abelian surface.

A vector ``(r, c, a)`` stands for ``(r, cH, a)``.  With ``v = (1, 0, -l)``,
the orthogonal complement ``v^perp`` is spanned by ``(0, H, 0)`` and
``(1, 0, l)``; these are sent to ``h`` and ``delta`` in
``NS(Km^{l-1}(A)) = Zh + Z delta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegenerateWall, NotOrthogonal, VerticalWall
from .pell import SurfaceParams

__all__ = [
    "MukaiVector",
    "NSVector",
    "WallVectorReport",
    "mukai_pairing",
    "bb_pairing",
    "theta_v",
    "theta_v_inverse",
    "in_positive_cone",
    "wall_vectors_from_solution",
    "wall_slope",
]


@dataclass(frozen=True)
class MukaiVector:
    r: int
    c: int
    a: int

    @classmethod
    def v(cls, p: SurfaceParams) -> "MukaiVector":
        """The Mukai vector (1, 0, -l) of the Hilbert scheme of l points."""
        return cls(1, 0, -p.l)

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r + other.r, self.c + other.c, self.a + other.a)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r - other.r, self.c - other.c, self.a - other.a)

    def __neg__(self) -> "MukaiVector":
        return MukaiVector(-self.r, -self.c, -self.a)

    def __rmul__(self, k: int) -> "MukaiVector":
        return MukaiVector(k * self.r, k * self.c, k * self.a)

    def __iter__(self):
        return iter((self.r, self.c, self.a))

    @property
    def content(self) -> int:
        return gcd(self.r, self.c, self.a)

    def is_primitive(self) -> bool:
        return self.content == 1

    @property
    def height(self) -> int:
        """Largest absolute value of a component."""
        return max(abs(self.r), abs(self.c), abs(self.a))

    def square(self, p: SurfaceParams) -> int:
        return mukai_pairing(self, self, p)


@dataclass(frozen=True)
class NSVector:
    """p*h + q*delta."""

    p: int
    q: int


@dataclass(frozen=True)
class WallVectorReport:
    """A primitive isotropic u with 2l/d * u = v + Xh + Y delta.

    ``g`` is the content that was divided out of ``v + Xh + Y delta``,
    ``d = <u, v>``, and ``source`` is the signed pair (X, Y) used.
    """

    u: MukaiVector
    d: int
    g: int
    source: tuple[int, int]
    k: int | None = None


def mukai_pairing(x: MukaiVector, y: MukaiVector, p: SurfaceParams) -> int:
    return 2 * p.n * x.c * y.c - x.r * y.a - x.a * y.r


def bb_pairing(w: NSVector, w2: NSVector, p: SurfaceParams) -> int:
    """Beauville-Bogomolov form with h^2 = 2n, delta^2 = -2l, (h, delta) = 0."""
    return 2 * p.n * w.p * w2.p - 2 * p.l * w.q * w2.q


def theta_v(w: MukaiVector, p: SurfaceParams) -> NSVector:
    """Identify w in v^perp with an element of Zh + Z delta."""
    if w.a != p.l * w.r:
        raise NotOrthogonal(f"{w} is not orthogonal to v = (1, 0, {-p.l})")
    return NSVector(w.c, w.r)


def theta_v_inverse(w: NSVector, p: SurfaceParams) -> MukaiVector:
    return MukaiVector(w.q, w.p, p.l * w.q)


def in_positive_cone(w: NSVector, p: SurfaceParams) -> bool:
    return bb_pairing(w, w, p) > 0 and 2 * p.n * w.p > 0


def wall_vectors_from_solution(
    X: int, Y: int, p: SurfaceParams, k: int | None = None
) -> list[WallVectorReport]:
    """Both signed wall vectors attached to the Pell solution (X, Y).

    For each sign the vector ``w = (1 + eY, eX, l(eY - 1))`` pairs to
    ``2l`` with v; dividing by its content g gives the primitive isotropic
    u with ``<u, v> = 2l / g``.
    """
    reports = []
    for e in (1, -1):
        w = MukaiVector(1 + e * Y, e * X, p.l * (e * Y - 1))
        g = w.content
        u = MukaiVector(w.r // g, w.c // g, w.a // g)
        d, rem = divmod(2 * p.l, g)
        assert rem == 0, (X, Y, g)
        reports.append(WallVectorReport(u, d, g, (e * X, e * Y), k))
    return reports


def wall_slope(u: MukaiVector, p: SurfaceParams) -> Fraction:
    """Q >= 0 such that u^perp meets P^+ along the ray h - Q delta.

    Writing u = lambda*v + x*h + y*delta with lambda = <u, v>/2l gives
    x = c and y = r - lambda, so Q = |n x / (l y)| = |2nc / (lr + a)|.
    The absolute value is harmless: the wall set is symmetric in c.
    """
    num = 2 * p.n * u.c
    den = p.l * u.r + u.a
    if den == 0:
        if num == 0:
            raise DegenerateWall(f"{u} is proportional to v")
        raise VerticalWall(f"{u} defines the delta axis")
    return abs(Fraction(num, den))
