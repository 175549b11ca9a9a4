"""Solutions of the Pell-type conic l*Y**2 - n*X**2 = l.

Everything here is exact integer arithmetic.  The fundamental solution is
obtained from the continued fraction of sqrt(D) for a reduced equation
Y**2 - D*W**2 = 1, and later solutions come from the recurrence obtained by
multiplying by the fundamental unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .errors import IntegrityError, TrivialPell

__all__ = [
    "SurfaceParams",
    "PellSolution",
    "is_square",
    "factorize",
    "pell_unit",
    "plain_pell_sequence",
    "is_trivial_pell",
    "fundamental_solution",
    "next_solution",
    "solution_sequence",
]


@dataclass(frozen=True)
class SurfaceParams:
    """An abelian surface with H^2 = 2n and the Kummer index l.

    ``Km^{l-1}(A)`` has dimension ``2(l - 1)``; the 4-fold is ``l = 3``.
    """

    n: int
    l: int = 3

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.l, int):
            raise TypeError("n and l must be integers")
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.l < 3:
            raise ValueError(f"l must be at least 3, got {self.l}")

    @property
    def m(self) -> int:
        """n / 3, defined only when 3 divides n."""
        if self.n % 3:
            raise ValueError(f"m = n/3 is undefined for n = {self.n}")
        return self.n // 3


@dataclass(frozen=True)
class PellSolution:
    X: int
    Y: int
    k: int = 0

    @property
    def pair(self) -> tuple[int, int]:
        return self.X, self.Y

    def residual(self, p: SurfaceParams) -> int:
        """l*Y^2 - n*X^2 - l, zero exactly on the conic."""
        return p.l * self.Y * self.Y - p.n * self.X * self.X - p.l


def is_square(x: int) -> bool:
    return x >= 0 and isqrt(x) ** 2 == x


def factorize(x: int) -> dict[int, int]:
    """Prime factorization by trial division; fine for the sizes used here."""
    if x < 1:
        raise ValueError(f"cannot factor {x}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= x:
        while x % p == 0:
            out[p] = out.get(p, 0) + 1
            x //= p
        p += 1 if p == 2 else 2
    if x > 1:
        out[x] = out.get(x, 0) + 1
    return out


@lru_cache(maxsize=None)
def pell_unit(D: int) -> tuple[int, int]:
    """Smallest (Y, W) with W > 0 and Y**2 - D*W**2 = 1.

    Walks the continued fraction of sqrt(D) until a convergent hits +1.
    """
    if D < 2 or is_square(D):
        raise TrivialPell(f"Y^2 - {D} W^2 = 1 has only trivial solutions")
    a0 = isqrt(D)
    m, d, a = 0, 1, a0
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    while p * p - D * q * q != 1:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return p, q


def plain_pell_sequence(D: int, count: int) -> list[tuple[int, int]]:
    """First ``count`` positive solutions (Y, W) of Y^2 - D*W^2 = 1."""
    y1, w1 = pell_unit(D)
    out = []
    y, w = 1, 0
    for _ in range(count):
        y, w = y1 * y + D * w1 * w, y1 * w + w1 * y
        out.append((y, w))
    return out


def is_trivial_pell(p: SurfaceParams) -> bool:
    """True iff l*n is a perfect square, i.e. sqrt(n/l) is rational."""
    return is_square(p.l * p.n)


@lru_cache(maxsize=None)
def _reduction(n: int, l: int) -> tuple[int, int]:
    # Every solution has X divisible by q, and X = q*W turns the conic into
    # Y^2 - D*W^2 = 1 with D = n*q^2/l.
    q = 1
    for prime, e in factorize(l).items():
        f = 0
        nn = n
        while nn % prime == 0:
            nn //= prime
            f += 1
        need = max(0, e - f)
        q *= prime ** ((need + 1) // 2)
    D, rem = divmod(n * q * q, l)
    if rem:
        raise IntegrityError(f"reduction failed for n={n}, l={l}")
    return q, D


@lru_cache(maxsize=None)
def _fundamental(n: int, l: int) -> PellSolution:
    q, D = _reduction(n, l)
    y, w = pell_unit(D)
    sol = PellSolution(q * w, y, 1)
    if sol.residual(SurfaceParams(n, l)):
        raise IntegrityError(f"fundamental solution {sol} off the conic")
    return sol


def fundamental_solution(p: SurfaceParams) -> PellSolution:
    """Positive solution (X_1, Y_1) with X_1 minimal."""
    if is_trivial_pell(p):
        raise TrivialPell(f"{p.l}Y^2 - {p.n}X^2 = {p.l} has only (0, +-1)")
    return _fundamental(p.n, p.l)


def next_solution(p: SurfaceParams, s: PellSolution) -> PellSolution:
    """Multiply ``s`` by the fundamental unit.

    Raises IntegrityError when n*X_1*X_k is not divisible by l, which
    can only happen if ``s`` is not a solution.
    """
    f = fundamental_solution(p)
    cross, rem = divmod(p.n * f.X * s.X, p.l)
    if rem:
        raise IntegrityError(f"{p.l} does not divide n*X_1*X_k for {s}")
    return PellSolution(f.Y * s.X + f.X * s.Y, f.Y * s.Y + cross, s.k + 1)


def solution_sequence(p: SurfaceParams, K: int) -> list[PellSolution]:
    """[(X_0, Y_0), ..., (X_K, Y_K)] starting from (0, 1)."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    if is_trivial_pell(p):
        raise TrivialPell(f"{p.l}Y^2 - {p.n}X^2 = {p.l} has only (0, +-1)")
    out = [PellSolution(0, 1, 0)]
    for _ in range(K):
        out.append(next_solution(p, out[-1]))
    return out
