"""Per-(n, l) verification sweep used by the ``verify`` command."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import cones, oracle
from .errors import Incomplete, KummerConeError
from .mukai import MukaiVector, mukai_pairing
from .pell import SurfaceParams, is_trivial_pell, solution_sequence

PASS, FAIL, INCOMPLETE = "pass", "fail", "incomplete"

# Largest box the automatic bound will scan.
AUTO_BOUND_CAP = 10**8
LEMMA_BOUND_CAP = 200
BRUTE_PELL_XMAX = 2000


@dataclass
class Verdict:
    n: int
    l: int
    checks: dict[str, str] = field(default_factory=dict)
    details: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        values = set(self.checks.values())
        if FAIL in values:
            return FAIL
        if INCOMPLETE in values:
            return INCOMPLETE
        return PASS


def _bound_for(u: MukaiVector | None, bound: int | None) -> oracle.EnumerationBounds:
    if bound is not None:
        return oracle.EnumerationBounds(bound)
    need = u.height if u is not None else 1
    return oracle.EnumerationBounds(min(max(oracle.DEFAULT_BOUND, need), AUTO_BOUND_CAP))


def _good_wall(u: MukaiVector, d: int, p: SurfaceParams, allowed) -> bool:
    return (
        mukai_pairing(u, u, p) == 0
        and u.is_primitive()
        and mukai_pairing(u, MukaiVector.v(p), p) == d
        and d in allowed
    )


def _run(verdict: Verdict, name: str, fn) -> None:
    try:
        ok = fn()
    except Incomplete as exc:
        verdict.checks[name] = INCOMPLETE
        verdict.details.append(f"{name}: {exc}")
        return
    except (KummerConeError, AssertionError) as exc:
        verdict.checks[name] = FAIL
        verdict.details.append(f"{name}: {type(exc).__name__}: {exc}")
        return
    verdict.checks[name] = PASS if ok else FAIL
    if not ok:
        verdict.details.append(f"{name}: check returned false")


def check_pell(p: SurfaceParams, count: int = 6) -> bool:
    seq = solution_sequence(p, count)
    if any(s.residual(p) for s in seq):
        return False
    if any(p.n * s.X * s.X >= p.l * s.Y * s.Y for s in seq):
        return False
    increasing = all(a.X * b.Y < b.X * a.Y for a, b in zip(seq, seq[1:]))
    brute = oracle.brute_pell(p, BRUTE_PELL_XMAX)
    in_range = [(s.X, s.Y) for s in seq if s.X <= BRUTE_PELL_XMAX]
    return increasing and [(s.X, s.Y) for s in brute][: len(in_range)] == in_range


def check_chambers(n: int) -> bool:
    chambers = cones.chamber_decomposition_km2(n, end_A_is_Z=True)
    nef, mov = cones.nef_boundary_km2(n), cones.movable_boundary_km2(n)
    consecutive = all(a.cone.right == b.cone.left for a, b in zip(chambers, chambers[1:]))
    return (
        consecutive
        and chambers[0].cone == nef.cone
        and chambers[-1].cone.right == mov.ray
        and [c.index for c in chambers] == list(range(1, len(chambers) + 1))
    )


def verify_one(n: int, l: int, bound: int | None = oracle.DEFAULT_BOUND) -> Verdict:
    """Run every check for one surface; ``bound=None`` sizes the box automatically."""
    p = SurfaceParams(n, l)
    verdict = Verdict(n, l)
    trivial = is_trivial_pell(p)
    if not trivial:
        _run(verdict, "pell", lambda: check_pell(p))

    mov = cones.movable_boundary_km2(n) if l == 3 else cones.movable_boundary_general(n, l)
    _run(verdict, "bb_square", lambda: (mov.ray.square(p) == 0) == trivial and mov.ray.square(p) >= 0)
    if not trivial:
        _run(
            verdict,
            "movable_wall_vector",
            lambda: _good_wall(mov.u, mov.d, p, cones.MOVABLE_PAIRINGS),
        )
        _run(
            verdict,
            "oracle_movable",
            lambda: oracle.oracle_movable_boundary(p, _bound_for(mov.u, bound)) == mov.boundary_slope,
        )
    if l <= 4:
        lemma_bound = min(bound or LEMMA_BOUND_CAP, LEMMA_BOUND_CAP)
        _run(
            verdict,
            "lemma_isotropic",
            lambda: oracle.verify_lemma_isotropic(p, oracle.EnumerationBounds(lemma_bound)),
        )
    if l != 3:
        return verdict

    nef = cones.nef_boundary_km2(n)
    table_nef, table_mov = cones.table_boundary_slopes(n)
    _run(
        verdict,
        "table_vs_walk",
        lambda: (nef.boundary_slope, mov.boundary_slope) == (table_nef, table_mov),
    )
    _run(
        verdict,
        "general_consistency",
        lambda: cones.movable_boundary_general(n, 3).boundary_slope == mov.boundary_slope,
    )
    _run(
        verdict,
        "nesting",
        lambda: nef.boundary_slope <= mov.boundary_slope
        and (trivial or 3 * mov.boundary_slope**2 < n),
    )
    _run(
        verdict,
        "corollary",
        lambda: not cones.nef_equals_movable_criterion(n) or nef.cone == mov.cone,
    )
    _run(verdict, "chambers", lambda: check_chambers(n))
    if not trivial:
        _run(verdict, "nef_wall_vector", lambda: _good_wall(nef.u, nef.d, p, cones.NEF_PAIRINGS))
        _run(
            verdict,
            "oracle_nef",
            lambda: oracle.oracle_nef_boundary(n, _bound_for(nef.u, bound)) == nef.boundary_slope,
        )
        _run(
            verdict,
            "hilbert_chow",
            lambda: not cones.hilbert_chow_movable_boundary_test(n) or mov.d == 1,
        )
    return verdict


def _star(args):
    return verify_one(*args)


def verify_range(ns, ls, bound: int | None = oracle.DEFAULT_BOUND, jobs: int = 1) -> list[Verdict]:
    """Verdicts ordered by (n, l) whatever the execution order."""
    tasks = [(n, l, bound) for n in ns for l in ls]
    if jobs <= 1:
        return [verify_one(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_star, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
