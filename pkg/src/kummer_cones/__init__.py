"""Exact nef and movable cones of generalized Kummer manifolds.

The surface is an abelian surface A with NS(A) = ZH and H^2 = 2n; the
manifold is Km^{l-1}(A), with l = 3 giving the 4-fold.
"""

from .cones import (
    BoundaryReport,
    Chamber,
    ChamberModel,
    Cone,
    Ray,
    TableRow,
    chamber_decomposition_km2,
    classify_km2,
    hilbert_chow_movable_boundary_test,
    lemma41_congruence_test,
    movable_boundary_general,
    movable_boundary_km2,
    nef_boundary_km2,
    nef_equals_movable_criterion,
    table_boundary_slopes,
    wall_sequence,
)
from .errors import (
    DegenerateWall,
    Incomplete,
    IntegrityError,
    InternalError,
    KummerConeError,
    NotOrthogonal,
    TrivialPell,
    UnsupportedNef,
    VerticalWall,
)
from .mukai import (
    MukaiVector,
    NSVector,
    WallVectorReport,
    bb_pairing,
    in_positive_cone,
    mukai_pairing,
    theta_v,
    wall_slope,
    wall_vectors_from_solution,
)
from .pell import (
    PellSolution,
    SurfaceParams,
    fundamental_solution,
    is_trivial_pell,
    next_solution,
    solution_sequence,
)

__version__ = "0.1.0"
