# %% [markdown]
# # Brute force against the closed forms
#
# The oracle enumerates every Mukai vector in a box, keeps the ones in the
# wall-defining set, and takes the wall closest to h. Walls with large
# components need a large box, so the box is sized from the prediction.

# %%
import time

from kummer_cones import movable_boundary_km2, nef_boundary_km2
from kummer_cones.oracle import EnumerationBounds, oracle_movable_boundary, oracle_nef_boundary
from kummer_cones.pell import SurfaceParams, is_trivial_pell

for n in (2, 5, 6, 7, 10, 23, 37):
    if is_trivial_pell(SurfaceParams(n)):
        continue
    nef, mov = nef_boundary_km2(n), movable_boundary_km2(n)
    t0 = time.perf_counter()
    b_nef = EnumerationBounds(max(2048, nef.u.height))
    b_mov = EnumerationBounds(max(2048, mov.u.height))
    got = oracle_nef_boundary(n, b_nef), oracle_movable_boundary(SurfaceParams(n), b_mov)
    ok = got == (nef.boundary_slope, mov.boundary_slope)
    print(f"n={n:3d}  nef {got[0]} mov {got[1]}  box {b_mov.max_component}  {'ok' if ok else 'MISMATCH'}  {time.perf_counter() - t0:.2f}s")
