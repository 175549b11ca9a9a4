# %% [markdown]
# # Walls for the first Kummer fourfold
#
# For n = 1 the walls in the positive cone are the rays h - q*delta with
# q = X/(3Y), where (X, Y) runs over solutions of 3Y^2 - X^2 = 3.

# %%
from fractions import Fraction

from kummer_cones import nef_boundary_km2, movable_boundary_km2, wall_sequence

for sol, q, rep in wall_sequence(1, 8):
    tag = f"u={tuple(rep.u)} d={rep.d}" if rep else "no admissible vector"
    print(f"k={sol.k}  (X,Y)=({sol.X},{sol.Y})  slope={q}  ~{float(q):.6f}  {tag}")

# %% [markdown]
# The slopes climb towards 1/sqrt(3) ~ 0.57735 but never reach it, since
# 3*q^2 = 1 - 1/Y^2 < 1. The first wall already stops both cones.

# %%
nef, mov = nef_boundary_km2(1), movable_boundary_km2(1)
print("nef     :", nef.cone.left, "->", nef.ray, "via", tuple(nef.u), "d =", nef.d)
print("movable :", mov.cone.left, "->", mov.ray)
assert nef.cone == mov.cone and nef.boundary_slope == Fraction(1, 2)
