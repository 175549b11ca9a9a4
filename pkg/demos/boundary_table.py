# %% [markdown]
# # Regenerating the boundary table
#
# Each n falls into one row, decided by the fundamental solution (X1, Y1)
# of 3Y^2 - nX^2 = 3. The row says which solution index carries the nef
# and the movable boundary.

# %%
from collections import Counter

from kummer_cones import classify_km2, fundamental_solution, table_boundary_slopes
from kummer_cones.cones import table_indices
from kummer_cones.pell import SurfaceParams, is_trivial_pell

rows = Counter()
for n in range(1, 41):
    row = classify_km2(n)
    rows[row] += 1
    nef, mov = table_boundary_slopes(n)
    if is_trivial_pell(SurfaceParams(n)):
        print(f"{n:3d}  {row.value:22s}  nef={nef}  mov={mov}  (edge of the positive cone)")
        continue
    f = fundamental_solution(SurfaceParams(n))
    print(f"{n:3d}  {row.value:22s}  (X1,Y1)=({f.X},{f.Y})  k={table_indices(n)}  nef={nef}  mov={mov}")

# %%
for row, count in rows.most_common():
    print(f"{row.value:22s} {count}")
