# %% [markdown]
# # Higher generalized Kummers
#
# For Km^{l-1}(A) the movable boundary comes from the plain Pell equation
# Y^2 - l*n*Z^2 = 1. Either the fundamental solution already gives a wall
# with <u, v> in {1, 2}, or the second one does with <u, v> = 1.

# %%
from kummer_cones import movable_boundary_general
from kummer_cones.pell import SurfaceParams, is_trivial_pell

for l in (4, 5, 6, 8):
    print(f"l = {l}")
    for n in range(1, 9):
        rep = movable_boundary_general(n, l)
        if is_trivial_pell(SurfaceParams(n, l)):
            print(f"   n={n}: slope {rep.boundary_slope} (isotropic edge)")
        else:
            print(f"   n={n}: slope {rep.boundary_slope}  u={tuple(rep.u)}  d={rep.d}  from solution {rep.pell_index}")
