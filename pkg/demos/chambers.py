# %% [markdown]
# # Chambers of the movable cone
#
# When nef and movable cones differ, the gap is cut into one or two more
# chambers. Passing with a known endomorphism ring lets the last chamber
# be identified with the original fourfold or not.

# %%
from kummer_cones import chamber_decomposition_km2, classify_km2

for n in (1, 6, 9, 18, 21, 30):
    print(f"n = {n}  ({classify_km2(n).value})")
    for ch in chamber_decomposition_km2(n, end_A_is_Z=True):
        u = tuple(ch.u) if ch.u else "-"
        print(f"   C{ch.index}: [{ch.cone.left.slope}, {ch.cone.right.slope}]  {ch.model.value:13s} u={u}  iso={ch.iso_to_original}")
