"""
Crystal raising and lowering
============================

In the crystal limit J+ and J- become plain unit shifts on |j, m>, and a
tensor product of crystals is again a crystal.  This walks through the
smallest cases.
"""

from gcwe.crystal_core import CrystalState, crystal_casimir, irrep_states, raise_
from gcwe.tensor_crystal import components, couple, format_path, sign_path, tensor_raise

# a spin-3/2 orbit, bottom to top
for s in irrep_states("3/2"):
    print(s, "->", raise_(s), " casimir", crystal_casimir(s))

# two spin-1/2 factors: "-+" is raised to "++" but "+-" is killed,
# so "+-" is the lone state of the J=0 component
up, down = sign_path(["1/2", "1/2"]), sign_path(["1/2", "-1/2"])
print(format_path(sign_path(["-1/2", "1/2"])), "->", format_path(tensor_raise(sign_path(["-1/2", "1/2"]))))
print(format_path(down), "->", tensor_raise(down))

# three spin-1/2 factors: one quartet and two doublets
for comp, members in components(["1/2"] * 3).items():
    print(f"J={comp.J}  top {format_path(comp.highest_weight)}  members",
          [format_path(p) for p in members])

# coupling a state with an operator component picks a single J
print("couple(3/2, 3/2; 1, -1) ->", couple("3/2", "3/2", 1, -1))
print("couple(1, 0; 1, 0)       ->", couple(1, 0, 1, 0))
