"""Finite rings and their dual-number extensions.

Run: python demos/01_rings_and_dual_numbers.py
"""
# %%
from dualpoly import DualRing, build_ring, parse_ring
from dualpoly.dual import dual_local_structure
from dualpoly.rings import is_suitable, local_structure

Z4 = build_ring("Z/4")
print(Z4, "order", Z4.order, "units", Z4.units)
print(Z4.mul_table)

# %% the maximal ideal of Z/4 is {0, 2} and squares to zero
ls = local_structure(Z4)
print("M =", sorted(ls.maximal_ideal), "nilpotency", ls.nilpotency)

# %% GF(4) needs its modulus spelled out
F4 = build_ring("F_4:x^2+x+1")
w = F4.parse_element("[0,1]")
print("w^3 =", F4.format_element(F4.power(w, 3)))

# %% direct sums are not local; units are componentwise
S = build_ring("Z/4 (+) Z/9")
u = S.element((1, 2))
print(u, "has inverse", u.inverse())

# %% Z/4[a]: a^2 = 0, so (1+a)^2 = 1+2a
dr = parse_ring("Z/4[1]")
x = dr.parse_element("1+a1")
print(x, "squared is", x * x)
print("(3+a)^-1 =", dr.parse_element("3+a1").inverse())

# %% unit count: a0 must be a unit, the alpha parts are free
print("units in Z/4[a]:", int(dr.unit_mask.sum()), "of", dr.order)

# %% the dual ring is local with nilpotency one more than the base
print("nilpotency of Z/4[a1,a2]:", dual_local_structure(DualRing(Z4, 2)).nilpotency)

# %% suitability holds for F_2[a] and fails for Z/4[a]
for spec in ["F_2[1]", "Z/4[1]", "F_3[2]"]:
    print(spec, "suitable:", is_suitable(parse_ring(spec)))
