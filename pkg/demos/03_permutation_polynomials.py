"""Which polynomials permute R[a]?

f permutes R[a1..ak] exactly when f0 permutes R and f0' takes unit values on R.
"""
# %%
from dualpoly import DualRing, build_ring, parse_poly
from dualpoly.oracles import perm_on_dual_exhaustive
from dualpoly.permutations import check_witness, construct_pair_field, is_perm, is_perm_on_dual
from dualpoly.poly import FunctionTable, derivative, format_poly, induce

F3 = build_ring("F_3")
dr = DualRing(F3, 1)

# %% x^3 permutes F_3 but its derivative is zero, so it fails on F_3[a]
f = parse_poly("x^3", dr)
v = is_perm_on_dual(f)
print(v.is_permutation, v.criterion_path, v.witness)
print("witness checks out:", check_witness(f, v, dr))

# %% x^3 + x + 1 acts as 2x + 1 on F_3 and its derivative is 3x^2 + 1 = 1
f = parse_poly("x^3+x+1", dr)
print(format_poly(f), is_perm_on_dual(f).is_permutation, perm_on_dual_exhaustive(f, dr))

# %% over Z/4 the derivative condition is automatic once f permutes Z/4
Z4a = DualRing(build_ring("Z/4"), 1)
for text in ["x+2x^2", "x^3", "3x+1+a1*x^3"]:
    f = parse_poly(text, Z4a)
    print(f"{text:14s}", is_perm(f, Z4a).is_permutation, perm_on_dual_exhaustive(f, Z4a))

# %% over a field every pair ([f], [f']) is realized by some f of degree < 2q
F = FunctionTable(F3, [0, 1, 2])
G = FunctionTable(F3, [2, 2, 2])
f = construct_pair_field(F, G)
print(format_poly(f), induce(f, F3).tolist(), induce(derivative(f), F3).tolist())
