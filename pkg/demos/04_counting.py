"""Counting functions and permutations on R[a1..ak], by formula and by brute force."""
# %%
from dualpoly import build_ring
from dualpoly.counting import (count, count_functions_enum, count_functions_formula, count_perms_enum,
                               count_perms_formula, index_N, index_Nprime, index_via_linear)

# %% fields: q^((k+2)q) functions and q!(q-1)^q q^(kq) permutations
for spec, k in [("F_2", 1), ("F_2", 2), ("F_3", 1)]:
    R = build_ring(spec)
    print(spec, k, count_functions_enum(R, k), count_functions_formula(R, k),
          count_perms_enum(R, k), count_perms_formula(R, k))

# %% Z/4: indices from enumeration and from linear algebra
Z4 = build_ring("Z/4")
print("[R[x]:N] ", index_N(Z4), index_via_linear(Z4, False))
print("[R[x]:N']", index_Nprime(Z4), index_via_linear(Z4, True))

# %% |F(Z4[a])| = [N:N'] |F(Z4)|^2 and |P(Z4[a])| = |F(Z4)| |P(Z4)| |Stab|
print(count_perms_formula(Z4, 1, parts=True))
for quantity in ("functions", "perms", "stab"):
    print(count(Z4, 1, quantity).to_dict(timings=False))

# %% bigger rings: formulas stay cheap, enumeration runs out of budget
Z9 = build_ring("Z/9")
print(count(Z9, 1, "functions").to_dict(timings=False))
print(count(build_ring("F_9:x^2+1"), 2, "perms", "formula").to_dict(timings=False))
