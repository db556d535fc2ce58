"""Evaluating on R[a] and the null ideals N and N'.

On R[a1..ak], f(a0 + sum a_i alpha_i) = f(a0) + sum a_i f'(a0) alpha_i, so a
polynomial's behaviour there depends on [f] and [f'] over R.
"""
# %%
from dualpoly import DualRing, build_ring, format_poly, parse_poly
from dualpoly.null_ideals import (canonical_monic_null_base, canonical_monic_null_dual, enumerate_bounded_null,
                                  in_N, in_Nprime, is_null_on_dual)
from dualpoly.oracles import naive_dual_table
from dualpoly.poly import induce

F2 = build_ring("F_2")
dr = DualRing(F2, 1)

# %% x^2 + x vanishes on F_2 but not on F_2[a]
h = parse_poly("x^2+x", F2)
print("on F_2:   ", induce(h, F2).tolist())
print("on F_2[a]:", induce(h, dr).tolist())
print("in N:", in_N(h), " in N':", in_Nprime(h))

# %% its square has a null derivative too, so it kills F_2[a]
print("(x^2+x)^2 on F_2[a]:", induce(h * h, dr).tolist())

# %% the fast table agrees with plain Horner in the dual ring
f = parse_poly("x^3+a1*x^2+1", dr)
print(induce(f, dr).tolist(), naive_dual_table(f, dr).tolist())

# %% Z/4: four null polynomials below degree 4, only 0 has a null derivative
Z4 = build_ring("Z/4")
sets = enumerate_bounded_null(Z4, 4)
print([format_poly(p) for p in sets.null], sets.sizes)

# %% a dual polynomial is null iff f0 is in N' and every f_i is in N
g = parse_poly("a1*x^2+a1*x", DualRing(Z4, 1))
print(format_poly(g), "null on Z/4[a]?", is_null_on_dual(g))
g2 = parse_poly("2*a1*x^2+2*a1*x", DualRing(Z4, 1))
print(format_poly(g2), "null on Z/4[a]?", is_null_on_dual(g2))

# %% monic null polynomials used to bound degrees
print(format_poly(canonical_monic_null_base(Z4)), "|", format_poly(canonical_monic_null_dual(Z4)))
