"""The pointwise stabilizer of R inside the permutations of R[a].

Its elements are the classes of x + h with h null on R. On fields its order is
(q-1)^q, which is not [N:N']; on non-field local rings the two agree.
"""
# %%
from dualpoly import build_ring
from dualpoly.counting import (field_stab_by_derivative_image, null_quotient_index, stab_order, stab_orders)

for spec in ["F_2", "F_3", "F_4:x^2+x+1"]:
    R = build_ring(spec)
    q = R.order
    st = stab_order(R, 1)
    print(f"{spec:12s} |Stab|={st.order:3d} (q-1)^q={(q - 1) ** q:3d} "
          f"[N:N']={null_quotient_index(R):4d} derivative images={st.derivative_image_size}")

# %% the derivative-image count gives the same numbers on fields
print([field_stab_by_derivative_image(build_ring(s)) for s in ["F_2", "F_3", "F_4:x^2+x+1"]])

# %% non-field local rings: |Stab| = [N:N']
for spec in ["Z/4", "Z/8"]:
    R = build_ring(spec)
    print(spec, stab_order(R, 1).order, stab_order(R, 1, "index_formula").order)

# %% the order does not depend on the number of dual variables
print(stab_orders(build_ring("Z/4"), 2), stab_orders(build_ring("F_3"), 2))
