# %% [markdown]
# # p(7k + a) from (k+1)-dimensional determinants
#
# The J series come from splitting the Euler product by residue mod 7; the H
# series are polynomials in them, and each residue's generating function is
# `(q^7)^7 / (q)^8 * H_{1+a}`.

# %%
from qpart.determinants import build_mod7, det_eval_recurrence
from qpart.oracle import p_euler
from qpart.seven import cd_table, h_closed, h_from_c, j_closed, j_decimated, verify_identities, z_series_7

jt = j_closed(20)
for name, s in zip(("J1", "J2", "J3"), jt):
    print(name, s.coeffs[:12])
print("two constructions agree:", tuple(jt) == tuple(j_decimated(20)))

# %% [markdown]
# The numerator coefficients c_k are polynomials in a = J1/J2^2.

# %%
for k, c in enumerate(cd_table().c[:11]):
    print(f"c_{k} = {c}")

# %%
print(h_closed(jt).h == h_from_c(jt).h)

# %% [markdown]
# Final columns of the seven determinants.

# %%
for a in range(7):
    print(a, z_series_7(a, 7).coeffs)

# %%
p = build_mod7(5, 7)
for row in p.matrix():
    print(" ".join(f"{v:>4}" for v in row))
print(det_eval_recurrence(p), p_euler(54)[54])

# %%
print(verify_identities(50).to_text())
