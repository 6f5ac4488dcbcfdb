# %% [markdown]
# # Any modulus N
#
# Multiplying through by the conjugate Euler products at the N-th roots of
# unity gives a denominator in q^N.  Its integer coefficients come from a gcd
# collapse of the factors; a floating-point product over the actual roots
# checks them.

# %%
from qpart.general import build_general, d_full, d_full_float, z_general
from qpart.determinants import det_eval_recurrence
from qpart.oracle import p_euler
from qpart.series import etaq, mul
from qpart.seven import z_series_7

for N in (2, 3, 5, 7):
    exact = d_full(N, 6 * N)
    approx = d_full_float(N, 6 * N)
    print(N, exact.coeffs[::N], exact.coeffs == approx.coeffs, f"residue {approx.residue:.1e}")

# %%
P = p_euler(400)
for N, a, k in ((5, 4, 1), (11, 6, 2), (13, 7, 20)):
    print(f"p({k * N + a}) =", det_eval_recurrence(build_general(N, a, k)), P[k * N + a])

# %% [markdown]
# At N = 7 the general columns differ from the H-function columns by the
# common unit factor (q^7)_inf (in the variable q^7).

# %%
zg = z_general(7, 10)
print(zg[0].coeffs)
print(z_series_7(0, 10).coeffs)
print(mul(zg[0], etaq(7, 10)) == z_series_7(0, 10))
