# %% [markdown]
# # Truncated integer power series
#
# Every series carries the order through which its coefficients are exact.
# Products and reciprocals never claim more than their inputs support.

# %%
from qpart.series import TruncatedIntSeries, decimate, etaq, inflate, invert, mul, pow_series

euler = etaq(1, 30)
print(euler)

# %% [markdown]
# The reciprocal of the Euler product counts partitions.

# %%
partitions = invert(euler)
print(partitions.coeffs[:15])

# %%
print(pow_series(etaq(1, 8), 8).coeffs)

# %% [markdown]
# Orders propagate as the minimum of the operands; asking past the order is an error.

# %%
short = TruncatedIntSeries.from_coeffs([1, 2, 3])
print(mul(short, euler).order)
try:
    short[5]
except IndexError as exc:
    print("refused:", exc)

# %% [markdown]
# Multisection: only residues 0, 1, 2 and 5 mod 7 survive in the Euler product.

# %%
big = etaq(1, 7 * 20 + 6)
for r in range(7):
    print(r, decimate(big, 7, r).coeffs[:10])

# %%
print(inflate(etaq(1, 3), 7) == etaq(7, 21))
