# %% [markdown]
# # Two independent ways to count partitions

# %%
import time

from qpart.oracle import p_bruteforce, p_euler

for fn in (p_euler, p_bruteforce):
    t0 = time.perf_counter()
    table = fn(2000)
    print(f"{fn.__name__:>13}: p(2000) = {table[2000]}  ({time.perf_counter() - t0:.2f}s)")

# %%
print(p_euler(2000).values == p_bruteforce(2000).values)

# %% [markdown]
# Ramanujan's congruences hold across the whole table.

# %%
t = p_euler(2000)
for mod, res in ((5, 4), (7, 5), (11, 6)):
    print(mod, all(t[n] % mod == 0 for n in range(res, 2001, mod)))
