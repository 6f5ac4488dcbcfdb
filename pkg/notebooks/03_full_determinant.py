# %% [markdown]
# # p(n) as an (n+1)-dimensional determinant
#
# The bands below the diagonal are the Euler-product coefficients and the
# last column is (1, 0, ..., 0).

# %%
from qpart.determinants import build_eq1, det_eval_literal, det_eval_recurrence
from qpart.oracle import p_euler

for row in build_eq1(7).matrix():
    print(" ".join(f"{v:>2}" for v in row))

# %% [markdown]
# The production evaluator is a linear recurrence; the literal path does
# fraction-free elimination on the whole matrix.

# %%
for n in (0, 5, 12, 40):
    p = build_eq1(n)
    print(n, det_eval_recurrence(p), det_eval_literal(p), p_euler(n)[n])

# %%
print(det_eval_recurrence(build_eq1(1000)))
