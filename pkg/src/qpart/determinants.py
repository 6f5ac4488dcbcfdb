"""Quasi-triangular determinants for p(n), p(7k+a) and p(kN+a).

The matrices all share one shape: ones on the diagonal, the constant value
``D_j`` along the j-th subdiagonal, and an arbitrary final column ``Z``.
Expanding along the last row turns the determinant into the linear
recurrence ``u_k = Z_k - sum_j D_j u_{k-j}``, which is the production
evaluator.  :func:`det_eval_literal` builds the matrix and eliminates, and
only exists to falsify that equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .series import etaq, pow_series

DEFAULT_LITERAL_CAP = 600


class DimensionCapError(ValueError):
    pass


@dataclass(frozen=True)
class DetProblem:
    """``dcol`` holds ``D_1, D_2, ...``; ``zcol`` holds ``Z_0 .. Z_k``."""

    dcol: tuple[int, ...]
    zcol: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dcol", tuple(int(v) for v in self.dcol))
        object.__setattr__(self, "zcol", tuple(int(v) for v in self.zcol))
        if not self.zcol:
            raise ValueError("zcol must have at least one entry")
        if len(self.dcol) < len(self.zcol) - 1:
            raise ValueError(
                f"dim {len(self.zcol)} needs {len(self.zcol) - 1} band entries, "
                f"got {len(self.dcol)}")

    @property
    def dim(self) -> int:
        return len(self.zcol)

    def matrix(self) -> list[list[int]]:
        k = self.dim - 1
        band = (1,) + self.dcol
        rows = []
        for i in range(k + 1):
            row = [band[i - j] if i >= j else 0 for j in range(k)]
            row.append(self.zcol[i])
            rows.append(row)
        return rows

    def to_json(self) -> dict:
        return {"dcol": [str(v) for v in self.dcol],
                "zcol": [str(v) for v in self.zcol]}

    @classmethod
    def from_json(cls, obj: dict) -> DetProblem:
        return cls(tuple(int(v) for v in obj["dcol"]),
                   tuple(int(v) for v in obj["zcol"]))


def leading_minors(p: DetProblem) -> list[int]:
    """Determinants of the 1x1, 2x2, ..., dim x dim instances sharing ``p``'s data.

    Entry ``k`` is the value of the (k+1)-dimensional problem built from the
    same band and the first k+1 column entries.
    """
    u: list[int] = []
    d = p.dcol
    for k, z in enumerate(p.zcol):
        acc = z
        for j in range(1, k + 1):
            dj = d[j - 1]
            if dj:
                acc -= dj * u[k - j]
        u.append(acc)
    return u


def det_eval_recurrence(p: DetProblem) -> int:
    return leading_minors(p)[-1]


det = det_eval_recurrence


def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination with row pivoting."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_eval_literal(p: DetProblem, cap: int = DEFAULT_LITERAL_CAP) -> int:
    if p.dim > cap:
        raise DimensionCapError(f"dimension {p.dim} exceeds literal cap {cap}")
    return bareiss_det(p.matrix())


def build_eq1(n: int) -> DetProblem:
    """The (n+1)-dimensional matrix whose bands are the Euler-product coefficients."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    e = etaq(1, n)
    return DetProblem(e.coeffs[1:], (1,) + (0,) * n)


def build_mod7(a: int, k: int) -> DetProblem:
    """(k+1)-dimensional problem for p(7k + a)."""
    from .seven import z_series_7

    if not 0 <= a <= 6:
        raise ValueError(f"residue a={a} must be in 0..6")
    if k < 0:
        raise ValueError("k must be nonnegative")
    band = pow_series(etaq(1, k), 8)
    return DetProblem(band.coeffs[1:], z_series_7(a, k).coeffs)
