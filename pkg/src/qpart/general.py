"""Determinants for p(kN + a) at an arbitrary modulus N.

Multiplying numerator and denominator of ``1/(q)_inf`` by
``(w q)_inf ... (w^(N-1) q)_inf`` with ``w = exp(2 pi i/N)`` turns the
denominator into a series in ``q^N``.  The integer path never touches ``w``:
for each k the N factors ``1 - w^(jk) q^k`` collapse to
``(1 - q^(kN/g))^g`` with ``g = gcd(k, N)``.  That step is checked against a
floating-point product over actual roots of unity (:func:`d_full_float`).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

import numpy as np

from .determinants import DetProblem
from .series import TruncatedIntSeries, decimate, etaq, invert, mul

FLOAT_RESIDUE_LIMIT = 0.25


class FloatOracleError(ArithmeticError):
    pass


def d_full(N: int, order: int) -> TruncatedIntSeries:
    """``prod_{j<N} (w^j q)_inf`` as an exact integer series."""
    if N < 1:
        raise ValueError(f"modulus N={N} must be >= 1")
    c = [0] * (order + 1)
    c[0] = 1
    for k in range(1, order + 1):
        g = gcd(k, N)
        step = k * N // g
        if step > order:
            continue
        # multiply by (1 - q^step)^g, expanded binomially
        factor = [(e * step, (-1) ** e * comb(g, e)) for e in range(1, g + 1)
                  if e * step <= order]
        for i in range(order, -1, -1):
            ci = c[i]
            for off, b in factor:
                if i >= off:
                    ci += b * c[i - off]
            c[i] = ci
    return TruncatedIntSeries(tuple(c), order)


@dataclass(frozen=True)
class FloatProduct:
    coeffs: tuple[int, ...]
    residue: float


def d_full_float(N: int, order: int) -> FloatProduct:
    """Multiply the N Pochhammer factors in complex doubles and round.

    Raises :class:`FloatOracleError` when some coefficient sits further than
    0.25 from an integer (or carries a visible imaginary part), since the
    rounding can then no longer be trusted.
    """
    if N < 1:
        raise ValueError(f"modulus N={N} must be >= 1")
    acc = np.zeros(order + 1, dtype=np.complex128)
    acc[0] = 1.0
    roots = np.exp(2j * np.pi * np.arange(N) / N)
    for j in range(N):
        for k in range(1, order + 1):
            w = roots[(j * k) % N]
            acc[k:] = acc[k:] - w * acc[:-k].copy()
    rounded = np.rint(acc.real)
    residue = float(max(np.max(np.abs(acc.real - rounded)),
                        np.max(np.abs(acc.imag))))
    if residue >= FLOAT_RESIDUE_LIMIT or not np.all(np.isfinite(acc)):
        raise FloatOracleError(
            f"order beyond float-oracle reliability (residue {residue:.3g})")
    return FloatProduct(tuple(int(v) for v in rounded), residue)


def z_general(N: int, order: int) -> list[TruncatedIntSeries]:
    """Numerator ``d_full(N) / (q)_inf`` split into its N residue classes.

    Each returned series is exact through ``t^order`` with ``t = q^N``; no
    extra slack is carried beyond what the (order+1)-dimensional
    determinant reads.
    """
    if N < 1:
        raise ValueError(f"modulus N={N} must be >= 1")
    K = N * order + N - 1
    numer = mul(d_full(N, K), invert(etaq(1, K)))
    return [decimate(numer, N, a) for a in range(N)]


@dataclass(frozen=True)
class ModulusPlan:
    N: int
    dser: TruncatedIntSeries
    zser: tuple[TruncatedIntSeries, ...]

    def to_json(self) -> dict:
        return {"N": self.N, "dser": self.dser.to_json(),
                "zser": [z.to_json() for z in self.zser]}

    @classmethod
    def from_json(cls, obj: dict) -> ModulusPlan:
        return cls(int(obj["N"]), TruncatedIntSeries.from_json(obj["dser"]),
                   tuple(TruncatedIntSeries.from_json(z) for z in obj["zser"]))

    def problem(self, a: int, k: int) -> DetProblem:
        if not 0 <= a < self.N:
            raise ValueError(f"residue a={a} must be in 0..{self.N - 1}")
        dcol = tuple(self.dser[self.N * i] for i in range(1, k + 1))
        return DetProblem(dcol, self.zser[a][:k + 1])


def modulus_plan(N: int, k: int) -> ModulusPlan:
    """Everything needed for p(jN + a) with j <= k."""
    return ModulusPlan(N, d_full(N, N * k), tuple(z_general(N, k)))


def build_general(N: int, a: int, k: int) -> DetProblem:
    if not 0 <= a < N:
        raise ValueError(f"residue a={a} must be in 0..{N - 1}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return modulus_plan(N, k).problem(a, k)
