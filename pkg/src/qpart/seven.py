"""Modulus-7 machinery for p(7k + a).

Writing ``(q^(1/7))_inf / (q^7)_inf = J1 + q^(1/7) J2 - q^(2/7) + q^(5/7) J3``
splits the Euler product into three integer-exponent series.  With
``a = J1/J2^2`` and ``x = q J2^7/J1^7`` the reciprocal of that sum becomes a
numerator in ``x^(1/7)`` whose coefficients ``c_0 .. c_30`` are polynomials
in ``a``; grouping by residue gives the seven series ``H_1 .. H_7`` and

    sum_k p(7k + a) q^k = (q^7)_inf^7 / (q)_inf^8 * H_{1+a}.

Both the J and H series are built two independent ways so that each path
can check the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .report import VerificationReport
from .series import (
    A,
    IntPolynomial,
    TruncatedIntSeries,
    decimate,
    etaq,
    invert,
    mul,
    poly_eval_series,
    pow_series,
    shift,
)

# (sign, linear, constant) offsets of q^(lin*k + const) inside each bracket,
# on top of the base exponent 42k^2 + base_lin*k.
_J_BRACKETS = {
    1: (-1, [(1, 0, 0), (1, 2, 0), (1, 14, 1), (-1, 30, 5),
             (-1, 42, 10), (-1, 44, 11), (-1, 56, 18), (1, 72, 30)]),
    2: (5, [(1, 0, 0), (1, 14, 2), (-1, 18, 3), (-1, 32, 8),
            (-1, 42, 13), (-1, 56, 22), (1, 60, 25), (1, 74, 37)]),
    3: (11, [(1, 0, 0), (-1, 6, 1), (1, 14, 3), (-1, 20, 5),
             (-1, 42, 16), (1, 48, 20), (-1, 56, 26), (1, 62, 31)]),
}

# H_{i} as sums of coeff * J1^e1 J2^e2 J3^e3
H_MONOMIALS = (
    ((2, 2, 8, 0), (2, 3, 6, 0), (-1, 4, 4, 0), (-13, 5, 2, 0), (11, 6, 0, 0)),
    ((5, 2, 7, 0), (-9, 3, 5, 0), (15, 4, 3, 0), (-15, 5, 1, 0), (-3, 7, 0, 1)),
    ((11, 2, 6, 0), (-31, 3, 4, 0), (26, 4, 2, 0), (-5, 5, 0, 0), (1, 8, 0, 2)),
    ((1, 1, 7, 0), (8, 2, 5, 0), (-18, 3, 3, 0), (11, 4, 1, 0), (5, 6, 0, 1)),
    ((3, 1, 6, 0), (3, 2, 4, 0), (-12, 3, 2, 0), (12, 4, 0, 0), (-1, 7, 0, 2)),
    ((7, 1, 5, 0), (-7, 2, 3, 0), (-14, 3, 1, 0), (-7, 5, 0, 1)),
    ((1, 0, 6, 0), (1, 1, 4, 0), (17, 2, 2, 0), (-10, 3, 0, 0), (2, 6, 0, 2)),
)

# d_0 .. d_5: denominator coefficients of x^k after clearing J1^7
D_POLYS = (
    IntPolynomial((1,)),
    IntPolynomial((1, 7, 14, 0, -7)),
    IntPolynomial.monomial(7, -8) + IntPolynomial.monomial(8, 14),
    IntPolynomial.monomial(11, -14),
    IntPolynomial.monomial(16, -7),
    IntPolynomial.monomial(21, -1),
)

NUMERATOR_DEGREE = 30


@dataclass(frozen=True)
class JTriple:
    j1: TruncatedIntSeries
    j2: TruncatedIntSeries
    j3: TruncatedIntSeries
    path: str

    @property
    def order(self) -> int:
        return min(self.j1.order, self.j2.order, self.j3.order)

    def __iter__(self):
        return iter((self.j1, self.j2, self.j3))

    def first_mismatch(self, other: JTriple) -> int | None:
        hits = [i for i in (s.first_mismatch(t) for s, t in zip(self, other))
                if i is not None]
        return min(hits) if hits else None


@dataclass(frozen=True)
class CDTable:
    c: tuple[IntPolynomial, ...]
    d: tuple[IntPolynomial, ...]


@dataclass(frozen=True)
class HSet:
    h: tuple[TruncatedIntSeries, ...]
    path: str

    def __getitem__(self, i) -> TruncatedIntSeries:
        """``hset[a]`` is ``H_{1+a}``."""
        return self.h[i]

    def first_mismatch(self, other: HSet) -> int | None:
        hits = [i for i in (s.first_mismatch(t) for s, t in zip(self.h, other.h))
                if i is not None]
        return min(hits) if hits else None


def _bracket_sum(index: int, order: int) -> TruncatedIntSeries:
    base_lin, terms = _J_BRACKETS[index]
    c = [0] * (order + 1)
    k = 0
    while 42 * k * k + base_lin * k <= order:
        base = 42 * k * k + base_lin * k
        for sign, lin, const in terms:
            e = base + lin * k + const
            if e <= order:
                c[e] += sign
        k += 1
    return TruncatedIntSeries(tuple(c), order)


@lru_cache(maxsize=16)
def j_closed(order: int) -> JTriple:
    """J1, J2, J3 from their explicit theta-type sums."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    inv7 = invert(etaq(7, order))
    j1 = mul(_bracket_sum(1, order) - 1, inv7)
    j2 = -mul(_bracket_sum(2, order), inv7)
    j3 = mul(_bracket_sum(3, order), inv7)
    return JTriple(j1, j2, j3, "closed_form")


@lru_cache(maxsize=16)
def j_decimated(order: int) -> JTriple:
    """J1, J2, J3 by splitting the Euler product into residue classes mod 7."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    e = etaq(1, 7 * order + 6)
    inv7 = invert(etaq(7, order))
    j1, j2, j3 = (mul(decimate(e, 7, r), inv7) for r in (0, 1, 5))
    return JTriple(j1, j2, j3, "decimation")


@lru_cache(maxsize=1)
def cd_table() -> CDTable:
    """c_0 .. c_30 from ``c_n = d_{n/7}[7|n] - c_{n-1} + a c_{n-2} + a^3 c_{n-5}``."""
    c = extended_c(NUMERATOR_DEGREE)
    return CDTable(tuple(c), D_POLYS)


def extended_c(n_max: int) -> list[IntPolynomial]:
    """Run the c recurrence through ``n_max`` (past 30 it must produce zeros)."""
    a3 = A ** 3
    c: list[IntPolynomial] = []
    zero = IntPolynomial()

    def get(i):
        return c[i] if i >= 0 else zero

    for n in range(n_max + 1):
        rhs = D_POLYS[n // 7] if n % 7 == 0 and n // 7 < len(D_POLYS) else zero
        c.append(rhs - get(n - 1) + A * get(n - 2) + a3 * get(n - 5))
    return c


def _monomial_powers(jt: JTriple, order: int):
    cache = {}

    def power(idx, e):
        key = (idx, e)
        if key not in cache:
            s = (jt.j1, jt.j2, jt.j3)[idx].truncate(order)
            cache[key] = pow_series(s, e)
        return cache[key]

    return power


def h_closed(jt: JTriple, order: int | None = None) -> HSet:
    """H_1 .. H_7 from their closed J-monomial forms."""
    order = jt.order if order is None else order
    power = _monomial_powers(jt, order)
    hs = []
    for terms in H_MONOMIALS:
        acc = TruncatedIntSeries.constant(0, order)
        for coeff, e1, e2, e3 in terms:
            m = mul(mul(power(0, e1), power(1, e2)), power(2, e3))
            acc = acc + coeff * m
        hs.append(acc)
    return HSet(tuple(hs), "closed_form")


def h_from_c(jt: JTriple, order: int | None = None) -> HSet:
    """H_1 .. H_7 by substituting a and x into the c-polynomial groups."""
    order = jt.order if order is None else order
    power = _monomial_powers(jt, order)
    a_ser = mul(jt.j1.truncate(order), power(1, -2))
    x_ser = shift(mul(power(1, 7), power(0, -7)), 1).truncate(order)
    c = cd_table().c
    hs = []
    for i in range(7):
        inner = TruncatedIntSeries.constant(0, order)
        x_pow = TruncatedIntSeries.constant(1, order)
        for k in range(i, NUMERATOR_DEGREE + 1, 7):
            inner = inner + mul(poly_eval_series(c[k], a_ser), x_pow)
            x_pow = mul(x_pow, x_ser)
        prefactor = mul(power(0, 6 - i), power(1, i))
        hs.append(mul(prefactor, inner))
    return HSet(tuple(hs), "c_substitution")


@lru_cache(maxsize=16)
def _h_default(order: int) -> HSet:
    return h_closed(j_closed(order), order)


def z_series_7(a: int, order: int) -> TruncatedIntSeries:
    """``(q^7)_inf^7 H_{1+a}``: the final column of the p(7k + a) determinant."""
    if not 0 <= a <= 6:
        raise ValueError(f"residue a={a} must be in 0..6")
    return mul(pow_series(etaq(7, order), 7), _h_default(order)[a])


def h6_bracket(order: int) -> TruncatedIntSeries:
    """``7 (q)^4/(q^7)^4 + 49 q``, the simpler form of H_6."""
    e4 = pow_series(mul(etaq(1, order), invert(etaq(7, order))), 4)
    return 7 * e4 + TruncatedIntSeries.monomial(1, order, 49)


# ---------------------------------------------------------------------------
# identity checks


def _q(e, order, coeff=1):
    return TruncatedIntSeries.monomial(e, order, coeff)


def _identity_pairs(order: int, misprint: bool = False):
    """Yield ``(name, lhs, rhs)`` for each identity checked at ``order``."""
    jt = j_closed(order)
    j1, j2, j3 = jt
    E = mul(etaq(1, order), invert(etaq(7, order)))
    E4 = pow_series(E, 4)
    E8 = pow_series(E, 8)
    p = lambda s, e: pow_series(s, e)  # noqa: E731

    yield "j-product", mul(mul(j1, j2), j3), TruncatedIntSeries.constant(-1, order)
    yield "j-quadratic", mul(p(j1, 2), j3) + j2, shift(p(j3, 2), 1).truncate(order)

    seventh_lhs = p(j1, 7) + shift(p(j2, 7), 1) + shift(p(j3, 7), 5)
    if misprint:
        yield "6c-misprint", seventh_lhs, E8 + 14 * shift(E4, 1) + _q(3, order, 57)
        return
    yield "j-seventh-powers", seventh_lhs, E8 + 14 * shift(E4, 1) + _q(2, order, 57)

    yield ("j-cubic-mixed",
           mul(p(j1, 3), j2) + shift(mul(p(j2, 3), j3), 1)
           + shift(mul(j1, p(j3, 3)), 2),
           -E4 - _q(1, order, 8))
    yield ("j-quintic-mixed",
           mul(p(j1, 2), p(j2, 3)) + shift(mul(p(j1, 3), p(j3, 2)), 1)
           + shift(mul(p(j2, 2), p(j3, 3)), 2),
           -E4 - _q(1, order, 5))

    # denominator: product form in a, x; J-form; and the eta quotient
    a_ser = mul(j1, p(j2, -2))
    x_ser = shift(mul(p(j2, 7), p(j1, -7)), 1).truncate(order)
    d_ax = TruncatedIntSeries.constant(0, order)
    x_pow = TruncatedIntSeries.constant(1, order)
    for dk in D_POLYS:
        d_ax = d_ax + mul(poly_eval_series(dk, a_ser), x_pow)
        x_pow = mul(x_pow, x_ser)
    yield "denominator-ax", mul(p(j1, 7), d_ax), E8
    d_j = (p(j1, 7)
           + shift(p(j2, 7) + 7 * mul(j1, p(j2, 5)) + 14 * mul(p(j1, 2), p(j2, 3))
                   + 7 * mul(p(j1, 5), j3), 1)
           - shift(8 - 14 * mul(p(j1, 3), p(j3, 2)), 2)
           + shift(14 * mul(p(j2, 2), p(j3, 3)), 3)
           + shift(7 * mul(j2, p(j3, 5)), 4)
           + shift(p(j3, 7), 5))
    yield "denominator-j", d_j, E8

    hs = _h_default(order)
    P = invert(etaq(1, 7 * order + 6))
    factor = mul(pow_series(etaq(7, order), 7), pow_series(etaq(1, order), -8))
    for a in range(7):
        yield f"decimation-a{a}", decimate(P, 7, a), mul(factor, hs[a])

    yield "h6-bracket", hs[5], h6_bracket(order)

    yield "j-paths", jt, j_decimated(order)
    yield "h-paths", hs, h_from_c(jt, order)


IDENTITY_NAMES = (
    "j-product", "j-quadratic", "j-seventh-powers", "j-cubic-mixed",
    "j-quintic-mixed", "denominator-ax", "denominator-j",
    *(f"decimation-a{a}" for a in range(7)), "h6-bracket", "j-paths", "h-paths",
)
NEGATIVE_CONTROLS = ("6c-misprint",)


def verify_identities(order: int, only=None) -> VerificationReport:
    """Check every modulus-7 identity through ``q^order``; failures are recorded."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    wanted = set(only) if only else set(IDENTITY_NAMES)
    report = VerificationReport()
    if wanted & set(IDENTITY_NAMES):
        for name, lhs, rhs in _identity_pairs(order):
            if name in wanted:
                report.add(name, order, lhs.first_mismatch(rhs))
    if "6c-misprint" in wanted:
        for name, lhs, rhs in _identity_pairs(order, misprint=True):
            if name == "6c-misprint":
                report.add(name, order, lhs.first_mismatch(rhs))
    return report
