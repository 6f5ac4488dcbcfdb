"""Exact truncated power series and univariate polynomials over the integers.

A :class:`TruncatedIntSeries` stores the coefficients of ``q^0 .. q^order`` and
every operation propagates the tightest order it can vouch for.  Reading a
coefficient past that order is an error, never a silent zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class TruncationError(IndexError):
    """A coefficient beyond the known truncation order was requested."""


class NotInvertibleError(ValueError):
    pass


def _pentagonal_exponents(limit: int):
    """Yield ``(exponent, sign)`` of ``prod (1 - q^k)`` for exponents <= limit."""
    yield 0, 1
    j = 1
    while True:
        e1 = j * (3 * j - 1) // 2
        if e1 > limit:
            return
        sign = -1 if j % 2 else 1
        yield e1, sign
        e2 = j * (3 * j + 1) // 2
        if e2 <= limit:
            yield e2, sign
        j += 1


@dataclass(frozen=True)
class TruncatedIntSeries:
    """Power series in ``q`` known exactly through ``q**order``."""

    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}")

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: int | None = None):
        """Build from a coefficient list, zero-padding or cutting to ``order``."""
        c = [int(v) for v in coeffs]
        if order is None:
            order = len(c) - 1
        if len(c) < order + 1:
            c.extend([0] * (order + 1 - len(c)))
        return cls(tuple(c[:order + 1]), order)

    @classmethod
    def constant(cls, value: int, order: int):
        return cls.from_coeffs([value], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1):
        """``coeff * q**exponent`` truncated at ``order``."""
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = coeff
        return cls(tuple(c), order)

    # -- access ---------------------------------------------------------------

    def __getitem__(self, i):
        if isinstance(i, slice):
            return self.coeffs[i]
        if i < 0:
            raise IndexError("negative exponent")
        if i > self.order:
            raise TruncationError(
                f"coefficient of q^{i} requested from a series exact only "
                f"through q^{self.order}")
        return self.coeffs[i]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"TruncatedIntSeries([{head}{more}], order={self.order})"

    def truncate(self, order: int) -> TruncatedIntSeries:
        if order > self.order:
            raise TruncationError(
                f"cannot extend series of order {self.order} to {order}")
        return TruncatedIntSeries(self.coeffs[:order + 1], order)

    def first_mismatch(self, other: TruncatedIntSeries) -> int | None:
        """Lowest exponent where the two series differ, up to the shared order."""
        n = min(self.order, other.order)
        for i in range(n + 1):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def agrees_with(self, other: TruncatedIntSeries) -> bool:
        return self.first_mismatch(other) is None

    # -- arithmetic -----------------------------------------------------------

    def __neg__(self):
        return neg(self)

    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, other)

    def __rsub__(self, other):
        return add(neg(self), other)

    def __mul__(self, other):
        if isinstance(other, TruncatedIntSeries):
            return mul(self, other)
        if isinstance(other, int):
            return scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return pow_series(self, e)

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> TruncatedIntSeries:
        return cls(tuple(int(c) for c in obj["coeffs"]), int(obj["order"]))


Series = TruncatedIntSeries


def _as_series(t, order: int) -> TruncatedIntSeries:
    if isinstance(t, TruncatedIntSeries):
        return t
    if isinstance(t, int):
        return TruncatedIntSeries.constant(t, order)
    raise TypeError(f"cannot combine series with {type(t).__name__}")


def etaq(m: int, order: int) -> TruncatedIntSeries:
    """Expansion of ``prod_{k>=1} (1 - q^(m*k))`` by the pentagonal number theorem."""
    if m < 1:
        raise ValueError(f"invalid modulus m={m}; need m >= 1")
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = [0] * (order + 1)
    for e, sign in _pentagonal_exponents(order // m):
        c[m * e] = sign
    return TruncatedIntSeries(tuple(c), order)


def add(s: TruncatedIntSeries, t) -> TruncatedIntSeries:
    t = _as_series(t, s.order)
    n = min(s.order, t.order)
    return TruncatedIntSeries(
        tuple(a + b for a, b in zip(s.coeffs[:n + 1], t.coeffs[:n + 1])), n)


def neg(s: TruncatedIntSeries) -> TruncatedIntSeries:
    return TruncatedIntSeries(tuple(-a for a in s.coeffs), s.order)


def sub(s: TruncatedIntSeries, t) -> TruncatedIntSeries:
    return add(s, neg(_as_series(t, s.order)))


def scale(s, t) -> TruncatedIntSeries:
    """Multiply a series by an integer (arguments in either order)."""
    if isinstance(s, int):
        s, t = t, s
    return TruncatedIntSeries(tuple(t * a for a in s.coeffs), s.order)


def shift(s: TruncatedIntSeries, r: int) -> TruncatedIntSeries:
    """Multiply by ``q**r``; exactness extends by ``r``."""
    if r < 0:
        raise ValueError("shift must be nonnegative")
    return TruncatedIntSeries((0,) * r + s.coeffs, s.order + r)


def mul(s: TruncatedIntSeries, t: TruncatedIntSeries) -> TruncatedIntSeries:
    """Schoolbook Cauchy product, truncated at the smaller order."""
    n = min(s.order, t.order)
    a = s.coeffs[:n + 1]
    b = t.coeffs[:n + 1]
    # iterate over the sparser operand; eta products are mostly zeros
    if sum(1 for x in a if x) > sum(1 for x in b if x):
        a, b = b, a
    out = [0] * (n + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(n + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return TruncatedIntSeries(tuple(out), n)


def invert(s: TruncatedIntSeries) -> TruncatedIntSeries:
    """Reciprocal series; the constant term must be +1 or -1."""
    c0 = s.coeffs[0]
    if c0 not in (1, -1):
        raise NotInvertibleError("series not invertible over the integers")
    n = s.order
    nz = [(i, a) for i, a in enumerate(s.coeffs) if i and a]
    out = [0] * (n + 1)
    out[0] = c0
    for k in range(1, n + 1):
        acc = 0
        for i, a in nz:
            if i > k:
                break
            acc += a * out[k - i]
        out[k] = -c0 * acc
    return TruncatedIntSeries(tuple(out), n)


def pow_series(s: TruncatedIntSeries, e: int) -> TruncatedIntSeries:
    """Integer power by repeated squaring; negative ``e`` goes through :func:`invert`."""
    if e < 0:
        s = invert(s)
        e = -e
    result = TruncatedIntSeries.constant(1, s.order)
    base = s
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def decimate(s: TruncatedIntSeries, N: int, r: int) -> TruncatedIntSeries:
    """Coefficients of ``q^(N*k + r)`` reindexed to ``t^k``."""
    if N < 1:
        raise ValueError("N must be positive")
    if not 0 <= r < N:
        raise ValueError(f"residue r={r} out of range for N={N}")
    if s.order < r:
        raise TruncationError(
            f"series of order {s.order} has no coefficients in residue {r} mod {N}")
    return TruncatedIntSeries(s.coeffs[r::N], (s.order - r) // N)


def inflate(s: TruncatedIntSeries, N: int) -> TruncatedIntSeries:
    """Substitute ``q -> q**N``."""
    if N < 1:
        raise ValueError("N must be positive")
    c = [0] * (N * s.order + 1)
    c[::N] = s.coeffs
    return TruncatedIntSeries(tuple(c), N * s.order)


# ---------------------------------------------------------------------------
# polynomials in a single formal variable


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[i]`` multiplies ``a**i``.  Zero is ``()``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        return poly_add(self, _as_poly(other))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return poly_add(self, -_as_poly(other))

    def __rsub__(self, other):
        return poly_add(-self, _as_poly(other))

    def __mul__(self, other):
        return poly_mul(self, _as_poly(other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        out = IntPolynomial((1,))
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "a" if i == 1 else f"a^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append(("-" if c < 0 else "+", body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial((p,))
    raise TypeError(f"cannot combine polynomial with {type(p).__name__}")


A = IntPolynomial((0, 1))


def poly_add(p: IntPolynomial, r: IntPolynomial) -> IntPolynomial:
    n = max(len(p.coeffs), len(r.coeffs))
    pc = p.coeffs + (0,) * (n - len(p.coeffs))
    rc = r.coeffs + (0,) * (n - len(r.coeffs))
    return IntPolynomial(tuple(x + y for x, y in zip(pc, rc)))


def poly_mul(p: IntPolynomial, r: IntPolynomial) -> IntPolynomial:
    if p.is_zero() or r.is_zero():
        return IntPolynomial()
    out = [0] * (len(p.coeffs) + len(r.coeffs) - 1)
    for i, x in enumerate(p.coeffs):
        if x:
            for j, y in enumerate(r.coeffs):
                out[i + j] += x * y
    return IntPolynomial(tuple(out))


def poly_eval_series(p: IntPolynomial, a_series: TruncatedIntSeries) -> TruncatedIntSeries:
    """Evaluate ``p`` at a series argument by Horner's rule."""
    acc = TruncatedIntSeries.constant(0, a_series.order)
    for c in reversed(p.coeffs):
        acc = mul(acc, a_series) + c
    return acc


def series_from(values: Sequence[int], order: int | None = None) -> TruncatedIntSeries:
    """Shorthand for :meth:`TruncatedIntSeries.from_coeffs`."""
    return TruncatedIntSeries.from_coeffs(values, order)
