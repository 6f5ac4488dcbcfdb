from pathlib import Path

import pytest
import sympy

from qpart.oracle import p_euler
from qpart.series import (
    IntPolynomial,
    TruncatedIntSeries,
    decimate,
    etaq,
    invert,
    mul,
    pow_series,
    shift,
)
from qpart.seven import (
    A,
    D_POLYS,
    cd_table,
    extended_c,
    h6_bracket,
    h_closed,
    h_from_c,
    j_closed,
    j_decimated,
    verify_identities,
    z_series_7,
)

DATA = Path(__file__).parent / "data"

a = sympy.Symbol("a")

# c_1 .. c_30 as printed alongside the recurrence
PRINTED_C = [
    -1, 1 + a, -1 - 2*a, 1 + 3*a + a**2, -1 - 4*a - 3*a**2 + a**3,
    1 + 5*a + 6*a**2 - a**3, a + 4*a**2 - a**3 - 5*a**4, a**2 + 6*a**3 + 2*a**4,
    -a**3 - 4*a**5, a**3 + 2*a**4 + 3*a**5 + a**6,
    2*a**4 + 3*a**5 - 6*a**6, 3*a**5 + 8*a**6 - 4*a**7, a**6, a**6 + 6*a**8,
    3*a**7 - 3*a**8 + a**9, 6*a**8 - a**9, 6*a**9 - 3*a**10, a**9 + 2*a**10,
    4*a**10 + 3*a**11, -4*a**11 + a**12,
    a**12, a**12 - 2*a**13, 5*a**13, a**14, a**15, a**15, -a**16, 0, 0, a**18,
]

PRINTED_Z = {
    0: [1, 7, 35, 12, 12, -7, 36, -167],
    1: [1, 14, 20, 34, -1, 21, -111, 34],
    2: [2, 14, 31, 7, 44, -67, 21, -103],
    3: [3, 18, 21, 39, -28, 31, -80, -73],
    4: [5, 16, 37, -2, 35, -47, -28, -117],
    5: [7, 21, 14, 56, -35, -28, -70, 35],
    6: [11, 13, 39, 14, 0, -63, -1, -164],
}


def to_sympy(p: IntPolynomial):
    return sum(c * a**i for i, c in enumerate(p.coeffs))


# -- J series ------------------------------------------------------------------------

def test_j_constant_terms():
    jt = j_closed(10)
    assert (jt.j1[0], jt.j2[0], jt.j3[0]) == (1, -1, 1)
    prod = mul(mul(jt.j1, jt.j2), jt.j3)
    assert prod.coeffs == (-1,) + (0,) * 10


@pytest.mark.parametrize("K", [0, 1, 7, 30, 60])
def test_j_paths_agree(K):
    closed, dec = j_closed(K), j_decimated(K)
    assert closed.path == "closed_form" and dec.path == "decimation"
    assert tuple(closed) == tuple(dec)


def test_vanishing_residue_classes():
    K = 40
    e = etaq(1, 7 * K + 6)
    for r in (3, 4, 6):
        assert set(decimate(e, 7, r).coeffs) == {0}
    minus_one = mul(decimate(e, 7, 2), invert(etaq(7, K)))
    assert minus_one.coeffs == (-1,) + (0,) * K


def test_j1_matches_frozen_a108483():
    rows = [line.split() for line in (DATA / "A108483.txt").read_text().splitlines()
            if line and not line.startswith("#")]
    frozen = [int(v) for _, v in rows]
    assert list(j_closed(len(frozen) - 1).j1.coeffs) == frozen


# -- c / d polynomials -----------------------------------------------------------------

def test_c_table_matches_printed_values():
    c = cd_table().c
    assert c[0] == IntPolynomial((1,))
    for k, printed in enumerate(PRINTED_C, start=1):
        assert sympy.expand(to_sympy(c[k]) - printed) == 0, f"c_{k}"


def test_c_examples():
    c = cd_table().c
    assert c[1] == IntPolynomial((-1,))
    assert c[7] == IntPolynomial((0, 1, 4, -1, -5))
    assert c[30] == IntPolynomial.monomial(18)


def test_recurrence_holds_as_polynomial_identity():
    c, d = cd_table().c, cd_table().d
    zero = IntPolynomial()
    get = lambda i: c[i] if i >= 0 else zero  # noqa: E731
    for n in range(1, 31):
        lhs = get(n) + get(n - 1) - A * get(n - 2) - A**3 * get(n - 5)
        assert lhs == (d[n // 7] if n % 7 == 0 else zero), n


def test_numerator_terminates_at_degree_30():
    # carrying the recurrence on must give zeros, and n = 35 reproduces d_5
    assert all(p.is_zero() for p in extended_c(40)[31:])


def test_d_polys_from_norm_over_seventh_roots():
    # prod_w (1 + w y - w^2 a y^2 - w^5 a^3 y^5) = Res_t(t^7 - y^7, f(t)) up to sign
    t, Y = sympy.symbols("t Y")
    f = 1 + t - a * t**2 - a**3 * t**5
    got = sympy.Poly(sympy.resultant(t**7 - Y, f, t), Y).all_coeffs()[::-1]
    got = [sympy.expand(g / got[0]) for g in got]
    want = [to_sympy(dk) for dk in D_POLYS]
    assert got == want


# -- H series --------------------------------------------------------------------------

@pytest.mark.parametrize("K", [0, 5, 40, 60])
def test_h_paths_agree(K):
    jt = j_closed(K)
    hc, hf = h_closed(jt, K), h_from_c(jt, K)
    assert hc.path == "closed_form" and hf.path == "c_substitution"
    assert hc.h == hf.h


def test_h_constant_terms_are_small_partition_numbers():
    hs = h_closed(j_closed(5), 5)
    e7 = pow_series(etaq(7, 5), 7)
    assert [mul(e7, h)[0] for h in hs.h] == [1, 1, 2, 3, 5, 7, 11]


def test_h6_simplified_form():
    K = 60
    hs = h_from_c(j_closed(K), K)
    assert hs[5] == h6_bracket(K)


def test_p7k5_generating_function():
    K = 40
    lhs = decimate(invert(etaq(1, 7 * K + 6)), 7, 5)
    rhs = mul(mul(pow_series(etaq(7, K), 7), pow_series(etaq(1, K), -8)), h6_bracket(K))
    assert lhs == rhs


# -- Z series --------------------------------------------------------------------------

@pytest.mark.parametrize("res", range(7))
def test_z_printed_prefixes(res):
    assert list(z_series_7(res, 7).coeffs) == PRINTED_Z[res]


def test_z_constant_is_p_of_residue():
    t = p_euler(6)
    assert [z_series_7(r, 0)[0] for r in range(7)] == list(t.values)


def test_z5_divisible_by_seven():
    assert all(c % 7 == 0 for c in z_series_7(5, 100).coeffs)


def test_z_rejects_bad_residue():
    with pytest.raises(ValueError):
        z_series_7(7, 3)


# -- identity report ---------------------------------------------------------------------

def test_verify_all_pass_at_50():
    report = verify_identities(50)
    assert report.overall, report.to_text()
    assert {"j-product", "j-quadratic", "j-seventh-powers", "j-cubic-mixed",
            "j-quintic-mixed", "denominator-ax", "denominator-j", "h6-bracket",
            "j-paths", "h-paths"} <= set(report.names())
    assert all(f"decimation-a{r}" in report.names() for r in range(7))


def test_verify_degenerate_order_zero():
    assert verify_identities(0).overall


@pytest.mark.parametrize("K", [3, 10, 50])
def test_misprint_variant_fails(K):
    report = verify_identities(K, only=["6c-misprint"])
    entry = report["6c-misprint"]
    assert not report.overall
    assert entry.mismatch == 2


def test_6d_direct():
    K = 20
    jt = j_closed(K)
    E = mul(etaq(1, K), invert(etaq(7, K)))
    E4 = pow_series(E, 4)
    lhs = mul(pow_series(jt.j1, 3), jt.j2) + shift(mul(pow_series(jt.j2, 3), jt.j3), 1) \
        + shift(mul(jt.j1, pow_series(jt.j3, 3)), 2)
    assert lhs == -E4 - TruncatedIntSeries.monomial(1, K, 8)
