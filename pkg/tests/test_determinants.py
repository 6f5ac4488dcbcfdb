import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qpart.determinants import (
    DetProblem,
    DimensionCapError,
    bareiss_det,
    build_eq1,
    build_mod7,
    det_eval_literal,
    det_eval_recurrence,
    leading_minors,
)
from qpart.oracle import p_euler

P = p_euler(400)


def cofactor_det(m):
    """Laplace expansion; exponential, used only on tiny matrices."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def test_recurrence_examples():
    assert det_eval_recurrence(DetProblem((), (7,))) == 7
    assert det_eval_recurrence(DetProblem((-8,), (7, 21))) == 77 == P[12]
    full_n4 = DetProblem((-1, -1, 0, 0), (1, 0, 0, 0, 0))
    assert det_eval_recurrence(full_n4) == 5 == P[4]


def test_literal_examples():
    assert det_eval_literal(DetProblem((), (-13,))) == -13
    assert det_eval_literal(DetProblem((0,) * 5, (0,) * 5 + (1,))) == 1


def test_matrix_shape():
    m = DetProblem((-8, 20, 0), (7, 21, 14, 56)).matrix()
    assert m == [
        [1, 0, 0, 7],
        [-8, 1, 0, 21],
        [20, -8, 1, 14],
        [0, 20, -8, 56],
    ]


def test_bareiss_against_cofactor_expansion():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 6)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert bareiss_det(m) == cofactor_det(m)


def test_recurrence_vs_literal_random():
    rng = random.Random(2024)
    for _ in range(200):
        dim = rng.randint(1, 12)
        p = DetProblem(tuple(rng.randint(-99, 99) for _ in range(dim - 1)),
                       tuple(rng.randint(-99, 99) for _ in range(dim)))
        assert det_eval_literal(p) == det_eval_recurrence(p)


@given(st.integers(1, 30).flatmap(lambda d: st.tuples(
    st.lists(st.integers(-99, 99), min_size=d - 1, max_size=d - 1),
    st.lists(st.integers(-99, 99), min_size=d, max_size=d))))
def test_recurrence_vs_literal_property(cols):
    p = DetProblem(tuple(cols[0]), tuple(cols[1]))
    assert det_eval_literal(p) == det_eval_recurrence(p)


def test_unused_band_entries_are_ignored():
    base = DetProblem((3, -2), (1, 4, 9))
    padded = DetProblem((3, -2, 1000, -7), (1, 4, 9))
    assert det_eval_recurrence(base) == det_eval_recurrence(padded)
    assert det_eval_literal(base) == det_eval_literal(padded)


def test_leading_minors_are_sub_determinants():
    p = build_mod7(3, 12)
    u = leading_minors(p)
    for k in range(13):
        sub = DetProblem(p.dcol[:k], p.zcol[:k + 1])
        assert det_eval_recurrence(sub) == u[k]


def test_problem_validation():
    with pytest.raises(ValueError):
        DetProblem((1,), (1, 2, 3))
    with pytest.raises(ValueError):
        DetProblem((), ())


def test_literal_cap():
    with pytest.raises(DimensionCapError):
        det_eval_literal(build_eq1(20), cap=10)


def test_json_round_trip():
    p = build_mod7(5, 6)
    obj = json.loads(json.dumps(p.to_json()))
    assert all(isinstance(v, str) for v in obj["dcol"] + obj["zcol"])
    assert DetProblem.from_json(obj) == p


# -- full determinant -----------------------------------------------------------------

def test_full_determinant_examples():
    assert det_eval_recurrence(build_eq1(0)) == 1
    assert det_eval_recurrence(build_eq1(5)) == 7
    assert det_eval_recurrence(build_eq1(100)) == P[100]


def test_full_determinant_all_n():
    for n in range(301):
        assert det_eval_recurrence(build_eq1(n)) == P[n], n


def test_full_determinant_literal_small_n():
    for n in range(0, 61, 3):
        assert det_eval_literal(build_eq1(n)) == P[n]


# -- modulus 7 ------------------------------------------------------------------------

def test_mod7_printed_matrix():
    p = build_mod7(5, 7)
    assert p.dcol == (-8, 20, 0, -70, 64, 56, 0)
    assert p.zcol == (7, 21, 14, 56, -35, -28, -70, 35)


def test_mod7_examples():
    assert det_eval_recurrence(build_mod7(4, 0)) == 5
    assert det_eval_recurrence(build_mod7(2, 10)) == P[72]


@pytest.mark.parametrize("res", range(7))
def test_mod7_all_k(res):
    u = leading_minors(build_mod7(res, 50))
    assert u == [P[7 * k + res] for k in range(51)]
    for k in (0, 1, 9, 25):
        p = build_mod7(res, k)
        assert det_eval_literal(p) == det_eval_recurrence(p) == P[7 * k + res]
