"""Slow, obviously-correct reference computations used only by the tests."""

import itertools


def naive_mul(a, b, order):
    """Plain nested-loop product, kept independent of qpart.series.mul."""
    out = [0] * (order + 1)
    for i in range(min(len(a), order + 1)):
        for j in range(min(len(b), order + 1 - i)):
            out[i + j] += a[i] * b[j]
    return out


def euler_product_by_factors(m, order):
    """prod (1 - q^(m k)) by multiplying factors one at a time."""
    c = [1] + [0] * order
    for k in itertools.count(1):
        step = m * k
        if step > order:
            return c
        for i in range(order, step - 1, -1):
            c[i] -= c[i - step]


def count_partitions_into(parts, limit):
    """Number of partitions of 0..limit using only the given part sizes."""
    ways = [1] + [0] * limit
    for part in parts:
        for n in range(part, limit + 1):
            ways[n] += ways[n - part]
    return ways
