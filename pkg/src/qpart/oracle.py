"""Ground-truth tables of the partition function p(n).

Two unrelated algorithms are provided so that each can check the other:
Euler's pentagonal recurrence and a bounded-parts dynamic program.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

DEFAULT_ORACLE_CAP = 2000


class OracleCapError(ValueError):
    pass


def oracle_cap() -> int:
    """Brute-force limit; ``QPART_ORACLE_CAP`` overrides the default."""
    raw = os.environ.get("QPART_ORACLE_CAP")
    return int(raw) if raw else DEFAULT_ORACLE_CAP


@dataclass(frozen=True)
class PartitionTable:
    values: tuple[int, ...]

    @property
    def limit(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


@lru_cache(maxsize=8)
def p_euler(limit: int) -> PartitionTable:
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    p = [0] * (limit + 1)
    p[0] = 1
    for n in range(1, limit + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            term = p[n - g1]
            g2 = g1 + j
            if g2 <= n:
                term += p[n - g2]
            total += term if j % 2 else -term
            j += 1
        p[n] = total
    return PartitionTable(tuple(p))


def p_bruteforce(limit: int, cap: int | None = None) -> PartitionTable:
    """Count partitions by adding allowed part sizes one at a time."""
    if cap is None:
        cap = oracle_cap()
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    if limit > cap:
        raise OracleCapError(f"limit {limit} exceeds brute-force cap {cap}")
    ways = [1] + [0] * limit
    for part in range(1, limit + 1):
        for n in range(part, limit + 1):
            ways[n] += ways[n - part]
    return PartitionTable(tuple(ways))


def partition_number(n: int) -> int:
    """p(n) via the pentagonal recurrence."""
    return p_euler(n)[n]
