"""Binomial coefficients and the two Stirling triangles.

First-kind numbers are signed: sum_m S1(n, m) y**m = y(y-1)...(y-n+1).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Literal

from .errors import IndexOutOfRange

Kind = Literal["first", "second"]


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError("binomial expects n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class StirlingTable:
    kind: Kind
    rows: tuple[tuple[int, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nm: tuple[int, int]) -> int:
        n, m = nm
        return self.rows[n][m]


def _next_row(kind: Kind, row: tuple[int, ...]) -> tuple[int, ...]:
    n = len(row) - 1
    new = [0] * (n + 2)
    for m in range(1, n + 2):
        prev = row[m - 1]
        here = row[m] if m <= n else 0
        if kind == "first":
            new[m] = prev - n * here
        else:
            new[m] = m * here + prev
    return tuple(new)


_tables: dict[str, list[tuple[int, ...]]] = {"first": [(1,)], "second": [(1,)]}
_lock = threading.Lock()


def stirling_table(kind: Kind, n_max: int) -> StirlingTable:
    if kind not in _tables:
        raise ValueError(f"unknown Stirling kind {kind!r}")
    with _lock:
        rows = _tables[kind]
        while len(rows) <= n_max:
            rows.append(_next_row(kind, rows[-1]))
        return StirlingTable(kind, tuple(rows[: n_max + 1]))


def _lookup(kind: Kind, n: int, m: int) -> int:
    if n < 0 or m < 0 or m > n:
        raise IndexOutOfRange(f"Stirling index ({n}, {m}) outside 0 <= m <= n")
    rows = _tables[kind]
    if n >= len(rows):
        stirling_table(kind, n)
    return rows[n][m]


def stirling1(n: int, m: int) -> int:
    return _lookup("first", n, m)


def stirling2(n: int, m: int) -> int:
    return _lookup("second", n, m)
