"""Smith normal form of integer matrices (exact, arbitrary precision).

Works on a sparse row/column representation and pivots on the entry of
smallest magnitude, which keeps +-1 incidence matrices from growing.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence


class IntegerMatrix:
    """Exact integer matrix, stored densely as a list of rows."""

    def __init__(self, rows: int, cols: int, entries: Sequence[Sequence[int]] | None = None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            entries = [[0] * cols for _ in range(rows)]
        self.entries = [[int(x) for x in row] for row in entries]
        if len(self.entries) != rows or any(len(r) != cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, entries: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        entries = [list(r) for r in entries]
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = [[0] * other.cols for _ in range(self.rows)]
        for i, row in enumerate(self.entries):
            for k, a in enumerate(row):
                if a:
                    ork = other.entries[k]
                    oi = out[i]
                    for j, b in enumerate(ork):
                        if b:
                            oi[j] += a * b
        return IntegerMatrix(self.rows, other.cols, out)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntegerMatrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.rows}x{self.cols}, {self.entries})"


def _normalize_diagonal(diag: list[int]) -> list[int]:
    d = sorted(abs(x) for x in diag if x)
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return d


def smith_normal_form(m: IntegerMatrix | Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """Invariant factors ``d1 | d2 | ... | dr`` (all positive) and the rank."""
    if not isinstance(m, IntegerMatrix):
        m = IntegerMatrix.from_rows(m)
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for i, row in enumerate(m.entries):
        for j, x in enumerate(row):
            if x:
                rows.setdefault(i, {})[j] = x
                cols.setdefault(j, set()).add(i)

    def set_entry(i, j, x):
        if x:
            rows.setdefault(i, {})[j] = x
            cols.setdefault(j, set()).add(i)
        else:
            r = rows.get(i)
            if r is not None and j in r:
                del r[j]
                if not r:
                    del rows[i]
                cols[j].discard(i)
                if not cols[j]:
                    del cols[j]

    diag: list[int] = []
    while rows:
        # smallest magnitude pivot; ties prefer sparse row+column
        best = None
        for i, r in rows.items():
            for j, x in r.items():
                key = (abs(x), len(r) + len(cols[j]))
                if best is None or key < best[0]:
                    best = (key, i, j)
        _, pi, pj = best
        p = rows[pi][pj]
        for i in list(cols[pj]):
            if i == pi:
                continue
            q = rows[i][pj] // p
            for j, x in list(rows[pi].items()):
                set_entry(i, j, rows.get(i, {}).get(j, 0) - q * x)
        for j in list(rows[pi]):
            if j == pj:
                continue
            q = rows[pi][j] // p
            for i in list(cols[pj]):
                set_entry(i, j, rows.get(i, {}).get(j, 0) - q * rows[i][pj])
        if len(rows[pi]) == 1 and len(cols[pj]) == 1:
            diag.append(p)
            set_entry(pi, pj, 0)
    factors = _normalize_diagonal(diag)
    return factors, len(factors)


def rank(m: IntegerMatrix | Sequence[Sequence[int]]) -> int:
    return smith_normal_form(m)[1]
