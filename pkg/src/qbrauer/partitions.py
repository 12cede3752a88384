"""Young diagram combinatorics.

Partitions are immutable tuples of row lengths.  Boxes are addressed with
1-based (row, column) pairs throughout, matching the usual diagram drawing.
"""

from __future__ import annotations

import json
from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator


class Partition(tuple):
    """A Young diagram stored as its weakly decreasing row lengths."""

    def __new__(cls, rows: Iterable[int] = ()):
        rows = tuple(int(r) for r in rows)
        while rows and rows[-1] == 0:
            rows = rows[:-1]
        if any(r <= 0 for r in rows):
            raise ValueError(f"rows must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"rows must be weakly decreasing: {rows}")
        return super().__new__(cls, rows)

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return " ".join(map(str, self)) if self else "∅"

    @property
    def rows(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    def row(self, i: int) -> int:
        """Length of row ``i`` (1-based); zero beyond the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def col(self, j: int) -> int:
        """Length of column ``j`` (1-based); zero beyond the last column."""
        return sum(1 for r in self if r >= j)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(self.col(j) for j in range(1, self[0] + 1))

    def boxes(self) -> Iterator[tuple[int, int]]:
        for i, r in enumerate(self, start=1):
            for j in range(1, r + 1):
                yield i, j

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def to_json(self) -> str:
        return json.dumps(list(self))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4 3 1"``, ``"4,3,1"``, ``"[4, 3, 1]"``, or ``""``/``"∅"`` for the empty diagram."""
        text = text.strip()
        if text.startswith("["):
            return cls(json.loads(text))
        text = text.replace(",", " ")
        if text in ("", "∅", "0"):
            return cls()
        return cls(int(t) for t in text.split())


EMPTY = Partition()


def sort_key(p: Partition) -> tuple:
    """Canonical order: size ascending, then lexicographically descending."""
    return (p.size, tuple(-r for r in p))


def canonical(parts: Iterable[Partition]) -> list[Partition]:
    return sorted(set(parts), key=sort_key)


def _check_box(lam: Partition, i: int, j: int) -> None:
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"box ({i},{j}) is not in {list(lam)}")


def hook_length(lam: Partition, i: int, j: int) -> int:
    _check_box(lam, i, j)
    return lam.row(i) - j + lam.col(j) - i + 1


def brauer_content(lam: Partition, i: int, j: int) -> int:
    """The content-like quantity entering the Brauer weight product.

    For ``i <= j`` it is ``lam_i + lam_j - i - j`` (row lengths), otherwise
    ``-lam'_i - lam'_j + i + j - 2`` (column lengths).  Row or column
    indices past the end of the diagram count as length zero.
    """
    _check_box(lam, i, j)
    if i <= j:
        return lam.row(i) + lam.row(j) - i - j
    return -lam.col(i) - lam.col(j) + i + j - 2


def add_box(lam: Partition) -> set[Partition]:
    rows = list(lam) + [0]
    out = set()
    for i in range(len(rows)):
        if i == 0 or rows[i - 1] > rows[i]:
            new = rows.copy()
            new[i] += 1
            out.add(Partition(new))
    return out


def remove_box(lam: Partition) -> set[Partition]:
    rows = list(lam)
    out = set()
    for i in range(len(rows)):
        if i == len(rows) - 1 or rows[i] > rows[i + 1]:
            new = rows.copy()
            new[i] -= 1
            out.add(Partition(new))
    return out


def partitions_of(n: int, max_rows: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` with optional bounds on row count and row length."""
    if max_part is None:
        max_part = n
    if max_rows is None:
        max_rows = n

    def rec(remaining, cap, rows_left):
        if remaining == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first, rows_left - 1):
                yield (first,) + rest

    for rows in rec(n, max_part, max_rows):
        yield Partition(rows)


def add_columns(lam: Partition, height: int, count: int = 1) -> Partition:
    """Prepend ``count`` full columns of ``height`` boxes (requires at most ``height`` rows)."""
    if len(lam) > height:
        raise ValueError(f"{list(lam)} has more than {height} rows")
    rows = list(lam) + [0] * (height - len(lam))
    return Partition(r + count for r in rows)


def add_rows(lam: Partition, width: int, count: int = 1) -> Partition:
    """Prepend ``count`` full rows of ``width`` boxes (requires at most ``width`` columns)."""
    return add_columns(lam.conjugate(), width, count).conjugate()


def strip_full_columns(lam: Partition, height: int) -> tuple[Partition, int]:
    """Remove all columns of length ``height``; return the remainder and how many were removed."""
    if len(lam) < height:
        return lam, 0
    c = lam[height - 1]
    return Partition(r - c for r in lam), c


# --- Littlewood-Richardson coefficients by tableau enumeration ---------------


def _lr_count(outer: tuple[int, ...], inner: tuple[int, ...], content: tuple[int, ...]) -> int:
    nrows = len(outer)
    inner = inner + (0,) * (nrows - len(inner))
    filling = [[0] * (outer[i] - inner[i]) for i in range(nrows)]
    cells = [(i, c) for i in range(nrows) for c in range(outer[i] - inner[i] - 1, -1, -1)]
    # cells in reading order: rows top to bottom, each row right to left
    counts = Counter()
    total = 0

    def value_above(i, c):
        # entry directly above cell (i, c) in absolute column inner[i] + c
        col = inner[i] + c
        if i == 0 or col < inner[i - 1]:
            return 0
        return filling[i - 1][col - inner[i - 1]]

    def rec(idx):
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        i, c = cells[idx]
        row = filling[i]
        # row weakly increases left to right; we fill right to left
        upper = row[c + 1] if c + 1 < len(row) else len(content)
        lower = value_above(i, c) + 1
        for v in range(lower, upper + 1):
            if v > len(content) or counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            row[c] = v
            counts[v] += 1
            rec(idx + 1)
            counts[v] -= 1
        row[c] = 0

    rec(0)
    return total


@lru_cache(maxsize=None)
def _lr_cached(lam: Partition, mu: Partition, beta: Partition) -> int:
    return _lr_count(tuple(lam), tuple(mu), tuple(beta))


def lr_coefficient(lam: Partition, mu: Partition, beta: Partition) -> int:
    """Littlewood-Richardson coefficient c^lam_{mu, beta}."""
    lam, mu, beta = Partition(lam), Partition(mu), Partition(beta)
    if mu.size + beta.size != lam.size or not lam.contains(mu) or not lam.contains(beta):
        return 0
    return _lr_cached(lam, mu, beta)
