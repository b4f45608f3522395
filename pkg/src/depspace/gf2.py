"""Linear algebra over the two-element field on int bitsets."""

from __future__ import annotations

from typing import Sequence


def rank(vectors: Sequence[int]) -> int:
    """Rank of a list of bit vectors, by elimination with a pivot table."""
    pivots: dict[int, int] = {}
    r = 0
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = v
                r += 1
                break
            v ^= p
    return r


def columns(rows: Sequence[Sequence[int]]) -> list[int]:
    """Pack a 0/1 row-major matrix into one int per column (bit i = row i)."""
    if not rows:
        return []
    width = len(rows[0])
    cols = [0] * width
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ValueError("ragged matrix")
        for j, entry in enumerate(row):
            if entry not in (0, 1):
                raise ValueError(f"matrix entry {entry!r} is not 0/1")
            if entry:
                cols[j] |= 1 << i
    return cols
