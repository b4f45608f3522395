"""Partitioned exhaustive scans with canonical first-witness reduction.

A scan is a function ``chunk(ctx, start, stop) -> (count, witness)`` over a
contiguous range of its outermost loop.  ``count`` is the number of candidates
examined up to and including the witness (or the whole chunk when none is
found).  Chunks are reduced in order, so the witness and the count are the
same for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable

Chunk = Callable[[Any, int, int], "tuple[int, Any]"]


def _ranges(total: int, parts: int) -> list:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, start = [], 0
    for k in range(parts):
        stop = start + step + (1 if k < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def run_scan(chunk: Chunk, ctx: Any, total: int, workers: int = 1) -> tuple:
    """Run ``chunk`` over ``range(total)``; return ``(count, first_witness)``."""
    if workers <= 1 or total <= 1:
        return chunk(ctx, 0, total)
    ranges = _ranges(total, workers * 4)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(chunk, ctx, lo, hi) for lo, hi in ranges]
        results = [f.result() for f in futures]
    count = 0
    for part_count, witness in results:
        count += part_count
        if witness is not None:
            return count, witness
    return count, None
