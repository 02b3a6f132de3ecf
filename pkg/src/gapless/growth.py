"""Column-insertion growth of gapless shapes.

A shape of size n-1 is a sequence of column words f^(1), ..., f^(n-1) with
|f^(j)| = j; consecutive columns g, h must satisfy the prefix-sum condition
sum(g[:i]) >= sum(h[:i]) for all i <= |g|.  Equivalently phi(g, h) is a
prefix of a Dyck word.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Sequence

import numpy as np

from .bijections import Shape

ColumnWord = tuple[int, ...]

_THETA = {(0, 0): "ab", (1, 1): "ba", (1, 0): "aa", (0, 1): "bb"}


def theta(s: int, t: int) -> str:
    return _THETA[(s, t)]


def phi(g: Sequence[int], h: Sequence[int]) -> str:
    """a theta(g_1,h_1) ... theta(g_k,h_k) for |h| = |g| + 1 = k + 1."""
    if len(h) != len(g) + 1:
        raise ValueError(f"phi needs |h| = |g| + 1, got |g|={len(g)}, |h|={len(h)}")
    return "a" + "".join(_THETA[(gi, hi)] for gi, hi in zip(g, h))


def is_dyck_prefix(w: str) -> bool:
    height = 0
    for ch in w:
        if ch == "a":
            height += 1
        elif ch == "b":
            height -= 1
            if height < 0:
                return False
        else:
            raise ValueError(f"letter {ch!r} not in {{a, b}}")
    return True


def columns_compatible(g: Sequence[int], h: Sequence[int]) -> bool:
    if len(h) != len(g) + 1:
        raise ValueError(f"need |h| = |g| + 1, got |g|={len(g)}, |h|={len(h)}")
    diff = 0
    for gi, hi in zip(g, h):
        diff += gi - hi
        if diff < 0:
            return False
    return True


def successors(g: Sequence[int]) -> list[ColumnWord]:
    """All h with columns_compatible(g, h), in lexicographic order."""
    k = len(g)
    out: list[ColumnWord] = []
    h = [0] * (k + 1)

    def rec(t: int, diff: int) -> None:
        if t == k:
            for last in (0, 1):
                h[k] = last
                out.append(tuple(h))
            return
        for bit in (0, 1):
            d = diff + g[t] - bit
            if d >= 0:
                h[t] = bit
                rec(t + 1, d)

    rec(0, 0)
    return out


def all_words(length: int) -> Iterator[ColumnWord]:
    for mask in range(1 << length):
        yield tuple((mask >> (length - 1 - t)) & 1 for t in range(length))


def successor_pair_total(n: int) -> int:
    """Number of compatible pairs (g, h) with |h| = |g| + 1 = n."""
    return sum(len(successors(g)) for g in all_words(n - 1))


def enumerate_gapless_shapes(n: int) -> Iterator[Shape]:
    """Every gapless shape of a size-n triangle, lexicographic in (f^(1), ..., f^(n-1))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        yield Shape((), 1)
        return
    cols: list[ColumnWord] = []

    def rec(prev: ColumnWord | None) -> Iterator[Shape]:
        if len(cols) == n - 1:
            yield Shape.from_columns(cols)
            return
        options = [(0,), (1,)] if prev is None else successors(prev)
        for h in options:
            cols.append(h)
            yield from rec(h)
            cols.pop()

    yield from rec(None)


# ---------------------------------------------------------------------------
# Counting engine
#
# Layer k holds, for each column word of length k packed MSB-first into an
# integer, the number of valid column sequences ending in it.  One transfer
# step reads g and h bit by bit, tracking the running prefix-sum difference;
# the intermediate state is (h prefix, g suffix, difference).


def _transfer(counts: np.ndarray, k: int) -> np.ndarray:
    width = k + 1
    state = np.zeros((1, 1 << k, width), dtype=object)
    state[0, :, 0] = counts
    for _ in range(k):
        hp, rest = state.shape[0], state.shape[1]
        src = state.reshape(hp, 2, rest // 2, width)
        nxt = np.zeros((hp, 2, rest // 2, width), dtype=object)
        # g bit 0: h bit 0 keeps diff, h bit 1 lowers it (diff 0 is dropped)
        nxt[:, 0] += src[:, 0]
        nxt[:, 1, :, :-1] += src[:, 0, :, 1:]
        # g bit 1: h bit 0 raises diff, h bit 1 keeps it
        nxt[:, 0, :, 1:] += src[:, 1, :, :-1]
        nxt[:, 1] += src[:, 1]
        state = nxt.reshape(hp * 2, rest // 2, width)
    totals = state[:, 0, :].sum(axis=1)
    return np.repeat(totals, 2)


def _transfer_chunk(args: tuple[np.ndarray, int, int, int]) -> np.ndarray:
    counts, k, lo, hi = args
    masked = np.zeros_like(counts)
    masked[lo:hi] = counts[lo:hi]
    return _transfer(masked, k)


def layer_counts(n: int, workers: int = 1) -> np.ndarray:
    """Counts per final column word f^(n-1) (object array of Python ints)."""
    if n < 2:
        raise ValueError("layer counts need n >= 2")
    counts = np.array([1, 1], dtype=object)
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for k in range(1, n - 1):
            if pool is None or k < 10:
                counts = _transfer(counts, k)
            else:
                size = 1 << k
                bounds = [size * w // workers for w in range(workers + 1)]
                jobs = [(counts, k, bounds[w], bounds[w + 1]) for w in range(workers)]
                parts = list(pool.map(_transfer_chunk, jobs))
                counts = sum(parts[1:], parts[0])
    finally:
        if pool is not None:
            pool.shutdown()
    return counts


def count_gapless_shapes(n: int, workers: int = 1) -> int:
    """Exact number of gapless monotone triangles of size n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    return int(sum(layer_counts(n, workers)))


def count_gapless_shapes_naive(n: int) -> int:
    """Same layered count, transitions by explicit successor lists (slow oracle)."""
    if n == 1:
        return 1
    counts = {(0,): 1, (1,): 1}
    for _ in range(n - 2):
        nxt: dict[ColumnWord, int] = {}
        for g, c in counts.items():
            for h in successors(g):
                nxt[h] = nxt.get(h, 0) + c
        counts = nxt
    return sum(counts.values())


def central_binomial(n: int) -> int:
    return math.comb(2 * n, n)
