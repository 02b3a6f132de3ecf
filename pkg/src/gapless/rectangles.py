"""Gapless rectangular shapes and the chain

    rectangle -> cumulant array -> p-branching -> semistandard tableau

together with the rectangle count rho(m, p) and the lower-bound sequence alpha.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Matrix = tuple[tuple[int, ...], ...]

MAX_ENUM_CELLS = 24


def _freeze(rows: Iterable[Iterable[int]]) -> Matrix:
    return tuple(tuple(int(v) for v in r) for r in rows)


@dataclass(frozen=True)
class RectShape:
    """p x m array of 0/1 entries; row 1 is the top row."""

    rows: Matrix

    def __init__(self, rows: Iterable[Iterable[int]], *, check: bool = True):
        rows = _freeze(rows)
        if check and not validate_rect(rows):
            raise ValueError("not a gapless rectangle")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def _trusted(cls, rows: Matrix) -> "RectShape":
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        return obj

    @property
    def p(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0]) if self.rows else 0


def _check_binary(rows: Sequence[Sequence[int]]) -> None:
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise ValueError("rectangle rows have different lengths")
    for i, r in enumerate(rows, start=1):
        for j, v in enumerate(r, start=1):
            if v not in (0, 1):
                raise ValueError(f"entry r[{i},{j}]={v} is not 0/1")


def cumulant(r: RectShape | Sequence[Sequence[int]]) -> Matrix:
    """s[i,j] = r[i,j] + r[i+1,j] + ... + r[p,j]."""
    rows = r.rows if isinstance(r, RectShape) else _freeze(r)
    _check_binary(rows)
    p = len(rows)
    m = len(rows[0]) if rows else 0
    s = [[0] * m for _ in range(p)]
    for j in range(m):
        acc = 0
        for i in range(p - 1, -1, -1):
            acc += rows[i][j]
            s[i][j] = acc
    return _freeze(s)


def validate_rect(r: RectShape | Sequence[Sequence[int]]) -> bool:
    """Suffix column sums must be weakly increasing from column to column."""
    s = cumulant(r)
    return all(row[j] <= row[j + 1] for row in s for j in range(len(row) - 1))


def enumerate_rects(p: int, m: int) -> Iterator[RectShape]:
    """All gapless p x m rectangles, built column by column over all 2^p
    candidate columns; guarded to p*m <= 24 cells."""
    if p * m > MAX_ENUM_CELLS:
        raise ValueError(f"{p}x{m} has {p * m} cells, enumeration guard is {MAX_ENUM_CELLS}")
    if m == 0 or p == 0:
        yield RectShape([[] for _ in range(p)], check=False)
        return
    columns = list(itertools.product((0, 1), repeat=p))
    if m == 1:
        singles = ((0,), (1,))
        for c in columns:
            yield RectShape._trusted(tuple(singles[v] for v in c))
        return
    suffix = {c: tuple(itertools.accumulate(reversed(c)))[::-1] for c in columns}
    nexts: dict[tuple[int, ...], list[tuple[int, ...]]] = {}

    def following(c: tuple[int, ...]) -> list[tuple[int, ...]]:
        if c not in nexts:
            sc = suffix[c]
            nexts[c] = [d for d in columns if all(a <= b for a, b in zip(sc, suffix[d]))]
        return nexts[c]

    chosen: list[tuple[int, ...]] = []

    def rec(options: list[tuple[int, ...]]) -> Iterator[RectShape]:
        last = len(chosen) == m - 1
        for c in options:
            chosen.append(c)
            if last:
                yield RectShape._trusted(tuple(zip(*chosen)))
            else:
                yield from rec(following(c))
            chosen.pop()

    yield from rec(columns)


# ---------------------------------------------------------------------------
# p-branchings

Branching = tuple[tuple[int, ...], ...]


def validate_branching(b: Sequence[Sequence[int]]) -> bool:
    """Row i has p+1-i positive entries; b[i+1,j] <= b[i,j] <= b[i,j+1]."""
    p = len(b)
    for i, row in enumerate(b):
        if len(row) != p - i:
            return False
        if any(v < 1 for v in row):
            return False
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
        if i + 1 < p and any(b[i + 1][j] > row[j] for j in range(len(b[i + 1]))):
            return False
    return True


def cumulant_to_branching(s: Sequence[Sequence[int]], m: int | None = None) -> Branching:
    """t[i,j] = least k with s[p+2-i-j, k] >= j, or m+1 if there is none."""
    p = len(s)
    if m is None:
        m = len(s[0]) if p else 0
    out = []
    for i in range(1, p + 1):
        row = []
        for j in range(1, p + 2 - i):
            srow = s[p + 2 - i - j - 1]
            k = next((k for k in range(1, m + 1) if srow[k - 1] >= j), m + 1)
            row.append(k)
        out.append(tuple(row))
    return tuple(out)


def rect_to_branching(r: RectShape) -> Branching:
    return cumulant_to_branching(cumulant(r), r.m)


def rect_from_branching(b: Sequence[Sequence[int]], p: int, m: int) -> RectShape:
    """Invert the threshold rule: s[r,k] >= j  iff  t[p+2-r-j, j] <= k."""
    b = _freeze(b)
    if len(b) != p or not validate_branching(b):
        raise ValueError("not a p-branching")
    if any(v > m + 1 for row in b for v in row):
        raise ValueError(f"branching entries must be <= m+1={m + 1}")
    s = [[0] * m for _ in range(p)]
    for r in range(1, p + 1):
        for k in range(1, m + 1):
            s[r - 1][k - 1] = sum(1 for j in range(1, p + 2 - r) if b[p + 1 - r - j][j - 1] <= k)
    rows = [[s[i][j] - (s[i + 1][j] if i + 1 < p else 0) for j in range(m)] for i in range(p)]
    if any(v not in (0, 1) for row in rows for v in row) or not validate_rect(rows):
        raise ValueError("branching is outside the image of gapless rectangles")
    rect = RectShape(rows, check=False)
    if rect_to_branching(rect) != b:
        raise ValueError("branching is outside the image of gapless rectangles")
    return rect


# ---------------------------------------------------------------------------
# Semistandard Young tableaux

Tableau = tuple[tuple[int, ...], ...]


def validate_ssyt(t: Sequence[Sequence[int]], max_entry: int | None = None) -> bool:
    for i, row in enumerate(t):
        if i and len(row) > len(t[i - 1]):
            return False
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
        if i and any(row[j] <= t[i - 1][j] for j in range(len(row))):
            return False
        if any(v < 1 or (max_entry is not None and v > max_entry) for v in row):
            return False
    return True


def branching_to_ssyt(b: Sequence[Sequence[int]]) -> Tableau:
    """Row i has (max of branching row i) - 1 cells; cell j holds
    p + 1 - #{entries of branching row i that are >= j+1}.

    Trailing empty rows are dropped.
    """
    p = len(b)
    rows = []
    for brow in b:
        k = max(brow)
        rows.append(tuple(p + 1 - sum(1 for v in brow if v >= j + 1) for j in range(1, k)))
    while rows and not rows[-1]:
        rows.pop()
    return tuple(rows)


def ssyt_to_branching(t: Sequence[Sequence[int]], p: int, m: int) -> Branching:
    """Inverse of branching_to_ssyt for tableaux with entries <= p and fewer than m columns."""
    t = _freeze(t)
    if len(t) > p or not validate_ssyt(t, p):
        raise ValueError(f"not a semistandard tableau with entries in 1..{p}")
    if t and len(t[0]) >= m:
        raise ValueError(f"tableau has {len(t[0])} columns, must be fewer than m={m}")
    out = []
    for i in range(1, p + 1):
        row = t[i - 1] if i <= len(t) else ()
        entries: list[int] = []
        if row:
            for k in range(2, len(row) + 1):
                entries += [k] * (row[k - 1] - row[k - 2])
            entries += [len(row) + 1] * (p + 1 - row[-1])
        ones = p + 1 - i - len(entries)
        if ones < 0:
            raise ValueError(f"tableau row {i} does not fit a branching row of length {p + 1 - i}")
        out.append(tuple(sorted([1] * ones + entries)))
    b = tuple(out)
    if not validate_branching(b):
        raise ValueError("resulting array is not a p-branching")
    return b


# ---------------------------------------------------------------------------
# Counting


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"inexact division {num}/{den}")
    return q


def rho(m: int, p: int) -> int:
    """Number of gapless rectangles with p rows and m columns:
    prod_{i=1..p} C(m+2i-1, i) / C(2i-1, i)."""
    if m < 0 or p < 0:
        raise ValueError("m and p must be non-negative")
    if m == 0 or p == 0:
        return 1
    num = den = 1
    for i in range(1, p + 1):
        num *= math.comb(m + 2 * i - 1, i)
        den *= math.comb(2 * i - 1, i)
    return _exact_div(num, den)


def rho_double_product(m: int, p: int) -> Fraction:
    """prod_{i=1..p} prod_{j=i..p} (m+i+j-1)/(i+j-1), exact rational."""
    out = Fraction(1)
    for i in range(1, p + 1):
        for j in range(i, p + 1):
            out *= Fraction(m + i + j - 1, i + j - 1)
    return out


def rho_ceiling_form(m: int, p: int) -> Fraction:
    """The alternative product with ceil(i/2) exponents, exact rational."""
    out = Fraction(1)
    for i in range(1, p):
        out *= Fraction(m + i, i) ** ((i + 1) // 2)
    for i in range(1, p + 1):
        out *= Fraction(m + 2 * p - i, 2 * p - i) ** ((i + 1) // 2)
    return out


_ALPHA_BASE = {1: 1, 2: 2, 3: 6, 4: 26}


@lru_cache(maxsize=None)
def alpha(n: int) -> int:
    """Lower bound for the number of gapless shapes of size n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n in _ALPHA_BASE:
        return _ALPHA_BASE[n]
    half = (n + 1) // 2
    return rho(half, n // 2) * alpha(half)
