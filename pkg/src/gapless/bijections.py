"""Conversions between ASMs, Gog words, monotone triangles, Magog triangles
and shapes of gapless monotone triangles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .objects import (
    Asm,
    DomainError,
    GogWord,
    InvalidObjectError,
    MagogTriangle,
    MonotoneTriangle,
    ValidationReport,
    _letters_to_matrix,
    check_triangular,
    even_entries,
    odd_entries,
    validate_asm,
    validate_gog_tuple,
    validate_magog,
    validate_monotone,
)


def gog_word_to_asm(w: GogWord) -> Asm:
    """Letter j lists the nonzero columns of row j: +1 at odd positions, -1 at even."""
    n = w.n
    for idx, x in enumerate(w.letters, start=1):
        msg = validate_gog_tuple(x)
        if msg or x[-1] > n:
            raise InvalidObjectError(_single("tuple", f"letter {idx}: {msg or 'entry exceeds n'}"), "Gog word")
    m = _letters_to_matrix(w.letters, n)
    rep = validate_asm(m)
    if not rep:
        raise InvalidObjectError(rep, "Gog word (induced matrix)")
    return Asm(m, check=False)


def asm_to_gog_word(a: Asm) -> GogWord:
    letters = [tuple(c + 1 for c, v in enumerate(row) if v) for row in a.matrix]
    return GogWord(letters, check=False)


def gog_word_to_monotone(w: GogWord) -> MonotoneTriangle:
    """Row i = previous row minus even-positioned entries of x_i, plus odd-positioned ones."""
    first = w.letters[0]
    if len(first) != 1:
        raise InvalidObjectError(_single("tuple", "first letter must be a singleton"), "Gog word")
    rows = [first]
    for idx, x in enumerate(w.letters[1:], start=2):
        prev = set(rows[-1])
        for q in even_entries(x):
            if q not in prev:
                raise InvalidObjectError(
                    _single("tuple", f"letter {idx}: even-positioned {q} not present in row {idx - 1}", idx),
                    "Gog word")
            prev.discard(q)
        for p in odd_entries(x):
            if p in prev:
                raise InvalidObjectError(
                    _single("tuple", f"letter {idx}: odd-positioned {p} already present in row {idx - 1}", idx),
                    "Gog word")
            prev.add(p)
        rows.append(tuple(sorted(prev)))
    return MonotoneTriangle(rows)


def monotone_to_gog_word(t: MonotoneTriangle) -> GogWord:
    """Interleave rows i and i-1 and drop every value that occurs twice."""
    rows = t.rows
    letters = [rows[0]]
    for i in range(1, len(rows)):
        seq = interleaved_row(t, i + 1)
        letters.append(tuple(v for v in seq if seq.count(v) == 1))
    return GogWord(letters, check=False)


def interleaved_row(t: MonotoneTriangle, i: int) -> tuple[int, ...]:
    """(a[i,1], a[i-1,1], a[i,2], ..., a[i-1,i-1], a[i,i]) for 1-based row i >= 2."""
    cur, prev = t.rows[i - 1], t.rows[i - 2]
    seq: list[int] = []
    for j in range(i - 1):
        seq += (cur[j], prev[j])
    seq.append(cur[-1])
    return tuple(seq)


def monotone_to_asm(t: MonotoneTriangle) -> Asm:
    return gog_word_to_asm(monotone_to_gog_word(t))


def asm_to_monotone(a: Asm) -> MonotoneTriangle:
    return gog_word_to_monotone(asm_to_gog_word(a))


# ---------------------------------------------------------------------------
# Delta: gapless monotone triangles -> gapless Magog triangles


def delta(t: MonotoneTriangle) -> MagogTriangle:
    """b[i,j] = a[i,j] + i - j; defined exactly on gapless triangles."""
    gaps = t.gaps()
    if gaps:
        g = gaps[0]
        raise DomainError(f"delta requires a gapless triangle; gap at ({g.i},{g.j})")
    rows = [tuple(v + i - j for j, v in enumerate(row)) for i, row in enumerate(t.rows)]
    return MagogTriangle(rows)


def delta_inverse(b: MagogTriangle) -> MonotoneTriangle:
    gaps = b.gaps()
    if gaps:
        g = gaps[0]
        raise DomainError(f"inverse delta requires a gapless Magog triangle; gap at ({g.i},{g.j})")
    rows = [tuple(v - i + j for j, v in enumerate(row)) for i, row in enumerate(b.rows)]
    rep = validate_monotone(rows)
    if not rep:
        raise InvalidObjectError(rep, "image of inverse delta")
    return MonotoneTriangle(rows, check=False)


# ---------------------------------------------------------------------------
# Shapes


@dataclass(frozen=True)
class Shape:
    """0/1 triangle of column differences of a gapless monotone triangle of size n.

    ``rows`` has n-1 rows; s[i,j] = a[i,j] - a[i+1,j].
    """

    rows: tuple[tuple[int, ...], ...]
    n: int

    def __init__(self, rows: Iterable[Iterable[int]], n: int | None = None):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if n is None:
            n = len(rows) + 1
        if len(rows) != n - 1:
            raise ValueError(f"shape of size n={n} needs {n - 1} rows, got {len(rows)}")
        if rows:
            check_triangular(rows)
        for i, r in enumerate(rows, start=1):
            for j, v in enumerate(r, start=1):
                if v not in (0, 1):
                    raise ValueError(f"shape entry s[{i},{j}]={v} not in {{0,1}}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "n", n)

    def column(self, j: int) -> tuple[int, ...]:
        """Column word f^(j) = s[n-1,n-j] ... s[n-j,n-j] (length j)."""
        n = self.n
        return tuple(self.rows[n - k - 1][n - j - 1] for k in range(1, j + 1))

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(1, self.n)]

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "Shape":
        """Inverse of ``columns``: columns[j-1] is f^(j)."""
        n = len(columns) + 1
        rows = [[0] * i for i in range(1, n)]
        for j, f in enumerate(columns, start=1):
            if len(f) != j:
                raise ValueError(f"column word f^({j}) must have length {j}, got {len(f)}")
            for k, bit in enumerate(f, start=1):
                rows[n - k - 1][n - j - 1] = bit
        return cls(rows, n)

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows], "n": self.n}

    def __str__(self) -> str:
        return " / ".join(" ".join(map(str, r)) for r in self.rows) or "(empty)"


def shape_of(t: MonotoneTriangle) -> Shape:
    gaps = t.gaps()
    if gaps:
        g = gaps[0]
        raise DomainError(f"shape requires a gapless triangle; gap at ({g.i},{g.j})")
    rows = t.rows
    s = [tuple(rows[i][j] - rows[i + 1][j] for j in range(i + 1)) for i in range(t.n - 1)]
    return Shape(s, t.n)


def shape_to_triangle(s: Shape) -> MonotoneTriangle:
    """a[i,j] = j + s[i,j] + s[i+1,j] + ... + s[n-1,j]."""
    from .growth import columns_compatible

    cols = s.columns()
    for k in range(len(cols) - 1):
        if not columns_compatible(cols[k], cols[k + 1]):
            raise DomainError(
                f"columns f^({k + 1}) and f^({k + 2}) are incompatible at index "
                f"{_first_violation(cols[k], cols[k + 1])}")
    n = s.n
    rows = []
    for i in range(1, n + 1):
        rows.append(tuple(j + sum(s.rows[r - 1][j - 1] for r in range(i, n)) for j in range(1, i + 1)))
    return MonotoneTriangle(rows)


def _first_violation(g: Sequence[int], h: Sequence[int]) -> int:
    gs = hs = 0
    for i, (a, b) in enumerate(zip(g, h), start=1):
        gs += a
        hs += b
        if gs < hs:
            return i
    return 0


def _single(rule: str, message: str, i: int | None = None) -> ValidationReport:
    rep = ValidationReport()
    rep.add(rule, message, i)
    return rep
