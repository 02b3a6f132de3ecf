"""Core combinatorial objects: monotone (Gog) triangles, Magog triangles,
Gog words, alternating sign matrices and permutations.

All reports use 1-based ``(i, j)`` coordinates, row ``i`` counted from the
top of the triangle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence


class ShapeError(ValueError):
    """Input rows do not form a triangle (row i must have length i)."""


class InvalidObjectError(ValueError):
    """An object failed validation; ``report`` holds the details."""

    def __init__(self, report: "ValidationReport", what: str = "object"):
        self.report = report
        super().__init__(f"invalid {what}: {report.summary()}")


class DomainError(ValueError):
    """A map was applied outside of its domain (e.g. delta on a gap)."""


class Violation(NamedTuple):
    rule: str
    message: str
    i: int | None = None
    j: int | None = None

    def to_dict(self) -> dict:
        d = {"rule": self.rule, "message": self.message}
        if self.i is not None:
            d["i"] = self.i
        if self.j is not None:
            d["j"] = self.j
        return d


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def add(self, rule: str, message: str, i: int | None = None, j: int | None = None) -> None:
        self.violations.append(Violation(rule, message, i, j))

    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}

    def summary(self) -> str:
        if self.ok:
            return "ok"
        first = self.violations[0]
        more = f" (+{len(self.violations) - 1} more)" if len(self.violations) > 1 else ""
        return first.message + more

    def to_dict(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_dict() for v in self.violations]}


@dataclass(frozen=True, order=True)
class GapPosition:
    i: int
    j: int

    def __iter__(self):
        yield self.i
        yield self.j


Rows = tuple[tuple[int, ...], ...]


def _as_rows(rows: Iterable[Iterable[int]]) -> Rows:
    return tuple(tuple(int(v) for v in row) for row in rows)


def check_triangular(rows: Sequence[Sequence[int]]) -> None:
    if len(rows) == 0:
        raise ShapeError("empty triangle")
    for i, row in enumerate(rows, start=1):
        if len(row) != i:
            raise ShapeError(f"row {i} has length {len(row)}, expected {i}")


# ---------------------------------------------------------------------------
# Monotone triangles


def validate_monotone(rows: Sequence[Sequence[int]]) -> ValidationReport:
    """Check the monotone triangle axioms, reporting every violated inequality."""
    check_triangular(rows)
    n = len(rows)
    rep = ValidationReport()
    for i in range(n):
        for j in range(i + 1):
            v = rows[i][j]
            if v < 1:
                rep.add("positive", f"a[{i + 1},{j + 1}]={v} is not positive", i + 1, j + 1)
            if j < i and not v < rows[i][j + 1]:
                rep.add("row-strict", f"a[{i + 1},{j + 1}]={v} >= a[{i + 1},{j + 2}]={rows[i][j + 1]}",
                        i + 1, j + 1)
            if i + 1 < n:
                below, diag = rows[i + 1][j], rows[i + 1][j + 1]
                if not below <= v:
                    rep.add("column-weak", f"a[{i + 2},{j + 1}]={below} > a[{i + 1},{j + 1}]={v}",
                            i + 1, j + 1)
                if not v <= diag:
                    rep.add("diagonal-weak", f"a[{i + 1},{j + 1}]={v} > a[{i + 2},{j + 2}]={diag}",
                            i + 1, j + 1)
    for j, v in enumerate(rows[-1], start=1):
        if v != j:
            rep.add("bottom-row", f"bottom row entry a[{n},{j}]={v}, expected {j}", n, j)
    return rep


def validate_monotone_reduced(rows: Sequence[Sequence[int]]) -> ValidationReport:
    """Check the reduced conditions characterising *gapless* monotone triangles.

    (0) a[i,j] <= a[i-1,j] <= a[i,j] + 1, (1)' strict rows, (2) bottom row 1..n.
    """
    check_triangular(rows)
    n = len(rows)
    rep = ValidationReport()
    for i in range(n):
        for j in range(i + 1):
            v = rows[i][j]
            if v < 1:
                rep.add("positive", f"a[{i + 1},{j + 1}]={v} is not positive", i + 1, j + 1)
            if j < i:
                above = rows[i - 1][j]
                if not v <= above <= v + 1:
                    rep.add("column-step", f"a[{i},{j + 1}]={above} not in [{v}, {v + 1}]", i, j + 1)
                if not v < rows[i][j + 1]:
                    rep.add("row-strict", f"a[{i + 1},{j + 1}]={v} >= a[{i + 1},{j + 2}]={rows[i][j + 1]}",
                            i + 1, j + 1)
    for j, v in enumerate(rows[-1], start=1):
        if v != j:
            rep.add("bottom-row", f"bottom row entry a[{n},{j}]={v}, expected {j}", n, j)
    return rep


def _gaps(rows: Rows, down: bool) -> list[GapPosition]:
    out = []
    for i in range(len(rows) - 1):
        upper, lower = rows[i], rows[i + 1]
        for j in range(i + 1):
            diff = upper[j] - lower[j] if down else lower[j] - upper[j]
            if diff > 1:
                out.append(GapPosition(i + 1, j + 1))
    return out


@dataclass(frozen=True)
class MonotoneTriangle:
    """Monotone (Gog) triangle; row 1 on top, bottom row ``1..n``."""

    rows: Rows

    def __init__(self, rows: Iterable[Iterable[int]], *, check: bool = True):
        rows = _as_rows(rows)
        if check:
            rep = validate_monotone(rows)
            if not rep:
                raise InvalidObjectError(rep, "monotone triangle")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def gaps(self) -> list[GapPosition]:
        return _gaps(self.rows, down=True)

    def is_gapless(self) -> bool:
        return not self.gaps()

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    def __str__(self) -> str:
        return " / ".join(" ".join(map(str, r)) for r in self.rows)


def find_gaps_monotone(t: MonotoneTriangle) -> list[GapPosition]:
    """Positions (i, j) with a[i,j] - a[i+1,j] > 1, row-major."""
    return t.gaps()


def identity_triangle(n: int) -> MonotoneTriangle:
    return MonotoneTriangle([range(1, i + 1) for i in range(1, n + 1)], check=False)


# ---------------------------------------------------------------------------
# Magog triangles


def validate_magog(rows: Sequence[Sequence[int]]) -> ValidationReport:
    check_triangular(rows)
    n = len(rows)
    rep = ValidationReport()
    for i in range(n):
        for j in range(i + 1):
            v = rows[i][j]
            if v > n:
                rep.add("upper-bound", f"b[{i + 1},{j + 1}]={v} exceeds n={n}", i + 1, j + 1)
            if v < i + 1:
                rep.add("lower-bound", f"b[{i + 1},{j + 1}]={v} is below its row index {i + 1}",
                        i + 1, j + 1)
            if i + 1 < n and not v <= rows[i + 1][j]:
                rep.add("column-weak", f"b[{i + 1},{j + 1}]={v} > b[{i + 2},{j + 1}]={rows[i + 1][j]}",
                        i + 1, j + 1)
            if j < i and not v <= rows[i][j + 1]:
                rep.add("row-weak", f"b[{i + 1},{j + 1}]={v} > b[{i + 1},{j + 2}]={rows[i][j + 1]}",
                        i + 1, j + 1)
    return rep


@dataclass(frozen=True)
class MagogTriangle:
    rows: Rows

    def __init__(self, rows: Iterable[Iterable[int]], *, check: bool = True):
        rows = _as_rows(rows)
        if check:
            rep = validate_magog(rows)
            if not rep:
                raise InvalidObjectError(rep, "Magog triangle")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def gaps(self) -> list[GapPosition]:
        return _gaps(self.rows, down=False)

    def is_gapless(self) -> bool:
        return not self.gaps()

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    def __str__(self) -> str:
        return " / ".join(" ".join(map(str, r)) for r in self.rows)


def find_gaps_magog(b: MagogTriangle) -> list[GapPosition]:
    """Positions (i, j) with b[i+1,j] - b[i,j] > 1, row-major."""
    return b.gaps()


# ---------------------------------------------------------------------------
# Alternating sign matrices


def validate_asm(matrix: Sequence[Sequence[int]]) -> ValidationReport:
    rep = ValidationReport()
    n = len(matrix)
    if n == 0:
        rep.add("shape", "empty matrix")
        return rep
    for r, row in enumerate(matrix, start=1):
        if len(row) != n:
            rep.add("shape", f"row {r} has length {len(row)}, expected {n}", r)
            return rep
        for c, v in enumerate(row, start=1):
            if v not in (-1, 0, 1):
                rep.add("entries", f"entry ({r},{c})={v} not in {{-1,0,1}}", r, c)
    if not rep:
        return rep
    for kind, lines in (("row", matrix), ("column", list(zip(*matrix)))):
        for r, line in enumerate(lines, start=1):
            partial = 0
            for v in line:
                partial += v
                if partial not in (0, 1):
                    rep.add(f"{kind}-alternation",
                            f"{kind} {r}: nonzero entries do not alternate starting with +1", r)
                    break
            else:
                if partial != 1:
                    rep.add(f"{kind}-sum", f"{kind} {r} sums to {partial}, expected 1", r)
    return rep


@dataclass(frozen=True)
class Asm:
    matrix: Rows

    def __init__(self, matrix: Iterable[Iterable[int]], *, check: bool = True):
        matrix = _as_rows(matrix)
        if check:
            rep = validate_asm(matrix)
            if not rep:
                raise InvalidObjectError(rep, "alternating sign matrix")
        object.__setattr__(self, "matrix", matrix)

    @property
    def n(self) -> int:
        return len(self.matrix)

    def to_json(self) -> dict:
        return {"matrix": [list(r) for r in self.matrix]}


# ---------------------------------------------------------------------------
# Gog words

GogTuple = tuple[int, ...]


def odd_entries(x: GogTuple) -> tuple[int, ...]:
    """Entries at odd (1-based) positions: p_1, ..., p_k."""
    return x[0::2]


def even_entries(x: GogTuple) -> tuple[int, ...]:
    """Entries at even (1-based) positions: q_1, ..., q_{k-1}."""
    return x[1::2]


def validate_gog_tuple(x: Sequence[int]) -> str | None:
    if len(x) % 2 == 0:
        return f"tuple {format_tuple(x)} has even length {len(x)}"
    if any(v < 1 for v in x):
        return f"tuple {format_tuple(x)} has a non-positive entry"
    if any(a >= b for a, b in zip(x, x[1:])):
        return f"tuple {format_tuple(x)} is not strictly increasing"
    return None


def _letters_to_matrix(letters: Sequence[GogTuple], n: int) -> list[list[int]]:
    m = [[0] * n for _ in range(n)]
    for r, x in enumerate(letters):
        for pos, v in enumerate(x):
            m[r][v - 1] = 1 if pos % 2 == 0 else -1
    return m


def validate_gog_word(letters: Sequence[Sequence[int]], n: int | None = None) -> ValidationReport:
    """Validate a Gog word; reports the first failing condition only."""
    rep = ValidationReport()
    letters = [tuple(x) for x in letters]
    if n is None:
        n = len(letters)
    if len(letters) != n:
        rep.add("length", f"word has length {len(letters)}, expected {n}")
        return rep
    if n == 0:
        rep.add("length", "empty word")
        return rep
    for idx, x in enumerate(letters, start=1):
        msg = validate_gog_tuple(x)
        if msg:
            rep.add("tuple", f"letter {idx}: {msg}", idx)
            return rep
        if x[-1] > n:
            rep.add("bound", f"letter {idx}: entry {x[-1]} exceeds n={n}", idx)
            return rep
    asm_rep = validate_asm(_letters_to_matrix(letters, n))
    if not asm_rep:
        v = asm_rep.violations[0]
        rep.add("asm", f"induced matrix is not an ASM: {v.message}", v.i)
    return rep


def format_tuple(x: Sequence[int], comma: bool = False) -> str:
    if len(x) == 1:
        return str(x[0])
    sep = "," if comma else ""
    return "(" + sep.join(map(str, x)) + ")"


_TOKEN = re.compile(r"\(([^()]*)\)|(\d+)|([,\s]+)|(.)")


def parse_gog_word(text: str) -> tuple[GogTuple, ...]:
    """Parse Gog word text such as ``2(123)2`` or ``10,(1,2,3),4``.

    Without commas every digit is its own entry; with commas, entries are
    comma-separated integers (required once n >= 10).
    """
    comma_mode = "," in text
    letters: list[GogTuple] = []
    for m in _TOKEN.finditer(text.strip()):
        group, number, sep, bad = m.groups()
        if bad is not None:
            raise ValueError(f"unexpected character {bad!r} in Gog word {text!r}")
        if sep is not None:
            continue
        if group is not None:
            body = group.strip()
            if comma_mode or "," in body:
                parts = [p for p in re.split(r"[,\s]+", body) if p]
                entries = tuple(int(p) for p in parts)
            else:
                entries = tuple(int(ch) for ch in body if not ch.isspace())
            if not entries:
                raise ValueError(f"empty tuple in Gog word {text!r}")
            letters.append(entries)
        elif comma_mode:
            letters.append((int(number),))
        else:
            letters.extend((int(ch),) for ch in number)
    if not letters:
        raise ValueError("empty Gog word")
    return tuple(letters)


def format_gog_word(letters: Sequence[Sequence[int]]) -> str:
    comma = any(v > 9 for x in letters for v in x)
    sep = "," if comma else ""
    return sep.join(format_tuple(x, comma) for x in letters)


@dataclass(frozen=True)
class GogWord:
    letters: tuple[GogTuple, ...]

    def __init__(self, letters: Iterable[Iterable[int]] | str, *, check: bool = True):
        if isinstance(letters, str):
            letters = parse_gog_word(letters)
        letters = tuple(tuple(int(v) for v in x) for x in letters)
        if check:
            rep = validate_gog_word(letters)
            if not rep:
                raise InvalidObjectError(rep, "Gog word")
        object.__setattr__(self, "letters", letters)

    @property
    def n(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, i: int) -> GogTuple:
        """1-based letter access, x_i."""
        return self.letters[i - 1]

    def is_permutation(self) -> bool:
        return all(len(x) == 1 for x in self.letters)

    def __str__(self) -> str:
        return format_gog_word(self.letters)


# ---------------------------------------------------------------------------
# Permutations

Permutation = tuple[int, ...]


def check_permutation(p: Sequence[int]) -> Permutation:
    p = tuple(int(v) for v in p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{p} is not a permutation of 1..{len(p)}")
    return p


def parse_permutation(text: str) -> Permutation:
    """``4312`` (single digits) or ``4,3,1,2`` / ``4 3 1 2``."""
    text = text.strip()
    if re.search(r"[,\s]", text):
        vals = [int(v) for v in re.split(r"[,\s]+", text) if v]
    else:
        vals = [int(ch) for ch in text]
    return check_permutation(vals)


def permutation_to_monotone(p: Sequence[int]) -> MonotoneTriangle:
    """Row i is the sorted list of the first i values."""
    p = check_permutation(p)
    return MonotoneTriangle([sorted(p[:i]) for i in range(1, len(p) + 1)], check=False)


def _rows_above(row: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All strictly increasing rows r with row[j] <= r[j] <= row[j+1]."""
    k = len(row) - 1
    out: list[int] = []

    def rec(j: int) -> Iterator[tuple[int, ...]]:
        if j == k:
            yield tuple(out)
            return
        lo = max(row[j], out[-1] + 1) if out else row[j]
        for v in range(lo, row[j + 1] + 1):
            out.append(v)
            yield from rec(j + 1)
            out.pop()

    return rec(0)


def all_monotone_triangles(n: int) -> Iterator[MonotoneTriangle]:
    """Every monotone triangle of size n, built upward from the bottom row."""
    if n < 1:
        raise ValueError("n must be >= 1")
    stack: list[tuple[int, ...]] = [tuple(range(1, n + 1))]

    def rec() -> Iterator[MonotoneTriangle]:
        if len(stack[-1]) == 1:
            yield MonotoneTriangle(reversed(stack), check=False)
            return
        for r in _rows_above(stack[-1]):
            stack.append(r)
            yield from rec()
            stack.pop()

    return rec()
