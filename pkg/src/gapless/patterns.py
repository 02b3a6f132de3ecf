"""312 patterns in permutations and 312-subpatterns in Gog words."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .objects import GogTuple, GogWord, check_permutation, even_entries, odd_entries


def perm_contains_312(p: Sequence[int]) -> int | None:
    """Smallest 1-based i with some k > i+1 such that p_i > p_k > p_{i+1}."""
    p = check_permutation(p)
    n = len(p)
    for i in range(n - 2):
        hi, lo = p[i], p[i + 1]
        if hi - lo > 1 and any(lo < p[k] < hi for k in range(i + 2, n)):
            return i + 1
    return None


def perm_avoids_312(p: Sequence[int]) -> bool:
    return perm_contains_312(p) is None


def consecutive_set_check(p: Sequence[int], i: int) -> bool:
    """Whether {p_j : j <= i+1, p_j >= p_{i+1}} is an interval of integers.

    Only meaningful when p has no 312 pattern at positions before i.
    """
    p = check_permutation(p)
    if not 1 <= i < len(p):
        raise ValueError(f"position {i} out of range 1..{len(p) - 1}")
    pivot = p[i]
    s = [v for v in p[: i + 1] if v >= pivot]
    return max(s) - min(s) + 1 == len(s)


def is_active(m: int, x: Sequence[int]) -> bool:
    """m > p_k, or p_j < m < q_j for some j < k."""
    ps, qs = odd_entries(tuple(x)), even_entries(tuple(x))
    if m > ps[-1]:
        return True
    return any(pj < m < qj for pj, qj in zip(ps, qs))


@dataclass(frozen=True)
class SubpatternWitness:
    """c, a, b at odd positions of letters x_i, x_j, x_k (1-based)."""

    c: int
    a: int
    b: int
    i: int
    j: int
    k: int

    def to_dict(self) -> dict:
        return {"c": self.c, "a": self.a, "b": self.b, "i": self.i, "j": self.j, "k": self.k}


def is_subpattern(w: GogWord, c: int, a: int, b: int, i: int, j: int, k: int) -> bool:
    """Check all four defining conditions of a 312-subpattern directly."""
    x = w.letters
    if not 1 <= i < j < k <= len(x):
        return False
    if c not in odd_entries(x[i - 1]) or a not in odd_entries(x[j - 1]) or b not in odd_entries(x[k - 1]):
        return False
    if any(b in even_entries(x[t - 1]) for t in range(i + 1, k)):
        return False
    return is_active(b, x[j - 1]) and a < b < c


def _witness_at(x: tuple[GogTuple, ...], i: int) -> SubpatternWitness | None:
    """Search (i, i+1, k) with c = max of x_i and a = min of x_{i+1}."""
    c = x[i - 1][-1]
    nxt = x[i]
    a = nxt[0]
    if c - a < 2:
        return None
    blocked: set[int] = set()
    for k in range(i + 2, len(x) + 1):
        blocked.update(even_entries(x[k - 2]))
        for b in odd_entries(x[k - 1]):
            if a < b < c and b not in blocked and is_active(b, nxt):
                return SubpatternWitness(c, a, b, i, i + 1, k)
    return None


def word_312_first_position(w: GogWord) -> tuple[int, SubpatternWitness] | None:
    """First position i of a 312-subpattern, with a witness at (i, i+1, k)."""
    x = w.letters
    for i in range(1, len(x) - 1):
        wit = _witness_at(x, i)
        if wit is not None:
            return i, wit
    return None


def word_avoids_312(w: GogWord) -> bool:
    return word_312_first_position(w) is None


def all_subpatterns(w: GogWord) -> Iterator[SubpatternWitness]:
    """Unrestricted search over every (i, j, k) and every choice of c, a, b."""
    x = w.letters
    n = len(x)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                for c in odd_entries(x[i - 1]):
                    for a in odd_entries(x[j - 1]):
                        for b in odd_entries(x[k - 1]):
                            if is_subpattern(w, c, a, b, i, j, k):
                                yield SubpatternWitness(c, a, b, i, j, k)


def contains_312_weak(w: GogWord) -> bool:
    """Only conditions (1) and (4): odd-positioned c, a, b in increasing
    letters with a < b < c, i.e. the ASM contains the 312 permutation matrix
    in the sense of Johansson and Linusson."""
    x = w.letters
    n = len(x)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for c in odd_entries(x[i]):
                    for a in odd_entries(x[j]):
                        if any(a < b < c for b in odd_entries(x[k])):
                            return True
    return False
