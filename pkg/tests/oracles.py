"""Independent brute-force oracles used only by the tests."""

import itertools

KNOWN_GAPLESS = [1, 2, 6, 26, 162, 1450, 18626, 343210, 9069306, 343611106,
                  18662952122, 1453016097506]
KNOWN_ASM = [1, 2, 7, 42, 429, 7436, 218348, 10850216, 911835460, 129534272700,
              31095744852375, 12611311859677500]


def asm_rows(n):
    """All rows over {-1,0,1} whose nonzero entries alternate +1, -1, ..., +1."""
    out = []
    for row in itertools.product((-1, 0, 1), repeat=n):
        nz = [v for v in row if v]
        if nz and all(v == (1 if t % 2 == 0 else -1) for t, v in enumerate(nz)) and nz[-1] == 1:
            out.append(row)
    return out


def all_asms(n):
    """ASMs built row by row, keeping column partial sums in {0, 1}."""
    rows = asm_rows(n)
    result = []

    def rec(prefix, sums):
        if len(prefix) == n:
            if all(s == 1 for s in sums):
                result.append(tuple(prefix))
            return
        for r in rows:
            new = [s + v for s, v in zip(sums, r)]
            if all(0 <= s <= 1 for s in new):
                prefix.append(r)
                rec(prefix, new)
                prefix.pop()

    rec([], [0] * n)
    return result


def asm_to_triangle_by_partial_sums(matrix):
    """Row i of the triangle = columns whose partial sum over rows 1..i is 1."""
    n = len(matrix)
    sums = [0] * n
    rows = []
    for r in matrix:
        sums = [s + v for s, v in zip(sums, r)]
        rows.append(tuple(c + 1 for c in range(n) if sums[c] == 1))
    return tuple(rows)


def all_magog(n):
    """Every Magog triangle of size n, filled row-major by brute force."""
    cells = [(i, j) for i in range(n) for j in range(i + 1)]
    grid = [[0] * (i + 1) for i in range(n)]
    out = []

    def rec(t):
        if t == len(cells):
            out.append(tuple(tuple(r) for r in grid))
            return
        i, j = cells[t]
        lo = i + 1
        if i > 0 and j < i:
            lo = max(lo, grid[i - 1][j])
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        for v in range(lo, n + 1):
            grid[i][j] = v
            rec(t + 1)
        grid[i][j] = 0

    rec(0)
    return out


def magog_gapless(rows):
    return all(rows[i + 1][j] - rows[i][j] <= 1 for i in range(len(rows) - 1) for j in range(i + 1))


def perm_has_312_brute(p):
    n = len(p)
    return any(p[i] > p[k] > p[j] for i, j, k in itertools.combinations(range(n), 3))


def catalan(n):
    from math import comb
    return comb(2 * n, n) // (n + 1)
