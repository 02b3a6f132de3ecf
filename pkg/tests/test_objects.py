import itertools

import pytest
from hypothesis import given, strategies as st

from gapless.objects import (
    GapPosition,
    GogWord,
    InvalidObjectError,
    MagogTriangle,
    MonotoneTriangle,
    ShapeError,
    all_monotone_triangles,
    find_gaps_magog,
    find_gaps_monotone,
    format_gog_word,
    identity_triangle,
    parse_gog_word,
    permutation_to_monotone,
    validate_gog_word,
    validate_magog,
    validate_monotone,
    validate_monotone_reduced,
)

PERM_4312 = [[4], [3, 4], [1, 3, 4], [1, 2, 3, 4]]
SHAPE_EXAMPLE = [[3], [2, 4], [2, 3, 4], [1, 2, 3, 4]]
PERM_35142 = [[3], [3, 5], [1, 3, 5], [1, 3, 4, 5], [1, 2, 3, 4, 5]]


def test_validate_monotone_examples():
    assert validate_monotone(PERM_4312).ok
    assert validate_monotone([[1], [1, 2], [1, 2, 3]]).ok
    rep = validate_monotone([[2], [1, 3], [1, 2, 4]])
    assert not rep.ok
    assert "bottom-row" in rep.rules()
    assert any(v.i == 3 and v.j == 3 for v in rep.violations)


def test_validate_monotone_reports_each_inequality():
    rep = validate_monotone([[1], [2, 1]])
    assert {"row-strict", "column-weak", "bottom-row"} <= rep.rules()
    rep = validate_monotone([[3], [1, 2], [1, 2, 3]])
    assert rep.rules() == {"diagonal-weak"}
    assert rep.violations[0].i == 1 and rep.violations[0].j == 1


def test_non_triangular_input_raises():
    with pytest.raises(ShapeError):
        validate_monotone([[1], [1, 2, 3]])
    with pytest.raises(ShapeError):
        validate_magog([[1, 2]])


def test_validate_monotone_reduced_examples():
    assert validate_monotone_reduced(SHAPE_EXAMPLE).ok
    rep = validate_monotone_reduced(PERM_4312)
    assert not rep.ok
    assert [(v.rule, v.i, v.j) for v in rep.violations] == [("column-step", 2, 1)]
    assert validate_monotone_reduced([[1], [1, 2], [1, 2, 3]]).ok


def test_find_gaps_monotone():
    assert find_gaps_monotone(MonotoneTriangle(PERM_4312)) == [GapPosition(2, 1)]
    assert find_gaps_monotone(identity_triangle(6)) == []
    gaps = find_gaps_monotone(MonotoneTriangle(PERM_35142))
    assert gaps == [GapPosition(2, 1), GapPosition(2, 2)]


def test_magog_examples():
    ex = [[2], [3, 3], [3, 3, 4], [4, 4, 4, 4]]
    assert validate_magog(ex).ok
    assert find_gaps_magog(MagogTriangle(ex)) == []
    assert validate_magog([[1], [2, 2], [3, 3, 3]]).ok
    assert MagogTriangle([[1], [2, 2], [3, 3, 3]]).is_gapless()
    b = MagogTriangle([[1], [3, 3], [3, 3, 3]])
    assert find_gaps_magog(b) == [GapPosition(1, 1)]


def test_magog_violations():
    rep = validate_magog([[1], [2, 1]])
    assert "row-weak" in rep.rules() and "lower-bound" in rep.rules()
    rep = validate_magog([[3], [2, 2]])
    assert {"upper-bound", "column-weak"} <= rep.rules()


def test_validate_gog_word_examples():
    assert validate_gog_word(parse_gog_word("2(123)2"), 3).ok
    assert validate_gog_word(parse_gog_word("25(12456)(345)(234)3"), 6).ok
    rep = validate_gog_word(parse_gog_word("2 2"), 2)
    assert not rep.ok and rep.violations[0].rule == "asm"


def test_validate_gog_word_first_failure():
    assert validate_gog_word([(1,), (2,)], 3).violations[0].rule == "length"
    assert validate_gog_word([(1, 2), (2,)], 2).violations[0].rule == "tuple"
    assert validate_gog_word([(2, 1, 3), (2,), (1,)], 3).violations[0].rule == "tuple"
    assert validate_gog_word([(1,), (3,)], 2).violations[0].rule == "bound"


def test_gog_word_parse_and_format():
    assert parse_gog_word("2(123)2") == ((2,), (1, 2, 3), (2,))
    assert parse_gog_word("(3)(1)(234)(3)") == ((3,), (1,), (2, 3, 4), (3,))
    assert parse_gog_word("10,(1,2,3),4") == ((10,), (1, 2, 3), (4,))
    assert format_gog_word([(2,), (1, 2, 3), (2,)]) == "2(123)2"
    assert format_gog_word([(10,), (1, 2, 3)]) == "10,(1,2,3)"
    assert str(GogWord("25(12456)(345)(234)3")) == "25(12456)(345)(234)3"
    with pytest.raises(ValueError):
        parse_gog_word("2(1x3)2")
    with pytest.raises(InvalidObjectError):
        GogWord("22")


def test_permutation_to_monotone():
    assert permutation_to_monotone([4, 3, 1, 2]).rows == tuple(map(tuple, PERM_4312))
    assert permutation_to_monotone(range(1, 6)) == identity_triangle(5)
    assert permutation_to_monotone([3, 5, 1, 4, 2]).rows == tuple(map(tuple, PERM_35142))
    with pytest.raises(ValueError):
        permutation_to_monotone([1, 1, 2])


def test_size_one_is_legal():
    assert validate_monotone([[1]]).ok
    assert validate_magog([[1]]).ok
    assert GogWord("1").n == 1


def _triangles_with_entries(n, upper_rows_only=False):
    cells = n * (n + 1) // 2
    for vals in itertools.product(range(1, n + 1), repeat=cells):
        rows, pos = [], 0
        for i in range(1, n + 1):
            rows.append(vals[pos:pos + i])
            pos += i
        yield rows


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_reduced_conditions_equal_monotone_and_gapless(n):
    """Exhaustive over every triangular array with entries in 1..n."""
    for rows in _triangles_with_entries(n):
        full = validate_monotone(rows).ok
        gapless = full and MonotoneTriangle(rows, check=False).is_gapless()
        assert validate_monotone_reduced(rows).ok == gapless, rows


@pytest.mark.parametrize("n", range(1, 7))
def test_permutation_triangles_injective(n):
    seen = {}
    for p in itertools.permutations(range(1, n + 1)):
        t = permutation_to_monotone(p)
        assert validate_monotone(t.rows).ok
        assert t not in seen
        seen[t] = p
    # exactly the triangles where each row adds one value to the row above
    perm_like = [t for t in all_monotone_triangles(n)
                 if all(set(t.rows[i]) <= set(t.rows[i + 1]) for i in range(n - 1))]
    assert set(perm_like) == set(seen)


def test_identity_gapless_up_to_12():
    for n in range(1, 13):
        assert find_gaps_monotone(permutation_to_monotone(range(1, n + 1))) == []


@given(st.permutations(list(range(1, 8))))
def test_permutation_triangle_valid(p):
    t = permutation_to_monotone(p)
    assert validate_monotone(t.rows).ok
    assert t.rows[-1] == tuple(range(1, 8))
