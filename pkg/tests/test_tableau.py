import json

import pytest
from hypothesis import given, settings, strategies as st

from fangcheng.errors import DimensionMismatch, ParseError
from fangcheng.ring import POLY, ZZ, MultiPoly
from fangcheng.tableau import (Tableau, from_system, generic_tableau, max_bit_length,
                               parse_tableau, render)
from oracles import bit_scan


def test_parse_simple():
    t = parse_tableau("2 3\n2 1 5\n1 3 5")
    assert t.rows == ((2, 1, 5), (1, 3, 5))
    assert (t.n, t.m, t.step, t.rhs_cols, t.ring) == (2, 3, 1, 1, ZZ)


def test_parse_comments_and_blank_lines():
    text = "# the first board\n\n2 3\n# row one\n2 1 5\n\n1 3 5\n"
    assert parse_tableau(text) == parse_tableau("2 3\n2 1 5\n1 3 5")


def test_parse_short_row():
    with pytest.raises(ParseError) as info:
        parse_tableau("2 3\n2 1 5\n1 3")
    assert info.value.line == 3
    assert "row 2 has 2 of 3" in str(info.value)


@pytest.mark.parametrize("text,line,column", [
    ("2  3\n1 2 3\n4 5 6", 1, 1),
    ("x 3\n", 1, 1),
    ("2 3\n1 2 3\n4 5.0 6", 3, 3),
    ("2 3\n1 2 3\n4 5 6\n7 8 9", 4, 1),
    ("3 2\n1 2\n3 4\n5 6", 1, 1),
])
def test_parse_errors(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_tableau(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_parse_missing_rows():
    with pytest.raises(ParseError):
        parse_tableau("# nothing\n")
    with pytest.raises(ParseError):
        parse_tableau("3 4\n1 2 3 4\n")


def test_from_system():
    assert from_system([[1, 0], [0, 1]], [7, 9]).rows == ((1, 0, 7), (0, 1, 9))
    classic = from_system([[3, 2, 1], [2, 3, 1], [1, 2, 3]], [39, 34, 26])
    assert classic.rows == ((3, 2, 1, 39), (2, 3, 1, 34), (1, 2, 3, 26))
    assert parse_tableau(render(classic, "file")) == classic
    with pytest.raises(DimensionMismatch):
        from_system([[1]], [5, 6])


def test_render_board():
    assert render(Tableau([[1, 0], [0, 1]]), "board") == "1 0\n0 1"
    assert render(Tableau([[10, -2], [3, 4]]), "board") == "10 -2\n 3  4"


def test_render_json():
    doc = json.loads(render(Tableau([[1, 0], [0, 1]]), "json"))
    assert doc["step"] == 1
    assert doc["tableau"] == [["1", "0"], ["0", "1"]]


def test_max_bit_length():
    assert max_bit_length(Tableau([[1, 0], [0, 1]])) == 1
    assert max_bit_length(Tableau([[-8, 7]])) == 4
    assert max_bit_length(Tableau([[0, 0]])) == 0


def test_max_bit_length_matches_scan_after_nine_chapters():
    from fangcheng.eliminate import PivotStrategy, forward_eliminate
    t = parse_tableau("4 5\n3 -7 2 9 1\n-4 5 8 -6 2\n7 1 -9 3 -5\n2 -8 6 4 7")
    echelon, _ = forward_eliminate(t, PivotStrategy.NINE_CHAPTERS)
    assert max_bit_length(echelon) == bit_scan(echelon.rows)
    assert max_bit_length(echelon) > max_bit_length(t)


def test_generic_tableau():
    assert generic_tableau(1, 1).rows == ((MultiPoly.variable(1, 1),),)
    g = generic_tableau(2, 2)
    assert g.rows == ((MultiPoly.variable(1, 1), MultiPoly.variable(1, 2)),
                      (MultiPoly.variable(2, 1), MultiPoly.variable(2, 2)))
    big = generic_tableau(4, 5)
    assert big.ring is POLY
    entries = [x for r in big.rows for x in r]
    assert all(x.degree() == 1 for x in entries)
    assert len(set(entries)) == 20


def test_tableau_shape_checks():
    with pytest.raises(DimensionMismatch):
        Tableau([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        Tableau([[1], [2]])


@settings(max_examples=200)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(n, 6).flatmap(lambda m: st.lists(
        st.lists(st.integers(-10**4, 10**4), min_size=m, max_size=m), min_size=n, max_size=n)))))
def test_render_parse_round_trip(shape):
    n, rows = shape
    t = Tableau(rows, ZZ, 1, 1 if len(rows[0]) == n + 1 else 0)
    assert parse_tableau(render(t, "file")) == t
    assert parse_tableau(f"{t.n} {t.m}\n" + render(t, "board")) == t


def test_round_trip_random_4x5():
    from fangcheng.corpus import random_matrix, rng_for
    for r in range(50):
        t = Tableau(random_matrix(rng_for(7, r), 4, 5, 10**4), rhs_cols=1)
        assert parse_tableau(render(t, "file")) == t
