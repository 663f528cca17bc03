from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from dtcol.errors import ParseError, ZeroVector
from dtcol.semigroup import (blocks, decompositions, grid, parse_vector, proportional, pushforward,
                             render_vector, restrict, tuple_sum)

from conftest import tuples_of

ALPHA = ((1, 0), (0, 1), (1, 1))


def test_tuple_sum():
    assert tuple_sum(((1, 0), (0, 1))) == (1, 1)
    assert tuple_sum(((2, 1),)) == (2, 1)
    assert tuple_sum(((1, 1), (1, 1), (0, 1))) == (2, 3)


def test_pushforward_and_restrict():
    assert pushforward(ALPHA, (2,)) == ((1, 1), (1, 1))
    assert pushforward(ALPHA, ()) == ((2, 2),)
    assert pushforward(ALPHA, (1, 2)) == ALPHA
    assert restrict(ALPHA, (2,), 1) == ((1, 0), (0, 1))
    assert restrict(ALPHA, (2,), 2) == ((1, 1),)
    assert restrict(ALPHA, (), 1) == ALPHA


def test_decompositions_examples():
    assert set(decompositions((2,))) == {((2,),), ((1,), (1,))}
    assert set(decompositions((1, 1))) == {((1, 1),), ((1, 0), (0, 1)), ((0, 1), (1, 0))}
    assert len(list(decompositions((3,)))) == 4


@pytest.mark.parametrize("n", range(1, 9))
def test_composition_count(n):
    assert len(list(decompositions((n,)))) == 2 ** (n - 1)


def test_decompositions_unique_and_bounded():
    ds = list(decompositions((2, 2), min_parts=2, max_parts=3))
    assert len(ds) == len(set(ds))
    assert all(2 <= len(a) <= 3 and tuple_sum(a) == (2, 2) for a in ds)
    flat = [sum(a, ()) for a in ds]
    assert flat == sorted(flat)


def test_zero_vector():
    with pytest.raises(ZeroVector):
        list(decompositions((0, 0)))


def test_proportional():
    assert proportional((2, 4), (1, 2))
    assert not proportional((1, 0), (0, 1))
    assert proportional((3, 3), (2, 2))


def test_vector_text():
    assert parse_vector("2,3") == (2, 3)
    assert render_vector((2, 3)) == "2,3"
    for bad in ["2,-1", "a", "1,,2"]:
        with pytest.raises(ParseError):
            parse_vector(bad)


def test_grid_entries():
    g = list(grid(2, 2, 1))
    assert len(g) == 3 + 9
    assert all(max(max(p) for p in a) <= 1 for a in g)


@given(tuples_of(max_len=6))
def test_mass_conservation_and_concatenation(alpha):
    n = len(alpha)
    for m in range(n):
        for cuts in combinations(range(1, n), m):
            assert tuple_sum(pushforward(alpha, cuts)) == tuple_sum(alpha)
            parts = [restrict(alpha, cuts, j) for j in range(1, m + 2)]
            assert sum(parts, ()) == alpha
