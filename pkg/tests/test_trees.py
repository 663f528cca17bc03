from fractions import Fraction

import pytest

from dtcol import batch
from dtcol.collection import (Collection, col_sub, exp_log_family, hn, hn_inverse, identity_collection, plethysm,
                              pseudorandom_collection)
from dtcol.errors import NotSupportedGe2, NotUnital
from dtcol.trees import (children_tuple, enumerate_binary, enumerate_trees, free_construction,
                         free_construction_literal, internal_vertices, is_leaf, leaves, plethystic_inverse,
                         tree_eval)

from conftest import ZGEN, Z10

ONE = identity_collection()
LOG = exp_log_family("log")
A, B, C = (1, 0), (0, 1), (1, 1)


def agree(F, G, r=2, max_len=5, max_entry=2):
    return batch.first_disagreement(F, G, r, max_len, max_entry) is None


def test_counts():
    assert [len(enumerate_trees(n)) for n in range(1, 6)] == [1, 1, 3, 11, 45]
    assert [len(enumerate_binary(n)) for n in range(1, 6)] == [1, 1, 2, 5, 14]
    assert enumerate_trees(1) == [1]


@pytest.mark.parametrize("n", range(1, 6))
def test_tree_shape(n):
    for T in enumerate_trees(n):
        assert leaves(T) == tuple(range(1, n + 1))
        assert all(len(v) >= 2 for v in internal_vertices(T))
    for T in enumerate_binary(n):
        assert all(len(v) == 2 for v in internal_vertices(T))


def test_children_tuple():
    assert children_tuple((1, 2), (1, 2), (A, B)) == (A, B)
    T = ((1, 2), 3)
    assert children_tuple(T, T, (A, B, C)) == ((1, 1), C)
    assert children_tuple(T, T[0], (A, B, C)) == (A, B)


def test_tree_eval():
    F = pseudorandom_collection(3)
    assert tree_eval(F, 1, (A,)) == 1
    assert tree_eval(LOG, (1, 2), (A, B)) == Fraction(-1, 2)
    assert tree_eval(F, ((1, 2), 3), (A, B, C)) == F(((1, 1), C)) * F((A, B))


def test_free_construction_small():
    F = pseudorandom_collection(3)
    TF = free_construction(F)
    assert TF((A,)) == 1
    assert TF((A, B)) == F((A, B))
    assert TF((A, B, C)) == F((A, B, C)) + F(((1, 1), C)) * F((A, B)) + F((A, (1, 2))) * F((B, C))
    lit = free_construction_literal(F)
    assert all(TF(a) == lit(a) for a in [(A, B, C, A), (C, C, B, A, A)])


def test_free_construction_guards():
    with pytest.raises(NotSupportedGe2):
        free_construction(pseudorandom_collection(3, supported_ge2=False))((A, B))
    with pytest.raises(NotUnital):
        plethystic_inverse(pseudorandom_collection(3))((A, B))


def test_inverse_examples():
    assert agree(plethystic_inverse(ONE), ONE)
    assert agree(plethystic_inverse(hn(Z10)), hn_inverse(Z10))
    assert agree(plethystic_inverse(exp_log_family("exp")), LOG, r=1, max_len=6, max_entry=2)


@pytest.mark.parametrize("seed", [1, 2])
def test_fixed_point_and_inverse(seed):
    F = pseudorandom_collection(seed)
    TF = free_construction(F)
    assert agree(TF, ONE + plethysm(F, TF))
    assert agree(plethysm(col_sub(ONE, F), TF), ONE)
    assert agree(plethysm(TF, col_sub(ONE, F)), ONE)


def test_batch_matches_scalar_tree_sum():
    F = pseudorandom_collection(7)
    TF = free_construction(F)
    scalar = Collection(TF.rule, "scalar")
    assert agree(TF, scalar, max_len=5, max_entry=1)
