from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dtcol.collection import plethysm, star
from dtcol.dtpipeline import attractor_dt, attractor_tree_eval, omega_bar, wallcross_collection
from dtcol.errors import NotLyndon
from dtcol.exactalg import RatFunc, parse, y_power
from dtcol.lie import (WordCombo, automorphisms, bracket, bracket_eval, collection_component, collection_from_combo,
                       dynkin_map, flow_tree_coeff, flow_tree_dt, flow_tree_dt_brackets, is_lie, is_lyndon, kappa,
                       lyndon_bracket, lyndon_tree, lyndon_words, multiset_representatives, random_lie_combo,
                       tree_bracket)
from dtcol.quiver import skew_form, stacky_A
from dtcol.semigroup import box, vectors_up_to
from dtcol.stability import CentralCharge, SkewForm
from dtcol.trees import enumerate_binary

from conftest import K1, K2, ZGEN, Z01, Z10

a, b = WordCombo.letter("a"), WordCombo.letter("b")
E1, E2 = (1, 0), (0, 1)
B1, B2 = skew_form(K1), skew_form(K2)


def test_dynkin_map():
    assert dynkin_map(WordCombo.word("ab")) == WordCombo.word("ab") - WordCombo.word("ba")
    ab = bracket(a, b)
    assert dynkin_map(ab) == ab * 2
    assert dynkin_map(a) == a


def test_is_lie():
    assert is_lie(bracket(a, b))
    assert not is_lie(WordCombo.word("ab"))
    assert is_lie(WordCombo())


def test_lyndon_words():
    assert lyndon_words("ab", 2) == [("a",), ("a", "b"), ("b",)]
    assert set(lyndon_words("ab", 3)) - set(lyndon_words("ab", 2)) == {tuple("aab"), tuple("abb")}
    assert lyndon_words("a", 5) == [("a",)]
    words = lyndon_words("abc", 5)
    assert words == sorted(words) and all(is_lyndon(w) for w in words)
    # necklace count: number of Lyndon words of length 4 over two letters is 3
    assert sum(1 for w in lyndon_words("ab", 4) if len(w) == 4) == 3


def test_lyndon_bracket():
    assert lyndon_bracket("aab") == bracket(a, bracket(a, b))
    assert lyndon_bracket("ab") == WordCombo.word("ab") - WordCombo.word("ba")
    assert lyndon_tree("aabb") == ("a", (("a", "b"), "b"))
    with pytest.raises(NotLyndon):
        lyndon_bracket("ba")


@pytest.mark.parametrize("w", lyndon_words("ab", 4))
def test_lyndon_brackets_are_lie(w):
    assert is_lie(lyndon_bracket(w))


def test_bracket_eval():
    g, c = bracket_eval((1, 2), (E1, E2), B1)
    assert g == (1, 1) and c == y_power(1) - y_power(-1)
    assert bracket_eval((1, 2), (E1, (2, 0)), B1)[1] == 0
    assert bracket_eval(1, (E1,), B1, [RatFunc(3)]) == (E1, RatFunc(3))


def test_kappa():
    assert kappa(0) == 0
    assert kappa(1) == 1
    assert kappa(2) == -(y_power(1) + y_power(-1))
    assert all(kappa(-m) == -kappa(m) for m in range(5))


def test_flow_tree_coeff():
    T = (1, 2)
    assert flow_tree_coeff(T, (E1, E2), (0, 1), Z10, B1) == 0
    assert flow_tree_coeff(T, (E1, E2), (1, 0), Z10, B1) == 1
    assert flow_tree_coeff(1, ((1, 1),), (0,), Z10, B1) == 1


def test_flow_tree_leaf_count():
    with pytest.raises(ValueError):
        flow_tree_coeff((1, 2), (E1, E2, E1), (0, 1, 2), Z10, B1)


def test_slot_perturbation_breaks_ties():
    # equal slopes everywhere: the infinitesimals alone decide, and they never cancel at the root
    Z = CentralCharge((0, 0))
    assert flow_tree_coeff((1, 2), (E1, E2), (1, 0), Z, B1) == 1
    assert flow_tree_coeff((1, 2), (E1, E2), (0, 1), Z, B1) == 0
    B = SkewForm([[0, 1], [-1, 0]])
    assert flow_tree_coeff((1, 2), (E1, E2), (0, 1), Z, B) == 0


def test_multisets():
    reps = list(multiset_representatives((2, 1)))
    assert len(reps) == len(set(reps))
    assert ((1, 0), (1, 0), (0, 1)) not in reps and ((0, 1), (1, 0), (1, 0)) in reps
    assert automorphisms(((0, 1), (1, 0), (1, 0))) == 2


def omega_star(A, B, bound):
    s = attractor_dt(A, B, bound)
    return lambda g: omega_bar(s(g))


def test_flow_tree_dt_examples():
    om = omega_star(stacky_A(K1), B1, 2)
    assert flow_tree_dt(om, Z10, B1, (1, 1)) == 1
    assert flow_tree_dt(om, Z10, B1, E1) == 1
    assert flow_tree_dt(om, Z01, B1, (1, 1)) == 0


@pytest.mark.parametrize("Q", [K1, K2])
@pytest.mark.parametrize("Z", [Z10, ZGEN])
def test_flow_tree_vs_attractor_tree(Q, Z):
    A, B = stacky_A(Q), skew_form(Q)
    s = attractor_dt(A, B, 4)
    om = lambda g: omega_bar(s(g))
    tree = attractor_tree_eval(s, Z, B, 0, 4)
    for g in box((2, 2)):
        v = flow_tree_dt(om, Z, B, g)
        assert v == omega_bar(tree(g))
        assert v == flow_tree_dt_brackets(om, Z, B, g)


def test_pi_expansion_is_lie():
    for T in enumerate_binary(4):
        assert is_lie(tree_bracket(T, tuple("abca")))


def test_wallcross_components_are_lie():
    W = wallcross_collection(Z10, Z01)
    for g in vectors_up_to(2, 3):
        assert is_lie(collection_component(W, g))


def test_lie_plethysm_law():
    alphabet = vectors_up_to(2, 4)
    F = collection_from_combo(random_lie_combo(alphabet, 4, seed=1))
    G = collection_from_combo(random_lie_combo(alphabet, 4, seed=2))
    A = stacky_A(K2)
    left, right = star(plethysm(F, G), A), star(F, star(G, A))
    assert all(left(g) == right(g) for g in vectors_up_to(2, 4))


@given(st.lists(st.sampled_from("abc"), min_size=1, max_size=5))
def test_dynkin_idempotent_property(w):
    v = dynkin_map(WordCombo.word(w))
    assert is_lie(v)
