import pytest
from hypothesis import given, strategies as st

from dtcol.errors import ParseError, RankMismatch
from dtcol.exactalg import LaurentPoly, parse
from dtcol.quiver import Quiver, chi, euler_form, poincare_gl, skew_form, stacky_A
from dtcol.semigroup import vectors_up_to

from conftest import K1, K2

E1, E2 = (1, 0), (0, 1)


def test_euler_form():
    assert chi(K1, E1, E2) == -1
    assert chi(K1, E2, E1) == 0
    assert chi(K1, (1, 1), (1, 1)) == 1
    assert euler_form(K2) == ((1, -2), (0, 1))


def test_skew_form():
    assert skew_form(K1).pair(E1, E2) == -1
    assert skew_form(K2).pair(E1, E2) == -2
    assert skew_form(Quiver.loops(1)).pair((1,), (1,)) == 0


def test_poincare():
    assert poincare_gl(1) == parse("y^2 - 1").num
    assert poincare_gl(2) == LaurentPoly({4: 1, 0: -1}) * LaurentPoly({4: 1, 2: -1})
    assert poincare_gl(0) == LaurentPoly.constant(1)


def test_stacky_A():
    assert stacky_A(K1)(E1) == parse("(-y)/(y^2 - 1)")
    assert stacky_A(K1)((1, 1)) == parse("(-y^3)/(y^4 - 2*y^2 + 1)")
    assert stacky_A(K2)((1, 1)) == parse("(y^4)/(y^4 - 2*y^2 + 1)")
    with pytest.raises(RankMismatch):
        stacky_A(K1)((1, 1, 1))


def test_parse_and_render():
    Q = Quiver.parse("# K2\nvertices 2\narrow 1 2\narrow 1 2  # again\n")
    assert Q.arrows == ((1, 2), (1, 2))
    assert Quiver.parse(Q.render()).arrows == Q.arrows
    for bad in ["", "arrow 1 2", "vertices 2\narrow 1 3", "vertices x", "vertices 2\nedge 1 2"]:
        with pytest.raises(ParseError):
            Quiver.parse(bad)


quivers = st.integers(1, 3).flatmap(
    lambda r: st.lists(st.tuples(st.integers(1, r), st.integers(1, r)), max_size=5).map(lambda a: Quiver(r, a)))


@given(quivers)
def test_skew_antisymmetric_and_A_nonzero(Q):
    m = skew_form(Q).matrix
    assert all(m[i][j] == -m[j][i] for i in range(Q.rank) for j in range(Q.rank))
    A = stacky_A(Q)
    assert all(A(g) for g in vectors_up_to(Q.rank, 2))


@given(st.integers(1, 3).flatmap(lambda r: st.lists(st.tuples(st.integers(1, r), st.integers(1, r)), max_size=3)
                                 .map(lambda a: Quiver(r, a + [(j, i) for i, j in a]))))
def test_symmetric_quiver_has_zero_skew(Q):
    assert skew_form(Q).is_zero()
