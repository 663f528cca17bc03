"""Plane rooted trees and the free construction ``T F``.

A plane tree with leaves ``1..n`` is a nested tuple: a leaf is its integer
label, an internal vertex is the tuple of its children in order.  The unit
tree on one leaf is just ``1``.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import batch as _b
from .collection import Collection, col_sub, identity_collection
from .errors import NotSupportedGe2, NotUnital
from .semigroup import tuple_sum

_ONE = Fraction(1)
_ZERO = Fraction(0)


def _compositions(lo, hi, min_parts, max_parts):
    """Splits of the label interval ``[lo, hi]`` into consecutive runs."""
    n = hi - lo + 1

    def rec(start, acc):
        if start > hi:
            if len(acc) >= min_parts:
                yield tuple(acc)
            return
        if max_parts is not None and len(acc) == max_parts:
            return
        for end in range(start, hi + 1):
            yield from rec(end + 1, acc + [(start, end)])

    if n >= 1:
        yield from rec(lo, [])


@lru_cache(maxsize=None)
def _trees_on(lo, hi, min_children, max_children):
    if lo == hi:
        return (lo,)
    out = []
    for runs in _compositions(lo, hi, min_children, max_children):
        if len(runs) == 1:
            continue
        choices = [_trees_on(a, b, min_children, max_children) for a, b in runs]
        out.extend(_product_tuples(choices))
    return tuple(out)


def _product_tuples(choices):
    result = [()]
    for options in choices:
        result = [r + (o,) for r in result for o in options]
    return result


def enumerate_trees(n, min_children=2, max_children=None):
    """All plane trees on leaves ``1..n`` whose internal vertices have ``>= min_children`` children."""
    if n < 1:
        raise ValueError("a tree needs at least one leaf")
    if min_children < 2:
        raise ValueError("min_children must be at least 2 (otherwise the set is infinite)")
    return list(_trees_on(1, n, min_children, max_children))


def enumerate_binary(n):
    return enumerate_trees(n, 2, 2)


def is_leaf(node):
    return isinstance(node, int)


def leaves(node):
    if is_leaf(node):
        return (node,)
    out = ()
    for child in node:
        out += leaves(child)
    return out


def internal_vertices(tree):
    """Internal vertices in pre-order, root first."""
    if is_leaf(tree):
        return []
    out = [tree]
    for child in tree:
        out.extend(internal_vertices(child))
    return out


def root(tree):
    return None if is_leaf(tree) else tree


def parent(tree, v):
    for u in internal_vertices(tree):
        if any(child is v or child == v for child in u):
            return u
    return None


def leaf_sum(node, alpha):
    return tuple_sum(tuple(alpha[i - 1] for i in leaves(node)))


def children_tuple(tree, v, alpha):
    """``alpha|_{ch v}``: sums of ``alpha`` over the leaves below each child of ``v``."""
    if is_leaf(v):
        raise ValueError("leaves have no children")
    return tuple(leaf_sum(u, alpha) for u in v)


def tree_eval(F, tree, alpha):
    """``F(T)(alpha) = prod_{v internal} F(alpha|_{ch v})``; 1 on the unit tree."""
    if len(leaves(tree)) != len(alpha):
        raise ValueError("leaf count does not match the tuple length")

    def rec(node):
        if is_leaf(node):
            return alpha[node - 1], _ONE
        sums = []
        value = _ONE
        for child in node:
            s, v = rec(child)
            if not v:
                return None, _ZERO
            sums.append(s)
            value *= v
        if not value:
            return None, _ZERO
        value *= F(tuple(sums))
        return tuple_sum(sums), value

    return rec(tree)[1]


@lru_cache(maxsize=None)
def _tree_plans(n):
    """Each tree as a list of vertices, a vertex being its children's leaf intervals."""
    plans = []
    for tree in enumerate_trees(n):
        plan = []
        for v in internal_vertices(tree):
            plan.append(tuple((min(leaves(u)) - 1, max(leaves(u))) for u in v))
        plans.append(tuple(plan))
    return tuple(plans)


def _inner_cuts(i, j):
    """Nonempty cut sets strictly inside ``(i, j)``."""
    inner = range(i + 1, j)
    for m in range(1, j - i):
        yield from combinations(inner, m)


def free_construction(F):
    """``(T F)(alpha) = sum_T F(T)(alpha)`` over plane trees with every vertex of arity ``>= 2``.

    ``F`` must vanish on length-1 tuples; this is checked on the parts of
    every tuple evaluated.
    """

    def rule(alpha):
        for part in alpha:
            if F((part,)):
                raise NotSupportedGe2("%s is nonzero on (%r,)" % (F.name, part))
        n = len(alpha)
        if n == 1:
            return _ONE
        ps = [tuple(0 for _ in alpha[0])]
        for part in alpha:
            ps.append(tuple(x + y for x, y in zip(ps[-1], part)))
        sums = {}
        total = _ZERO
        for plan in _tree_plans(n):
            value = _ONE
            for vertex in plan:
                key = vertex
                f = sums.get(key)
                if f is None:
                    f = F(tuple(tuple(x - y for x, y in zip(ps[j], ps[i])) for i, j in vertex))
                    sums[key] = f
                if not f:
                    value = _ZERO
                    break
                value *= f
            total += value
        return total

    def batch_rule(tb):
        n = tb.n
        for k in range(n):
            if _b.evaluate(F, tb.sub(k, k + 1)).any():
                raise NotSupportedGe2("%s is nonzero on a length-1 tuple" % F.name)
        if n == 1:
            return _b.QArray.full(tb.N, 1)
        # Same tree sum, grouped by the root: T[i, j] is the sum over trees on
        # parts i..j-1 and a root with children runs c_1..c_m contributes
        # F(run sums) * prod T[c_k].
        T = {(k, k + 1): None for k in range(n)}
        for length in range(2, n + 1):
            for i in range(0, n - length + 1):
                j = i + length
                acc = None
                for cuts in _inner_cuts(i, j):
                    spans = tuple(zip((i,) + cuts, cuts + (j,)))
                    term = _b.evaluate(F, tb.merge(spans))
                    for span in spans:
                        t = T[span]
                        if t is not None:
                            term = term * t
                    acc = term if acc is None else acc + term
                T[(i, j)] = acc
        return T[(0, n)]

    return Collection(rule, "T(%s)" % F.name, cached=True, batch_rule=batch_rule)


def free_construction_literal(F):
    """:func:`free_construction` through :func:`tree_eval` on each enumerated tree."""

    def rule(alpha):
        return sum((tree_eval(F, t, alpha) for t in enumerate_trees(len(alpha))), _ZERO)

    return Collection(rule, "T'(%s)" % F.name, cached=True)


def plethystic_inverse(F):
    """``F^-1 = T(1 - F)`` for ``F`` equal to 1 on length-1 tuples."""
    one = identity_collection()
    diff = col_sub(one, F)
    diff.supported_ge2 = True

    def check(part):
        if F((part,)) != 1:
            raise NotUnital("%s is not 1 on (%r,)" % (F.name, part))
        return _ZERO

    def batch_rule(tb):
        if tb.n == 1:
            if not _b.evaluate(F, tb).equals(1).all():
                raise NotUnital("%s is not 1 on some length-1 tuple" % F.name)
            return _b.QArray.zeros(tb.N)
        return -_b.evaluate(F, tb)

    guarded = Collection(lambda a: check(a[0]) if len(a) == 1 else diff(a), "(1-%s)" % F.name,
                         supported_ge2=True, batch_rule=batch_rule)
    inv = free_construction(guarded)
    inv.name = "%s^-1" % F.name
    return inv
