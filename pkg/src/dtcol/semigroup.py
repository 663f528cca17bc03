"""Dimension vectors in ``N^r \\ {0}``, ordered tuples of them, and surjections.

A dimension vector is a plain tuple of nonnegative ints; a tuple of dimension
vectors (an element of ``S^n``) is a tuple of such tuples.  An order-preserving
surjection ``{1..n} -> {1..m}`` is encoded by its cut set: the sorted positions
``k`` (``1 <= k < n``) after which a new block starts.
"""

from itertools import combinations, product
from math import gcd

from .errors import ParseError, ZeroVector


def vec(*entries):
    return tuple(int(e) for e in entries)


def is_nonzero(a):
    return any(a)


def check_nonzero(a):
    if any(x < 0 for x in a) or not any(a):
        raise ZeroVector("%r is not in N^r \\ {0}" % (a,))
    return a


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def scale(a, k):
    return tuple(k * x for x in a)


def degree(a):
    """Total degree ``delta . a`` with ``delta = (1, ..., 1)``."""
    return sum(a)


def unit(r, i):
    """The simple root ``e_i`` (0-based ``i``) of rank ``r``."""
    return tuple(1 if j == i else 0 for j in range(r))


def leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def tuple_sum(alpha):
    """Coordinatewise sum of the parts of ``alpha``."""
    it = iter(alpha)
    total = list(next(it))
    for part in it:
        for i, x in enumerate(part):
            total[i] += x
    return tuple(total)


def prefix_sums(alpha):
    """``[alpha_1, alpha_1+alpha_2, ..., |alpha|]``."""
    out = []
    acc = None
    for part in alpha:
        acc = part if acc is None else tuple(x + y for x, y in zip(acc, part))
        out.append(acc)
    return out


def splits(alpha):
    """Yield ``(alpha_{<=k}, alpha_{>k})`` for ``k = 1, ..., n-1``."""
    ps = prefix_sums(alpha)
    total = ps[-1]
    for left in ps[:-1]:
        yield left, tuple(x - y for x, y in zip(total, left))


def blocks(cuts, n):
    """Half-open index ranges of the blocks of the surjection with these cuts."""
    edges = (0,) + tuple(cuts) + (n,)
    return [(edges[j], edges[j + 1]) for j in range(len(edges) - 1)]


def pushforward(alpha, cuts):
    """Block sums of ``alpha`` in block order."""
    return tuple(tuple_sum(alpha[i:j]) for i, j in blocks(cuts, len(alpha)))


def restrict(alpha, cuts, j):
    """The contiguous subtuple of ``alpha`` forming block ``j`` (1-based)."""
    i0, i1 = blocks(cuts, len(alpha))[j - 1]
    return alpha[i0:i1]


def surjections(n):
    """All cut sets of order-preserving surjections out of ``{1..n}``."""
    positions = range(1, n)
    for m in range(n):
        yield from combinations(positions, m)


def _below(gamma, max_part_degree):
    ranges = [range(x + 1) for x in gamma]
    for p in product(*ranges):
        if any(p) and (max_part_degree is None or sum(p) <= max_part_degree):
            yield p


def decompositions(gamma, min_parts=1, max_parts=None, max_part_degree=None):
    """Every ordered tuple of nonzero vectors summing to ``gamma``.

    Tuples come out in lexicographic order of their flattened entries, each
    exactly once, restricted to ``min_parts <= length <= max_parts``.
    """
    gamma = tuple(gamma)
    check_nonzero(gamma)
    parts = list(_below(gamma, max_part_degree))

    def rec(rest, prefix):
        if len(prefix) == max_parts:
            return
        for p in parts:
            if not leq(p, rest):
                continue
            new_rest = tuple(x - y for x, y in zip(rest, p))
            new_prefix = prefix + (p,)
            if not any(new_rest):
                if len(new_prefix) >= min_parts:
                    yield new_prefix
            else:
                yield from rec(new_rest, new_prefix)

    yield from rec(gamma, ())


def primitive(a):
    g = 0
    for x in a:
        g = gcd(g, x)
    if g == 0:
        raise ZeroVector("zero vector has no primitive part")
    return tuple(x // g for x in a)


def proportional(a, b):
    """True iff ``m a = n b`` for some positive integers ``m``, ``n``."""
    return primitive(a) == primitive(b)


def vectors_up_to(r, bound):
    """Nonzero vectors of rank ``r`` with total degree ``<= bound``.

    Ordered by total degree, then descending lexicographically, so the simple
    roots come first in index order.
    """
    out = []
    for d in range(1, bound + 1):
        level = [p for p in product(range(d + 1), repeat=r) if sum(p) == d]
        level.sort(reverse=True)
        out.extend(level)
    return out


def box(gamma):
    """Nonzero vectors ``<= gamma`` coordinatewise, lexicographic order."""
    return list(_below(tuple(gamma), None))


def grid(r, max_len, max_entry, min_len=1):
    """All tuples of length ``min_len..max_len`` whose parts have every entry ``<= max_entry``."""
    letters = [p for p in product(range(max_entry + 1), repeat=r) if any(p)]
    for n in range(min_len, max_len + 1):
        yield from product(letters, repeat=n)


def parse_vector(text):
    try:
        entries = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError("bad dimension vector %r" % text) from None
    if any(x < 0 for x in entries):
        raise ParseError("negative entry in %r" % text)
    return entries


def render_vector(a):
    return ",".join(str(x) for x in a)
