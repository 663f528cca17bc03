"""Words, Lie brackets and the flow tree formula.

A word is a tuple of letters; letters are dimension vectors in the DT
setting but any totally ordered hashable values work for the purely
combinatorial functions (Lyndon words, the Dynkin map).
"""

from fractions import Fraction
from itertools import permutations
from math import factorial
import random
from collections import Counter

from .collection import Collection
from .errors import NotLyndon
from .exactalg import RatFunc, neg_y_power, y_power
from .semigroup import decompositions, tuple_sum
from .stability import PerturbedScalar
from .trees import enumerate_binary, is_leaf, leaves

_ZERO = Fraction(0)


class WordCombo:
    """A finite rational combination of words (the free associative algebra)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for w, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                out[tuple(w)] = out.get(tuple(w), _ZERO) + c
        self.terms = {w: c for w, c in out.items() if c}

    @classmethod
    def word(cls, w, c=1):
        return cls({tuple(w): c})

    @classmethod
    def letter(cls, a):
        return cls({(a,): 1})

    def __repr__(self):
        return "WordCombo(%r)" % (self.terms,)

    def __eq__(self, other):
        return isinstance(other, WordCombo) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, _ZERO) + c
        return WordCombo(out)

    def __neg__(self):
        return WordCombo({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Concatenation product, or scaling by a number."""
        if not isinstance(other, WordCombo):
            c = Fraction(other)
            return WordCombo({w: c * v for w, v in self.terms.items()})
        out = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                out[u + v] = out.get(u + v, _ZERO) + a * b
        return WordCombo(out)

    def __rmul__(self, c):
        return self * c

    def components(self):
        """Split by word length: ``{n: combo}``."""
        out = {}
        for w, c in self.terms.items():
            out.setdefault(len(w), {})[w] = c
        return {n: WordCombo(t) for n, t in sorted(out.items())}


def bracket(u, v):
    return u * v - v * u


def dynkin_map(v):
    """Linear map sending ``a_1 ... a_n`` to the left-nested ``[[...[a_1, a_2], ...], a_n]``."""
    out = WordCombo()
    for w, c in v.terms.items():
        acc = WordCombo.letter(w[0])
        for a in w[1:]:
            x = WordCombo.letter(a)
            acc = acc * x - x * acc
        out = out + acc * c
    return out


def is_lie(v):
    """Dynkin-Specht-Wever: every length-``n`` component ``c`` satisfies ``D(c) = n c``."""
    return all(dynkin_map(c) == c * n for n, c in v.components().items())


def is_lyndon(w):
    """Strictly smaller than each of its proper suffixes."""
    w = tuple(w)
    return len(w) >= 1 and all(w < w[i:] for i in range(1, len(w)))


def lyndon_words(alphabet, maxlen):
    """Lyndon words of length ``<= maxlen`` in lexicographic order (Duval's algorithm)."""
    letters = sorted(alphabet)
    k = len(letters)
    if k == 0 or maxlen < 1:
        return []
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        out.append(tuple(letters[i] for i in w))
        m = len(w)
        while len(w) < maxlen:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
    return out


def standard_factorization(w):
    """``w = u v`` with ``v`` the longest proper suffix that is a Lyndon word."""
    w = tuple(w)
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise NotLyndon("%r has no proper factorization" % (w,))


def lyndon_tree(w):
    """Binary bracketing tree of a Lyndon word, letters at the leaves."""
    w = tuple(w)
    if not is_lyndon(w):
        raise NotLyndon("%r is not a Lyndon word" % (w,))
    if len(w) == 1:
        return w[0]
    u, v = standard_factorization(w)
    return (lyndon_tree(u), lyndon_tree(v))


def lyndon_bracket(w):
    """Expanded Lyndon-Shirshov basis element ``b(w)``."""
    w = tuple(w)
    if not is_lyndon(w):
        raise NotLyndon("%r is not a Lyndon word" % (w,))
    if len(w) == 1:
        return WordCombo.letter(w[0])
    u, v = standard_factorization(w)
    return bracket(lyndon_bracket(u), lyndon_bracket(v))


def tree_bracket(T, alpha):
    """``pi(T, alpha)`` expanded as words: brackets at the vertices of a binary tree."""
    if is_leaf(T):
        return WordCombo.letter(alpha[T - 1])
    left, right = T
    return bracket(tree_bracket(left, alpha), tree_bracket(right, alpha))


# -- collections as elements of the completed free algebra -------------------

def collection_component(F, gamma):
    """Degree-``gamma`` part of ``F`` as a word combination."""
    return WordCombo({alpha: F(alpha) for alpha in decompositions(gamma)})


def collection_from_combo(v, name="W"):
    """The collection whose value on ``alpha`` is the coefficient of the word ``alpha``."""
    terms = dict(v.terms)
    return Collection(lambda a: terms.get(a, _ZERO), name)


def random_lie_combo(alphabet, max_degree, seed, letters=True, spread=3):
    """Seeded combination of Lyndon-Shirshov basis elements of total degree ``<= max_degree``."""
    rng = random.Random(seed)
    out = WordCombo()
    for w in lyndon_words(alphabet, max_degree):
        if sum(sum(a) for a in w) > max_degree:
            continue
        if len(w) == 1 and not letters:
            continue
        c = Fraction(rng.randint(-spread, spread), rng.randint(1, 3))
        if c:
            out = out + lyndon_bracket(w) * c
    return out


# -- brackets in the quantum affine plane ------------------------------------

def bracket_eval(T, alpha, skew, coeffs=None):
    """Evaluate ``pi(T, alpha)`` in the quantum affine plane.

    Returns ``(gamma, c)`` meaning ``c x^gamma``.  Leaves carry ``coeffs[i]``
    (default 1); ``[c_u x^a, c_v x^b] = c_u c_v ((-y)^<a,b> - (-y)^<b,a>) x^(a+b)``.
    """
    if coeffs is None:
        coeffs = [RatFunc(1)] * len(alpha)

    def rec(node):
        if is_leaf(node):
            return alpha[node - 1], coeffs[node - 1]
        (ga, ca), (gb, cb) = rec(node[0]), rec(node[1])
        m = skew.pair(ga, gb)
        c = ca * cb * (neg_y_power(m) - neg_y_power(-m)) if m else RatFunc()
        return tuple(x + y for x, y in zip(ga, gb)), c

    return rec(T)


_Y_FACTOR = y_power(-1) - y_power(1)


def kappa(m):
    """``((-y)^m - (-y)^-m) / (y^-1 - y)``."""
    return (neg_y_power(m) - neg_y_power(-m)) / _Y_FACTOR


# -- flow trees ---------------------------------------------------------------

def _vertex_vectors(T, n):
    """Per internal vertex (pre-order): indicator vectors ``e'_v``, ``e''_v``, ``e_v`` on ``Z^n``."""
    out = []

    def indicator(node):
        v = [0] * n
        for i in leaves(node):
            v[i - 1] = 1
        return tuple(v)

    def rec(node, parent_index):
        if is_leaf(node):
            return
        index = len(out)
        out.append((indicator(node[0]), indicator(node[1]), indicator(node), parent_index))
        rec(node[0], index)
        rec(node[1], index)

    rec(T, None)
    return out


def perturbed_theta(alpha, sigma, Z):
    """``theta^sigma(e_i) = theta'(alpha_{sigma i}) + eps_{sigma i} - mean(eps)``.

    ``sigma`` is a tuple of 0-based slots; ``eps`` are attached to the slots
    of ``alpha``.
    """
    n = len(alpha)
    total = tuple_sum(alpha)
    mu = Z.slope(total)
    mean = Fraction(1, n)
    out = []
    for i in range(n):
        a = alpha[sigma[i]]
        const = Z.theta_of(a) - mu * Z.rho_of(a)
        eps = [-mean] * n
        eps[sigma[i]] += 1
        out.append(PerturbedScalar.make(const, eps))
    return out


def _apply(theta, v):
    acc = PerturbedScalar.zero(len(theta[0].eps_coeffs))
    for t, c in zip(theta, v):
        if c:
            acc = acc + t * c
    return acc


def flow_tree_coeff(T, alpha, sigma, Z, B):
    """The coefficient ``eps_Z(T, alpha, sigma)`` in ``{0, 1}``.

    Walks the binary tree from the root, keeping the linear form ``theta_p``
    of the parent as its values on the basis of ``Z^n``.  At each vertex the
    pairing ``<e'_v, e''_v>`` must be positive and ``theta_p(e'_v) <
    theta_p(e''_v)``; exact ties raise :class:`~dtcol.errors.NonGeneric`.
    """
    n = len(alpha)
    if len(leaves(T)) != n:
        raise ValueError("leaf count does not match the tuple length")
    if n == 1:
        return 1
    perm = [alpha[s] for s in sigma]
    gram = [[B.pair(a, b) for b in perm] for a in perm]

    def pairing(u, v):
        return sum(u[i] * gram[i][j] * v[j] for i in range(n) if u[i] for j in range(n) if v[j])

    verts = _vertex_vectors(T, n)
    thetas = [None] * len(verts)
    root_theta = perturbed_theta(alpha, sigma, Z)
    for index, (e1, e2, ev, parent) in enumerate(verts):
        theta_p = root_theta if parent is None else thetas[parent]
        m = pairing(e1, e2)
        if m <= 0:
            return 0
        t1 = _apply(theta_p, e1)
        if not t1 < _apply(theta_p, e2):
            return 0
        # theta_v = theta_p - theta_p(e'_v) / <e'_v, e_v> * <-, e_v>
        scale = t1 / m
        thetas[index] = [theta_p[i] - scale * pairing(tuple(1 if k == i else 0 for k in range(n)), ev)
                         for i in range(n)]
    return 1


def multiset_representatives(gamma):
    """One tuple per multiset ``[alpha]`` with ``|alpha| = gamma``: the sorted arrangement."""
    for alpha in decompositions(gamma):
        if list(alpha) == sorted(alpha):
            yield alpha


def automorphisms(alpha):
    out = 1
    for m in Counter(alpha).values():
        out *= factorial(m)
    return out


def _flow_terms(omega_star, Z, B, gamma):
    """Yield ``(weight, T, alpha^sigma, prod Omega_*)`` for every contributing flow tree."""
    for alpha in multiset_representatives(gamma):
        n = len(alpha)
        weights = [omega_star(a) for a in alpha]
        if any(not w for w in weights):
            continue
        prod = RatFunc(1)
        for w in weights:
            prod = prod * w
        aut = Fraction(1, automorphisms(alpha))
        trees = enumerate_binary(n)
        for sigma in permutations(range(n)):
            perm = tuple(alpha[s] for s in sigma)
            for T in trees:
                if flow_tree_coeff(T, alpha, sigma, Z, B):
                    yield aut, T, perm, prod


def flow_tree_dt(omega_star, Z, B, gamma, bound=None):
    """``Omega_Z(gamma)`` from attractor indices ``omega_star`` by the flow tree formula.

    ``omega_star`` maps a dimension vector to its ``Omega_*`` value.
    """
    if bound is not None and sum(gamma) > bound:
        raise ValueError("gamma exceeds the degree bound")
    total = RatFunc()
    for aut, T, perm, prod in _flow_terms(omega_star, Z, B, gamma):
        k = RatFunc(1)
        for (ga, gb) in _children_degrees(T, perm):
            k = k * kappa(B.pair(ga, gb))
        total = total + k * prod * aut
    return total


def flow_tree_dt_brackets(omega_star, Z, B, gamma, bound=None):
    """Same value as :func:`flow_tree_dt`, through :func:`bracket_eval` of ``pi(T, alpha^sigma)``."""
    if bound is not None and sum(gamma) > bound:
        raise ValueError("gamma exceeds the degree bound")
    total = RatFunc()
    for aut, T, perm, _ in _flow_terms(omega_star, Z, B, gamma):
        coeffs = [omega_star(a) / _Y_FACTOR for a in perm]
        g, c = bracket_eval(T, perm, B, coeffs)
        total = total + c * aut
    return total * _Y_FACTOR


def _children_degrees(T, alpha):
    """``(alpha_{v_1}, alpha_{v_2})`` for every internal vertex of a binary tree."""
    out = []

    def rec(node):
        if is_leaf(node):
            return alpha[node - 1]
        a, b = rec(node[0]), rec(node[1])
        out.append((a, b))
        return tuple(x + y for x, y in zip(a, b))

    rec(T)
    return out


__all__ = [
    "WordCombo", "bracket", "dynkin_map", "is_lie", "is_lyndon", "lyndon_words",
    "standard_factorization", "lyndon_tree", "lyndon_bracket", "tree_bracket",
    "collection_component", "collection_from_combo", "random_lie_combo", "bracket_eval", "kappa",
    "perturbed_theta", "flow_tree_coeff", "multiset_representatives", "automorphisms",
    "flow_tree_dt", "flow_tree_dt_brackets",
]
