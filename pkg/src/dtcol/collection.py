"""Collections ``F: S^* -> Q``, plethysm, the bar map and the star action.

A :class:`Collection` is an evaluation rule on tuples of dimension vectors.
Named collections (HN, exp/log, geometric, ...) are closed-form rules;
composite ones (plethysm, free construction) memoize their values.
"""

from contextlib import contextmanager
from fractions import Fraction
from math import factorial, gcd

from . import batch as _b
from .exactalg import LaurentPoly, RatFunc
from .semigroup import decompositions, prefix_sums, proportional, splits
from .stability import EQUAL, GREATER, LESS

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Collection:
    """A rational-valued function on nonempty tuples of dimension vectors.

    ``supported_ge2`` records that the rule vanishes on every length-1 tuple.
    ``batch_rule``, when given, evaluates a whole :class:`~dtcol.batch.TupleBatch`
    at once and must agree with ``rule`` row by row.
    """

    caching = True

    def __init__(self, rule, name="", cached=False, supported_ge2=False, batch_rule=None):
        self.rule = rule
        self.name = name
        self.supported_ge2 = supported_ge2
        self.batch_rule = batch_rule
        self._memo = {} if cached else None

    def __repr__(self):
        return "Collection(%s)" % (self.name or "?")

    def __call__(self, alpha):
        memo = self._memo
        if memo is None or not Collection.caching:
            return self.rule(alpha)
        v = memo.get(alpha)
        if v is None:
            v = self.rule(alpha)
            memo[alpha] = v
        return v

    def evaluate_batch(self, tb):
        return _b.evaluate(self, tb)

    def clear_cache(self):
        if self._memo is not None:
            self._memo.clear()

    def __add__(self, other):
        return col_add(self, other)

    def __sub__(self, other):
        return col_sub(self, other)

    def __neg__(self):
        return col_scale(self, -1)

    def __mul__(self, c):
        return col_scale(self, c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        return plethysm(self, other)


@contextmanager
def caching_disabled():
    """Evaluate every collection from its rule while the block is active."""
    old = Collection.caching
    Collection.caching = False
    try:
        yield
    finally:
        Collection.caching = old


def col_add(F, G):
    return Collection(lambda a: F(a) + G(a), "(%s+%s)" % (F.name, G.name),
                      supported_ge2=F.supported_ge2 and G.supported_ge2,
                      batch_rule=lambda tb: _b.evaluate(F, tb) + _b.evaluate(G, tb))


def col_sub(F, G):
    return Collection(lambda a: F(a) - G(a), "(%s-%s)" % (F.name, G.name),
                      supported_ge2=F.supported_ge2 and G.supported_ge2,
                      batch_rule=lambda tb: _b.evaluate(F, tb) - _b.evaluate(G, tb))


def col_scale(F, c):
    c = Fraction(c)
    return Collection(lambda a: c * F(a), "%s*%s" % (c, F.name), supported_ge2=F.supported_ge2,
                      batch_rule=lambda tb: _b.evaluate(F, tb) * c)


def _by_length(values):
    """Batch rule for a collection whose value depends only on the tuple length."""
    return lambda tb: _b.QArray.full(tb.N, values(tb.n))


def identity_collection():
    return Collection(lambda a: _ONE if len(a) == 1 else _ZERO, "1",
                      batch_rule=_by_length(lambda n: _ONE if n == 1 else _ZERO))


def constant_collection(c):
    c = Fraction(c)
    return Collection(lambda a: c, str(c), batch_rule=_by_length(lambda n: c))


def plethysm(F, G):
    """``(F o G)(alpha) = sum_pi F(pi_* alpha) prod_j G(alpha|_{pi^-1 j})``.

    The sum runs over order-preserving surjections, enumerated block by block
    from the left; a zero block value prunes every surjection extending it.
    """

    def rule(alpha):
        n = len(alpha)
        ps = [tuple(0 for _ in alpha[0])] + prefix_sums(alpha)
        total = _ZERO
        stack = [(0, (), _ONE)]
        while stack:
            i, pushed, weight = stack.pop()
            if i == n:
                f = F(pushed)
                if f:
                    total += f * weight
                continue
            left = ps[i]
            for j in range(i + 1, n + 1):
                g = G(alpha[i:j])
                if g:
                    block = tuple(x - y for x, y in zip(ps[j], left))
                    stack.append((j, pushed + (block,), weight * g))
        return total

    def batch_rule(tb):
        n = tb.n
        total = _b.QArray.zeros(tb.N)
        blocks_seen = {}
        # depth-first over block boundaries, sharing prefixes of the G-product
        stack = [(0, (), None)]
        while stack:
            i, spans, weight = stack.pop()
            if i == n:
                f = _b.evaluate(F, tb.merge(spans))
                total = total + (f if weight is None else f * weight)
                continue
            for j in range(i + 1, n + 1):
                g = blocks_seen.get((i, j))
                if g is None:
                    g = _b.evaluate(G, tb.sub(i, j))
                    blocks_seen[(i, j)] = g
                w = g if weight is None else weight * g
                if w.any():
                    stack.append((j, spans + ((i, j),), w))
        return total

    return Collection(rule, "(%s o %s)" % (F.name, G.name), cached=True, batch_rule=batch_rule)


def plethysm_by_cuts(F, G):
    """Same as :func:`plethysm`, summing literally over all cut sets; used as an oracle."""
    from .semigroup import pushforward, restrict, surjections

    def rule(alpha):
        total = _ZERO
        for cuts in surjections(len(alpha)):
            term = F(pushforward(alpha, cuts))
            for j in range(1, len(cuts) + 2):
                if not term:
                    break
                term *= G(restrict(alpha, cuts, j))
            total += term
        return total

    return Collection(rule, "(%s o' %s)" % (F.name, G.name))


def bar_eval(F, gamma, bound=None):
    """``sum_{|alpha| = gamma} F(alpha)``."""
    if bound is not None and sum(gamma) > bound:
        raise ValueError("gamma exceeds the degree bound")
    return sum((F(a) for a in decompositions(gamma)), _ZERO)


class OneCollection:
    """Coefficients ``gamma -> c(gamma)`` of ``x^gamma`` in the quantum affine plane.

    Multiplication of monomials is ``x^a x^b = (-y)^<a,b> x^(a+b)`` for the
    attached skew form.
    """

    def __init__(self, rule, skew, name=""):
        self.rule = rule
        self.skew = skew
        self.name = name
        self._memo = {}

    @property
    def rank(self):
        return self.skew.rank

    def __repr__(self):
        return "OneCollection(%s)" % (self.name or "?")

    def __call__(self, gamma):
        gamma = tuple(gamma)
        v = self._memo.get(gamma)
        if v is None:
            v = self.rule(gamma)
            if not isinstance(v, RatFunc):
                v = RatFunc(v)
            self._memo[gamma] = v
        return v

    def table(self, gammas):
        return {g: self(g) for g in gammas}

    @classmethod
    def from_values(cls, values, skew, name=""):
        values = {tuple(k): v for k, v in values.items()}
        return cls(lambda g: values.get(g, RatFunc()), skew, name)

    def map(self, fn, name=""):
        return OneCollection(lambda g: fn(self(g)), self.skew, name or self.name)


def ordered_twist(skew, alpha):
    """Exponent ``e`` with ``x^a1 ... x^an = (-y)^e x^|alpha|``."""
    if skew.is_zero():
        return 0
    e = 0
    acc = None
    for part in alpha:
        if acc is not None:
            e += skew.pair(acc, part)
            acc = tuple(x + y for x, y in zip(acc, part))
        else:
            acc = part
    return e


def star_at(F, H, gamma):
    """``(F * H)(gamma)``: ordered products of ``H`` weighted by ``F``.

    Terms sharing the same multiset of parts share the product of their
    coefficients, so they are grouped first and only the twist exponents are
    accumulated per group.
    """
    skew = H.skew
    groups = {}
    for alpha in decompositions(gamma):
        if any(not H(p) for p in alpha):
            continue
        c = F(alpha)
        if not c:
            continue
        e = ordered_twist(skew, alpha)
        key = tuple(sorted(alpha))
        acc = groups.setdefault(key, {})
        signed = c if e % 2 == 0 else -c
        acc[e] = acc.get(e, _ZERO) + signed
    total = RatFunc()
    for key, acc in groups.items():
        poly = LaurentPoly(acc)
        if poly.is_zero():
            continue
        prod = RatFunc(poly)
        for p in key:
            prod = prod * H(p)
        total = total + prod
    return total


def star(F, H, name=""):
    """The 1-collection ``F * H``."""
    return OneCollection(lambda g: star_at(F, H, g), H.skew, name or "%s*%s" % (F.name, H.name))


# -- named collections ------------------------------------------------------
#
# Every closed form below depends on alpha only through a few sign
# sequences: comparisons of adjacent parts, or of the partial sums
# alpha_{<=k} and alpha_{>k}.  The value is a function of those signs, which
# lets the batch rule evaluate it once per distinct sign pattern.


def _split_signs(alpha, cmp):
    return [cmp(left, right) for left, right in splits(alpha)]


def _adjacent_signs(alpha, cmp):
    return [cmp(a, b) for a, b in zip(alpha, alpha[1:])]


def _skew_sign(B):
    def cmp(a, b):
        v = B.pair(a, b)
        return (v > 0) - (v < 0)
    return cmp


def _parallel_sign(a, b):
    return EQUAL if proportional(a, b) else GREATER


def _order(obj):
    """``(scalar comparison, batch comparison)`` for a charge, a skew form or ``None`` (parallelism)."""
    if obj is None:
        return _parallel_sign, _PARALLEL
    batch_cmp = getattr(obj, "_batch_cmp", None)
    if hasattr(obj, "compare"):
        if batch_cmp is None:
            batch_cmp = obj._batch_cmp = _b.ChargeCmp(obj)
        return obj.compare, batch_cmp
    if batch_cmp is None:
        batch_cmp = obj._batch_cmp = _b.SkewCmp(obj)
    return _skew_sign(obj), batch_cmp


_PARALLEL = _b.ParallelCmp()


def _sign_collection(name, specs, fn):
    """Collection ``alpha -> fn(signs_1, ..., signs_k)``.

    ``specs`` lists ``(kind, order)`` with ``kind`` either ``"adjacent"`` or
    ``"split"`` and ``order`` as accepted by :func:`_order`.
    """
    orders = [(kind, _order(obj)) for kind, obj in specs]

    def rule(alpha):
        groups = []
        for kind, (cmp, _) in orders:
            signs = _adjacent_signs(alpha, cmp) if kind == "adjacent" else _split_signs(alpha, cmp)
            groups.append(tuple(signs))
        return fn(*groups)

    def batch_rule(tb):
        groups = []
        for kind, (_, bcmp) in orders:
            groups.append(tb.adjacent_signs(bcmp) if kind == "adjacent" else tb.split_signs(bcmp))
        return _b.table_apply(groups, fn, tb.N)

    return Collection(rule, name, batch_rule=batch_rule)


def _hn_value(adjacent):
    return _ONE if all(c == GREATER for c in adjacent) else _ZERO


def _hn_inverse_value(split):
    if any(c != GREATER for c in split):
        return _ZERO
    return _ONE if len(split) % 2 == 0 else -_ONE


def _transition_value(adjacent, partial):
    prod = _ONE
    for a, p in zip(adjacent, partial):
        if a != GREATER and p == GREATER:
            prod = -prod
        elif not (a == GREATER and p != GREATER):
            return _ZERO
    return prod


def hn(Z):
    """1 on strictly slope-decreasing tuples, else 0."""
    return _sign_collection("s", [("adjacent", Z)], _hn_value)


def hn_inverse(Z):
    """``(-1)^(n-1)`` if every split has ``alpha_{<=k} > alpha_{>k}``, else 0."""
    return _sign_collection("s^-1", [("split", Z)], _hn_inverse_value)


def transition(Z, Z2):
    """Closed form of ``hn_inverse(Z2) o hn(Z)`` as a product of signs ``eps_k``.

    ``eps_k`` is -1 when ``alpha_k <= alpha_{k+1}`` for ``Z`` but the split
    at ``k`` is descending for ``Z2``, +1 in the opposite situation, and 0
    otherwise.
    """
    return _sign_collection("s_Z->Z'", [("adjacent", Z), ("split", Z2)], _transition_value)


def exp_log_family(kind, Z=None):
    """``exp``, ``log`` and their parallel (``_par``) and slope-class (``_theta``) variants."""
    base, _, variant = kind.partition("_")
    if base == "exp":
        value = lambda n: Fraction(1, factorial(n))
    elif base == "log":
        value = lambda n: Fraction((-1) ** (n - 1), n)
    else:
        raise ValueError("unknown kind %r" % kind)
    if variant == "":
        return Collection(lambda a: value(len(a)), kind, batch_rule=_by_length(value))
    if variant == "par":
        order = None
    elif variant == "theta":
        if Z is None:
            raise ValueError("%s needs a central charge" % kind)
        order = Z
    else:
        raise ValueError("unknown kind %r" % kind)

    # equivalence is transitive, so checking neighbours is enough
    def fn(adjacent):
        if any(adjacent):
            return _ZERO
        return value(len(adjacent) + 1)

    return _sign_collection(kind, [("adjacent", order)], fn)


def geometric(t):
    t = Fraction(t)
    value = lambda n: t ** (n - 1)
    return Collection(lambda a: value(len(a)), "sigma_%s" % t, batch_rule=_by_length(value))


def _g_zero_t(signs):
    n_minus = signs.count(LESS)
    if n_minus:
        return _ZERO
    n0 = signs.count(EQUAL)
    return Fraction((-1) ** len(signs), n0 + 1)


def _g_general_t(signs, t):
    n_plus = signs.count(GREATER)
    n_minus = signs.count(LESS)
    n0 = len(signs) - n_plus - n_minus
    return t ** n_minus * (t - 1) ** n_plus * (t ** (n0 + 1) - (t - 1) ** (n0 + 1)) / (n0 + 1)


def _runs_value(adjacent):
    value = _ONE
    run = 1
    for c in adjacent:
        if c == LESS:
            return _ZERO
        if c == EQUAL:
            run += 1
        else:
            value /= factorial(run)
            run = 1
    return value / factorial(run)


def g_theta(Z):
    """``log_Z o s_Z^-1``: ``(-1)^(n-1)/(n0+1)`` when no split has ``alpha_{<=k} < alpha_{>k}``."""
    return _sign_collection("g_Z", [("split", Z)], _g_zero_t)


def g_theta_inv(Z):
    """``s_Z o exp_Z``: product of ``1/run!`` over maximal slope-equal runs of a non-increasing tuple."""
    return _sign_collection("g_Z^-1", [("adjacent", Z)], _runs_value)


def hn_inv_geometric(Z, t):
    """``s_Z^-1 o sigma_t``: ``t^(n-1-n_+) (t-1)^(n_+)``."""
    t = Fraction(t)

    def fn(split):
        n_plus = split.count(GREATER)
        return t ** (len(split) - n_plus) * (t - 1) ** n_plus

    return _sign_collection("s^-1 o sigma_%s" % t, [("split", Z)], fn)


def g_theta_t(Z, t):
    t = Fraction(t)
    return _sign_collection("g_Z,%s" % t, [("split", Z)], lambda s: _g_general_t(s, t))


def g_star(B):
    """Attractor collection: :func:`g_theta` with splits ordered by the sign of ``<alpha_{<=k}, alpha_{>k}>``."""
    return _sign_collection("g_*", [("split", B)], _g_zero_t)


def g_star_t(B, t):
    t = Fraction(t)
    return _sign_collection("g_*,%s" % t, [("split", B)], lambda s: _g_general_t(s, t))


_HASH_MOD = 2 ** 31 - 1


def _mix(h, x):
    return (h * 1000003 + x + 1) % _HASH_MOD


def pseudorandom_collection(seed, supported_ge2=True, spread=3, max_den=4):
    """Deterministic rational values from an integer hash of ``(seed, alpha)``.

    Values are ``k / d`` with ``|k| <= spread`` and ``1 <= d <= max_den``.  The
    hash uses only integer arithmetic below ``2^62`` so the batch rule can
    reproduce it in int64.
    """
    seed = int(seed)

    def finish(h):
        h = (h * 48271) % _HASH_MOD
        h = (h * 48271) % _HASH_MOD
        return h % (2 * spread + 1) - spread, 1 + (h // (2 * spread + 1)) % max_den

    def rule(alpha):
        if supported_ge2 and len(alpha) == 1:
            return _ZERO
        h = _mix(seed % _HASH_MOD, len(alpha))
        for part in alpha:
            for x in part:
                h = _mix(h, x)
        k, d = finish(h)
        return Fraction(k, d)

    def batch_rule(tb):
        if supported_ge2 and tb.n == 1:
            return _b.QArray.zeros(tb.N)
        h = _b.np.full(tb.N, _mix(seed % _HASH_MOD, tb.n), dtype=_b.np.int64)
        for k in range(tb.n):
            part = tb.part(k)
            for row in part:
                h = _mix(h, row)
        k, d = finish(h)
        den = 1
        for j in range(1, max_den + 1):
            den = den * j // gcd(den, j)
        return _b.QArray(k * (den // d), den)._reduced()

    return Collection(rule, "rand%s" % seed, cached=True, supported_ge2=supported_ge2,
                      batch_rule=batch_rule)


def agree_on(F, G, tuples):
    """First tuple where ``F`` and ``G`` differ, or ``None``."""
    for alpha in tuples:
        if F(alpha) != G(alpha):
            return alpha
    return None
