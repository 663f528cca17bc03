"""Stacky, rational and attractor DT invariants, wall-crossing and the attractor tree formula.

Every entry point takes a truncation ``bound`` on the total degree; the
returned :class:`~dtcol.collection.OneCollection` refuses degrees above it.
"""

from fractions import Fraction

from .collection import (Collection, OneCollection, exp_log_family, g_star, g_star_t, g_theta,
                         g_theta_t, hn, hn_inverse, ordered_twist, plethysm, star, transition)
from .errors import NotGeneric
from .exactalg import RatFunc, neg_y_power, y_power
from .semigroup import decompositions, degree, vectors_up_to
from .stability import is_generic, self_stability
from .trees import _tree_plans, plethystic_inverse

_ONE = Fraction(1)
_ZERO = Fraction(0)


def _bounded(H, bound, name=None):
    """``H`` restricted to total degree ``<= bound``."""

    def rule(gamma):
        if degree(gamma) > bound:
            raise ValueError("degree of %r exceeds the truncation bound %d" % (gamma, bound))
        return H(gamma)

    return OneCollection(rule, H.skew, name or H.name)


def stacky_dt(A, Z, bound):
    """``A_Z = s_Z^-1 * A``."""
    return _bounded(star(hn_inverse(Z), A), bound, "A_Z")


def stacky_dt_recursive(A, Z, bound):
    """``A_Z`` by solving ``A = s_Z * A_Z`` degree by degree.

    ``A(gamma)`` is the sum over HN types ``alpha`` of the ordered products
    ``x^{alpha_1} ... x^{alpha_n}`` weighted by ``A_Z(alpha_i)``; the length-1
    term is the unknown.
    """
    s = hn(Z)
    skew = A.skew
    memo = {}

    def rule(gamma):
        v = memo.get(gamma)
        if v is not None:
            return v
        total = A(gamma)
        for alpha in decompositions(gamma, min_parts=2):
            if not s(alpha):
                continue
            term = neg_y_power(ordered_twist(skew, alpha))
            for part in alpha:
                term = term * AZ(part)
                if not term:
                    break
            total = total - term
        memo[gamma] = total
        return total

    AZ = _bounded(OneCollection(rule, skew, "A_Z'"), bound)
    return AZ


def rational_dt(A, Z, bound):
    """``Abar_Z = g_Z * A`` with ``g_Z = log_Z o s_Z^-1``."""
    return _bounded(star(g_theta(Z), A), bound, "Abar_Z")


def attractor_dt(A, B, bound):
    """``Abar_* = g_* * A``."""
    return _bounded(star(g_star(B), A), bound, "Abar_*")


def self_stability_check(A, B, gamma):
    """``Abar_*(gamma)`` equals ``Abar_theta(gamma)`` for the self-stability ``theta = <-, gamma>``."""
    bound = degree(gamma)
    Z = self_stability(B, gamma)
    return rational_dt(A, Z, bound)(gamma) == attractor_dt(A, B, bound)(gamma)


def attractor_tree_collection(Z, B, t=0):
    """``F_{Z,t} = g_{Z,t} o T(1 - g_{*,t})``."""
    F = plethysm(g_theta_t(Z, t), plethystic_inverse(g_star_t(B, t)))
    F.name = "F_Z,%s" % Fraction(t)
    return F


def attractor_tree_sum(Z, B, t=0):
    """``F_{Z,t}`` as a sum over plane trees.

    Each tree contributes ``(-1)^{|V|-1} (g_{Z,t} - g_{*,t})`` at the root
    times ``g_{*,t}`` at every other internal vertex.
    """
    gz = g_theta_t(Z, t)
    gs = g_star_t(B, t)

    def rule(alpha):
        n = len(alpha)
        if n == 1:
            return _ONE
        ps = [tuple(0 for _ in alpha[0])]
        for part in alpha:
            ps.append(tuple(x + y for x, y in zip(ps[-1], part)))

        def children(vertex):
            return tuple(tuple(x - y for x, y in zip(ps[j], ps[i])) for i, j in vertex)

        total = _ZERO
        for plan in _tree_plans(n):
            root = children(plan[0])
            value = gz(root) - gs(root)
            for vertex in plan[1:]:
                if not value:
                    break
                value *= gs(children(vertex))
            total += value if len(plan) % 2 else -value
        return total

    return Collection(rule, "F'_Z,%s" % Fraction(t), cached=True)


def attractor_tree_eval(Abar_star, Z, B, t=0, bound=None, literal=False):
    """``Abar_Z = F_{Z,t} * Abar_*``; ``literal`` switches to the tree-sum evaluator."""
    F = attractor_tree_sum(Z, B, t) if literal else attractor_tree_collection(Z, B, t)
    H = star(F, Abar_star, "Abar_Z(tree)")
    return H if bound is None else _bounded(H, bound)


def wallcross_collection(Z, Z2):
    """``log_{Z'} o s_{Z->Z'} o exp_Z``."""
    return plethysm(exp_log_family("log_theta", Z2),
                    plethysm(transition(Z, Z2), exp_log_family("exp_theta", Z)))


def wallcross(Abar, Z, Z2, bound):
    """Rational invariants for ``Z'`` from those for ``Z``."""
    return _bounded(star(wallcross_collection(Z, Z2), Abar), bound, "Abar_Z'")


_OMEGA_FACTOR = y_power(-1) - y_power(1)


def omega_bar(c):
    """``(y^-1 - y) c``."""
    return _OMEGA_FACTOR * c


def omega_table(H, gammas):
    return {g: omega_bar(H(g)) for g in gammas}


class GradedSeries:
    """Truncated series ``sum c(gamma) x^gamma`` in the quantum affine plane.

    ``flavor`` is ``"group"`` for series ``1 + ...`` (the constant 1 is
    implicit) or ``"lie"`` for series without constant term.
    """

    def __init__(self, coeffs, skew, bound, flavor="lie"):
        if flavor not in ("group", "lie"):
            raise ValueError("flavor must be 'group' or 'lie'")
        self.coeffs = {tuple(g): c for g, c in coeffs.items() if degree(g) <= bound and c}
        self.skew = skew
        self.bound = bound
        self.flavor = flavor

    def __repr__(self):
        return "GradedSeries(%s, %d terms, bound %d)" % (self.flavor, len(self.coeffs), self.bound)

    def __eq__(self, other):
        return (isinstance(other, GradedSeries) and self.flavor == other.flavor
                and self.coeffs == other.coeffs)

    def _mul_parts(self, a, b):
        """Product of two constant-free parts."""
        out = {}
        for ga, ca in a.items():
            for gb, cb in b.items():
                g = tuple(x + y for x, y in zip(ga, gb))
                if degree(g) > self.bound:
                    continue
                term = neg_y_power(self.skew.pair(ga, gb)) * ca * cb
                out[g] = out.get(g, RatFunc()) + term
        return out

    def log(self):
        """``log(1 + x) = sum_{k>=1} (-1)^{k-1} x^k / k`` for a group-like series."""
        if self.flavor != "group":
            raise ValueError("log needs a group-like series")
        x = self.coeffs
        total = dict(x)
        power = x
        k = 1
        while power:
            k += 1
            power = self._mul_parts(power, x)
            c = Fraction((-1) ** (k - 1), k)
            for g, v in power.items():
                total[g] = total.get(g, RatFunc()) + v * c
        return GradedSeries(total, self.skew, self.bound, "lie")

    def exp(self):
        """``exp(x) = 1 + sum_{k>=1} x^k / k!`` for a series without constant term."""
        if self.flavor != "lie":
            raise ValueError("exp needs a series without constant term")
        x = self.coeffs
        total = dict(x)
        power = x
        k = 1
        fact = 1
        while power:
            k += 1
            fact *= k
            power = self._mul_parts(power, x)
            for g, v in power.items():
                total[g] = total.get(g, RatFunc()) + v * Fraction(1, fact)
        return GradedSeries(total, self.skew, self.bound, "group")


def rays(Z, bound):
    """Degrees up to ``bound`` grouped by the exact slope of ``Z``."""
    out = {}
    for g in vectors_up_to(Z.rank, bound):
        out.setdefault(Z.ray_key(g), []).append(g)
    return out


def series_log_check(A, Z, bound):
    """For generic ``Z``: on every ray, ``log(1 + sum A_Z) = sum Abar_Z``.

    ``A`` is the stacky generating collection; ``A_Z`` and ``Abar_Z`` are
    derived from it through :func:`stacky_dt` and :func:`rational_dt`.
    """
    witness = is_generic(Z, bound)
    if witness is not True:
        raise NotGeneric("charge %r is not generic up to degree %d: %r" % (Z, bound, witness))
    AZ = stacky_dt(A, Z, bound)
    AbarZ = rational_dt(A, Z, bound)
    for ray in rays(Z, bound).values():
        series = GradedSeries({g: AZ(g) for g in ray}, A.skew, bound, "group")
        logged = series.log()
        for g in ray:
            if logged.coeffs.get(g, RatFunc()) != AbarZ(g):
                return False
    return True


def attractor_series_check(A, B, bound):
    """``A_*(n e_i) = exp_par * Abar_*`` at multiples of simple roots.

    Returns the pairs ``(gamma, value)`` of the recombined series.
    """
    abar = attractor_dt(A, B, bound)
    recombined = star(exp_log_family("exp_par"), abar, "A_*")
    out = {}
    for i in range(B.rank):
        for n in range(1, bound + 1):
            g = tuple(n if j == i else 0 for j in range(B.rank))
            out[g] = recombined(g)
    return out


def is_simple_multiple(gamma):
    return sum(1 for x in gamma if x) == 1
