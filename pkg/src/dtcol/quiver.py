"""Quivers, their Euler and skew forms, and the stacky generating collection ``A``."""

from .collection import OneCollection
from .errors import ParseError, RankMismatch
from .exactalg import LaurentPoly, RatFunc, neg_y_power, y_power
from .stability import SkewForm


class Quiver:
    """``vertex_count`` vertices and a list of arrows ``(i, j)``, 1-indexed."""

    def __init__(self, vertex_count, arrows=()):
        self.vertex_count = int(vertex_count)
        if self.vertex_count < 1:
            raise ValueError("a quiver needs at least one vertex")
        arrows = [(int(i), int(j)) for i, j in arrows]
        for i, j in arrows:
            if not (1 <= i <= self.vertex_count and 1 <= j <= self.vertex_count):
                raise ValueError("arrow %d -> %d leaves the vertex range" % (i, j))
        self.arrows = tuple(arrows)

    @property
    def rank(self):
        return self.vertex_count

    def __repr__(self):
        return "Quiver(%d, %r)" % (self.vertex_count, list(self.arrows))

    @classmethod
    def kronecker(cls, m):
        """``m`` arrows from vertex 1 to vertex 2."""
        return cls(2, [(1, 2)] * m)

    @classmethod
    def loops(cls, m):
        """One vertex with ``m`` loops."""
        return cls(1, [(1, 1)] * m)

    @classmethod
    def parse(cls, text):
        """Read ``vertices r`` followed by ``arrow i j`` lines; ``#`` starts a comment."""
        r = None
        arrows = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            words = line.split()
            try:
                if words[0] == "vertices" and len(words) == 2 and r is None:
                    r = int(words[1])
                elif words[0] == "arrow" and len(words) == 3 and r is not None:
                    arrows.append((int(words[1]), int(words[2])))
                else:
                    raise ParseError("line %d: unexpected %r" % (lineno, line))
            except ValueError as exc:
                if isinstance(exc, ParseError):
                    raise
                raise ParseError("line %d: bad number in %r" % (lineno, line)) from None
        if r is None:
            raise ParseError("missing 'vertices' line")
        try:
            return cls(r, arrows)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.parse(fh.read())

    def render(self):
        lines = ["vertices %d" % self.vertex_count]
        lines += ["arrow %d %d" % a for a in self.arrows]
        return "\n".join(lines) + "\n"

    def check_rank(self, v, what="vector"):
        if len(v) != self.vertex_count:
            raise RankMismatch("%s %r has rank %d, quiver has %d vertices"
                               % (what, v, len(v), self.vertex_count))
        return v


def euler_form(Q):
    """Matrix ``M`` with ``chi(a, b) = a^T M b = sum a_i b_i - sum_{i->j} a_i b_j``."""
    r = Q.vertex_count
    m = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    for i, j in Q.arrows:
        m[i - 1][j - 1] -= 1
    return tuple(tuple(row) for row in m)


def chi(Q, a, b):
    m = euler_form(Q)
    return sum(a[i] * m[i][j] * b[j] for i in range(len(a)) for j in range(len(b)))


def skew_form(Q):
    """``<a, b> = chi(a, b) - chi(b, a)``."""
    m = euler_form(Q)
    r = Q.vertex_count
    return SkewForm([[m[i][j] - m[j][i] for j in range(r)] for i in range(r)])


def poincare_gl(n):
    """Virtual Poincare polynomial of ``GL_n``: ``prod_{k<n} (y^{2n} - y^{2k})``; 1 for ``n = 0``."""
    p = LaurentPoly.constant(1)
    for k in range(n):
        p = p * LaurentPoly({2 * n: 1, 2 * k: -1})
    return p


def rep_dim(Q, gamma):
    """Dimension of the representation space ``R(Q, gamma)``: ``sum_{i->j} gamma_i gamma_j``."""
    return sum(gamma[i - 1] * gamma[j - 1] for i, j in Q.arrows)


def stacky_A(Q):
    """``A(gamma) = (-y)^{chi(gamma, gamma)} y^{2 dim R} / prod_i P(GL_{gamma_i})``."""
    B = skew_form(Q)

    def rule(gamma):
        Q.check_rank(gamma)
        den = LaurentPoly.constant(1)
        for g in gamma:
            den = den * poincare_gl(g)
        return neg_y_power(chi(Q, gamma, gamma)) * y_power(2 * rep_dim(Q, gamma)) / RatFunc(den)

    return OneCollection(rule, B, "A")
