"""Central charges, slope comparisons, skew forms and perturbed scalars."""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import NonGeneric, ParseError
from .semigroup import proportional, vectors_up_to

LESS, EQUAL, GREATER = -1, 0, 1


def _sign(x):
    return (x > 0) - (x < 0)


class CentralCharge:
    """``Z = -theta + i rho`` with every ``rho_k > 0``.

    Slopes ``mu(a) = theta(a) / rho(a)`` are compared by cross-multiplication
    on integer rescalings of ``theta`` and ``rho``, so no division happens in
    the hot path.
    """

    def __init__(self, theta, rho=None):
        theta = tuple(Fraction(t) for t in theta)
        rho = tuple(Fraction(1) for _ in theta) if rho is None else tuple(Fraction(x) for x in rho)
        if len(rho) != len(theta):
            raise ValueError("theta and rho have different lengths")
        if any(x <= 0 for x in rho):
            raise ValueError("rho must be strictly positive")
        self.theta, self.rho = theta, rho
        dt = lcm(*(t.denominator for t in theta))
        dr = lcm(*(x.denominator for x in rho))
        self._ti = tuple(int(t * dt) for t in theta)
        self._ri = tuple(int(x * dr) for x in rho)
        self._sign_cache = {}

    @property
    def rank(self):
        return len(self.theta)

    def __repr__(self):
        return "CentralCharge(theta=%s, rho=%s)" % (
            ",".join(map(str, self.theta)), ",".join(map(str, self.rho)))

    def __eq__(self, other):
        return isinstance(other, CentralCharge) and (self.theta, self.rho) == (other.theta, other.rho)

    def __hash__(self):
        return hash((self.theta, self.rho))

    def theta_of(self, a):
        return sum((t * x for t, x in zip(self.theta, a)), Fraction(0))

    def rho_of(self, a):
        return sum((t * x for t, x in zip(self.rho, a)), Fraction(0))

    def slope(self, a):
        return self.theta_of(a) / self.rho_of(a)

    def compare(self, a, b):
        """Sign of ``mu(a) - mu(b)``: ``GREATER``, ``EQUAL`` or ``LESS``."""
        key = (a, b)
        s = self._sign_cache.get(key)
        if s is None:
            ti, ri = self._ti, self._ri
            ta = sum(t * x for t, x in zip(ti, a))
            tb = sum(t * x for t, x in zip(ti, b))
            ra = sum(t * x for t, x in zip(ri, a))
            rb = sum(t * x for t, x in zip(ri, b))
            s = _sign(ta * rb - tb * ra)
            self._sign_cache[key] = s
        return s

    def ray_key(self, a):
        """Exact label of the ray through ``Z(a)``: the reduced pair ``(theta(a), rho(a))``."""
        t = sum(t * x for t, x in zip(self._ti, a))
        r = sum(t * x for t, x in zip(self._ri, a))
        f = Fraction(t, r)
        return (f.numerator, f.denominator)


def slope_compare(Z, a, b):
    return Z.compare(a, b)


def parse_rationals(text):
    try:
        return tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise ParseError("bad rational vector %r" % text) from None


class SkewForm:
    """Antisymmetric integer pairing ``<a, b> = a^T M b``."""

    def __init__(self, matrix):
        m = tuple(tuple(int(x) for x in row) for row in matrix)
        r = len(m)
        if any(len(row) != r for row in m):
            raise ValueError("skew form must be square")
        for i in range(r):
            for j in range(r):
                if m[i][j] != -m[j][i]:
                    raise ValueError("matrix is not antisymmetric at (%d, %d)" % (i, j))
        self.matrix = m

    @classmethod
    def zero(cls, r):
        return cls([[0] * r for _ in range(r)])

    @classmethod
    def parse(cls, text):
        try:
            rows = [[int(x) for x in row.split(",")] for row in text.split(";")]
        except ValueError:
            raise ParseError("bad skew form %r" % text) from None
        return cls(rows)

    @property
    def rank(self):
        return len(self.matrix)

    def __repr__(self):
        return "SkewForm(%r)" % (self.matrix,)

    def __eq__(self, other):
        return isinstance(other, SkewForm) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def pair(self, a, b):
        m = self.matrix
        total = 0
        for i, ai in enumerate(a):
            if ai:
                row = m[i]
                total += ai * sum(row[j] * bj for j, bj in enumerate(b))
        return total

    def is_zero(self):
        return not any(any(row) for row in self.matrix)


def pair(B, a, b):
    return B.pair(a, b)


def self_stability(B, gamma):
    """The charge with ``theta_k = <e_k, gamma>`` and ``rho = (1, ..., 1)``."""
    r = B.rank
    theta = [sum(B.matrix[k][j] * gamma[j] for j in range(r)) for k in range(r)]
    return CentralCharge(theta)


def is_generic(Z, bound):
    """Scan pairs of total degree ``<= bound``.

    Returns ``True`` or the first pair ``(a, b)`` of non-proportional vectors
    with equal slope.
    """
    vs = vectors_up_to(Z.rank, bound)
    for i, a in enumerate(vs):
        for b in vs[i + 1:]:
            if Z.compare(a, b) == EQUAL and not proportional(a, b):
                return (a, b)
    return True


@dataclass(frozen=True)
class PerturbedScalar:
    """``constant + sum_i eps_coeffs[i] * eps_i`` with ``eps_1 >> eps_2 >> ... > 0``.

    Ordering is lexicographic on ``(constant, eps_coeffs[0], ...)``.
    """

    constant: Fraction
    eps_coeffs: tuple

    @classmethod
    def make(cls, constant, eps_coeffs):
        return cls(Fraction(constant), tuple(Fraction(c) for c in eps_coeffs))

    @classmethod
    def zero(cls, n):
        return cls(Fraction(0), (Fraction(0),) * n)

    def _check(self, other):
        if len(self.eps_coeffs) != len(other.eps_coeffs):
            raise ValueError("perturbation dimensions differ")

    def __add__(self, other):
        self._check(other)
        return PerturbedScalar(self.constant + other.constant,
                               tuple(a + b for a, b in zip(self.eps_coeffs, other.eps_coeffs)))

    def __sub__(self, other):
        self._check(other)
        return PerturbedScalar(self.constant - other.constant,
                               tuple(a - b for a, b in zip(self.eps_coeffs, other.eps_coeffs)))

    def __neg__(self):
        return PerturbedScalar(-self.constant, tuple(-a for a in self.eps_coeffs))

    def __mul__(self, c):
        c = Fraction(c)
        return PerturbedScalar(self.constant * c, tuple(a * c for a in self.eps_coeffs))

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def is_zero(self):
        return not self.constant and not any(self.eps_coeffs)

    def sign(self):
        """Sign of the value; an exactly zero form has no strict sign."""
        if self.constant:
            return _sign(self.constant)
        for c in self.eps_coeffs:
            if c:
                return _sign(c)
        raise NonGeneric("strict sign requested on the zero perturbed scalar")

    def compare(self, other):
        """Lexicographic comparison returning ``LESS``, ``EQUAL`` or ``GREATER``."""
        d = self - other
        return EQUAL if d.is_zero() else d.sign()

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __gt__(self, other):
        return (self - other).sign() > 0


def ps_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "scale":
        return a * b
    if op == "compare":
        return a.compare(b)
    if op == "strict_compare":
        return (a - b).sign()
    raise ValueError("unknown operation %r" % (op,))
