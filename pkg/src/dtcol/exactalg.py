"""Exact Laurent polynomials and rational functions in one variable ``y``.

Coefficients are :class:`fractions.Fraction`.  A :class:`RatFunc` is kept in
a canonical form: every power of ``y`` lives in the numerator, the denominator
is a monic ordinary polynomial with nonzero constant term, and numerator and
denominator are coprime.  Equal values therefore compare equal structurally
and hash identically.
"""

from fractions import Fraction
import re

from .errors import DivisionByZero, ParseError

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _strip(coeffs):
    """Drop trailing zeros of a dense coefficient list (low to high)."""
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return coeffs[:n]


class LaurentPoly:
    """Finite sum of ``c_k * y**k`` with ``k`` any integer.

    Stored densely as a lowest exponent ``lo`` and a coefficient tuple whose
    first and last entries are nonzero.  The zero polynomial has no
    coefficients.
    """

    __slots__ = ("lo", "coeffs", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        items = [(int(k), Fraction(v)) for k, v in terms.items() if v]
        if not items:
            self.lo, self.coeffs = 0, ()
        else:
            lo = min(k for k, _ in items)
            hi = max(k for k, _ in items)
            dense = [_ZERO] * (hi - lo + 1)
            for k, v in items:
                dense[k - lo] += v
            self._set(lo, dense)
        self._hash = None

    def _set(self, lo, dense):
        dense = _strip(dense)
        start = 0
        while start < len(dense) and not dense[start]:
            start += 1
        if start == len(dense):
            self.lo, self.coeffs = 0, ()
        else:
            self.lo, self.coeffs = lo + start, tuple(dense[start:])

    @classmethod
    def _dense(cls, lo, dense):
        p = cls.__new__(cls)
        p._hash = None
        p._set(lo, list(dense))
        return p

    @classmethod
    def monomial(cls, k, c=1):
        return cls._dense(k, [Fraction(c)])

    @classmethod
    def constant(cls, c):
        return cls._dense(0, [Fraction(c)])

    @property
    def terms(self):
        return {self.lo + i: c for i, c in enumerate(self.coeffs) if c}

    @property
    def hi(self):
        return self.lo + len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.lo == other.lo and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.lo, self.coeffs))
        return self._hash

    def __repr__(self):
        return "LaurentPoly(%s)" % render_poly(self)

    def __neg__(self):
        return LaurentPoly._dense(self.lo, [-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        dense = [_ZERO] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            dense[self.lo - lo + i] += c
        for i, c in enumerate(other.coeffs):
            dense[other.lo - lo + i] += c
        return LaurentPoly._dense(lo, dense)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly()
            return LaurentPoly._dense(self.lo, [c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        a, b = self.coeffs, other.coeffs
        dense = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, z in enumerate(b):
                dense[i + j] += x * z
        return LaurentPoly._dense(self.lo + other.lo, dense)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by ``y**k``."""
        if not self.coeffs:
            return self
        return LaurentPoly._dense(self.lo + k, list(self.coeffs))

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, y):
        y = Fraction(y)
        return sum((c * y ** (self.lo + i) for i, c in enumerate(self.coeffs)), _ZERO)


def lp_arith(a, b, op):
    """Apply ``op`` in ``{"add", "sub", "mul"}`` to two Laurent polynomials."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("unknown operation %r" % (op,))


# dense polynomial helpers, coefficients listed from degree 0 upwards

def _pdivmod(a, b):
    a = list(a)
    lead = b[-1]
    q = [_ZERO] * max(len(a) - len(b) + 1, 0)
    for shift in range(len(a) - len(b), -1, -1):
        c = a[shift + len(b) - 1]
        if c:
            c = c / lead
            q[shift] = c
            for i, bc in enumerate(b):
                a[shift + i] -= c * bc
    return _strip(q), _strip(a[:len(b) - 1])


def _pmonic(a):
    lead = a[-1]
    if lead == 1:
        return list(a)
    return [c / lead for c in a]


def _pgcd(a, b):
    """Monic gcd over the rationals via the Euclidean algorithm."""
    a, b = _strip(list(a)), _strip(list(b))
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, _pmonic(r) if r else r
    return _pmonic(a) if a else a


class RatFunc:
    """Canonical quotient ``num / den`` of Laurent polynomials in ``y``."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, (int, Fraction)):
            num = LaurentPoly.constant(num)
        if isinstance(den, (int, Fraction)):
            den = LaurentPoly.constant(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        self._hash = None
        self._normalize(num, den)

    @classmethod
    def _raw(cls, num, den):
        f = cls.__new__(cls)
        f.num, f.den, f._hash = num, den, None
        return f

    def _normalize(self, num, den):
        if num.is_zero():
            self.num, self.den = LaurentPoly(), LaurentPoly.constant(1)
            return
        shift = num.lo - den.lo
        n, d = list(num.coeffs), list(den.coeffs)
        if len(d) > 1:
            g = _pgcd(n, d)
            if len(g) > 1:
                n, _ = _pdivmod(n, g)
                d, _ = _pdivmod(d, g)
        lead = d[-1]
        if lead != 1:
            n = [c / lead for c in n]
            d = [c / lead for c in d]
        self.num = LaurentPoly._dense(shift, n)
        self.den = LaurentPoly._dense(0, d)

    @classmethod
    def from_poly(cls, p):
        return cls._raw(p, LaurentPoly.constant(1)) if p else cls._raw(LaurentPoly(), LaurentPoly.constant(1))

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(other)
        elif isinstance(other, LaurentPoly):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return "RatFunc(%r)" % render(self)

    def __str__(self):
        return render(self)

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction, LaurentPoly)):
            return RatFunc(x)
        return NotImplemented

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFunc()
            return RatFunc._raw(self.num * Fraction(other), self.den)
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RatFunc()
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc._coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return RatFunc(1) / (self ** -n)
        return RatFunc(self.num ** n, self.den ** n)

    def evaluate(self, y):
        d = self.den.evaluate(y)
        if not d:
            raise DivisionByZero("pole at y=%s" % y)
        return self.num.evaluate(y) / d

    def canonical(self):
        return RatFunc(self.num, self.den)


def rf_arith(a, b, op):
    """Apply ``op`` in ``{"add", "sub", "mul", "div"}`` to rational functions."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown operation %r" % (op,))


def y_power(m):
    return RatFunc._raw(LaurentPoly.monomial(m), LaurentPoly.constant(1))


def neg_y_power(m):
    """Return ``(-y)**m`` for any integer ``m``."""
    return RatFunc._raw(LaurentPoly.monomial(m, -1 if m % 2 else 1), LaurentPoly.constant(1))


# -- text form ---------------------------------------------------------------

def _render_coeff(c):
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def render_poly(p):
    if p.is_zero():
        return "0"
    out = []
    for k in range(p.hi, p.lo - 1, -1):
        c = p.coeffs[k - p.lo]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = _render_coeff(a)
        else:
            mono = "y" if k == 1 else "y^%d" % k
            body = mono if a == 1 else "%s*%s" % (_render_coeff(a), mono)
        if not out:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(" %s %s" % (sign, body))
    return "".join(out)


def render(f):
    """Text form, e.g. ``(-y^3)/(y^4 - 2*y^2 + 1)``."""
    if f.den == LaurentPoly.constant(1):
        return render_poly(f.num)
    return "(%s)/(%s)" % (render_poly(f.num), render_poly(f.den))


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*(?P<star>\*)?\s*)?
        (?P<y>y(?:\^(?P<exp>-?\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_poly(text):
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial")
    terms = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("cannot parse %r at offset %d" % (text, pos))
        if not m.group("sign") and not first:
            raise ParseError("missing operator in %r" % text)
        if m.group("coef") is None and m.group("y") is None:
            raise ParseError("dangling sign in %r" % text)
        if m.group("star") and m.group("y") is None:
            raise ParseError("dangling '*' in %r" % text)
        try:
            c = Fraction(m.group("coef")) if m.group("coef") else _ONE
        except ZeroDivisionError:
            raise ParseError("zero denominator in %r" % text) from None
        if m.group("sign") == "-":
            c = -c
        if m.group("y") is None:
            k = 0
        else:
            k = int(m.group("exp")) if m.group("exp") is not None else 1
        terms[k] = terms.get(k, _ZERO) + c
        pos = m.end()
        first = False
    return LaurentPoly(terms)


def parse(text):
    """Inverse of :func:`render`."""
    text = text.strip()
    if text.startswith("("):
        depth = 0
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    break
        else:
            raise ParseError("unbalanced parentheses in %r" % text)
        num = parse_poly(text[1:i])
        rest = text[i + 1:].strip()
        if not rest:
            return RatFunc(num)
        if not (rest.startswith("/") and rest[1:].strip().startswith("(") and rest.endswith(")")):
            raise ParseError("expected '/(...)' after numerator in %r" % text)
        den = parse_poly(rest[1:].strip()[1:-1])
        if den.is_zero():
            raise DivisionByZero("zero denominator in %r" % text)
        return RatFunc(num, den)
    return RatFunc(parse_poly(text))
