"""Vectorized exact evaluation of collections over many tuples at once.

All tuples in a :class:`TupleBatch` have the same length and every part is a
contiguous run of one base array of shape ``(N, n0, r)``.  Pushforwards and
restrictions keep that property, so each vector a collection ever looks at
(parts, partial sums, block sums) is an interval sum of the base, and slope or
pairing comparisons between intervals are computed once per batch.

Values are :class:`QArray`: an integer numerator array over one shared
positive denominator.  Each array carries an upper bound on its magnitude;
arithmetic picks the narrowest integer dtype that bound allows and raises
``OverflowError`` rather than wrap once int64 no longer suffices.
"""

from fractions import Fraction
from itertools import product
from math import gcd, lcm
import weakref

import numpy as np

_LIMIT = 2 ** 62


def _absmax(a):
    return int(np.abs(a.astype(np.int64)).max()) if a.size else 0


def dtype_for(bound):
    """Smallest signed integer dtype holding every value of magnitude ``<= bound``."""
    if bound < 2 ** 7:
        return np.int8
    if bound < 2 ** 15:
        return np.int16
    if bound < 2 ** 31:
        return np.int32
    if bound < _LIMIT:
        return np.int64
    raise OverflowError("rational batch exceeds int64 range")


def _mul(a, b, bound):
    # inputs are cast to the output dtype, so it must hold the factors too
    if isinstance(b, (int, np.integer)):
        dt = dtype_for(max(bound, abs(int(b))))
        b = np.array(b, dtype=dt)
    else:
        dt = dtype_for(bound)
    return np.multiply(a, b, dtype=dt, casting="unsafe")


def _add(a, b, bound):
    return np.add(a, b, dtype=dtype_for(bound), casting="unsafe")


class QArray:
    """Exact rationals ``num / den`` with an array numerator and scalar denominator.

    ``bound`` is an upper bound for ``max |num|`` carried through arithmetic,
    so overflow checks and dtype choices need no pass over the data.
    """

    __slots__ = ("num", "den", "_bound")

    def __init__(self, num, den=1, bound=None):
        self.num = num
        self.den = int(den)
        self._bound = bound

    @property
    def bound(self):
        if self._bound is None:
            self._bound = _absmax(self.num)
        return self._bound

    def _tight(self):
        """Recompute the bound from the data."""
        self._bound = _absmax(self.num)
        return self._bound

    @classmethod
    def zeros(cls, n):
        return cls(np.zeros(n, dtype=np.int8), 1, 0)

    @classmethod
    def full(cls, n, value):
        value = Fraction(value)
        b = abs(value.numerator)
        return cls(np.full(n, value.numerator, dtype=dtype_for(b)), value.denominator, b)

    @classmethod
    def from_table(cls, index, table):
        """``table[index[i]]`` for a list of Fractions ``table``."""
        lut, den, bound = _to_lut(table)
        return cls(lut[index], den, bound)._reduced()

    def __len__(self):
        return len(self.num)

    def _reduced(self):
        if self.den == 1:
            return self
        g = gcd(int(np.gcd.reduce(self.num.astype(np.int64))) if self.num.size else 0, self.den)
        if g > 1:
            b = None if self._bound is None else self._bound // g
            if g > np.iinfo(self.num.dtype).max:
                # g divides every entry, so all of them are zero
                return QArray(np.zeros_like(self.num), self.den // g, 0)
            return QArray(self.num // g, self.den // g, b)
        return self

    def _lift(self, den):
        k = den // self.den
        if k == 1:
            return self.num, self.bound
        b = self.bound * k
        if b >= _LIMIT:
            b = self._tight() * k
        return _mul(self.num, k, b), b

    def __add__(self, other):
        if not isinstance(other, QArray):
            other = QArray.full(len(self), other)
        den = lcm(self.den, other.den)
        (a, ba), (b, bb) = self._lift(den), other._lift(den)
        bound = ba + bb
        if bound >= _LIMIT:
            bound = _absmax(a) + _absmax(b)
        return QArray(_add(a, b, bound), den, bound)._reduced()

    def __neg__(self):
        return QArray(np.negative(self.num), self.den, self._bound)

    def __sub__(self, other):
        if not isinstance(other, QArray):
            other = QArray.full(len(self), other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, QArray):
            other = Fraction(other)
            other = QArray(np.int64(other.numerator), other.denominator, abs(other.numerator))
        b = self.bound * other.bound
        if b >= _LIMIT:
            b = self._tight() * other._tight()
        if self.den * other.den >= _LIMIT:
            raise OverflowError("rational batch denominator exceeds int64 range")
        return QArray(_mul(self.num, other.num, b), self.den * other.den, b)._reduced()

    __rmul__ = __mul__

    def nonzero(self):
        return self.num != 0

    def any(self):
        return self._bound != 0 and bool(self.num.any())

    def equals(self, other):
        """Elementwise equality mask."""
        if not isinstance(other, QArray):
            other = QArray.full(len(self), other)
        den = lcm(self.den, other.den)
        return self._lift(den)[0] == other._lift(den)[0]

    def value(self, i):
        return Fraction(int(self.num[i]), self.den)


def _to_lut(table):
    table = [Fraction(v) for v in table]
    den = lcm(*(v.denominator for v in table)) if table else 1
    nums = [v.numerator * (den // v.denominator) for v in table]
    bound = max((abs(x) for x in nums), default=0)
    return np.array(nums, dtype=dtype_for(bound)), den, bound


class BatchBase:
    """Shared storage and caches for all views onto one array of tuples.

    Vectors are stored coordinate-major: an interval sum is an ``(r, N)``
    array, so each coordinate is a contiguous row.  ``vmax`` bounds every
    coordinate of every interval sum.
    """

    def __init__(self, arr, columns=False):
        """``arr`` has shape ``(N, n0, r)``, or ``(n0, r, N)`` when ``columns`` is set."""
        arr = np.asarray(arr)
        if columns:
            self.n0, self.r, self.N = arr.shape
        else:
            self.N, self.n0, self.r = arr.shape
        self.vmax = int(arr.max()) * self.n0 if arr.size else 0
        dt = dtype_for(self.vmax)
        if columns:
            cols = arr.astype(dt, copy=False)
        else:
            cols = np.ascontiguousarray(arr.transpose(1, 2, 0), dtype=dt)
        ps = np.zeros((self.n0 + 1, self.r, self.N), dtype=dt)
        np.cumsum(cols, axis=0, out=ps[1:])
        self.ps = ps
        self._sums = {}
        self._linear = {}
        self._signs = {}
        self._keep = {}

    def interval_sum(self, iv):
        s = self._sums.get(iv)
        if s is None:
            i, j = iv
            s = self.ps[j] if i == 0 else self.ps[j] - self.ps[i]
            self._sums[iv] = s
        return s

    def linear_form(self, key, weights, iv):
        """``sum_i weights[i] * v_i`` for the interval sum ``v``; bounded by ``sum |w| * vmax``."""
        k = (key, iv)
        v = self._linear.get(k)
        if v is None:
            bound = max(sum(abs(w) for w in weights) * self.vmax, max(map(abs, weights)))
            dt = dtype_for(bound)
            s = self.interval_sum(iv)
            v = np.zeros(self.N, dtype=dt)
            for w, row in zip(weights, s):
                if w == 1:
                    v += row
                elif w:
                    v += np.multiply(row, w, dtype=dt, casting="unsafe")
            self._linear[k] = v
        return v

    def sign(self, cmp, iv1, iv2):
        """Sign array (int8) of the comparison ``cmp`` between two interval sums."""
        key = (id(cmp), iv1, iv2)
        s = self._signs.get(key)
        if s is None:
            self._keep[id(cmp)] = cmp
            s = cmp.batch_sign(self, iv1, iv2)
            self._signs[key] = s
        return s

    def row(self, i, intervals):
        return tuple(tuple(int(x) for x in self.interval_sum(iv)[:, i]) for iv in intervals)


class TupleBatch:
    """``N`` tuples of length ``n``; part ``k`` is the base interval ``intervals[k]``."""

    def __init__(self, base, intervals=None):
        if not isinstance(base, BatchBase):
            base = BatchBase(base)
        self.base = base
        if intervals is None:
            intervals = tuple((k, k + 1) for k in range(base.n0))
        self.intervals = tuple(intervals)

    @property
    def n(self):
        return len(self.intervals)

    @property
    def N(self):
        return self.base.N

    def part(self, k):
        """Part ``k`` as an ``(r, N)`` array."""
        return self.base.interval_sum(self.intervals[k])

    def sub(self, i, j):
        return TupleBatch(self.base, self.intervals[i:j])

    def merge(self, spans):
        """Pushforward: ``spans`` are half-open index ranges of consecutive parts."""
        iv = self.intervals
        return TupleBatch(self.base, tuple((iv[i][0], iv[j - 1][1]) for i, j in spans))

    def adjacent_signs(self, cmp):
        iv = self.intervals
        return [self.base.sign(cmp, iv[k], iv[k + 1]) for k in range(len(iv) - 1)]

    def split_signs(self, cmp):
        iv = self.intervals
        lo, hi = iv[0][0], iv[-1][1]
        return [self.base.sign(cmp, (lo, iv[k][1]), (iv[k][1], hi)) for k in range(len(iv) - 1)]

    def row(self, i):
        return self.base.row(i, self.intervals)

    def rows(self):
        for i in range(self.N):
            yield self.row(i)


def _sign_of(d):
    return (d > 0).view(np.int8) - (d < 0).view(np.int8)


class ChargeCmp:
    """Batch slope comparison for a :class:`~dtcol.stability.CentralCharge`."""

    def __init__(self, Z):
        self.Z = Z
        self.ti = Z._ti
        self.ri = Z._ri

    def batch_sign(self, base, iv1, iv2):
        t1 = base.linear_form((id(self), "t"), self.ti, iv1)
        t2 = base.linear_form((id(self), "t"), self.ti, iv2)
        r1 = base.linear_form((id(self), "r"), self.ri, iv1)
        r2 = base.linear_form((id(self), "r"), self.ri, iv2)
        bound = 2 * sum(abs(w) for w in self.ti) * sum(self.ri) * base.vmax ** 2
        return _sign_of(_mul(t1, r2, bound) - _mul(t2, r1, bound))


class SkewCmp:
    """Batch sign of ``<a, b>`` for a :class:`~dtcol.stability.SkewForm`."""

    def __init__(self, B):
        self.M = B.matrix

    def batch_sign(self, base, iv1, iv2):
        a = base.interval_sum(iv1)
        bound = sum(abs(x) for row in self.M for x in row) * base.vmax ** 2
        dt = dtype_for(bound)
        total = np.zeros(base.N, dtype=dt)
        for i, row in enumerate(self.M):
            if any(row):
                mb = base.linear_form((id(self), i), row, iv2)
                total += _mul(a[i], mb, bound)
        return _sign_of(total)


class ParallelCmp:
    """0 where the two vectors are proportional, 1 elsewhere."""

    def batch_sign(self, base, iv1, iv2):
        a = base.interval_sum(iv1)
        b = base.interval_sum(iv2)
        bound = base.vmax ** 2
        r = a.shape[0]
        same = np.ones(a.shape[1], dtype=bool)
        for i in range(r):
            for j in range(i + 1, r):
                same &= _mul(a[i], b[j], bound) == _mul(a[j], b[i], bound)
        return (~same).view(np.int8)


_FULL_TABLE_MAX = 10
_tables = weakref.WeakKeyDictionary()


def _decode(c, sizes):
    total = sum(sizes)
    digits = []
    for _ in range(total):
        digits.append(c % 3 - 1)
        c //= 3
    digits.reverse()
    groups, pos = [], 0
    for size in sizes:
        groups.append(tuple(digits[pos:pos + size]))
        pos += size
    return groups


def _full_table(fn, sizes):
    """Table of ``fn`` on every sign pattern, cached per function."""
    per_fn = _tables.setdefault(fn, {})
    entry = per_fn.get(sizes)
    if entry is None:
        values = [fn(*_decode(c, sizes)) for c in range(3 ** sum(sizes))]
        lut, den, bound = _to_lut(values)
        support = np.flatnonzero(lut)
        single = None
        if len(support) == 1:
            c = int(support[0])
            single = ([x for g in _decode(c, sizes) for x in g], int(lut[c]))
        entry = (lut, den, bound, single)
        per_fn[sizes] = entry
    return entry


def table_apply(sign_lists, fn, N):
    """Evaluate ``fn`` once per sign pattern of the given sign arrays.

    ``sign_lists`` is a list of lists of int8 arrays with values in
    ``{-1, 0, 1}``; ``fn`` receives one tuple of ints per list.  Short
    patterns use a cached table over all ``3^k`` patterns, and a function
    supported on a single pattern becomes a mask.
    """
    flat = [s for group in sign_lists for s in group]
    if not flat:
        return QArray.full(N, fn(*[() for _ in sign_lists]))
    sizes = tuple(len(g) for g in sign_lists)
    if len(flat) <= _FULL_TABLE_MAX:
        lut, den, bound, single = _full_table(fn, sizes)
        if bound == 0:
            return QArray.zeros(N)
        if single is not None:
            pattern, num = single
            mask = flat[0] == pattern[0]
            for s, want in zip(flat[1:], pattern[1:]):
                mask &= s == want
            return QArray(_mul(mask, num, bound), den, bound)._reduced()
    code = flat[0].astype(np.intp) + 1
    for s in flat[1:]:
        code *= 3
        code += s
        code += 1
    if len(flat) > _FULL_TABLE_MAX:
        present = np.flatnonzero(np.bincount(code))
        values = [fn(*_decode(c, sizes)) for c in present.tolist()]
        small, den, bound = _to_lut(values)
        lut = np.zeros(int(present[-1]) + 1, dtype=small.dtype)
        lut[present] = small
    return QArray(lut[code], den, bound)._reduced()


def fallback(F, tb):
    """Row-by-row evaluation through the scalar rule."""
    vals = [F(row) for row in tb.rows()]
    uniq = sorted(set(vals))
    pos = {v: i for i, v in enumerate(uniq)}
    return QArray.from_table(np.array([pos[v] for v in vals], dtype=np.intp), uniq)


def evaluate(F, tb):
    rule = getattr(F, "batch_rule", None)
    if rule is None:
        return fallback(F, tb)
    return rule(tb)


def grid_letters(r, max_entry):
    return [p for p in product(range(max_entry + 1), repeat=r) if any(p)]


def grid_columns(r, n, max_entry, chunk=1 << 18):
    """Length-``n`` tuples with part entries ``<= max_entry`` as ``(n, r, N)`` arrays.

    Rows follow ``itertools.product`` order over the lexicographic letter
    list, matching :func:`dtcol.semigroup.grid`.  Each chunk fixes the
    leading letters and runs through every choice of the trailing ``k``.
    """
    letters = np.array(grid_letters(r, max_entry), dtype=dtype_for(max_entry)).T
    L = letters.shape[1]
    k = 0
    while k < n and L ** (k + 1) <= chunk:
        k += 1
    k = max(k, 1) if n else 0
    tail = np.empty((k, r, L ** k), dtype=letters.dtype)
    for pos in range(k):
        reps = L ** (k - 1 - pos)
        tail[pos] = np.tile(np.repeat(letters, reps, axis=1), (1, L ** pos))
    for head in product(range(L), repeat=n - k):
        cols = np.empty((n, r, L ** k), dtype=letters.dtype)
        for pos, c in enumerate(head):
            cols[pos] = letters[:, c:c + 1]
        cols[n - k:] = tail
        yield cols


def grid_chunks(r, n, max_entry, chunk=1 << 18):
    """Same tuples as :func:`grid_columns`, shaped ``(N, n, r)``."""
    for cols in grid_columns(r, n, max_entry, chunk):
        yield cols.transpose(2, 0, 1)


def first_disagreement(F, G, r, max_len, max_entry, min_len=1, chunk=1 << 18):
    """First grid tuple where ``F`` and ``G`` differ, or ``None``; checks every tuple."""
    for n in range(min_len, max_len + 1):
        for cols in grid_columns(r, n, max_entry, chunk):
            tb = TupleBatch(BatchBase(cols, columns=True))
            eq = evaluate(F, tb).equals(evaluate(G, tb))
            if not eq.all():
                i = int(np.argmin(eq))
                return tb.row(i)
    return None
