"""Exact truncated q-series.

A :class:`QSeries` is ``q^offset * sum_i c_i q^(i/denom)`` known modulo
``q^(offset + (order+1)/denom)``.  Coefficients are Python ints or
:class:`fractions.Fraction` (normalised to ``int`` whenever the denominator
is one, which keeps the convolution kernels on the fast integer path).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Number = "int | Fraction"


def _norm(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


# ---------------------------------------------------------------- kernels
# Dense coefficient lists; position i <-> q^i.  These are the hot loops.

def conv(a: Sequence, b: Sequence, n: int) -> list:
    """Cauchy product of two coefficient lists truncated to length ``n``."""
    out = [0] * n
    nb = min(len(b), n)
    bnz = [(j, y) for j, y in enumerate(b[:nb]) if y]
    for i in range(min(len(a), n)):
        x = a[i]
        if not x:
            continue
        lim = n - i
        for j, y in bnz:
            if j >= lim:
                break
            out[i + j] += x * y
    return out


def div_one_minus(c: list, h: int, times: int = 1) -> list:
    """In place: ``c <- c / (1 - q^h)^times`` (h >= 1)."""
    n = len(c)
    for _ in range(times):
        for i in range(h, n):
            c[i] += c[i - h]
    return c


def mul_one_minus(c: list, h: int, times: int = 1) -> list:
    """In place: ``c <- c * (1 - q^h)^times`` (h >= 1)."""
    n = len(c)
    for _ in range(times):
        for i in range(n - 1, h - 1, -1):
            c[i] -= c[i - h]
    return c


def add_into(acc: list, c: Sequence, shift: int = 0, scale=1) -> None:
    n = len(acc)
    for i in range(min(len(c), n - shift)):
        if c[i]:
            acc[i + shift] += scale * c[i]


def inverse_list(a: Sequence, n: int) -> list:
    """Power-series inverse of ``a`` (``a[0] != 0``) to length ``n``."""
    a0 = a[0]
    out = [0] * n
    if n == 0:
        return out
    inv0 = Fraction(1, 1) / a0 if not (a0 == 1 or a0 == -1) else a0
    out[0] = _norm(inv0)
    anz = [(j, a[j]) for j in range(1, min(len(a), n)) if a[j]]
    for i in range(1, n):
        s = 0
        for j, y in anz:
            if j > i:
                break
            s += y * out[i - j]
        out[i] = _norm(-s * inv0) if s else 0
    return out


# ---------------------------------------------------------------- QSeries

@dataclass(frozen=True)
class QSeries:
    """Truncated series ``q^offset * sum c_i q^(i/denom) + O(q^prec)``.

    Canonical form: ``coeffs[0] != 0`` unless the series is zero, in which
    case ``offset == 0`` and ``coeffs == ()``; ``denom`` is the smallest grid
    on which every nonzero exponent and the precision bound lie.
    """

    offset: Fraction
    coeffs: tuple
    order: int
    denom: int = 1

    # -- construction -------------------------------------------------
    @classmethod
    def make(cls, coeffs: Iterable, offset=0, order: int | None = None, denom: int = 1) -> "QSeries":
        """Build and canonicalise.  ``order`` defaults to ``len(coeffs) - 1``;
        missing coefficients up to ``order`` are zero."""
        cs = [_norm(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        else:
            cs.extend([0] * (order + 1 - len(cs)))
        return cls._canon(Fraction(offset), cs, denom)

    @classmethod
    def _canon(cls, offset: Fraction, cs: list, denom: int) -> "QSeries":
        n = len(cs)
        prec = offset + Fraction(n, denom)
        lead = next((i for i, c in enumerate(cs) if c), None)
        if lead is None:
            return cls.zero_at(prec)
        offset = offset + Fraction(lead, denom)
        cs = cs[lead:]
        n = len(cs)
        g = denom
        if g > 1:
            g = math.gcd(g, n)
            for i, c in enumerate(cs):
                if g == 1:
                    break
                if c and i:
                    g = math.gcd(g, i)
        if g > 1:
            cs = cs[::g]
            denom //= g
        return cls(offset, tuple(cs), len(cs) - 1, denom)

    @classmethod
    def zero_at(cls, prec) -> "QSeries":
        """The zero series known modulo ``q^prec``."""
        prec = Fraction(prec)
        return cls(Fraction(0), (), prec.numerator - 1, prec.denominator)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls.zero_at(order + 1)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls.make([1], 0, order)

    @classmethod
    def monomial(cls, exponent, coeff=1, prec=None) -> "QSeries":
        """``coeff * q^exponent`` known modulo ``q^prec`` (default: one step
        past the exponent)."""
        exponent = Fraction(exponent)
        prec = exponent + 1 if prec is None else Fraction(prec)
        if coeff == 0 or prec <= exponent:
            return cls.zero_at(prec)
        d = (prec - exponent).denominator
        n = int((prec - exponent) * d)
        return cls._canon(exponent, [_norm(Fraction(coeff))] + [0] * (n - 1), d)

    @classmethod
    def from_dict(cls, terms: dict, prec) -> "QSeries":
        """Sparse constructor: ``{exponent: coeff}`` known modulo ``q^prec``."""
        prec = Fraction(prec)
        keys = [Fraction(e) for e, c in terms.items() if c and Fraction(e) < prec]
        if not keys:
            return cls.zero_at(prec)
        base = min(keys)
        d = _lcm(*(((k - base).denominator) for k in keys), (prec - base).denominator)
        n = _ceil((prec - base) * d)
        cs = [0] * n
        for e, c in terms.items():
            e = Fraction(e)
            if c and e < prec:
                cs[int((e - base) * d)] += _norm(Fraction(c))
        return cls._canon(base, cs, d)

    # -- basic accessors -----------------------------------------------
    @property
    def prec(self) -> Fraction:
        """Exclusive exponent bound up to which the series is known."""
        if not self.coeffs:
            return Fraction(self.order + 1, self.denom)
        return self.offset + Fraction(self.order + 1, self.denom)

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> Fraction | None:
        return None if not self.coeffs else self.offset

    def terms(self):
        """Yield ``(exponent, coeff)`` for every nonzero known coefficient."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.offset + Fraction(i, self.denom), c

    def __getitem__(self, exponent):
        e = Fraction(exponent)
        if e >= self.prec:
            raise IndexError(f"coefficient of q^{e} unknown (series known below q^{self.prec})")
        if not self.coeffs:
            return 0
        pos = (e - self.offset) * self.denom
        if pos < 0 or pos.denominator != 1:
            return 0
        return self.coeffs[int(pos)]

    def coefficient_list(self, upto=None, start=0) -> list:
        """Integer-grid coefficients of ``q^start .. q^(upto-1)``."""
        upto = self.prec if upto is None else Fraction(upto)
        return [self[e] for e in range(start, _ceil(upto))]

    def integer_list(self, n: int, shift=0) -> list:
        """Coefficients of ``q^(shift+i)`` for ``i < n`` as a dense list
        (requires an integral grid at ``shift``)."""
        if self.prec < shift + n:
            raise ValueError(f"need precision q^{shift + n}, have q^{self.prec}")
        out = [0] * n
        for e, c in self.terms():
            pos = e - shift
            if pos.denominator != 1:
                raise ValueError("series is not on the integer grid")
            if 0 <= pos < n:
                out[int(pos)] = c
        return out

    # -- truncation ----------------------------------------------------
    def truncate(self, prec) -> "QSeries":
        """Forget everything at or above ``q^prec`` (never extends)."""
        prec = Fraction(prec)
        if prec >= self.prec:
            return self
        if not self.coeffs:
            return QSeries.zero_at(prec)
        n = _ceil((prec - self.offset) * self.denom)
        if n <= 0:
            return QSeries.zero_at(prec)
        return QSeries._canon(self.offset, list(self.coeffs[:n]), self.denom)

    def with_order(self, order: int) -> "QSeries":
        return self.truncate(order + 1)

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (int, Fraction)):
            c = _norm(other)
            if c == 0:
                return QSeries.zero_at(self.prec)
            n = _ceil(self.prec) if self.prec > 0 else 1
            return QSeries._canon(Fraction(0), [c] + [0] * (n - 1), 1)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = min(self.prec, other.prec)
        if not self.coeffs:
            return other.truncate(prec)
        if not other.coeffs:
            return self.truncate(prec)
        base = min(self.offset, other.offset)
        d = _lcm(self.denom, other.denom, (self.offset - other.offset).denominator)
        n = _ceil((prec - base) * d)
        if n <= 0:
            return QSeries.zero_at(prec)
        cs = [0] * n
        for s in (self, other):
            start = int((s.offset - base) * d)
            step = d // s.denom
            for i, c in enumerate(s.coeffs):
                p = start + i * step
                if p >= n:
                    break
                if c:
                    cs[p] += c
        return QSeries._canon(base, [_norm(c) for c in cs], d)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.offset, tuple(-c for c in self.coeffs), self.order, self.denom)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "QSeries":
        c = _norm(Fraction(c))
        if c == 0:
            return QSeries.zero_at(self.prec)
        return QSeries(self.offset, tuple(_norm(x * c) for x in self.coeffs), self.order, self.denom)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            va = self.offset if self.coeffs else self.prec
            vb = other.offset if other.coeffs else other.prec
            # zero factor: only a valuation bound survives
            if not self.coeffs and not other.coeffs:
                return QSeries.zero_at(self.prec + other.prec)
            if not self.coeffs:
                return QSeries.zero_at(self.prec + vb)
            return QSeries.zero_at(va + other.prec)
        rel = min(self.prec - self.offset, other.prec - other.offset)
        d = _lcm(self.denom, other.denom)
        n = _ceil(rel * d)
        a = _spread(self.coeffs, d // self.denom, n)
        b = _spread(other.coeffs, d // other.denom, n)
        return QSeries._canon(self.offset + other.offset, [_norm(x) for x in conv(a, b, n)], d)

    __rmul__ = __mul__

    def invert(self) -> "QSeries":
        if not self.coeffs:
            raise ZeroDivisionError("not invertible: zero series")
        n = self.order + 1
        return QSeries._canon(-self.offset, inverse_list(self.coeffs, n), self.denom)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return self * other.invert()

    def __rtruediv__(self, other):
        return self.invert() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.invert() ** (-k)
        if k == 0:
            if not self.coeffs:
                raise ValueError("0^0 with unknown precision")
            return QSeries.one(_ceil(self.prec - self.offset) - 1)
        result, base = None, self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison ----------------------------------------------------
    def first_difference(self, other: "QSeries", upto=None):
        """First exponent below the common precision (and ``upto``) where the
        coefficients differ, or ``None``."""
        prec = min(self.prec, other.prec)
        if upto is not None:
            prec = min(prec, Fraction(upto))
        diff = (self - other).truncate(prec)
        if diff.is_zero():
            return None
        return diff.offset

    def agrees(self, other: "QSeries", upto=None) -> bool:
        return self.first_difference(other, upto) is None

    def __repr__(self):
        if not self.coeffs:
            return f"O(q^{self.prec})"
        parts = []
        for e, c in list(self.terms())[:8]:
            parts.append(f"{c}*q^{e}")
        more = " + ..." if sum(1 for c in self.coeffs if c) > 8 else ""
        return " + ".join(parts) + more + f" + O(q^{self.prec})"

    # -- serialisation -------------------------------------------------
    def to_json_obj(self) -> dict:
        obj = {
            "offset": _rat_str(self.offset),
            "order": self.order,
            "coeffs": [_rat_str(Fraction(c)) for c in self.coeffs],
        }
        if self.denom != 1:
            obj["denom"] = self.denom
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "QSeries":
        offset = Fraction(obj["offset"])
        order = int(obj["order"])
        denom = int(obj.get("denom", 1))
        coeffs = [Fraction(c) for c in obj["coeffs"]]
        if not coeffs:
            return cls.zero_at(Fraction(order + 1, denom))
        return cls.make(coeffs, offset, order, denom)

    @classmethod
    def from_json(cls, text: str) -> "QSeries":
        return cls.from_json_obj(json.loads(text))


def _spread(cs: Sequence, step: int, n: int) -> list:
    if step == 1:
        return list(cs[:n])
    out = [0] * n
    for i, c in enumerate(cs):
        if i * step >= n:
            break
        out[i * step] = c
    return out


def _rat_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------- operations

def qs_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def qs_invert(a: QSeries) -> QSeries:
    return a.invert()


def qs_pow(a: QSeries, k: int) -> QSeries:
    return a ** k


def dilate(a: QSeries, m: int) -> QSeries:
    """Substitute ``q -> q^m``."""
    if m < 1:
        raise ValueError("dilation factor must be a positive integer")
    if m == 1:
        return a
    if not a.coeffs:
        return QSeries.zero_at(a.prec * m)
    n = (a.order + 1) * m
    cs = [0] * n
    for i, c in enumerate(a.coeffs):
        cs[i * m] = c
    return QSeries._canon(a.offset * m, cs, a.denom)


def q_derive(a: QSeries) -> QSeries:
    """``q d/dq``: the coefficient of ``q^e`` is multiplied by ``e``."""
    if not a.coeffs:
        return a
    cs = [_norm(c * (a.offset + Fraction(i, a.denom))) if c else 0 for i, c in enumerate(a.coeffs)]
    return QSeries._canon(a.offset, cs, a.denom)


def pochhammer(n: int, order: int) -> QSeries:
    """Finite ``(q;q)_n`` truncated at ``q^order``."""
    cs = [1] + [0] * order
    for i in range(1, n + 1):
        if i > order:
            break
        mul_one_minus(cs, i)
    return QSeries.make(cs, 0, order)


def euler_product(order: int) -> QSeries:
    """``(q;q)_inf`` truncated at ``q^order``."""
    return pochhammer(order, order)


def eta(order: int, m: int = 1) -> QSeries:
    """Dedekind eta at ``m*tau``: ``q^(m/24) (q^m;q^m)_inf`` with ``order``
    integer steps of ``q^m`` beyond the leading term."""
    e = QSeries.make(euler_product(order).coeffs, Fraction(1, 24), order)
    return dilate(e, m)


def reciprocal_power(a_exp: int, k: int, order: int) -> QSeries:
    """``1/(1-q^a_exp)^k`` truncated at ``q^order``."""
    if a_exp < 1 or k < 0:
        raise ValueError("need a_exp >= 1 and k >= 0")
    cs = [0] * (order + 1)
    for m in range(order // a_exp + 1):
        cs[m * a_exp] = math.comb(m + k - 1, k - 1) if k else int(m == 0)
    return QSeries.make(cs, 0, order)


@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """Bernoulli number with ``B_1 = -1/2``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return Fraction(1)
    if k > 1 and k % 2:
        return Fraction(0)
    # sum_{j<=k} C(k+1, j) B_j = 0
    s = sum(math.comb(k + 1, j) * bernoulli(j) for j in range(k))
    return -s / (k + 1)


@lru_cache(maxsize=None)
def euler_polynomial(m: int) -> tuple:
    """Integer coefficients of ``P_m`` with ``sum n^(m-1) x^n = x P_m(x)/(1-x)^m``."""
    if m < 2:
        raise ValueError("Euler polynomial needs m >= 2")
    # (1-x)^m * sum_{n>=1} n^(m-1) x^(n-1), degree m-2
    cs = [(n + 1) ** (m - 1) for n in range(m - 1)]
    for _ in range(m):
        mul_one_minus(cs, 1)
    return tuple(cs)


def divisor_sigma(n: int, k: int) -> int:
    s = 0
    i = 1
    while i * i <= n:
        if n % i == 0:
            s += i ** k
            j = n // i
            if j != i:
                s += j ** k
        i += 1
    return s


# ---------------------------------------------------------------- BiSeries

@dataclass(frozen=True)
class BiSeries:
    """Series in ``x`` with :class:`QSeries` coefficients, truncated at ``x^xorder``."""

    coeffs: tuple
    xorder: int = 8

    @classmethod
    def make(cls, coeffs: Sequence[QSeries], xorder: int = 8, order: int | None = None) -> "BiSeries":
        cs = list(coeffs[: xorder + 1])
        if order is None:
            order = min(int(c.prec) - 1 for c in cs) if cs else 0
        cs += [QSeries.zero(order)] * (xorder + 1 - len(cs))
        return cls(tuple(c.with_order(order) for c in cs), xorder)

    @property
    def order(self) -> int:
        return min(_ceil(c.prec) - 1 for c in self.coeffs)

    def __add__(self, other: "BiSeries") -> "BiSeries":
        d = min(self.xorder, other.xorder)
        return BiSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(d + 1)), d)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        d = min(self.xorder, other.xorder)
        return BiSeries(tuple(self.coeffs[i] - other.coeffs[i] for i in range(d + 1)), d)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return BiSeries(tuple(c * other for c in self.coeffs), self.xorder)
        d = min(self.xorder, other.xorder)
        out = []
        for n in range(d + 1):
            s = self.coeffs[0] * other.coeffs[n]
            for i in range(1, n + 1):
                s = s + self.coeffs[i] * other.coeffs[n - i]
            out.append(s)
        return BiSeries(tuple(out), d)

    def derivative_at_one(self) -> QSeries:
        """``d/dx`` followed by ``x = 1`` (only meaningful when the higher
        x-coefficients have growing q-valuation)."""
        s = QSeries.zero(self.order)
        for i, c in enumerate(self.coeffs):
            if i:
                s = s + c.scale(i)
        return s

    def first_difference(self, other: "BiSeries"):
        for i, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            e = a.first_difference(b)
            if e is not None:
                return i, e
        return None


# ---------------------------------------------------------------- ZetaSeries

class ZetaSeries:
    """Two-sided series ``sum_e f_e(q) zeta^e`` stored on a finite window.

    Keys of ``terms`` are doubled zeta-exponents (key ``k`` is ``zeta^(k/2)``).
    Every coefficient obeys ``val(f_e) >= slope * |e| - shift`` with
    ``slope_pos`` for ``e > 0`` and ``slope_neg`` for ``e < 0``.  The window
    ``[lo, hi]`` (doubled) lists what is stored; a side flagged ``bounded``
    has no terms outside the window, otherwise the slope bound is all we
    know there.  Coefficients are known modulo ``q^(order+1)``.
    """

    __slots__ = ("terms", "order", "slope_pos", "slope_neg", "lo", "hi",
                 "bounded_pos", "bounded_neg", "shift", "parity")

    def __init__(self, terms, order, slope_pos, slope_neg, lo, hi,
                 bounded_pos=False, bounded_neg=False, shift=0, parity=0):
        self.terms = {k: v for k, v in terms.items() if lo <= k <= hi and not v.is_zero()}
        self.order = order
        self.slope_pos = Fraction(slope_pos)
        self.slope_neg = Fraction(slope_neg)
        self.lo, self.hi = lo, hi
        self.bounded_pos, self.bounded_neg = bounded_pos, bounded_neg
        self.shift = Fraction(shift)
        self.parity = parity  # +1 even, -1 odd under z -> -z, 0 unknown

    @classmethod
    def from_function(cls, fn, order, slope_pos, slope_neg, window=None, shift=0,
                      bounded_pos=False, bounded_neg=False, parity=0):
        """Tabulate ``fn(e)`` for integer exponents ``|e| <= window``
        (default ``order + 1``); ``fn`` may return ``None`` for zero."""
        w = order + 1 if window is None else window
        terms = {}
        for e in range(-w, w + 1):
            v = fn(e)
            if v is not None and not v.is_zero():
                terms[2 * e] = v.with_order(order) if v.prec > order + 1 else v
        return cls(terms, order, slope_pos, slope_neg, -2 * w, 2 * w,
                   bounded_pos, bounded_neg, shift, parity)

    def __getitem__(self, e) -> QSeries:
        k = Fraction(e) * 2
        if k.denominator != 1:
            raise KeyError(f"zeta exponent {e} is not a half-integer")
        k = int(k)
        if k < self.lo and not self.bounded_neg or k > self.hi and not self.bounded_pos:
            raise KeyError(f"zeta^{e} lies outside the stored window")
        return self.terms.get(k, QSeries.zero(self.order))

    def exponents(self):
        """Stored (doubled) exponents in increasing order."""
        return sorted(self.terms)

    def valuation_bound(self, k: int) -> Fraction:
        """Declared lower bound for the q-valuation at doubled exponent ``k``."""
        slope = self.slope_pos if k > 0 else self.slope_neg
        return slope * Fraction(abs(k), 2) - self.shift

    def check_slopes(self):
        """Return the first stored exponent violating the declared slope
        bound (as a real exponent), or ``None``."""
        for k in self.exponents():
            v = self.terms[k]
            if v.offset < self.valuation_bound(k):
                return Fraction(k, 2)
        return None

    def _like(self, terms, **kw):
        args = dict(order=self.order, slope_pos=self.slope_pos, slope_neg=self.slope_neg,
                    lo=self.lo, hi=self.hi, bounded_pos=self.bounded_pos,
                    bounded_neg=self.bounded_neg, shift=self.shift, parity=self.parity)
        args.update(kw)
        return ZetaSeries(terms, **args)

    def scale(self, c) -> "ZetaSeries":
        if isinstance(c, QSeries):
            return self.mul_q(c)
        return self._like({k: v.scale(c) for k, v in self.terms.items()})

    def mul_q(self, s: QSeries) -> "ZetaSeries":
        """Multiply every coefficient by a zeta-free q-series."""
        if s.is_zero():
            raise ValueError("multiplying by a zero series loses all information")
        shift = self.shift - s.offset
        order = _ceil(min(self.order + 1 + s.offset, s.prec)) - 1 if self.terms else self.order
        return self._like({k: (v * s).with_order(order) for k, v in self.terms.items()},
                          order=order, shift=shift)

    def __add__(self, other: "ZetaSeries") -> "ZetaSeries":
        lo = max(self.lo if not self.bounded_neg else -10**9, other.lo if not other.bounded_neg else -10**9)
        hi = min(self.hi if not self.bounded_pos else 10**9, other.hi if not other.bounded_pos else 10**9)
        lo = max(lo, min(self.lo, other.lo))
        hi = min(hi, max(self.hi, other.hi))
        order = min(self.order, other.order)
        terms = {}
        for k in set(self.terms) | set(other.terms):
            if lo <= k <= hi:
                a = self.terms.get(k)
                b = other.terms.get(k)
                v = a + b if a is not None and b is not None else (a if a is not None else b)
                terms[k] = v.with_order(order)
        return ZetaSeries(terms, order, min(self.slope_pos, other.slope_pos),
                          min(self.slope_neg, other.slope_neg), lo, hi,
                          self.bounded_pos and other.bounded_pos,
                          self.bounded_neg and other.bounded_neg,
                          max(self.shift, other.shift),
                          self.parity if self.parity == other.parity else 0)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def dz(self) -> "ZetaSeries":
        """Zeta-derivative ``zeta d/dzeta``: coefficient at ``e`` times ``e``."""
        return self._like({k: v.scale(Fraction(k, 2)) for k, v in self.terms.items() if k},
                          parity=-self.parity)

    def dtau(self) -> "ZetaSeries":
        """``q d/dq`` applied coefficientwise."""
        return self._like({k: q_derive(v) for k, v in self.terms.items()})

    def with_order(self, order: int) -> "ZetaSeries":
        return self._like({k: v.with_order(order) for k, v in self.terms.items()}, order=order)

    def __repr__(self):
        return (f"ZetaSeries(window=[{Fraction(self.lo, 2)}, {Fraction(self.hi, 2)}], "
                f"slopes=({self.slope_neg}, {self.slope_pos}), order={self.order}, "
                f"terms={len(self.terms)})")
