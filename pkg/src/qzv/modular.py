"""Eisenstein series, quasi-modular recognition, and constant terms of
two-variable Fourier expansions in the annulus ``1 < |zeta| < |q|^-1``.

Transcendental prefactors are dropped throughout: ``(2 pi i)^k`` is
divided out of every elliptic object, so the Weierstrass function becomes
``wp_hat = wp / (2 pi i)^2`` and ``G_2k`` becomes
``G_hat(2k) = G_2k / (2 pi i)^2k = -(B_2k / (2k)!) E_2k``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .series import (QSeries, ZetaSeries, bernoulli, dilate, div_one_minus, divisor_sigma,
                     euler_polynomial, mul_one_minus)


# ---------------------------------------------------------------- Eisenstein

@lru_cache(maxsize=None)
def _eisenstein(weight: int, N: int) -> QSeries:
    k = weight // 2
    c = Fraction(-4 * k) / bernoulli(weight)
    coeffs = [1] + [c * divisor_sigma(n, weight - 1) for n in range(1, N + 1)]
    return QSeries.make(coeffs, 0, N)


def eisenstein(weight: int, N: int) -> QSeries:
    """``E_weight = 1 - (2k/B_2k) * 2 sum sigma_(2k-1)(n) q^n`` through ``q^N``."""
    if weight < 2 or weight % 2:
        raise ValueError("Eisenstein weight must be even and >= 2")
    return _eisenstein(weight, N)


def g_hat(weight: int, N: int) -> QSeries:
    """``G_weight / (2 pi i)^weight`` as a rational series."""
    return eisenstein(weight, N).scale(-bernoulli(weight) / math.factorial(weight))


# ---------------------------------------------------------------- generators

@dataclass(frozen=True)
class WeightedGenerator:
    series: QSeries
    weight: int
    label: str


def theta3(N: int) -> QSeries:
    """``sum_{n in Z} q^(n^2/2)`` through ``q^N``."""
    terms = {}
    n = 0
    while Fraction(n * n, 2) <= N:
        terms[Fraction(n * n, 2)] = terms.get(Fraction(n * n, 2), 0) + (1 if n == 0 else 2)
        n += 1
    return QSeries.from_dict(terms, N + 1)


def theta2(N: int) -> QSeries:
    """``sum_{n in Z + 1/2} q^(n^2/2)`` through ``q^N``."""
    terms = {}
    n = Fraction(1, 2)
    while n * n / 2 <= N:
        terms[n * n / 2] = terms.get(n * n / 2, 0) + 2
        n += 1
    return QSeries.from_dict(terms, N + 1)


def qm_generators(level: int, N: int) -> list:
    """Level 1: ``E2, E4, E6``.  Level 2: ``E2, th2^4, th3^4``.  Level
    ``m >= 3``: ``E2, E4, E6`` and their dilates ``E2[m]`` etc."""
    gens = [WeightedGenerator(eisenstein(w, N), w, f"E{w}") for w in (2, 4, 6)]
    if level == 1:
        return gens
    if level == 2:
        return [gens[0],
                WeightedGenerator(theta2(N) ** 4, 2, "th2^4"),
                WeightedGenerator(theta3(N) ** 4, 2, "th3^4")]
    if level >= 3:
        M = N // level
        dil = [WeightedGenerator(dilate(eisenstein(w, M), level).with_order(N), w, f"E{w}[{level}]")
               for w in (2, 4, 6)]
        return gens + dil
    raise ValueError("level must be a positive integer")


# ---------------------------------------------------------------- recognition

@dataclass
class Recognition:
    """Certificate ``target = sum coeff * prod gen^exp`` (when ``found``).

    ``fitted_up_to`` and ``verified_through`` are exponents of ``q``: the
    coefficients were solved for on ``[0, fitted_up_to]`` and checked on
    ``[0, verified_through]``."""

    monomials: list
    fitted_up_to: Fraction
    verified_through: Fraction
    found: bool
    labels: list = field(default_factory=list)
    weights: tuple = ()
    note: str = ""

    def to_json_obj(self) -> dict:
        return {
            "found": self.found,
            "fitted_up_to": str(self.fitted_up_to),
            "verified_through": str(self.verified_through),
            "terms": [{"monomial": m, "coeff": f"{c.numerator}/{c.denominator}"}
                      for m, c in self.terms()],
            "note": self.note,
        }

    def terms(self) -> list:
        out = []
        for exps, c in self.monomials:
            parts = [f"{lab}^{e}" for lab, e in zip(self.labels, exps) if e]
            out.append(("*".join(parts) if parts else "1", Fraction(c)))
        return out

    def __str__(self):
        if not self.found:
            return "not found"
        return " + ".join(f"({c})*{m}" for m, c in self.terms())


def _monomials(weights, wmin, wmax):
    """Exponent vectors with total weight in ``[wmin, wmax]``, in a fixed
    order (by weight, then lexicographically)."""
    out = []

    def rec(i, rest, cur):
        if i == len(weights):
            out.append(tuple(cur))
            return
        e = 0
        while e * weights[i] <= rest:
            cur.append(e)
            rec(i + 1, rest - e * weights[i], cur)
            cur.pop()
            e += 1

    rec(0, wmax, [])
    sel = [m for m in out if wmin <= sum(e * w for e, w in zip(m, weights)) <= wmax]
    sel.sort(key=lambda m: (sum(e * w for e, w in zip(m, weights)), tuple(-x for x in m)))
    return sel


def recognize(target: QSeries, generators, weight_min: int, weight_max: int, margin: int = 10) -> Recognition:
    """Exact linear-algebra fit of ``target`` by monomials in ``generators``
    of total weight in ``[weight_min, weight_max]``; the last ``margin``
    known coefficients are held back for verification."""
    gens = list(generators)
    weights = [g.weight for g in gens]
    labels = [g.label for g in gens]
    monos = _monomials(weights, weight_min, weight_max)
    if not monos:
        raise ValueError("no monomials in the requested weight range")
    if target.offset < 0 and not target.is_zero():
        raise ValueError("target has negative valuation; strip the prefactor first")
    prec = min([target.prec] + [g.series.prec for g in gens])
    d = target.denom
    for g in gens:
        d = d * g.series.denom // math.gcd(d, g.series.denom)
    for off in [target.offset] + [g.series.offset for g in gens]:
        d = d * off.denominator // math.gcd(d, off.denominator)
    rows = math.ceil(prec * d)
    if rows < len(monos) + margin:
        raise ValueError(f"insufficient order: {rows} known coefficients, "
                         f"need {len(monos)} monomials + margin {margin}")
    fit_rows = rows - margin
    exps = [Fraction(i, d) for i in range(rows)]

    # monomial series, built incrementally from cached powers
    powers = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = QSeries.one(math.ceil(prec)) if e == 0 else power(i, e - 1) * gens[i].series
        return powers[key]

    cols = []
    for m in monos:
        s = None
        for i, e in enumerate(m):
            if e:
                s = power(i, e) if s is None else s * power(i, e)
        if s is None:
            s = QSeries.one(math.ceil(prec))
        cols.append([s[x] for x in exps])
    rhs = [target[x] for x in exps]

    sol = _solve(cols, rhs, fit_rows)
    fitted = exps[fit_rows - 1]
    verified = exps[rows - 1]
    if sol is None:
        return Recognition([], fitted, verified, False, labels, tuple(weights), "inconsistent system")
    for r in range(rows):
        if sum(sol[j] * cols[j][r] for j in range(len(monos)) if sol[j]) != rhs[r]:
            return Recognition([], fitted, verified, False, labels, tuple(weights),
                               f"verification failed at q^{exps[r]}")
    mon = [(m, c) for m, c in zip(monos, sol) if c]
    return Recognition(mon, fitted, verified, True, labels, tuple(weights))


def _solve(cols, rhs, nrows):
    """Particular solution of ``sum_j x_j cols[j][r] = rhs[r]`` for
    ``r < nrows`` by exact Gauss-Jordan elimination (free variables 0)."""
    ncols = len(cols)
    A = [[Fraction(cols[j][r]) for j in range(ncols)] + [Fraction(rhs[r])] for r in range(nrows)]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if A[r][col]), None)
        if piv is None:
            continue
        A[row], A[piv] = A[piv], A[row]
        inv = 1 / A[row][col]
        A[row] = [x * inv for x in A[row]]
        for r in range(nrows):
            if r != row and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    for r in range(row, nrows):
        if A[r][ncols]:
            return None
    sol = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        sol[col] = A[r][ncols]
    return sol


def evaluate_monomials(rec: Recognition, generators, N: int) -> QSeries:
    """Rebuild the series a recognition certificate describes."""
    total = QSeries.zero(N)
    for exps, c in rec.monomials:
        s = QSeries.one(N)
        for g, e in zip(generators, exps):
            if e:
                s = s * g.series ** e
        total = total + s.scale(c)
    return total


# ---------------------------------------------------------------- Fourier engine

def _lambert_side(numer, den_power: int, h: int, N: int, shift: int = 0) -> QSeries:
    """``c * q^shift * poly(q^h) / (1-q^h)^den_power`` through ``q^N``,
    where ``numer`` is ``(c, poly coefficients)``."""
    c, poly = numer
    L = N + 1
    arr = [0] * L
    for i, p in enumerate(poly):
        pos = shift + i * h
        if pos < L and p:
            arr[pos] += c * p
    if den_power:
        div_one_minus(arr, h, den_power)
    return QSeries.make(arr, 0, N)


def p_function(k: int, N: int, normalized: bool = True) -> ZetaSeries:
    """``sum_n n^(k-1) zeta^n q^n/(1-q^n) + (-1)^k n^(k-1) zeta^-n/(1-q^n)``.

    ``normalized=False`` multiplies by ``1/(k-1)!`` (the rational part of
    the usual prefactor; the power of ``2 pi i`` is never included)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    scale = Fraction(1) if normalized else Fraction(1, math.factorial(k - 1))
    sgn = (-1) ** k

    def fn(e):
        if e == 0:
            return None
        n = abs(e)
        c = scale * n ** (k - 1) * (1 if e > 0 else sgn)
        return _lambert_side((c, [1]), 1, n, N, shift=n if e > 0 else 0)

    return ZetaSeries.from_function(fn, N, 1, 0, parity=1 if k % 2 == 0 else -1)


def j1(N: int) -> ZetaSeries:
    """``1/2 + P_1``: the shifted first propagator."""
    p = p_function(1, N)
    half = ZetaSeries({0: QSeries.make([Fraction(1, 2)], 0, N)}, N, 1, 0, p.lo, p.hi)
    return p + half


def weierstrass(N: int) -> ZetaSeries:
    """``wp_hat = -G_hat(2) + sum n (q^n zeta^n + zeta^-n)/(1-q^n)``."""
    p = p_function(2, N)
    const = ZetaSeries({0: -g_hat(2, N)}, N, 1, 0, p.lo, p.hi)
    return p + const


def weierstrass_prime(N: int) -> ZetaSeries:
    """``-sum n^2 (q^n zeta^n - zeta^-n)/(1-q^n)``, the displayed Fourier form
    of ``wp' / (2 pi i)^3``.  Note ``dz(weierstrass(N))`` is the negative of
    this; only the sign convention differs, the function is odd either way."""
    return p_function(3, N).scale(-1)


def j_tilde(l: int, N: int) -> ZetaSeries:
    """``(B_l - J_l)/l = sum q^n P_l(q^n) (zeta^n + (-1)^l zeta^-n)/(1-q^n)^l``."""
    if l < 2:
        raise ValueError("l must be >= 2")
    poly = list(euler_polynomial(l))
    sgn = (-1) ** l

    def fn(e):
        if e == 0:
            return None
        n = abs(e)
        return _lambert_side((1 if e > 0 else sgn, poly), l, n, N, shift=n)

    return ZetaSeries.from_function(fn, N, 1, 1, parity=1 if l % 2 == 0 else -1)


def q_block(k: int, N: int, power: int = 0, sign: int = 1) -> ZetaSeries:
    """``sum n^power q^(kn) (zeta^n + sign zeta^-n)/(1-q^n)^(2k)``."""
    if k < 1:
        raise ValueError("k must be >= 1")

    def fn(e):
        if e == 0:
            return None
        n = abs(e)
        c = n ** power * (1 if e > 0 else sign)
        return _lambert_side((c, [1]), 2 * k, n, N, shift=k * n)

    par = 1 if (sign == 1) == (power % 2 == 0) else -1
    return ZetaSeries.from_function(fn, N, k, k, parity=par)


def dz(f: ZetaSeries) -> ZetaSeries:
    return f.dz()


def dtau(f: ZetaSeries) -> ZetaSeries:
    return f.dtau()


# ---------------------------------------------------------------- constant term

def ct(factors, N: int | None = None) -> QSeries:
    """Coefficient of ``zeta^0`` in the product of ``factors`` through ``q^N``.

    Exponent tuples summing to zero are enumerated depth first; a suffix
    table of the least achievable q-valuation for each partial exponent sum
    prunes every branch that cannot reach ``q^N``.  Windows are checked up
    front: a factor whose stored window ends on a side with more terms must
    have that side's omitted terms provably beyond ``q^N``."""
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one factor")
    if N is None:
        N = min(f.order for f in factors)
    if any(f.order < N for f in factors):
        raise ValueError("a factor is known to lower order than requested")
    shift_total = sum(f.shift for f in factors)
    budget = N + shift_total  # valuations are measured relative to -shift
    _check_windows(factors, N)

    r = len(factors)
    items = []
    for f in factors:
        lst = []
        for key in f.exponents():
            v = f.terms[key]
            val = v.offset + f.shift  # >= 0 by the slope declaration
            if val <= budget:
                lst.append((key, val, v))
        items.append(lst)

    # suffix[i][s] = least relative valuation of factors i.. with exponent sum s
    suffix = [None] * (r + 1)
    suffix[r] = {0: Fraction(0)}
    for i in range(r - 1, -1, -1):
        table = {}
        for key, val, _ in items[i]:
            for s, best in suffix[i + 1].items():
                t = val + best
                if t <= budget:
                    ss = s + key
                    if ss not in table or t < table[ss]:
                        table[ss] = t
        suffix[i] = table
    prec = N + 1
    total = QSeries.zero_at(prec)
    if 0 not in suffix[0]:
        return total

    acc = [None]

    def rec(i, s, val, prod):
        if i == r - 1:
            need = -s
            for key, v, ser in items[i]:
                if key == need and val + v <= budget:
                    term = ser if prod is None else (prod * ser)
                    acc[0] = term.truncate(prec) if acc[0] is None else acc[0] + term.truncate(prec)
            return
        nxt = suffix[i + 1]
        for key, v, ser in items[i]:
            rest = nxt.get(-(s + key))
            if rest is None or val + v + rest > budget:
                continue
            p = ser if prod is None else prod * ser
            rec(i + 1, s + key, val + v, p.truncate(prec))

    rec(0, 0, Fraction(0), None)
    if acc[0] is None:
        return total
    return (acc[0] + total).truncate(prec)


def _check_windows(factors, N):
    r = len(factors)
    C = sum(f.shift for f in factors)
    for i, f in enumerate(factors):
        rest = [g for j, g in enumerate(factors) if j != i]
        for side in (1, -1):
            bounded = f.bounded_pos if side > 0 else f.bounded_neg
            if bounded:
                continue
            edge = f.hi if side > 0 else -f.lo  # doubled extent stored
            first_missing = Fraction(edge + 1, 2)
            slope = f.slope_pos if side > 0 else f.slope_neg
            if not rest:
                # a lone factor: only zeta^0 matters
                if edge >= 0:
                    continue
                raise ValueError("window of a single factor does not contain zeta^0")
            # the others must supply exponent sum of the opposite sign
            opp = [(g.slope_neg if side > 0 else g.slope_pos,
                    g.bounded_neg if side > 0 else g.bounded_pos,
                    (-g.lo if side > 0 else g.hi)) for g in rest]
            if all(b for _, b, _ in opp):
                reach = sum(Fraction(e, 2) for _, _, e in opp)
                if first_missing > reach:
                    continue
            rest_slope = min(s for s, b, _ in opp if not b) if any(not b for _, b, _ in opp) else \
                min(s for s, _, _ in opp)
            if (slope + rest_slope) * first_missing - C > N:
                continue
            raise ValueError(
                f"unbounded window configuration: factor {i} needs zeta exponents beyond "
                f"{first_missing * side} to reach q^{N}")
