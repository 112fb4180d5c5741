"""Multiple q-zeta values and their Lie-algebra analogues.

All lattice sums below are truncated by the exact valuation of their
numerators, which grows linearly in every summation variable.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .series import QSeries, div_one_minus


def _check_composition(a) -> tuple:
    a = tuple(a)
    if not a or any((not isinstance(x, int)) or x < 1 for x in a):
        raise ValueError("composition must be a nonempty sequence of positive integers")
    return a


def _nested(a, N: int, strict: bool, numer) -> QSeries:
    """``sum_{n_1 >= .. >= n_k >= 1} prod_j q^(numer(j) n_j) / (1-q^(n_j))^(a_j)``
    (strict inequalities when ``strict``), computed from the innermost
    index outwards with running cumulative sums.

    ``numer(j)`` gives the per-level numerator exponent; ``numer(0) >= 1`` is
    what makes the outer sum converge."""
    k = len(a)
    L = N + 1
    if numer(0) < 1:
        raise ValueError("outer numerator exponent must be positive")
    nmax = N // numer(0) if numer(0) else N
    # cum[n] = sum over inner tuples with leading index <= n of the inner product
    cum = None  # None means "the empty inner sum" == 1
    for j in range(k - 1, -1, -1):
        e = numer(j)
        new = [None] * (nmax + 1)
        run = [0] * L
        for n in range(1, nmax + 1):
            if cum is None:
                inner = [1] + [0] * (L - 1)
            else:
                src = cum[n - 1] if strict else cum[n]
                if src is None:
                    inner = None
                else:
                    inner = list(src)
            if inner is not None and e * n < L:
                term = [0] * e * n + inner[: L - e * n]
                div_one_minus(term, n, a[j])
                for i in range(L):
                    run[i] += term[i]
            new[n] = list(run) if any(run) else None
        new[0] = None
        cum = new
    total = cum[nmax] if cum[nmax] is not None else [0] * L
    return QSeries.make(total, 0, N)


def zq_star(a, N: int) -> QSeries:
    """``sum_{n_1 >= .. >= n_k >= 1} q^(n_1) / prod (1-q^(n_i))^(a_i)``."""
    a = _check_composition(a)
    return _nested(a, N, False, lambda j: 1 if j == 0 else 0)


def zq_strict(a, N: int) -> QSeries:
    """Strict-inequality version of :func:`zq_star`."""
    a = _check_composition(a)
    return _nested(a, N, True, lambda j: 1 if j == 0 else 0)


def zq_standard(a, N: int) -> QSeries:
    """``sum_{n_1 > .. > n_k >= 1} prod q^((a_i-1) n_i) / (1-q^(n_i))^(a_i)``."""
    a = _check_composition(a)
    if a[0] < 2:
        raise ValueError("standard model needs a_1 >= 2")
    return _nested(a, N, True, lambda j: a[j] - 1)


def zq_value(k: int, N: int) -> QSeries:
    """Depth-one value ``sum q^n/(1-q^n)^k``."""
    return zq_star((k,), N)


# ---------------------------------------------------------------- root data

@dataclass(frozen=True)
class RootSystem:
    """Positive roots as coefficient vectors over the simple roots."""

    rank: int
    roots: tuple
    name: str = ""

    def __post_init__(self):
        for r in self.roots:
            if len(r) != self.rank or any(c < 0 for c in r) or not any(r):
                raise ValueError(f"bad positive root {r}")

    def heights(self, u) -> list:
        """``<lambda + rho, alpha>`` for every positive root, where
        ``u_s = m_s + 1`` are the shifted Dynkin labels."""
        return [sum(c * x for c, x in zip(r, u)) for r in self.roots]


def type_A(n: int) -> RootSystem:
    """Positive roots of ``sl(n+1)``: intervals ``[i, j]``, ordered by
    length and then by start (so ``[1,1], .., [n,n], [1,2], ..``)."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    roots = []
    for length in range(1, n + 1):
        for i in range(n - length + 1):
            roots.append(tuple(1 if i <= s < i + length else 0 for s in range(n)))
    return RootSystem(n, tuple(roots), f"A{n}")


def intervals(n: int) -> list:
    """1-indexed intervals ``(i, j)`` in the same order as :func:`type_A`."""
    return [(i + 1, i + length) for length in range(1, n + 1) for i in range(n - length + 1)]


def _lattice_sum(rank: int, weights: list, N: int, term) -> QSeries:
    """Sum over ``u in Z_{>=1}^rank`` of ``term(u, L)``, where the doubled
    numerator exponent is ``sum_s weights[s] u_s`` (all weights positive)
    and ``term`` returns a coefficient list of length ``L`` in ``Q = q^(1/2)``
    aligned at that exponent."""
    if any(w <= 0 for w in weights):
        raise ValueError("every summation direction needs a positive numerator weight")
    top = 2 * N + 2  # Q^0 .. Q^(2N+1): known modulo q^(N+1)
    total = [0] * top
    base = sum(weights)
    u = [1] * rank

    def rec(s: int, e: int):
        # e: doubled exponent with u_s.. still at 1
        if s == rank:
            L = top - e
            if L > 0:
                part = term(tuple(u), L)
                for i, x in enumerate(part):
                    if x:
                        total[e + i] += x
            return
        x = 1
        while e + (x - 1) * weights[s] < top:
            u[s] = x
            rec(s + 1, e + (x - 1) * weights[s])
            x += 1
        u[s] = 1

    rec(0, base)
    return QSeries.make(total, 0, top - 1, 2)


def _denominators(coeffs: list, hs, ks) -> list:
    for h, k in zip(hs, ks):
        if k:
            div_one_minus(coeffs, 2 * h, k)
    return coeffs


def zeta_g(roots: RootSystem, kvec, N: int) -> QSeries:
    """``sum_lambda q^(sum_a k_a h_a / 2) / prod_a (1 - q^(h_a))^(k_a)`` with
    ``h_a = <lambda + rho, a>``."""
    kvec = tuple(kvec)
    if len(kvec) != len(roots.roots):
        raise ValueError(f"need {len(roots.roots)} root exponents, got {len(kvec)}")
    if any(k < 1 for k in kvec):
        raise ValueError("root exponents must be >= 1")
    weights = [sum(k * r[s] for k, r in zip(kvec, roots.roots)) for s in range(roots.rank)]

    def term(u, L):
        c = [1] + [0] * (L - 1)
        return _denominators(c, roots.heights(u), kvec)

    return _lattice_sum(roots.rank, weights, N, term)


def zeta_g_s(roots: RootSystem, s: int, k: int, N: int, dim_normalized: bool = False) -> QSeries:
    """``sum_lambda (prod_a h_a)^s q^(k sum_a h_a / 2) / prod_a (1-q^(h_a))^k``.

    With ``dim_normalized`` the weight is the Weyl dimension
    ``prod_a h_a / ht(a)`` raised to ``s``; the default keeps the
    unnormalised product used by the character formula."""
    if s < 0 or k < 1:
        raise ValueError("need s >= 0 and k >= 1")
    kvec = (k,) * len(roots.roots)
    weights = [sum(k * r[t] for r in roots.roots) for t in range(roots.rank)]
    norm = 1
    if dim_normalized:
        for r in roots.roots:
            norm *= sum(r)

    def term(u, L):
        hs = roots.heights(u)
        w = math.prod(hs) ** s
        w = Fraction(w, norm ** s) if dim_normalized else w
        c = [w] + [0] * (L - 1)
        return _denominators(c, hs, kvec)

    return _lattice_sum(roots.rank, weights, N, term)


def type_an(n: int, k: int, N: int) -> QSeries:
    """Character numerator of ``sl(n+1)`` at level ``k`` written with one
    global exponent ``(k-2)/2 * sum_i i (n-i+1) m_i``."""
    if k < 3:
        raise ValueError("k must be >= 3")
    ivs = intervals(n)
    weights = [(k - 2) * i * (n - i + 1) for i in range(1, n + 1)]

    def term(m, L):
        hs = [sum(m[i - 1:j]) for i, j in ivs]
        c = [math.prod(hs) ** k] + [0] * (L - 1)
        for h in hs:
            div_one_minus(c, 2 * h, k - 2)
        return c

    return _lattice_sum(n, weights, N, term)


def type_an_alt(n: int, k: int, N: int) -> QSeries:
    """Same series as :func:`type_an` with the exponent distributed over the
    intervals: each ``[i, j]`` contributes ``(k-2)/2 * (m_i + .. + m_j)``."""
    if k < 3:
        raise ValueError("k must be >= 3")
    ivs = intervals(n)
    weights = [0] * n
    for i, j in ivs:
        for s in range(i - 1, j):
            weights[s] += k - 2

    def term(m, L):
        c = [1] + [0] * (L - 1)
        for i, j in ivs:
            h = sum(m[i - 1:j])
            c = [x * h ** k for x in c]
            div_one_minus(c, 2 * h, k - 2)
        return c

    return _lattice_sum(n, weights, N, term)


def bibracket_sl(n: int, kmat, smat, N: int) -> QSeries:
    """``sum_m prod_[i,j] h_ij^(s_ij) q^(k_ij h_ij / 2) / (1-q^(h_ij))^(k_ij)``
    over ``m in Z_{>=1}^n``, ``h_ij = m_i + .. + m_j``.  ``kmat``/``smat`` are
    dicts keyed by 1-indexed ``(i, j)`` or sequences in interval order."""
    ivs = intervals(n)
    ks = _per_interval(kmat, ivs, "k")
    ss = _per_interval(smat, ivs, "s")
    if any(x < 1 for x in ks) or any(x < 0 for x in ss):
        raise ValueError("need k >= 1 and s >= 0 on every interval")
    weights = [0] * n
    for (i, j), kk in zip(ivs, ks):
        for t in range(i - 1, j):
            weights[t] += kk

    def term(m, L):
        hs = [sum(m[i - 1:j]) for i, j in ivs]
        w = math.prod(h ** s for h, s in zip(hs, ss))
        c = [w] + [0] * (L - 1)
        return _denominators(c, hs, ks)

    return _lattice_sum(n, weights, N, term)


def _per_interval(vals, ivs, what):
    if isinstance(vals, dict):
        try:
            return [vals[iv] for iv in ivs]
        except KeyError as exc:
            raise ValueError(f"missing {what} for interval {exc.args[0]}") from None
    vals = list(vals)
    if len(vals) != len(ivs):
        raise ValueError(f"need {len(ivs)} values of {what}, got {len(vals)}")
    return vals


def symmetrized_sum(roots: RootSystem, kvals, N: int) -> QSeries:
    """Sum of :func:`zeta_g` over every assignment of ``kvals`` to the
    positive roots (all ``r!`` permutations, repeats included)."""
    kvals = tuple(kvals)
    if len(kvals) != len(roots.roots):
        raise ValueError(f"need {len(roots.roots)} values, got {len(kvals)}")
    cache = {}
    total = None
    for perm in itertools.permutations(kvals):
        if perm not in cache:
            cache[perm] = zeta_g(roots, perm, N)
        total = cache[perm] if total is None else total + cache[perm]
    return total


def star_from_strict(a, N: int) -> QSeries:
    """Star value rebuilt from strict values by merging adjacent indices:
    the sum over all coarsenings of ``a``."""
    a = _check_composition(a)
    total = None
    for cuts in itertools.product((0, 1), repeat=len(a) - 1):
        merged = [a[0]]
        for x, c in zip(a[1:], cuts):
            if c:
                merged[-1] += x
            else:
                merged.append(x)
        v = zq_strict(merged, N)
        total = v if total is None else total + v
    return total
