"""Characters built from Lie-algebra q-zeta values and supercharacters
obtained as constant terms of a theta quotient.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .modular import (Recognition, ct, eisenstein, g_hat, qm_generators, recognize,
                      weierstrass)
from .qmzv import bibracket_sl, intervals, symmetrized_sum, type_A, zeta_g, zeta_g_s
from .series import QSeries, ZetaSeries, dilate, divisor_sigma, eta

# wp_hat(1/3) = TORSION_SIGN * ((3/2) G_hat(2) - (9/2) G_hat(2)(3 tau)) with
# G_hat(2) = -E2/12 and wp_hat = wp / (2 pi i)^2
TORSION_SIGN = -1


@dataclass
class CharacterResult:
    """``series`` carries ``eta(tau)^eta_power`` (and, for supercharacters,
    ``eta(level tau)^3``) inside it."""

    series: QSeries
    eta_power: int
    level: int
    recognition: Recognition | None = None

    def to_json_obj(self) -> dict:
        out = {"eta_power": self.eta_power, "level": self.level,
               "series": self.series.to_json_obj()}
        if self.recognition is not None:
            out["recognition"] = self.recognition.to_json_obj()
        return out


# ---------------------------------------------------------------- Arakawa

def arakawa_exponent(rank: int, k: int) -> int:
    """``dim(g) k - (k-2) rank(g)`` for ``g = sl(rank+1)``."""
    dim = rank * (rank + 2)
    return dim * k - (k - 2) * rank


def arakawa_char(rank: int, k: int, N: int) -> CharacterResult:
    """``eta^-m * zeta^k_{sl(rank+1)}(k-2)`` through ``q^N``."""
    if k < 3:
        raise ValueError("k must be >= 3")
    m = arakawa_exponent(rank, k)
    z = zeta_g_s(type_A(rank), k, k - 2, N)
    return CharacterResult(z * eta(N + 1) ** (-m), -m, 1)


# ---------------------------------------------------------------- theta quotient

def _prefactor(m: int, T: int, lift: int) -> dict:
    """``zeta^lift (1 - x^m) / (1 - x)^m`` with ``x = 1/zeta``, as exponent ->
    coefficient for exponents ``>= lift - T``."""
    out = {}
    for t in range(T + 1):
        c = sum(math.comb(t - i + m - 2, m - 2) for i in range(min(t, m - 1) + 1))
        out[lift - t] = c
    return out


def _product_part(m: int, N: int) -> dict:
    """``prod_n (1 - q^(mn) zeta^m)(1 - q^(mn) zeta^-m) / ((1 - q^n zeta)(1 - q^n/zeta))^m``
    as zeta-exponent -> coefficient list through ``q^N``.  The ``zeta^j``
    coefficient has valuation at least ``|j|``, so ``|j| <= N`` suffices."""
    W = N
    grid = {j: [0] * (N + 1) for j in range(-W, W + 1)}
    grid[0][0] = 1
    for n in range(1, N + 1):
        for sgn in (1, -1):
            for _ in range(m):
                # divide by (1 - q^n zeta^sgn): a[j][d] += a[j - sgn][d - n]
                js = range(-W, W + 1) if sgn == 1 else range(W, -W - 1, -1)
                for j in js:
                    src = grid.get(j - sgn)
                    if src is None:
                        continue
                    row = grid[j]
                    for d in range(n, N + 1):
                        row[d] += src[d - n]
        if m * n <= N:
            for sgn in (1, -1):
                # multiply by (1 - q^(mn) zeta^(m sgn)): a[j][d] -= a[j - m sgn][d - mn]
                js = range(W, -W - 1, -1) if sgn == 1 else range(-W, W + 1)
                for j in js:
                    src = grid.get(j - m * sgn)
                    if src is None:
                        continue
                    row = grid[j]
                    for d in range(N, m * n - 1, -1):
                        row[d] -= src[d - m * n]
    return grid


def fm_zeta(m: int, N: int, lift: bool = False) -> ZetaSeries:
    """Expansion of ``theta(m z, m tau) / theta(z, tau)^m`` without its eta
    factors in ``1 < |zeta| < |q|^-1``: the rational prefactor
    ``(1 - zeta^-m) / (1 - zeta^-1)^m`` in powers of ``1/zeta`` times the
    product part.  ``lift`` multiplies by ``zeta^((m-1)/2)`` as well."""
    if m < 3 or m % 2 == 0:
        raise ValueError("only odd m >= 3 is supported")
    c = (m - 1) // 2 if lift else 0
    grid = _product_part(m, N)
    pre = _prefactor(m, 2 * N + c, c)

    def fn(e):
        total = [0] * (N + 1)
        for j, row in grid.items():
            r = pre.get(e - j)
            if r:
                for d in range(abs(j), N + 1):
                    total[d] += r * row[d]
        return QSeries.make(total, 0, N)

    return ZetaSeries.from_function(fn, N, 1, 0, window=N, shift=c, bounded_pos=True)


def _sch_eta(m: int, N: int) -> QSeries:
    """``eta(m tau)^3 / eta(tau)^(2m-1)``."""
    return eta(N + 1, m) ** 3 * eta(N + 1) ** (-(2 * m - 1))


def sch_u(m: int, N: int, lift: bool = False) -> CharacterResult:
    """Constant term of the theta quotient times ``eta^(m+1)``, scaled so
    the leading coefficient is 1 (this fixes the free overall constant)."""
    F = fm_zeta(m, N, lift)
    core = ct([F], N)
    s = core * (eta(N + 1) * eta(N + 1, m))
    lead = s.coeffs[0] if s.coeffs else 0
    if lead == 0:
        raise ArithmeticError("constant term vanishes identically at this order")
    return CharacterResult(s.scale(Fraction(1) / lead), -(2 * m - 1), m)


def sch_u_closed(m: int, N: int) -> QSeries:
    """Closed eta-quotient times Eisenstein form for ``m`` in ``{3, 5}``."""
    if m not in (3, 5):
        raise ValueError("closed form known only for m = 3, 5")
    E2 = eisenstein(2, N)
    E2m = dilate(eisenstein(2, N // m), m).with_order(N)
    F = Fraction
    if m == 3:
        form = E2.scale(F(-1, 8)) + E2m.scale(F(9, 8))
    else:
        E4 = eisenstein(4, N)
        E4m = dilate(eisenstein(4, N // m), m).with_order(N)
        form = ((E2 * E2).scale(F(25, 1152)) + (E2 * E2m).scale(F(-125, 192))
                + (E2m * E2m).scale(F(3125, 1152)) + E4.scale(F(1, 576)) + E4m.scale(F(-625, 576)))
    return (_sch_eta(m, N) * form).truncate(Fraction(N + 1) + _sch_eta(m, N).offset)


def fm_recognize(m: int, N: int, margin: int = 10) -> Recognition:
    """Recognize ``sch_u(m) / (eta(m tau)^3 / eta^(2m-1))`` homogeneously at
    weight ``m - 1`` over the level-``m`` generators."""
    s = sch_u(m, N).series
    form = s / _sch_eta(m, N)
    return recognize(form, qm_generators(m, N), m - 1, m - 1, margin)


# ---------------------------------------------------------------- torsion point

def _qomega_mul(a, b):
    # (a0 + a1 w)(b0 + b1 w) with w^2 = -1 - w
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0] - a[1] * b[1])


def _omega_power(r: int):
    return ((1, 0), (0, 1), (-1, -1))[r % 3]


def torsion_p_third(N: int) -> QSeries:
    """``wp_hat`` at ``zeta = omega`` (primitive cube root of unity) through
    ``q^N``, computed in ``Q[omega]``.  Uses

    ``wp_hat = 1/12 + zeta/(1-zeta)^2
    + sum_{n, r >= 1} r q^(nr) (zeta^r + zeta^-r) - 2 sum sigma_1(n) q^n``.
    """
    # omega / (1 - omega)^2 = -1/3
    const = (Fraction(1, 12) - Fraction(1, 3), Fraction(0))
    coeffs = [const]
    for n in range(1, N + 1):
        acc = (Fraction(-2 * divisor_sigma(n, 1)), Fraction(0))
        for r in range(1, n + 1):
            if n % r == 0:
                w = _omega_power(r)
                wbar = _omega_power(-r)
                acc = (acc[0] + r * (w[0] + wbar[0]), acc[1] + r * (w[1] + wbar[1]))
        coeffs.append(acc)
    for i, (re, im) in enumerate(coeffs):
        if im:
            raise ArithmeticError(f"non-real coefficient at q^{i}")
    return QSeries.make([re for re, _ in coeffs], 0, N)


def torsion_reference(N: int) -> QSeries:
    """``(3/2) G_hat(2) - (9/2) G_hat(2)(3 tau)`` times the sign convention."""
    G2 = g_hat(2, N)
    G2m = dilate(g_hat(2, N // 3), 3).with_order(N)
    return (G2.scale(Fraction(3, 2)) + G2m.scale(Fraction(-9, 2))).scale(TORSION_SIGN)


def sch_u3_from_torsion(N: int) -> QSeries:
    """``eta(3 tau)^3 / eta^5 * (CT wp_hat - wp_hat(1/3))``: proportional to
    ``sch_u(3)``."""
    diff = ct([weierstrass(N)], N) - torsion_p_third(N)
    return (_sch_eta(3, N) * diff).truncate(Fraction(N + 1) + _sch_eta(3, N).offset)


# ---------------------------------------------------------------- probes

PROBES = ("arakawa-qm", "zeta-g-even", "symmetrized", "bibracket-sym")


def _fit_window(level: int, wmax: int, rows: int, margin: int, N: int):
    """Largest window ``[wmin, wmax]`` whose monomial count leaves ``margin``
    spare coefficients."""
    from .modular import _monomials
    weights = [g.weight for g in qm_generators(level, 1)]
    for wmin in range(0, wmax + 1, 2 if level != 2 else 2):
        if len(_monomials(weights, wmin, wmax)) + margin <= rows:
            return wmin
    return None


def conjecture_probe(name: str, params: dict, N: int, margin: int = 10) -> dict:
    """Build the series of a named conjecture and try to recognize it.
    Outcomes are reported, never asserted."""
    rank = int(params.get("rank", 2))
    roots = type_A(rank)
    r = len(roots.roots)
    if name == "arakawa-qm":
        k = int(params.get("k", 4))
        series = zeta_g_s(roots, k, k - 2, N)
        level = 1 if k % 2 == 0 else 2
        wmax = r * (2 * k - 2)
        desc = f"eta^{arakawa_exponent(rank, k)} * character of sl({rank + 1}) at k={k}"
    elif name == "zeta-g-even":
        k = int(params.get("k", 1))
        series = zeta_g(roots, (2 * k,) * r, N)
        level = 1
        wmax = 2 * k * r
        desc = f"zeta_sl({rank + 1})({2 * k}) with all root exponents equal"
    elif name == "symmetrized":
        kvals = tuple(int(x) for x in params.get("kvals", (2,) * r))
        series = symmetrized_sum(roots, kvals, N)
        level = 1
        wmax = sum(kvals)
        desc = f"S_{r}-symmetrized zeta_sl({rank + 1}){kvals}"
    elif name == "bibracket-sym":
        kvals = tuple(int(x) for x in params.get("kvals", (2,) * r))
        if len(kvals) != r:
            raise ValueError(f"need {r} values")
        series = None
        for perm in sorted(set(itertools.permutations(kvals))):
            mult = math.prod(math.factorial(kvals.count(v)) for v in set(kvals))
            term = bibracket_sl(rank, list(perm), [x + 2 for x in perm], N).scale(mult)
            series = term if series is None else series + term
        level = 1
        wmax = 2 * sum(kvals) + 2 * r
        desc = f"S_{r}-symmetrized bibracket with s = k + 2, k = {kvals}"
    else:
        raise ValueError(f"unknown probe {name!r}; choose from {', '.join(PROBES)}")
    rows = math.ceil(series.prec * series.denom)
    wmin = _fit_window(level, wmax, rows, margin, N)
    report = {"probe": name, "params": {k: (list(v) if isinstance(v, tuple) else v) for k, v in params.items()},
              "description": desc, "order": N, "level": level, "weight_max": wmax}
    if wmin is None:
        report.update(found=False, weight_min=None, certificate=None,
                      note="order too low for any weight window")
        return report
    rec = recognize(series, qm_generators(level, N), wmin, wmax, margin)
    report.update(found=rec.found, weight_min=wmin,
                  certificate=rec.to_json_obj() if rec.found else None,
                  note=rec.note)
    return report
