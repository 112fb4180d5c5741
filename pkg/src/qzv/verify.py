"""Identity suites: every check compares two independently computed
exact series and reports the first differing exponent on failure."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph_series import gamma_multisum, graph_series, hilbert_via_ct
from .graphs import (adjacency_determinant, build_T, build_Z, build_gamma, disjoint_union,
                     hilbert_series, independence_profile, point)
from .modular import ct, g_hat, j1, j_tilde, p_function, q_block, weierstrass, weierstrass_prime
from .qmzv import type_A, zeta_g, zq_star
from .series import BiSeries, QSeries, euler_product, q_derive
from .vertexchar import (fm_recognize, sch_u, sch_u3_from_torsion, sch_u_closed,
                         torsion_p_third, torsion_reference)


@dataclass
class Check:
    name: str
    reference: str
    passed: bool
    detail: str = ""

    def to_json_obj(self) -> dict:
        return {"name": self.name, "reference": self.reference,
                "passed": self.passed, "detail": self.detail}


def compare(name: str, reference: str, lhs: QSeries, rhs: QSeries, upto) -> Check:
    """Exact agreement of ``lhs`` and ``rhs`` strictly below ``q^upto``."""
    upto = Fraction(upto)
    prec = min(lhs.prec, rhs.prec)
    if prec < upto:
        return Check(name, reference, False, f"only known below q^{prec}, needed q^{upto}")
    d = lhs.first_difference(rhs, upto)
    if d is None:
        return Check(name, reference, True, f"agree below q^{upto}")
    return Check(name, reference, False, f"first difference at q^{d}: {lhs[d]} vs {rhs[d]}")


def equal(name: str, reference: str, got, want) -> Check:
    ok = got == want
    return Check(name, reference, ok, f"got {got}" + ("" if ok else f", expected {want}"))


# ---------------------------------------------------------------- closed forms

def lambert(coef, N: int) -> QSeries:
    """``sum_{n>=1} coef(n) q^n / (1 - q^n)`` through ``q^N``."""
    cs = [0] * (N + 1)
    for n in range(1, N + 1):
        c = coef(n)
        if c:
            for j in range(n, N + 1, n):
                cs[j] += c
    return QSeries.make(cs, 0, N)


def gamma_numerator(k: int, N: int) -> QSeries:
    """``sum n C(n+k-2, k-1) q^n / (1 - q^n)``."""
    return lambert(lambda n: n * math.comb(n + k - 2, k - 1), N)


def macmahon_log_derivative(k: int, N: int) -> QSeries:
    """``q d/dq log prod (1-q^n)^-C(n+k-2, k-1)``, from the product itself."""
    prod = QSeries.one(N)
    for n in range(1, N + 1):
        e = math.comb(n + k - 2, k - 1)
        f = QSeries.make([1] + [0] * (n - 1) + [-1], 0, N)
        prod = prod * f ** e
    inv = prod.invert()
    return q_derive(inv) / inv


def zq_binomial(k: int, N: int) -> QSeries:
    """``sum C(n+k-2, k-1) q^n / (1 - q^n)``."""
    return lambert(lambda n: math.comb(n + k - 2, k - 1), N)


def normalized_graph(g, N: int, euler_power: int) -> QSeries:
    """``q * H_g * (q)_inf^euler_power`` through ``q^N``."""
    h = graph_series(g, N)
    return (QSeries.monomial(1, 1, N + 2) * h * euler_product(N) ** euler_power).with_order(N)


# ---------------------------------------------------------------- graph series and q-MZV identities

def euler_double_sum(a: int, b: int, N: int) -> QSeries:
    """``sum_{n,m>=0} q^(mn + m(a+1) + n(b+1)) / ((q)_m (q)_n)``."""
    total = [0] * (N + 1)
    for m in range(N + 1):
        for n in range(N + 1):
            e = m * n + m * (a + 1) + n * (b + 1)
            if e > N:
                break
            c = [0] * e + [1] + [0] * (N - e)
            for h in range(1, m + 1):
                _div(c, h)
            for h in range(1, n + 1):
                _div(c, h)
            for i, x in enumerate(c):
                total[i] += x
    return QSeries.make(total, 0, N)


def _div(c, h):
    for i in range(h, len(c)):
        c[i] += c[i - h]


def finite_poch(start: int, n: int, N: int) -> QSeries:
    """``(q^start; q)_n``."""
    s = QSeries.one(N)
    for i in range(n):
        s = s * QSeries.make([1] + [0] * (start + i - 1) + [-1], 0, N)
    return s


def infinite_poch(start: int, N: int) -> QSeries:
    return finite_poch(start, max(N - start + 1, 0), N)


def nested_x_sum(k: int, N: int, X: int, x_on_last: bool) -> BiSeries:
    """Both sides of the x-deformation of the star value with all ones.

    ``x_on_last``: ``sum q^(n_1) x^(n_k) / prod (1 - q^(n_i))``; otherwise
    ``sum x q^(n_1) / ((1 - x q^(n_1)) prod_{i>=2} (1 - q^(n_i)))``."""
    coeffs = [[0] * (N + 1) for _ in range(X + 1)]

    def rec(depth, prev, ns):
        if depth == k:
            n1, nk = ns[0], ns[-1]
            if x_on_last:
                if nk > X:
                    return
                c = [0] * (N + 1)
                c[n1] = 1
                for n in ns:
                    _div(c, n)
                for i in range(N + 1):
                    coeffs[nk][i] += c[i]
            else:
                # x q^n1 / (1 - x q^n1) = sum_l x^l q^(l n1)
                tail = [0] * (N + 1)
                tail[0] = 1
                for n in ns[1:]:
                    _div(tail, n)
                for l in range(1, X + 1):
                    if l * n1 > N:
                        break
                    for i in range(N + 1 - l * n1):
                        coeffs[l][i + l * n1] += tail[i]
            return
        for n in range(1, prev + 1):
            rec(depth + 1, n, ns + [n])

    rec(0, N, [])
    return BiSeries.make([QSeries.make(c, 0, N) for c in coeffs], X, N)


def nk_weighted(k: int, N: int) -> QSeries:
    """``sum_{n_1 >= .. >= n_k >= 1} n_k q^(n_1) / prod (1 - q^(n_i))``."""
    total = [0] * (N + 1)

    def rec(depth, prev, ns):
        if depth == k:
            c = [0] * (N + 1)
            c[ns[0]] = ns[-1]
            for n in ns:
                _div(c, n)
            for i in range(N + 1):
                total[i] += c[i]
            return
        for n in range(1, prev + 1):
            rec(depth + 1, n, ns + [n])

    rec(0, N, [])
    return QSeries.make(total, 0, N)


def nk_reindexed(k: int, N: int) -> QSeries:
    """The ``(k+1)``-fold sum ``sum_m q^(m_1+..+m_(k+1)+1) / prod_j (1 - q^(m_2+..+m_j+1))``
    for ``j = 3..k+1`` and a final factor with ``m_1`` included."""
    total = [0] * (N + 1)
    # variables m_2.., m_(k+1) then m_1; all >= 0
    order = list(range(2, k + 2)) + [1]

    def rec(idx, s, c):
        if idx == len(order):
            e = s + 1
            if e > N:
                return
            cc = [0] * e + c[: N + 1 - e]
            for i in range(N + 1):
                total[i] += cc[i]
            return
        var = order[idx]
        x = 0
        while s + x + 1 <= N:
            nxt = list(c)
            t = s + x
            if var >= 3 or var == 1:
                _div(nxt, t + 1)
            rec(idx + 1, t, nxt)
            x += 1

    rec(0, 0, [1] + [0] * N)
    return QSeries.make(total, 0, N)


def suite_section2(order: int = 25, kmax: int = 4) -> list:
    N = order
    out = []
    for k in range(1, kmax + 1):
        lhs = normalized_graph(build_gamma(k), N, k + 1)
        out.append(compare(f"gamma_{3 * k + 2} graph series", "leafless family closed form",
                           lhs, gamma_numerator(k, N), N + 1))
        out.append(compare(f"gamma numerator k={k} as MacMahon log-derivative",
                           "MacMahon (k+1)-dimensional product", gamma_numerator(k, N),
                           macmahon_log_derivative(k, N), N + 1))
        if k >= 2:
            lhs = normalized_graph(build_T(k), N, k + 1)
            out.append(compare(f"T_{2 * k + 2} graph series", "star family q-zeta closed form",
                               lhs, zq_star((k,), N), N + 1))
            out.append(compare(f"q-zeta binomial form k={k}", "depth-one binomial Lambert form",
                               zq_star((k,), N), zq_binomial(k, N), N + 1))
        left = graph_series(disjoint_union(build_gamma(k), point()), N)
        right = graph_series(build_T(k + 1), N).scale(k)
        if k >= 2:
            right = right - graph_series(disjoint_union(build_T(k), point()), N).scale(k - 1)
        out.append(compare(f"gamma+pt relation k={k}", "gamma plus point versus star graphs",
                           left, right, N + 1))
        out.append(compare(f"cyclic formula k={k}", "star value (2,1,..,1) in depth one",
                           zq_star((2,) + (1,) * (k - 1), N),
                           zq_star((k + 1,), N).scale(k) - zq_star((k,), N).scale(k - 1), N + 1))
        out.append(compare(f"(2,1,..,1) binomial form k={k}", "weighted Lambert form",
                           zq_star((2,) + (1,) * (k - 1), N), gamma_numerator(k, N), N + 1))
        out.append(compare(f"multisum form k={k}", "(k+1)-fold sum for the gamma family",
                           gamma_multisum(k, N), graph_series(build_gamma(k), N), N + 1))
    out.append(compare("C5+pt = E6", "pentagon plus point versus E6",
                       graph_series(disjoint_union(build_gamma(1), point()), 30),
                       graph_series(build_T(2), 30), 31))
    n = min(N, 20)
    for a, b in ((0, 0), (1, 2), (2, 1), (3, 0)):
        ds = euler_double_sum(a, b, n)
        f1 = (finite_poch(b + 1, a + 1, n) * infinite_poch(a + 1, n)).invert()
        f2 = (finite_poch(a + 1, b + 1, n) * infinite_poch(b + 1, n)).invert()
        out.append(compare(f"double sum a={a} b={b} first form", "two-variable Euler sum", ds, f1, n + 1))
        out.append(compare(f"double sum a={a} b={b} second form", "two-variable Euler sum", ds, f2, n + 1))
    n = min(N, 16)
    for k in range(1, min(kmax, 3) + 1):
        L = nested_x_sum(k, n, 6, True)
        R = nested_x_sum(k, n, 6, False)
        d = L.first_difference(R)
        out.append(Check(f"x-deformation k={k}", "x on the innermost index versus x on the outer pole",
                         d is None, "agree through x^6 and q^%d" % n if d is None else f"differ at x^{d[0]} q^{d[1]}"))
        out.append(compare(f"innermost-weighted sum k={k}", "derivative of the x-deformation at x=1",
                           nk_weighted(k, n), zq_star((2,) + (1,) * (k - 1), n), n + 1))
        out.append(compare(f"reindexed (k+1)-fold sum k={k}", "n_k-weighted sum as a lattice sum",
                           QSeries.monomial(1, 1, n + 2) * gamma_multisum(k, n) * euler_product(n) ** (k + 1),
                           nk_reindexed(k, n), n + 1))
    n = min(N, 20)
    for a in ((2,), (1, 2), (2, 1), (3, 1), (2, 2), (1, 1, 2)):
        g = build_Z(a)
        lhs = normalized_graph(g, n, len(a) + sum(a))
        out.append(compare(f"Z graph {a}", "graph realising a star multiple q-zeta value",
                           lhs, zq_star(a, n), n + 1))
        out.append(Check(f"Z graph {a} bipartite", "Z graphs are bipartite", g.is_bipartite()))
    for k in range(2, 6):
        out.append(Check(f"T_{2 * k + 2} bipartite", "star graphs are bipartite", build_T(k).is_bipartite()))
    g1, g2 = build_gamma(1), build_T(2)
    out.append(compare("multiplicativity C5 x E6", "disjoint union multiplies series",
                       graph_series(disjoint_union(g1, g2), 20),
                       graph_series(g1, 20) * graph_series(g2, 20), 21))
    out.extend(hilbert_checks(5))
    for k in range(1, 7):
        g = build_gamma(k)
        out.append(equal(f"gamma_{3 * k + 2} edge count", "5k + (k-2)(k-1)/2",
                         g.num_edges(), 5 * k + (k - 2) * (k - 1) // 2))
        out.append(equal(f"gamma_{3 * k + 2} determinant", "(-1)^(k+1) (k+1)",
                         adjacency_determinant(g), (-1) ** (k + 1) * (k + 1)))
    return out


def gamma_hilbert(k: int) -> tuple:
    """``(1+t)^(k-1) (1 + (2+k) t + t^2)`` with pole order ``k + 1``."""
    p = [1, 2 + k, 1]
    for _ in range(k - 1):
        p = [a + b for a, b in zip(p + [0], [0] + p)]
    return tuple(p), k + 1


def hilbert_checks(kmax: int = 5, T: int = 6) -> list:
    out = []
    c5 = hilbert_series(build_gamma(1))
    e6 = hilbert_series(build_T(2))
    out.append(equal("C5 Hilbert series", "pentagon edge algebra", (c5.numerator, c5.pole_order), ((1, 3, 1), 2)))
    out.append(equal("E6 Hilbert series", "E6 edge algebra", (e6.numerator, e6.pole_order), ((1, 3, 1), 3)))
    out.append(equal("E6 = C5 / (1-t)", "one extra free variable", e6.expand(12),
                     [sum(c5.expand(j + 1)) for j in range(12)]))
    for k in range(1, kmax + 1):
        h = hilbert_series(build_gamma(k))
        out.append(equal(f"gamma_{3 * k + 2} Hilbert series", "leafless family Hilbert series",
                         (h.numerator, h.pole_order), gamma_hilbert(k)))
        out.append(equal(f"gamma_{3 * k + 2} palindromic numerator", "symmetric h-vector",
                         h.numerator, tuple(reversed(h.numerator))))
        out.append(equal(f"gamma_{3 * k + 2} pole order = independence number", "Krull dimension",
                         h.pole_order, len(independence_profile(build_gamma(k))) - 1))
    for label, g in (("C5", build_gamma(1)), ("E6", build_T(2)), ("gamma_8", build_gamma(2)),
                     ("gamma_11", build_gamma(3)), ("pt", point())):
        out.append(equal(f"{label} Hilbert series via constant term", "q^0 part of the framed character",
                         hilbert_via_ct(g, T), hilbert_series(g).expand(T + 1)))
    return out


# ---------------------------------------------------------------- elliptic constant terms

def suite_section3(order: int = 40) -> list:
    N = order
    out = []
    wp = weierstrass(N)
    out.append(compare("CT wp^2 = 5 G4", "constant term of the squared Weierstrass function",
                       ct([wp, wp], N), g_hat(4, N).scale(5), N + 1))
    out.append(compare("CT wp = -G2", "constant term of the Weierstrass function",
                       ct([wp], N), -g_hat(2, N), N + 1))
    wpp = weierstrass_prime(N)
    zero = QSeries.zero(N)
    out.append(compare("CT wp' = 0", "odd elliptic function", ct([wpp], N), zero, N + 1))
    out.append(compare("CT wp wp' = 0", "odd elliptic function", ct([wp, wpp], N), zero, N + 1))
    out.append(compare("CT wp'^3 = 0", "odd elliptic function", ct([wpp, wpp, wpp], N), zero, N + 1))
    out.append(compare("CT J1 = 1/2", "constant term of the first propagator",
                       ct([j1(N)], N), QSeries.monomial(0, Fraction(1, 2), N + 1), N + 1))
    out.append(compare("CT P2 = 0", "second P-function has no constant term",
                       ct([p_function(2, N)], N), zero, N + 1))
    n3 = min(N, 40)
    for k in (1, 2):
        b = q_block(k, n3)
        out.append(compare(f"CT block^3 = 6 zeta_sl3({2 * k})", "triple product constant term",
                           ct([b, b, b], n3), zeta_g(type_A(2), (2 * k,) * 3, n3).scale(6), n3 + 1))
    n = min(N, 30)
    blk = q_block(3, n)
    comb = (j_tilde(6, n).scale(Fraction(1, 120)) - j_tilde(4, n).scale(Fraction(1, 24))
            + j_tilde(2, n).scale(Fraction(1, 30)))
    bad = []
    for key in sorted(set(blk.terms) | set(comb.terms)):
        e = Fraction(key, 2)
        d = blk[e].first_difference(comb[e])
        if d is not None:
            bad.append((e, d))
    out.append(Check("block k=3 in J-tilde", "J-tilde decomposition of the k=3 block",
                     not bad, "all zeta exponents agree" if not bad else f"zeta^{bad[0][0]} differs at q^{bad[0][1]}"))
    return out


# ---------------------------------------------------------------- characters

SCH3 = [1, 8, 44, 152, 487, 1352]
SCH5 = [1, 24, 249, 1750, 9750, 45750]


def suite_characters(order: int = 20) -> list:
    out = []
    for m, want in ((3, SCH3), (5, SCH5)):
        s = sch_u(m, max(order, 8)).series
        out.append(equal(f"sch_u({m}) coefficients", "displayed supercharacter expansion",
                         list(s.coeffs[:6]), want))
        out.append(equal(f"sch_u({m}) offset", "eta(m tau)^3 / eta^(2m-1) leading power",
                         s.offset, Fraction(m + 1, 24)))
        out.append(compare(f"sch_u({m}) closed form", "eta quotient times Eisenstein form",
                           s, sch_u_closed(m, order), s.offset + order))
    N = 30
    out.append(compare("torsion wp(1/3)", "value at the 3-torsion point",
                       torsion_p_third(N), torsion_reference(N), N + 1))
    a = sch_u3_from_torsion(N)
    b = sch_u(3, N).series.scale(Fraction(1, 3))
    out.append(compare("sch_u(3) from CT minus torsion", "constant term minus torsion value, one scalar",
                       a, b, b.offset + N))
    for m, N in ((3, 30), (5, 40), (7, 60)):
        rec = fm_recognize(m, N)
        out.append(Check(f"sch_u({m}) weight {m - 1} form", "homogeneous level-m quasi-modular form",
                         rec.found, str(rec)))
    return out


SUITES = {"section2": suite_section2, "section3": suite_section3, "characters": suite_characters}
