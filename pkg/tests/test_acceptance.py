"""Acceptance criteria 1-17, exact comparisons only.

Each test records one ``criterion N: PASS|FAIL`` line (shown in the pytest
terminal summary, or printed when this file is run as a script).  Two
criteria carry a literal reading that cannot hold; those readings run as
strict expected failures next to the checks that do hold.
"""
from __future__ import annotations

import itertools
import random
import sys
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from oracles import graph_series_box, lie_sum_naive, qmzv_naive
from qzv.graph_series import census, gamma_multisum, graph_series, hilbert_via_ct
from qzv.graphs import (Graph, adjacency_determinant, build_T, build_Z, build_gamma, disjoint_union,
                        hilbert_series, point)
from qzv.modular import ct, g_hat, j_tilde, q_block, qm_generators, recognize, weierstrass, weierstrass_prime
from qzv.qmzv import symmetrized_sum, type_A, zeta_g, zeta_g_s, zq_standard, zq_star, zq_strict
from qzv.series import QSeries, euler_product
from qzv.verify import gamma_hilbert, gamma_numerator, macmahon_log_derivative, zq_binomial
from qzv.vertexchar import (conjecture_probe, fm_recognize, sch_u, sch_u3_from_torsion, sch_u_closed,
                            torsion_p_third, torsion_reference)


def record(n: int, ok: bool, detail: str, start: float, limit: float, deviation: str = ""):
    secs = time.perf_counter() - start
    within = secs < limit
    status = "PASS" if ok and within else "FAIL"
    if deviation:
        status += f" for the consistent reading; as literally stated FAIL ({deviation})"
    line = f"criterion {n}: {status} ({secs:.1f}s of {limit:.0f}s) {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line
    assert within, line


def times_q(s: QSeries, N: int) -> QSeries:
    return QSeries.monomial(1, 1, N + 2) * s


def normalized(g, N, power):
    return (times_q(graph_series(g, N), N) * euler_product(N) ** power).with_order(N)


def lambert(coef, N):
    cs = [0] * (N + 1)
    for n in range(1, N + 1):
        for j in range(n, N + 1, n):
            cs[j] += coef(n)
    return QSeries.make(cs, 0, N)


# ---------------------------------------------------------------- 1-9

def test_criterion_01_pentagon_plus_point():
    t = time.perf_counter()
    N = 30
    a = graph_series(disjoint_union(build_gamma(1), point()), N)
    b = graph_series(build_T(2), N)
    closed = lambert(lambda n: n, N)
    ok = (a.agrees(b, N + 1) and normalized(disjoint_union(build_gamma(1), point()), N, 3).agrees(closed, N + 1)
          and normalized(build_T(2), N, 3).agrees(zq_star((2,), N), N + 1)
          and zq_star((2,), N).agrees(closed, N + 1))
    record(1, ok, "C5+pt = E6 and both equal sigma_1 over (q)^3 through q^30", t, 10)


def test_criterion_02_gamma_and_star_closed_forms():
    t = time.perf_counter()
    N = 25
    bad = []
    for k in range(1, 5):
        num = gamma_numerator(k, N)
        if not normalized(build_gamma(k), N, k + 1).agrees(num, N + 1):
            bad.append(f"gamma k={k}")
        if not num.agrees(macmahon_log_derivative(k, N), N + 1):
            bad.append(f"MacMahon k={k}")
        if k >= 2:
            if not normalized(build_T(k), N, k + 1).agrees(zq_star((k,), N), N + 1):
                bad.append(f"T k={k}")
            if not zq_star((k,), N).agrees(zq_binomial(k, N), N + 1):
                bad.append(f"binomial k={k}")
    record(2, not bad, "leafless and star families, MacMahon numerator, k=1..4 through q^25"
           + (f"; failed {bad}" if bad else ""), t, 120)


def test_criterion_03_gamma_plus_point_relation():
    t = time.perf_counter()
    N = 25
    bad = []
    for k in range(1, 5):
        left = graph_series(disjoint_union(build_gamma(k), point()), N)
        right = graph_series(build_T(k + 1), N).scale(k)
        if k >= 2:
            right = right - graph_series(disjoint_union(build_T(k), point()), N).scale(k - 1)
        if not left.agrees(right, N + 1):
            bad.append(k)
    record(3, not bad, "gamma+pt = k T_(2k+4) - (k-1) (T_(2k+2)+pt), k=1..4 through q^25"
           + (f"; failed k={bad}" if bad else ""), t, 60)


def test_criterion_04_z_graphs():
    t = time.perf_counter()
    N = 20
    bad = []
    for a in ((2,), (1, 2), (2, 1), (3, 1), (2, 2), (1, 1, 2)):
        if not normalized(build_Z(a), N, len(a) + sum(a)).agrees(zq_star(a, N), N + 1):
            bad.append(a)
    record(4, not bad, "q H_Z (q)^(k+|a|) = star value for six compositions through q^20"
           + (f"; failed {bad}" if bad else ""), t, 120)


def test_criterion_05_multisum():
    t = time.perf_counter()
    N = 20
    bad = [k for k in (1, 2, 3) if not gamma_multisum(k, N).agrees(graph_series(build_gamma(k), N), N + 1)]
    record(5, not bad, "(k+1)-fold sum equals enumeration, k=1..3 through q^20"
           + (f"; failed {bad}" if bad else ""), t, 60)


def test_criterion_06_hilbert_series():
    t = time.perf_counter()
    c5 = hilbert_series(build_gamma(1))
    e6 = hilbert_series(build_T(2))
    ok = (c5.numerator, c5.pole_order) == ((1, 3, 1), 2)
    ok &= (e6.numerator, e6.pole_order) == ((1, 3, 1), 3)
    ok &= e6.expand(15) == [sum(c5.expand(j + 1)) for j in range(15)]
    for k in range(1, 6):
        h = hilbert_series(build_gamma(k))
        ok &= (h.numerator, h.pole_order) == gamma_hilbert(k)
    for g in (build_gamma(1), build_T(2), build_gamma(2), build_gamma(3)):
        ok &= hilbert_via_ct(g, 6) == hilbert_series(g).expand(7)
    record(6, ok, "C5 = (1+3t+t^2)/(1-t)^2, E6 = C5/(1-t), gamma family k<=5, constant-term route to t^6",
           t, 30, deviation="C5 has pole order 2, not 3")


@pytest.mark.xfail(strict=True, reason="pole order 3 for C5 contradicts E6 = C5/(1-t) with E6 of pole order 3")
def test_criterion_06_literal_pentagon_pole_order():
    c5 = hilbert_series(build_gamma(1))
    assert (c5.numerator, c5.pole_order) == ((1, 3, 1), 3)


def test_criterion_07_gamma_invariants():
    t = time.perf_counter()
    ok = all(build_gamma(k).num_edges() == 5 * k + (k - 2) * (k - 1) // 2
             and adjacency_determinant(build_gamma(k)) == (-1) ** (k + 1) * (k + 1) for k in range(1, 7))
    record(7, ok, "edge count and determinant for k<=6", t, 5)


def test_criterion_08_census():
    t = time.perf_counter()
    counts = census(6, 16)
    ok = counts[:5] == [1, 2, 4, 11, 34] and counts[5] < 156
    record(8, ok, f"distinct series at order 16: {counts}", t, 600)


def test_criterion_09_cyclic_formula():
    t = time.perf_counter()
    N = 30
    bad = [k for k in range(1, 7)
           if not zq_star((2,) + (1,) * (k - 1), N).agrees(
               zq_star((k + 1,), N).scale(k) - zq_star((k,), N).scale(k - 1), N + 1)]
    record(9, not bad, "star (2,1,..,1) = k z(k+1) - (k-1) z(k), k<=6 through q^30"
           + (f"; failed {bad}" if bad else ""), t, 30)


# ---------------------------------------------------------------- 10-15

def test_criterion_10_constant_terms():
    t = time.perf_counter()
    N = 40
    wp, wpp = weierstrass(N), weierstrass_prime(N)
    ok = ct([wp, wp], N).agrees(g_hat(4, N).scale(5), N + 1)
    ok &= all(ct(f, N).is_zero() for f in ([wpp], [wp, wpp], [wpp, wpp, wpp], [wp, wp, wpp]))
    record(10, ok, "CT wp^2 = 5 G4 through q^40, odd products vanish", t, 30)


def test_criterion_11_weight_twelve_identity():
    t = time.perf_counter()
    N = 40
    target = zeta_g_s(type_A(2), 3, 1, N, dim_normalized=True)
    rec = recognize(target, qm_generators(1, N), 0, 12)
    want = {"E6^2": Fraction(1, 570240), "E4^3": Fraction(1, 798336), "E2^1*E4^1*E6^1": Fraction(-1, 332640)}
    ok = rec.found and dict(rec.terms()) == want
    raw = zeta_g_s(type_A(2), 3, 1, N)
    ok &= raw.agrees(target.scale(8), N + 1)
    record(11, ok, "k=1 cubic double sum with (prod h / ht)^3 weights; the raw prod h^3 sum is 8 times it", t, 60)


def test_criterion_12_j_tilde_decomposition():
    t = time.perf_counter()
    N = 30
    blk = q_block(3, N)
    comb = (j_tilde(6, N).scale(Fraction(1, 120)) - j_tilde(4, N).scale(Fraction(1, 24))
            + j_tilde(2, N).scale(Fraction(1, 30)))
    keys = set(blk.terms) | set(comb.terms)
    ok = all(blk[Fraction(k, 2)].agrees(comb[Fraction(k, 2)]) for k in keys)
    record(12, ok, "k=3 block = J6/120 - J4/24 + J2/30 at every zeta power through q^30", t, 30)


def test_criterion_13_sl3_quasi_modularity():
    t = time.perf_counter()
    N = 80
    g80 = qm_generators(1, N)
    found = {}
    for k in (1, 2):
        b = q_block(k, N)
        plain = ct([b, b, b], N).scale(Fraction(1, 6))
        found[f"zeta_sl3({2 * k}) via CT"] = recognize(plain, g80, 0, 6 * k, 10).found
    found["weighted k=1"] = recognize(zeta_g_s(type_A(2), 4, 2, N), g80, 0, 18, 10).found
    M = 120
    found["weighted k=2 at order 120"] = recognize(zeta_g_s(type_A(2), 6, 4, M), qm_generators(1, M), 22, 30, 10).found
    found["symmetrized (2,2,4)"] = recognize(symmetrized_sum(type_A(2), (2, 2, 4), N), g80, 0, 8, 10).found
    ok = all(found.values())
    record(13, ok, str(found), t, 300,
           deviation="weighted k=2 needs weights 22..30, 106 monomials, more than order 80 can fit")


@pytest.mark.xfail(strict=True, reason="weights up to 6k+8 miss the top weight 12k+6 of the weighted sum")
def test_criterion_13_literal_weight_bound():
    N = 80
    for k in (1, 2):
        rec = recognize(zeta_g_s(type_A(2), 2 * k + 2, 2 * k, N), qm_generators(1, N), 0, 6 * k + 8, 10)
        assert rec.found


def test_criterion_14_supercharacters():
    t = time.perf_counter()
    s3, s5 = sch_u(3, 20).series, sch_u(5, 20).series
    ok = list(s3.coeffs[:6]) == [1, 8, 44, 152, 487, 1352]
    ok &= list(s5.coeffs[:6]) == [1, 24, 249, 1750, 9750, 45750]
    ok &= s3.agrees(sch_u_closed(3, 20), s3.offset + 20) and s5.agrees(sch_u_closed(5, 20), s5.offset + 20)
    recs = {m: fm_recognize(m, n) for m, n in ((3, 30), (5, 40), (7, 60))}
    ok &= all(r.found for r in recs.values())
    ok &= all({sum(e * w for e, w in zip(ex, r.weights)) for ex, _ in r.monomials} == {m - 1}
              for m, r in recs.items())
    record(14, ok, "sch_u(3), sch_u(5) coefficients and closed forms through q^20; weight m-1 forms for m=3,5,7",
           t, 300)


def test_criterion_15_torsion():
    t = time.perf_counter()
    N = 30
    ok = torsion_p_third(N).agrees(torsion_reference(N), N + 1)
    a = sch_u3_from_torsion(N)
    b = sch_u(3, N).series
    scalar = a.coeffs[0] / b.coeffs[0]
    ok &= a.agrees(b.scale(scalar), a.offset + N)
    record(15, ok, f"wp(1/3) = -((3/2)G2 - (9/2)G2(3tau)) through q^30; CT-minus-torsion = {scalar} sch_u(3)", t, 30)


# ---------------------------------------------------------------- 16-17

def test_criterion_16_oracle_equivalence():
    t = time.perf_counter()
    rnd = random.Random(20240613)
    N = 12
    bad = []
    for i in range(20):
        kind = i % 4
        if kind == 0:
            a = [rnd.randint(1, 3) for _ in range(rnd.randint(1, 3))]
            model = rnd.choice(["star", "strict"])
            fn = zq_star if model == "star" else zq_strict
            ok = list(fn(a, N).coefficient_list(upto=N + 1)) == qmzv_naive(a, N, model)
        elif kind == 1:
            a = [rnd.randint(2, 3)] + [rnd.randint(1, 3) for _ in range(rnd.randint(0, 2))]
            ok = list(zq_standard(a, N).coefficient_list(upto=N + 1)) == qmzv_naive(a, N, "standard")
        elif kind == 2:
            n = rnd.randint(1, 4)
            edges = [p for p in itertools.combinations(range(1, n + 1), 2) if rnd.random() < 0.5]
            g = Graph.from_edges(n, edges)
            b = [rnd.randint(1, 2) for _ in range(n)]
            a = (n, edges, b)
            ok = list(graph_series(g, N, b).coefficient_list(upto=N + 1)) == graph_series_box(g.matrix(), N, b)
        else:
            kvec = tuple(rnd.randint(1, 3) for _ in range(3))
            a = kvec
            got = zeta_g(type_A(2), kvec, 6)
            ok = [got[Fraction(j, 2)] for j in range(14)] == lie_sum_naive(type_A(2).roots, kvec, (0, 0, 0), 6)
        if not ok:
            bad.append(a)
    record(16, not bad, "20 random q-MZV, graph-series and Lie-sum inputs against unpruned box sums"
           + (f"; failed {bad}" if bad else ""), t, 120)


def test_criterion_17_probes():
    t = time.perf_counter()
    runs = [("arakawa-qm", {"rank": 1, "k": 4}), ("arakawa-qm", {"rank": 1, "k": 5}),
            ("arakawa-qm", {"rank": 2, "k": 4}), ("zeta-g-even", {"rank": 2, "k": 1}),
            ("zeta-g-even", {"rank": 3, "k": 1}), ("symmetrized", {"rank": 2, "kvals": (2, 4, 4)}),
            ("bibracket-sym", {"rank": 2, "kvals": (2, 2, 2)})]
    outcomes = []
    for name, params in runs:
        r = conjecture_probe(name, params, 60)
        outcomes.append(f"{name}{params}: {'found' if r['found'] else 'not found'}")
    record(17, True, "; ".join(outcomes), t, 600)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
