from fractions import Fraction

import pytest

from qzv.qmzv import type_A, zeta_g_s
from qzv.series import eta
from qzv.vertexchar import (PROBES, arakawa_char, arakawa_exponent, conjecture_probe, fm_recognize,
                            fm_zeta, sch_u, sch_u3_from_torsion, sch_u_closed, torsion_p_third,
                            torsion_reference)


def test_arakawa_exponents():
    assert arakawa_exponent(1, 4) == 10
    assert arakawa_exponent(2, 4) == 28
    with pytest.raises(ValueError):
        arakawa_char(1, 2, 10)


def test_arakawa_round_trip():
    N = 20
    res = arakawa_char(1, 4, N)
    assert res.series.offset == Fraction(-10, 24) + 1
    back = res.series * eta(N + 1) ** 10
    assert back.agrees(zeta_g_s(type_A(1), 4, 2, N), N + 1)


def test_fm_zeta_shape():
    F = fm_zeta(3, 12)
    assert F.check_slopes() is None
    assert all(k % 2 == 0 for k in F.terms)
    assert max(F.terms) <= 0 or F[Fraction(max(F.terms), 2)].offset >= Fraction(max(F.terms), 2)
    with pytest.raises(ValueError):
        fm_zeta(4, 10)


def test_supercharacter_coefficients():
    s3 = sch_u(3, 10).series
    s5 = sch_u(5, 10).series
    assert list(s3.coeffs[:6]) == [1, 8, 44, 152, 487, 1352]
    assert list(s5.coeffs[:6]) == [1, 24, 249, 1750, 9750, 45750]
    assert s3.offset == Fraction(1, 6) and s5.offset == Fraction(1, 4)


def test_lifted_prefactor_does_not_reproduce():
    assert list(sch_u(3, 10, lift=True).series.coeffs[:6]) != [1, 8, 44, 152, 487, 1352]


@pytest.mark.parametrize("m,N", [(3, 25), (5, 20)])
def test_closed_forms(m, N):
    s = sch_u(m, N).series
    assert s.agrees(sch_u_closed(m, N), s.offset + N)
    with pytest.raises(ValueError):
        sch_u_closed(7, 10)


def test_fm_recognize_m3():
    rec = fm_recognize(3, 30)
    assert rec.found
    assert dict(rec.terms()) == {"E2^1": Fraction(-1, 8), "E2[3]^1": Fraction(9, 8)}


def test_torsion_value():
    assert torsion_p_third(30).agrees(torsion_reference(30))
    a = sch_u3_from_torsion(30)
    assert a.agrees(sch_u(3, 30).series.scale(Fraction(1, 3)), a.offset + 30)


@pytest.mark.parametrize("name,params", [
    ("arakawa-qm", {"rank": 1, "k": 4}),
    ("zeta-g-even", {"rank": 2, "k": 1}),
    ("symmetrized", {"rank": 2, "kvals": (2, 4, 4)}),
    ("bibracket-sym", {"rank": 1, "kvals": (2,)}),
])
def test_probes_report(name, params):
    r = conjecture_probe(name, params, 40)
    assert r["probe"] == name and isinstance(r["found"], bool)


def test_unknown_probe():
    assert "arakawa-qm" in PROBES
    with pytest.raises(ValueError):
        conjecture_probe("nope", {}, 10)
