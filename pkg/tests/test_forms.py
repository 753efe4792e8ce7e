import random
from fractions import Fraction

import pytest

from heckediv import forms as F
from heckediv.errors import UnsupportedWeight
from heckediv.series import PuiseuxSeries as S


def brute_delta(prec):
    """Independent oracle: expand q prod (1 - q^n)^24 term by term, no
    pentagonal shortcut."""
    prod = S.one(prec)
    for n in range(1, prec + 1):
        factor = S(1, 0, [1] + [0] * (n - 1) + [-1] + [0] * max(prec - n, 0))
        for _ in range(24):
            prod = (prod * factor).truncate(prec)
    return S.q_power(1, prec) * prod


def test_bernoulli_values():
    assert F.bernoulli(4) == Fraction(-1, 30)
    assert F.bernoulli(6) == Fraction(1, 42)
    assert F.bernoulli(12) == Fraction(-691, 2730)
    assert F.bernoulli(16) == Fraction(-3617, 510)


def test_eisenstein_sigma_oracle():
    for k in (4, 6, 8, 12):
        e = F.eisenstein(k, 9)
        lead = -Fraction(2 * k) / F.bernoulli(k)
        for n in range(1, 8):
            assert e.coefficient(n) == lead * F.sigma(k - 1, n)
    assert F.eisenstein(4, 3).coefficient(1) == 240
    assert F.eisenstein(6, 3).coefficient(1) == -504
    assert F.eisenstein(12, 2).coefficient(1) == Fraction(65520, 691)


def test_eisenstein_rejects_bad_weights():
    with pytest.raises(UnsupportedWeight):
        F.eisenstein(5, 4)
    with pytest.raises(UnsupportedWeight):
        F.eisenstein(2, 4)


def test_delta_against_brute_product():
    assert F.delta(16).equal_through(brute_delta(16), 14)


def test_delta_coefficients():
    d = F.delta(6)
    assert [d.coefficient(i) for i in (1, 2, 3, 4, 5)] == [1, -24, 252, -1472, 4830]


def test_j_and_shift():
    j = F.j_function(4)
    assert j.coefficient(-1) == 1
    assert j.coefficient(0) == 744
    assert j.coefficient(1) == 196884
    assert j.coefficient(2) == 21493760
    jp = F.j_shifted(3)
    assert jp.coefficient(0) == 24
    assert jp.coefficient(1) == 196884
    assert F.standard_form("j_shifted", 3) == jp


def test_jn_normalization():
    assert F.jn(1, 8) == F.j_shifted(8)
    j2 = F.jn(2, 8)
    assert j2.leading_exponent() == -2 and j2.leading_coefficient() == 1
    assert j2.coefficient(-1) == 0
    assert j2.coefficient(0) == 24 * F.sigma(1, 2)
    assert F.jn(3, 8).coefficient(0) == 24 * F.sigma(1, 3)
    # coefficient of q in j_2 is 2 c_j(2) by the weight-0 formula
    assert j2.coefficient(1) == 2 * F.j_shifted(5).coefficient(2)


def test_eta_quotient_hauptmodul_level2():
    spec = F.EtaQuotientSpec.make(2, {1: 24, 2: -24})
    t = F.eta_quotient_qexp(spec, 6)
    assert [t.coefficient(i) for i in (-1, 0, 1, 2)] == [1, -24, 276, -2048]


def test_eta_quotient_single_factor_is_delta():
    spec = F.EtaQuotientSpec.make(1, {1: 24})
    assert F.eta_quotient_qexp(spec, 10) == F.delta(10)


def test_eta_quotient_rescaled_delta():
    spec = F.EtaQuotientSpec.make(2, {2: 24})
    t = F.eta_quotient_qexp(spec, 4)
    assert t.coefficient(2) == 1 and t.coefficient(4) == -24 and t.coefficient(3) == 0


def test_eta_agrees_with_delta_shift_expression():
    for m in (1, 2, 3):
        spec = F.EtaQuotientSpec.make(m, {m: 24})
        lhs = F.eta_quotient_qexp(spec, 8)
        rhs = F.FormExpression.of(F.DeltaShift(m)).qexp(8)
        assert lhs.agrees_with(rhs)


def test_ligozat_orders_level2():
    spec = F.EtaQuotientSpec.make(2, {1: 24, 2: -24})
    assert F.ligozat_order(spec, 2, 2) == -1   # infinity (c = N)
    assert F.ligozat_order(spec, 2, 1) == 1    # cusp 0
    # and the order at infinity matches the expansion directly
    assert F.eta_quotient_qexp(spec, 4).leading_exponent() == -1


def test_expression_qexp_product_consistency():
    e4d = F.FormExpression.of(F.Eisenstein(4), F.DeltaShift(1))
    direct = F.eisenstein(4, 12) * F.delta(12)
    assert e4d.qexp(10).agrees_with(direct)
    assert e4d.weight == 16 and e4d.level == 1


def test_expression_multiplicative_in_factors():
    a = F.FormExpression.of(F.Eisenstein(4))
    b = F.FormExpression.of(F.DeltaShift(2))
    ab = a * b
    assert ab.qexp(8).agrees_with(a.qexp(10) * b.qexp(10), through=7)
    assert ab.level == 2


def test_shifted_expression_constant_term():
    spec = F.EtaQuotientSpec.make(2, {1: 24, 2: -24})
    e = F.FormExpression.of((F.EtaQuotient(spec), 1), shift=-512)
    assert e.qexp(5).coefficient(0) == -536
    assert e.weight == 0


def test_jminus_expression():
    jm = F.FormExpression.of(F.JMinus(Fraction(1728)))
    q = jm.qexp(4)
    assert q.coefficient(-1) == 1 and q.coefficient(0) == -984
    assert q.coefficient(1) == 196884


def test_hauptmodul_leading_terms():
    assert F.hauptmodul_qexp(1, 4).coefficient(0) == 24
    for N, const in ((2, -24), (3, -12), (4, -8), (5, -6)):
        t = F.hauptmodul_qexp(N, 4)
        assert t.coefficient(-1) == 1 and t.coefficient(0) == const


def test_registry_names():
    assert F.form_by_name("E4", 5) == F.eisenstein(4, 5)
    assert F.form_by_name("Delta", 5) == F.delta(5)
    assert F.form_by_name("j_shifted", 5) == F.j_shifted(5)
    assert F.form_by_name("jminus:1728", 5).coefficient(0) == -984
    eta = F.form_by_name("eta:2:1=24,2=-24", 5)
    assert eta.coefficient(0) == -24
    with pytest.raises(ValueError):
        F.form_by_name("nope", 5)


def test_psl2_index():
    assert [F.psl2_index(n) for n in (1, 2, 3, 4, 5, 6, 12)] == [1, 3, 4, 6, 6, 12, 24]


def test_expression_json_round_trip():
    import json
    cases = [
        F.FormExpression.of(F.Eisenstein(4), (F.DeltaShift(2), -1)),
        F.FormExpression.of((F.EtaQuotient(F.hauptmodul_spec(2)), 1), shift=-512),
        F.FormExpression.of(F.JMinus(Fraction(1728))),
        F.FormExpression.of(F.OpaqueSeries(F.delta(6), 12, 1)),
    ]
    for expr in cases:
        data = json.loads(json.dumps(expr.to_json()))
        assert F.expression_from_json(data) == expr
