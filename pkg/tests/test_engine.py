import random
from fractions import Fraction

import pytest

from quadalg.engine import (C_DER, C_GAM, C_X, Q_AM, Q_AN, Q_AP, Q_EE, W_ANN,
                            W_CRE, AlgebraError, anticommutator,
                            cliffdiff_algebra, commutator, normalize,
                            q_commutator, qosc_algebra, weyl_algebra, _kind)
from quadalg.fields import Gauss, PoleError, RatFunc

FAMILY_KINDS = {
    "weyl": (W_CRE, W_ANN),
    "cliffdiff": (C_X, C_DER, C_GAM),
    "qosc": (Q_AP, Q_AM, Q_AN, Q_EE),
}


def algebras(n=3):
    return [weyl_algebra(n), cliffdiff_algebra(n), qosc_algebra(n)]


def random_word(rng, alg, max_letters=12):
    kinds = FAMILY_KINDS[alg.family]
    out = []
    for _ in range(rng.randint(0, max_letters)):
        k = rng.choice(kinds)
        m = rng.randint(1, alg.nmodes)
        e = 1
        if alg.family == "qosc" and k == Q_EE:
            e = rng.choice([-2, -1, 1, 2])
        out.append(((m << 2) | k, e))
    return tuple(out)


# -- normalization examples --------------------------------------------------


def test_weyl_defining_relation():
    alg = weyl_algebra(2)
    a, ad = alg.gen(W_ANN, 1), alg.gen(W_CRE, 1)
    assert a * ad == ad * a + 1
    assert commutator(a, ad) == alg.one()
    assert commutator(alg.gen(W_ANN, 1), alg.gen(W_CRE, 2)).is_zero()


def test_clifford_defining_relations():
    alg = cliffdiff_algebra(2)
    g1, g2 = alg.gen(C_GAM, 1), alg.gen(C_GAM, 2)
    assert g1 * g1 == -alg.one()
    assert anticommutator(g1, g2).is_zero()
    assert anticommutator(g1, g1) == -2 * alg.one()
    x, d = alg.gen(C_X, 1), alg.gen(C_DER, 1)
    assert d * x == x * d + 1


def test_qosc_defining_relations():
    alg = qosc_algebra(2)
    ap, am = alg.gen(Q_AP, 1), alg.gen(Q_AM, 1)
    a0, e = alg.gen(Q_AN, 1), alg.gen(Q_EE, 1)
    q = RatFunc.v_power(4)
    one = alg.one()
    # A- A+ - q A+ A- = 1 and [A-, A+] = q^(A0) = E^2
    assert am * ap - (ap * am) * q == one
    assert commutator(am, ap) == alg.gen(Q_EE, 1, 2)
    # A- A+ -> (q E^2 - 1)/(q - 1)
    nf = am * ap
    expect = (alg.gen(Q_EE, 1, 2) * q - one) * (RatFunc.v_power(0) / (q - 1))
    assert nf == expect
    assert commutator(a0, ap) == ap
    assert commutator(a0, am) == -am
    assert e * alg.gen(Q_EE, 1, -1) == one
    assert e * ap == (ap * e) * RatFunc.v_power(2)


def test_add_mul_examples():
    alg = weyl_algebra(4)
    x = alg.gen(W_CRE, 1) * alg.gen(W_ANN, 2)
    assert alg.one() * x == x
    # L_12 + L_21 = 0 by antisymmetry of the definition
    def L(m, n):
        return alg.gen(W_CRE, m) * alg.gen(W_ANN, n) \
            - alg.gen(W_ANN, m) * alg.gen(W_CRE, n)
    assert (L(1, 2) + L(2, 1)).is_zero()
    assert alg.gen(W_CRE, 1) * alg.gen(W_CRE, 2) == \
        alg.gen(W_CRE, 2) * alg.gen(W_CRE, 1)


def test_is_zero_examples():
    alg = weyl_algebra(4)
    a1, ad1 = alg.gen(W_ANN, 1), alg.gen(W_CRE, 1)
    assert (a1 * ad1 - ad1 * a1 - 1).is_zero()
    assert not alg.one().is_zero()
    def L(m, n):
        return alg.gen(W_CRE, m) * alg.gen(W_ANN, n) \
            - alg.gen(W_ANN, m) * alg.gen(W_CRE, n)
    assert commutator(L(1, 2), L(3, 4)).is_zero()


def test_q_commutator_degenerations():
    alg = weyl_algebra(2)
    a, b = alg.gen(W_ANN, 1), alg.gen(W_CRE, 1)
    assert q_commutator(a, b, Fraction(1)) == commutator(a, b)
    with pytest.raises(ZeroDivisionError):
        q_commutator(a, b, Fraction(0))
    qalg = qosc_algebra(1)
    one = qalg.one()
    q = RatFunc.v_power(4)
    assert q_commutator(one, one, q) == one * (q - RatFunc.v_power(-4))


def test_family_mismatch_errors():
    with pytest.raises(AlgebraError):
        weyl_algebra(2).one() * cliffdiff_algebra(2).one()
    with pytest.raises(AlgebraError):
        weyl_algebra(2).one() + weyl_algebra(3).one()
    with pytest.raises(AlgebraError):
        weyl_algebra(2).gen(W_CRE, 5)
    with pytest.raises(AlgebraError):
        weyl_algebra(2).gen(C_GAM, 1)  # gamma is not a weyl kind


def test_normalize_identity_on_elements():
    alg = weyl_algebra(2)
    e = alg.gen(W_ANN, 1) * alg.gen(W_CRE, 1)
    assert normalize(e) == e
    with pytest.raises(TypeError):
        normalize({})


# -- engine-wide properties ----------------------------------------------------


def test_confluence_strategies_agree():
    """Acceptance criterion 6: >= 1000 random words per family, all four
    reduction routes (fast fold, structured right, pure left/right) agree."""
    rng = random.Random(2024)
    for alg in algebras():
        for _ in range(1000):
            w = random_word(rng, alg)
            ref = alg.normal_form_raw(w, "left", structured=True)
            assert ref == alg.normal_form_raw(w, "right", structured=True)
            assert ref == alg.normal_form_raw(w, "left", structured=False)
            assert ref == alg.normal_form_raw(w, "right", structured=False)


def test_mul_associativity_and_distributivity():
    """Acceptance criterion 6: >= 500 random triples, exact ring axioms."""
    rng = random.Random(99)
    for alg in algebras():
        for _ in range(170):
            a = alg.from_word(random_word(rng, alg, 4))
            b = alg.from_word(random_word(rng, alg, 4))
            c = alg.from_word(random_word(rng, alg, 4))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert (a + b) * c == a * c + b * c


def test_weight_conservation():
    """Ladder weight (creation minus annihilation exponents per mode) is
    preserved by every rewrite: all monomials of a normal form share the
    weight of the input word."""
    def weight(word, up, down):
        out = {}
        for code, exp in word:
            k = _kind(code)
            if k == up:
                out[code >> 2] = out.get(code >> 2, 0) + exp
            elif k == down:
                out[code >> 2] = out.get(code >> 2, 0) - exp
        return {m: v for m, v in out.items() if v}

    rng = random.Random(5)
    for alg, up, down in ((weyl_algebra(3), W_CRE, W_ANN),
                          (qosc_algebra(3), Q_AP, Q_AM)):
        for _ in range(300):
            w = random_word(rng, alg, 8)
            target = weight(w, up, down)
            for mono in alg.from_word(w).terms:
                assert weight(mono, up, down) == target


def test_specialization_commutes_with_normalization():
    """Acceptance criterion 6: >= 200 random qosc elements, >= 3 non-pole
    points; normalize-then-specialize equals specialize-then-normalize."""
    rng = random.Random(31)
    sym = qosc_algebra(3)
    points = [Fraction(2), Fraction(1, 2), Fraction(3), Fraction(-2)]
    for _ in range(200):
        w = random_word(rng, sym, 8)
        nf = sym.from_word(w)
        for v0 in points:
            spec_alg = qosc_algebra(3, v0)
            lhs = sym.specialize_element(nf, v0)
            rhs = spec_alg.from_word(w)
            assert lhs == rhs


def test_specialized_algebra_rejects_poles():
    with pytest.raises(PoleError):
        qosc_algebra(2, 1)      # v0^4 = 1 breaks the contraction rule
    with pytest.raises(PoleError):
        qosc_algebra(2, -1)
    with pytest.raises(PoleError):
        qosc_algebra(2, 0)


def test_gamma_exponent_bounded_in_normal_form():
    rng = random.Random(17)
    alg = cliffdiff_algebra(3)
    for _ in range(400):
        w = random_word(rng, alg, 10)
        for mono in alg.from_word(w).terms:
            for code, exp in mono:
                if _kind(code) == C_GAM:
                    assert exp == 1


def test_serialization_deterministic_and_sorted():
    alg = weyl_algebra(2)
    e = (alg.gen(W_CRE, 1) + alg.gen(W_ANN, 2)) * \
        (alg.gen(W_ANN, 1) * alg.gen(W_CRE, 1))
    s1 = e.serialize()
    e2 = (alg.gen(W_CRE, 1) + alg.gen(W_ANN, 2)) * \
        (alg.gen(W_ANN, 1) * alg.gen(W_CRE, 1))
    assert s1 == e2.serialize()
    assert alg.zero().serialize() == "0"
    assert alg.one().serialize() == "1"
    # a golden form: a1 ad1 = 1 + ad1 a1
    assert (alg.gen(W_ANN, 1) * alg.gen(W_CRE, 1)).serialize() == "1 + ad1*a1"


def test_cross_mode_gamma_signs():
    alg = cliffdiff_algebra(4)
    g = [alg.gen(C_GAM, m) for m in (1, 2, 3)]
    assert g[1] * g[0] == -(g[0] * g[1])
    assert (g[2] * g[1] * g[0]) == -(g[0] * g[1] * g[2])
    x2 = alg.gen(C_X, 2)
    assert g[2] * x2 == x2 * g[2]
