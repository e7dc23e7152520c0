from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from gieseker import polys
from gieseker.partitions import ContractError, Partition, enumerate_partitions
from gieseker.symfunc import SymFunc, elementary_chain, from_polynomial, mult_powersum, to_polynomial

m = SymFunc.m


def test_vacuum_case():
    for i in range(1, 6):
        assert mult_powersum(i, SymFunc.one()) == m(i)


def test_small_products():
    assert mult_powersum(1, m(1)) == m(2) + 2 * m(1, 1)
    assert mult_powersum(2, m(1, 1)) == m(3, 1) + m(2, 1, 1)


def test_to_polynomial():
    x1, x2, x3 = (polys.variable(k, 3) for k in range(3))
    assert to_polynomial(m(1), 2) == polys.padd(polys.variable(0, 2), polys.variable(1, 2))
    assert to_polynomial(m(1, 1), 3) == polys.padd(polys.padd(polys.pmul(x1, x2), polys.pmul(x1, x3)), polys.pmul(x2, x3))
    y1, y2 = polys.variable(0, 2), polys.variable(1, 2)
    want = polys.padd(polys.pmul(polys.pmul(y1, y1), y2), polys.pmul(y1, polys.pmul(y2, y2)))
    assert to_polynomial(m(2, 1), 2) == want


def test_from_polynomial():
    s = polys.padd(polys.variable(0, 2), polys.variable(1, 2))
    assert from_polynomial(s, 2) == m(1)
    assert from_polynomial(polys.pmul(s, s), 2) == m(2) + 2 * m(1, 1)


def test_from_polynomial_rejects_asymmetric_input():
    with pytest.raises(ContractError, match="x1 and x2"):
        from_polynomial(polys.variable(0, 2), 2)


def test_oracle_exhaustive_to_weight_six():
    for w in range(7):
        for mu in enumerate_partitions(w):
            f = SymFunc({mu: 1})
            for i in range(1, 5):
                nv = w + i
                p = polys.pmul(polys.power_sum(i, nv), to_polynomial(f, nv))
                assert from_polynomial(p, nv) == mult_powersum(i, f), (mu, i)


symfuncs = st.dictionaries(
    st.integers(0, 4).flatmap(lambda w: st.sampled_from(enumerate_partitions(w))),
    st.integers(-3, 3),
    max_size=3,
).map(SymFunc)


@settings(max_examples=30, deadline=None)
@given(symfuncs, st.integers(1, 3), st.integers(1, 3))
def test_powersum_operators_commute(f, i, j):
    assert mult_powersum(i, mult_powersum(j, f)) == mult_powersum(j, mult_powersum(i, f))


@settings(max_examples=30, deadline=None)
@given(symfuncs, symfuncs, st.integers(1, 4))
def test_powersum_is_linear(f, g, i):
    assert mult_powersum(i, f + 2 * g) == mult_powersum(i, f) + 2 * mult_powersum(i, g)


def test_elementary_chain():
    seq = elementary_chain(7)
    assert seq[0] == SymFunc.one()
    assert seq[2] == m(1, 1)
    for n in range(8):
        assert seq[n] == SymFunc({Partition((1,) * n): 1})


def test_chain_agrees_with_elementary_polynomials():
    seq = elementary_chain(4)
    for k in range(1, 5):
        assert to_polynomial(seq[k], 5) == polys.elementary(k, 5)


def test_printing():
    assert str(m(2, 1, 1)) == "m[1^2 2]"
    assert str(SymFunc.one()) == "1"
    assert (m(1) - m(1)) == SymFunc()


def test_schur_polynomial_small():
    # s_(1,1) = e_2 and s_(2) = h_2 in three variables
    assert polys.schur_polynomial((1, 1), 3) == polys.elementary(2, 3)
    h2 = polys.padd(polys.monomial_symmetric((2,), 3), polys.monomial_symmetric((1, 1), 3))
    assert polys.schur_polynomial((2,), 3) == h2


def test_two_set_reduction_round_trip():
    # (1 + a1)(1 + a2)(1 + b1) = (1 + e1(a) + e2(a))(1 + e1(b)); keys are exponent vectors
    a1, a2, b1 = (polys.variable(k, 3) for k in range(3))
    one = polys.constant(1, 3)
    p = polys.pmul(polys.pmul(polys.padd(one, a1), polys.padd(one, a2)), polys.padd(one, b1))
    red = polys.two_set_elementary_reduction(p, 2, 1)
    assert red == {(ea, eb): 1 for ea in ((0, 0), (1, 0), (0, 1)) for eb in ((0,), (1,))}
