from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gieseker import qseries as Q
from gieseker.partitions import ContractError
from gieseker.rings import LaurentPoly, t_poly
from gieseker.suites import sym_power_oracle


def test_goettsche_p2_coefficients():
    g = Q.goettsche_product(Q.P2, 4)
    assert g.coefficient(0) == 1
    assert g.coefficient(1) == t_poly({-2: 1, 0: 1, 2: 1})
    assert g.coefficient(2) == t_poly({-4: 1, -2: 2, 0: 3, 2: 2, 4: 1})
    # Betti numbers of the Hilbert scheme of three points on the plane
    assert g.coefficient(3) == t_poly({-6: 1, -4: 2, -2: 5, 0: 6, 2: 5, 4: 2, 6: 1})


def test_goettsche_euler_characteristics():
    k3 = Q.specialize_t(Q.goettsche_product(Q.K3, 4), 1)
    assert [k3.coefficient(n) for n in range(4)] == [1, 24, 324, 3200]
    p2 = Q.specialize_t(Q.goettsche_product(Q.P2, 4), 1)
    assert [p2.coefficient(n) for n in range(4)] == [1, 3, 9, 22]


def test_goettsche_odd_classes_vanish_at_minus_one():
    # for an abelian surface the Euler characteristic of every Hilbert scheme is 0
    ab = Q.specialize_t(Q.goettsche_product(Q.ABELIAN, 5), -1)
    assert [ab.coefficient(n) for n in range(5)] == [1, 0, 0, 0, 0]


def test_macdonald_examples():
    m = Q.macdonald_sym_power(Q.P2, 3)
    assert m.coefficient(0) == 1
    assert m.coefficient(1) == t_poly({-2: 1, 0: 1, 2: 1})
    assert m.coefficient(2) == t_poly({-4: 1, -2: 1, 0: 2, 2: 1, 4: 1})


@pytest.mark.parametrize("b", [Q.P2, Q.K3, Q.ABELIAN, Q.SurfaceBetti(1, 2, 3, 2, 1)])
def test_macdonald_matches_invariant_count(b):
    assert Q.macdonald_sym_power(b, 6) == sym_power_oracle(b, 6)


@pytest.mark.parametrize("b", [Q.P2, Q.K3, Q.ABELIAN])
def test_strata_sum_equals_product(b):
    assert Q.strata_sum(b, 9) == Q.goettsche_product(b, 9)


def test_strata_sum_low_terms():
    s = Q.strata_sum(Q.K3, 3)
    assert s.coefficient(1) == t_poly({-2: 1, 0: 22, 2: 1})


def test_hodge_p2_first_coefficient():
    h = Q.hodge_product(Q.HODGE_P2, 3)
    assert h.coefficient(0) == LaurentPoly.constant(1, ("x", "y"))
    assert h.coefficient(1) == LaurentPoly({(-1, -1): 1, (0, 0): 1, (1, 1): 1}, ("x", "y"))


hodge_tables = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 4)).map(
    lambda v: Q.HodgeTable(((1, v[0], v[1]), (v[0], v[2], v[0]), (v[1], v[0], 1)))
)


@settings(max_examples=5, deadline=None)
@given(hodge_tables)
def test_hodge_specialises_to_goettsche(h):
    assert Q.specialize_xy(Q.hodge_product(h, 5)) == Q.goettsche_product(h.betti(), 5)


@pytest.mark.parametrize("h", [Q.HODGE_P2, Q.HODGE_K3])
def test_hodge_specialization_named_tables(h):
    assert Q.specialize_xy(Q.hodge_product(h, 7)) == Q.goettsche_product(h.betti(), 7)


def test_theta_lowest_terms():
    th = Q.theta(1, 1, Fraction(9, 8))
    assert [(e, c) for e, c in th.items()] == [(Fraction(1, 8), LaurentPoly({(1,): 1, (-1,): -1}, ("u",)))]
    assert Q.theta(0, 0, 1).coefficient(0) == LaurentPoly.constant(1, ("u",))


def test_theta_product_formula():
    order = Fraction(4) + Fraction(1, 8)
    assert Q.theta(1, 1, order) == Q.theta11_product_form(order)


def test_yoshioka_coefficients():
    y = Q.yoshioka_series(3)
    assert not y.coefficient(0)
    assert y.coefficient(1) == t_poly({-8: 1})
    # t^-8 times the Poincaré polynomial 1 + 2t^2 + 3t^4 + 2t^6 + t^8, shifted
    assert y.coefficient(2) == t_poly({-12: 1, -10: 2, -8: 3, -6: 2, -4: 1})


def test_yoshioka_theta_form():
    assert Q.laurent_t_to_u(Q.yoshioka_series(5)) == Q.yoshioka_theta_form(5)


def test_yoshioka_global_t_power_is_reported():
    shifts = Q.normalization_finding(Q.yoshioka_series(5))
    assert set(shifts.values()) == {8}


def test_uhlenbeck_series():
    u = Q.uhlenbeck_series_p2(4)
    assert u.coefficient(1) == t_poly({-8: 1})
    assert u.coefficient(2) == t_poly({-12: 1, -10: 1, -8: 2, -6: 1, -4: 1})
    assert u * Q.goettsche_product(Q.P2, 4) == Q.yoshioka_series(4)
    assert Q.laurent_t_to_u(u) == Q.uhlenbeck_theta_form(4)
    assert set(Q.normalization_finding(u).values()) == {8}


def test_normalization_finding_on_symmetric_input():
    g = Q.goettsche_product(Q.K3, 4)
    assert set(Q.normalization_finding(g).values()) == {0}


@pytest.mark.parametrize(
    "text, message",
    [
        ("1,0,1,0,2", "b0 != b4"),
        ("1,1,1,0,1", "b1 != b3"),
        ("1,0,1", "five Betti numbers"),
        ("1,0,-1,0,1", "nonnegative"),
    ],
)
def test_bad_betti_rejected(text, message):
    with pytest.raises(Q.InvalidSurfaceData, match=message):
        Q.SurfaceBetti.parse(text)


def test_betti_parse_accepts_valid_input():
    assert Q.SurfaceBetti.parse("1,0,0,0,1").as_tuple() == (1, 0, 0, 0, 1)
    assert Q.HodgeTable.parse("1,0,1;0,20,0;1,0,1").betti() == Q.K3


def test_bad_hodge_rejected():
    with pytest.raises(Q.InvalidSurfaceData):
        Q.HodgeTable.parse("1,0,1;0,20,0;1,1,1")


def test_uhlenbeck_rejects_bad_order():
    with pytest.raises(ValueError):
        Q.uhlenbeck_series_p2(0)
    assert issubclass(ContractError, ValueError)
