from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from gieseker import schubert as S
from gieseker.partitions import ContractError, Partition, partitions_in_box


def s(r, n, *lam):
    return S.BoxClass.schur(r, n, lam)


def test_unit_and_small_products():
    x = s(4, 2, 2, 1)
    assert S.BoxClass.one(4, 2) * x == x
    assert s(4, 2, 1) * s(4, 2, 1) == s(4, 2, 2) + s(4, 2, 1, 1)
    assert (s(2, 1, 1) * s(2, 1, 1)).terms == {}


def test_mismatched_grassmannians():
    with pytest.raises(ContractError):
        S.schur_mult(S.BoxClass.one(4, 2), S.BoxClass.one(3, 1))
    with pytest.raises(ContractError):
        S.BoxClass.schur(3, 1, (1, 1))


def test_lr_coefficient_classics():
    assert S.lr_coefficient(Partition((2, 1)), Partition((1,)), Partition((1, 1))) == 1
    assert S.lr_coefficient(Partition((3, 2, 1)), Partition((2, 1)), Partition((2, 1))) == 2
    assert S.lr_coefficient(Partition((4,)), Partition((2,)), Partition((1, 1))) == 0


boxes = st.sampled_from([(r, n) for r in range(2, 7) for n in range(1, r)])


@settings(max_examples=60, deadline=None)
@given(boxes, st.data())
def test_lr_matches_schur_polynomials(box, data):
    r, n = box
    B = partitions_in_box(n, r - n)
    lam = data.draw(st.sampled_from(B))
    mu = data.draw(st.sampled_from(B))
    a, b = S.BoxClass.schur(r, n, lam), S.BoxClass.schur(r, n, mu)
    assert S.schur_mult(a, b) == S.schur_mult_oracle(a, b)


@settings(max_examples=30, deadline=None)
@given(boxes, st.data())
def test_box_ring_is_commutative_and_associative(box, data):
    r, n = box
    B = partitions_in_box(n, r - n)
    x, y, z = (S.BoxClass.schur(r, n, data.draw(st.sampled_from(B))) for _ in range(3))
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)


def test_p1_chern_classes():
    h = s(2, 1, 1)
    assert S.chern_Q(2, 1).total == S.BoxClass.one(2, 1) + h
    assert S.chern_S(2, 1).total == S.BoxClass.one(2, 1) - h


@pytest.mark.parametrize("r, n", [(r, n) for r in range(1, 6) for n in range(0, r + 1)])
def test_whitney_relation_and_rank_bound(r, n):
    Q, Sb = S.chern_Q(r, n), S.chern_S(r, n)
    assert Q.total * Sb.total == S.BoxClass.one(r, n)
    assert all(not Sb.c(j).terms for j in range(r - n + 1, Sb.total.dim + 1))


def test_tensor_with_trivial_line():
    A = S.chern_S(5, 2)
    assert S.chern_tensor(A, S.trivial(5, 2)).total == A.total


def test_tensor_of_line_with_dual():
    Q = S.chern_Q(2, 1)
    assert S.chern_tensor(Q, S.dual(Q)).total == S.BoxClass.one(2, 1)


def test_tangent_euler_characteristic():
    for r in range(1, 6):
        for n in range(1, r + 1):
            assert S.integrate(S.tangent_bundle(r, n).top()) == comb(r, n)


def test_integration():
    assert S.integrate(S.BoxClass.one(4, 2)) == 0
    assert S.integrate(s(4, 2, 2, 2)) == 1


def test_excess_examples():
    assert S.excess_bundle(3, 3).total == S.BoxClass.one(3, 3)
    V = S.excess_bundle(2, 1)
    assert V.total == S.BoxClass.one(2, 1) - s(2, 1, 1).scale(2)
    assert S.integrate(V.top()) == -2
    assert S.excess_integral(4, 2) == 6
    assert S.excess_integral(3, 1) == 3


@pytest.mark.parametrize("r, n", [(r, n) for r in range(1, 6) for n in range(1, r + 1)])
def test_excess_cells(r, n):
    V = S.excess_bundle(r, n)
    assert V.total == S.excess_target(r, n).total
    assert S.integrate(V.top()) == (-1) ** ((r - 1) * n) * comb(r, n)


def test_intersection_series_examples():
    assert [S.intersection_series(1).coefficient(k) for k in range(3)] == [1, 0, 1]
    two = S.intersection_series(2)
    assert [two.coefficient(k) for k in range(5)] == [1, 0, -2, 0, 1]
    three = S.intersection_series(3)
    assert [three.coefficient(2 * k) for k in range(4)] == [1, 3, 3, 1]


@pytest.mark.parametrize("r", range(1, 6))
@pytest.mark.parametrize("k", (1, 2, 3))
def test_intersection_series_is_binomial(r, k):
    ser = S.intersection_series(r, k)
    assert ser == S.binomial_series(r, k, ser.order)
