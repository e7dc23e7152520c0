from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gieseker import linalg as la

small = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def matrices(rows=st.integers(1, 5), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
    )


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


@given(matrices())
def test_rank_nullity(A):
    ns = la.nullspace(A)
    assert la.rank(A) + len(ns) == len(A[0])
    for v in ns:
        assert not any(la.matvec(A, v))


@given(matrices())
def test_rref_is_idempotent(A):
    R, piv = la.rref(A)
    assert la.rref(R) == (R, piv)


@given(st.integers(1, 4).flatmap(square))
def test_inverse(A):
    n = len(A)
    if la.rank(A) < n:
        with pytest.raises(ZeroDivisionError):
            la.inverse(A)
    else:
        assert la.matmul(A, la.inverse(A)) == la.identity(n)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n), square(n))))
def test_matmul_associative(abc):
    A, B, C = abc
    assert la.matmul(la.matmul(A, B), C) == la.matmul(A, la.matmul(B, C))


@settings(max_examples=60)
@given(matrices(rows=st.integers(1, 7), cols=st.integers(1, 4)))
def test_modular_certificate_is_sound(A):
    # a certificate may be withheld, but never wrongly granted
    if la.full_column_rank_certificate(A):
        assert la.rank(A) == len(A[0])
    assert la.has_trivial_nullspace(A) == (la.rank(A) == len(A[0]))


def test_certificate_declines_when_prime_divides_entries():
    p = 1_000_003
    A = [[Fraction(p), Fraction(0)], [Fraction(0), Fraction(1)]]
    assert not la.full_column_rank_certificate(A)
    assert la.has_trivial_nullspace(A)


@given(st.integers(1, 6).flatmap(lambda n: st.lists(small, min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2).map(
    lambda xs, n=n: [[xs.pop() if j > i else Fraction(0) for j in range(n)] for i in range(n)])))
def test_strictly_upper_triangular_is_nilpotent(A):
    assert la.is_nilpotent(A)


def test_non_nilpotent():
    assert not la.is_nilpotent(la.matrix([[0, 1], [1, 0]]))
    assert not la.is_nilpotent(la.matrix([[Fraction(1, 2)]]))


@given(st.lists(st.lists(small, min_size=4, max_size=4), max_size=6))
def test_echelon_basis_tracks_rank(vectors):
    ech = la.EchelonBasis(vectors)
    assert len(ech) == (la.rank(vectors) if vectors else 0)
    for v in vectors:
        assert ech.contains(v)


def test_intersect_preimage():
    # A = projection onto the first coordinate; preimage of span(e1) inside span(e1, e2) is everything
    A = la.matrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    e1, e2 = la.matrix([[1, 0, 0], [0, 1, 0]])
    assert len(la.intersect_preimage(A, [e1, e2], [e1])) == 2
    assert la.intersect_preimage(A, [e1, e2], []) == [[0, 1, 0]]


def test_string_round_trip():
    A = la.matrix([[Fraction(1, 3), -2], [0, Fraction(7, 5)]])
    assert [[la.parse_rational(x) for x in row] for row in la.to_strings(A)] == A
