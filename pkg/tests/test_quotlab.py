from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest

from gieseker import linalg as la
from gieseker import quotlab as QL
from gieseker.partitions import ContractError


def _jordan(n):
    return [[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)]


def test_single_box():
    p = QL.staircase_pair((1,))
    assert p.dim == 1 and la.is_zero(p.m1()) and la.is_zero(p.m2())


def test_single_row_is_a_jordan_block():
    p = QL.staircase_pair((4,))
    assert la.is_zero(p.m2())
    assert QL.nilpotency_index(p.m1()) == 4
    assert la.rank(p.m1()) == 3


def test_conjugated_staircase_passes_checks():
    p = QL.staircase_pair((2, 1), conjugate_by_random=True, seed=42)
    assert p.dim == 3
    assert QL.check_adapted(p, QL.adapted_basis(p)) == {"basis": True, "a": True, "b": True}


def test_invalid_pairs_rejected():
    with pytest.raises(ContractError, match="commute"):
        QL.NilpotentPair.make([[0, 1], [0, 0]], [[0, 0], [1, 0]])
    with pytest.raises(ContractError, match="nilpotent"):
        QL.NilpotentPair.make([[1, 0], [0, 0]], [[0, 0], [0, 0]])
    bad = QL.NilpotentPair.make([[0, 1], [0, 0]], [[0, 0], [1, 0]], validate=False)
    with pytest.raises(ContractError):
        QL.adapted_basis(bad)


def test_adapted_basis_of_zero_pair():
    p = QL.NilpotentPair.make([[0] * 3] * 3, [[0] * 3] * 3)
    basis = QL.adapted_basis(p)
    assert basis.mu == (1, 1, 1)
    assert all(QL.check_adapted(p, basis).values())


def test_adapted_basis_polynomial_in_jordan_block():
    J = la.matrix(_jordan(5))
    B2 = la.add(la.mat_pow(J, 2), la.scale(la.mat_pow(J, 3), 3))
    p = QL.NilpotentPair.make(J, B2)
    basis = QL.adapted_basis(p)
    assert basis.mu == (5,)
    assert all(QL.check_adapted(p, basis).values())


def test_adapted_basis_conjugated_staircase():
    p = QL.staircase_pair((3, 2), conjugate_by_random=True, seed=5)
    assert all(QL.check_adapted(p, QL.adapted_basis(p)).values())


def test_companion_trivial_cases():
    B2p, w, _ = QL.companion(QL.staircase_pair((1,)))
    assert B2p == [[0]] and w == [1]
    p = QL.staircase_pair((4,))
    B2p, w, basis = QL.companion(p)
    assert la.is_zero(B2p)
    assert w == list(basis.chains[0][0])
    assert QL.is_cyclic(QL.NilpotentPair.make(p.m1(), B2p), [w])


def test_companion_properties():
    p = QL.staircase_pair((2, 2), conjugate_by_random=True, seed=11)
    B2p, w, _ = QL.companion(p)
    res = QL.check_companion(p, B2p, w, samples=20, rng=random.Random(3))
    assert res["i"] and res["ii"] and res["iii"] and res["ii_failures"] == []


def test_is_cyclic_examples():
    one = QL.staircase_pair((1,))
    assert QL.is_cyclic(one, [[Fraction(-3, 2)]])
    zero = QL.NilpotentPair.make([[0, 0], [0, 0]], [[0, 0], [0, 0]])
    assert not QL.is_cyclic(zero, [[1, 0]])
    assert QL.is_cyclic(zero, [[1, 0], [0, 1]])
    with pytest.raises(ContractError):
        QL.is_cyclic(zero, [[1, 0, 0]])


def test_deformation_endpoints():
    x = QL.random_instance(4)
    comp = QL.companion(x.pair)
    assert QL.deformation_path(x, 0, comp) == x
    end = QL.deformation_path(x, 1, comp)
    assert QL.is_cyclic(end.pair, [list(end.vectors[0])])
    assert end.vectors[1:] == x.vectors[1:]


def test_deformation_samples_on_small_staircase():
    p = QL.staircase_pair((2, 1), conjugate_by_random=True, seed=42)
    rng = random.Random(2)
    x = QL.QuotPoint.make(p, [[QL.random_rational(rng) for _ in range(3)] for _ in range(2)])
    comp = QL.companion(p)
    misses = 0
    for _ in range(10):
        t = Fraction(rng.randint(1, 98), 99)
        v = QL.point_is_valid(QL.deformation_path(x, t, comp))
        assert v["commute"] and v["nilpotent"]
        misses += not v["cyclic"]
    assert misses <= 1


def test_gl_invariance_of_cyclicity():
    x = QL.random_instance(9)
    g = QL.random_invertible(x.pair.dim, random.Random(1))
    gx = QL.act(x, g)
    assert QL.is_cyclic(gx.pair, [list(v) for v in gx.vectors]) == QL.is_cyclic(x.pair, [list(v) for v in x.vectors])


def test_stabilizer_of_cyclic_point_is_trivial():
    x = QL.random_instance(12)
    assert QL.point_is_valid(x)["cyclic"]
    assert QL.stabilizer_is_trivial(x)
    zero = QL.NilpotentPair.make([[0, 0], [0, 0]], [[0, 0], [0, 0]])
    assert not QL.stabilizer_is_trivial(QL.QuotPoint.make(zero, [[1, 0]]))


def test_parameter_count():
    for r in range(1, 5):
        for n in range(1, 8):
            assert QL.parameter_count(r, n) == r * n - 1


def test_point_json_round_trip():
    x = QL.random_instance(6)
    data = json.loads(json.dumps(x.to_json()))
    assert QL.QuotPoint.from_json(data) == x


@pytest.mark.parametrize("seed", range(6))
def test_instances_verify(seed):
    rec = QL.verify_instance(seed, max_dim=10, samples=5, t_samples=2, freeness=seed < 2)
    assert rec["pass"], rec
    assert rec["dim"] <= 10


def test_instances_are_deterministic():
    assert QL.random_instance(17) == QL.random_instance(17)
