"""Commuting nilpotent pairs with cyclic vectors, and the companion deformation.

A point of the punctual Quot scheme is modelled by ``(B1, B2, v_1..v_r)``:
commuting nilpotent matrices on ``V = Q^dim`` and vectors whose closure under
``B1`` and ``B2`` is all of ``V``.  :func:`companion` replaces ``B2`` by an
operator ``B2'`` commuting with ``B1`` for which a single vector is cyclic,
and :func:`deformation_path` interpolates linearly between the two.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .partitions import ContractError, Partition, enumerate_partitions


@dataclass(frozen=True)
class NilpotentPair:
    dim: int
    B1: tuple
    B2: tuple

    @classmethod
    def make(cls, B1, B2, validate=True) -> "NilpotentPair":
        B1, B2 = la.matrix(B1), la.matrix(B2)
        p = cls(len(B1), tuple(map(tuple, B1)), tuple(map(tuple, B2)))
        if validate:
            p.validate()
        return p

    def m1(self) -> la.Matrix:
        return [list(r) for r in self.B1]

    def m2(self) -> la.Matrix:
        return [list(r) for r in self.B2]

    def validate(self):
        B1, B2 = self.m1(), self.m2()
        if la.shape(B1) != (self.dim, self.dim) or la.shape(B2) != (self.dim, self.dim):
            raise ContractError("matrices must be dim x dim")
        if not la.is_zero(la.commutator(B1, B2)):
            raise ContractError("B1 and B2 do not commute")
        if not la.is_nilpotent(B1):
            raise ContractError("B1 is not nilpotent")
        if not la.is_nilpotent(B2):
            raise ContractError("B2 is not nilpotent")


@dataclass(frozen=True)
class QuotPoint:
    pair: NilpotentPair
    vectors: tuple

    @classmethod
    def make(cls, pair: NilpotentPair, vectors) -> "QuotPoint":
        vecs = tuple(tuple(la.frac(x) for x in v) for v in vectors)
        if any(len(v) != pair.dim for v in vecs):
            raise ContractError("vector length does not match dim")
        return cls(pair, vecs)

    @property
    def r(self) -> int:
        return len(self.vectors)

    def to_json(self) -> dict:
        return {
            "dim": self.pair.dim,
            "B1": la.to_strings(self.pair.m1()),
            "B2": la.to_strings(self.pair.m2()),
            "vectors": [la.vector_to_strings(list(v)) for v in self.vectors],
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuotPoint":
        pair = NilpotentPair.make(
            [[Fraction(x) for x in row] for row in data["B1"]],
            [[Fraction(x) for x in row] for row in data["B2"]],
        )
        if pair.dim != data["dim"]:
            raise ContractError("dim field disagrees with matrix size")
        return cls.make(pair, [[Fraction(x) for x in v] for v in data["vectors"]])


# -- instances ---------------------------------------------------------------------


def _boxes(diagram: Partition):
    return [(a, b) for a, row in enumerate(diagram) for b in range(row)]


def _staircase_matrices(diagram: Partition):
    boxes = _boxes(diagram)
    idx = {bx: k for k, bx in enumerate(boxes)}
    n = len(boxes)
    B1, B2 = la.zeros(n), la.zeros(n)
    for (a, b), k in idx.items():
        if (a, b + 1) in idx:
            B1[idx[(a, b + 1)]][k] = Fraction(1)
        if (a + 1, b) in idx:
            B2[idx[(a + 1, b)]][k] = Fraction(1)
    return B1, B2


def random_invertible(dim: int, rng: random.Random) -> la.Matrix:
    while True:
        g = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(dim)] for _ in range(dim)]
        if la.rank(g) == dim:
            return g


def conjugate_pair(p: NilpotentPair, g: la.Matrix) -> NilpotentPair:
    gi = la.inverse(g)
    return NilpotentPair.make(
        la.matmul(la.matmul(g, p.m1()), gi), la.matmul(la.matmul(g, p.m2()), gi), validate=False
    )


def act(x: QuotPoint, g: la.Matrix) -> QuotPoint:
    """``g . (B1, B2, v) = (g B1 g^-1, g B2 g^-1, g v)``."""
    return QuotPoint.make(conjugate_pair(x.pair, g), [la.matvec(g, list(v)) for v in x.vectors])


def staircase_pair(diagram, conjugate_by_random: bool = False, seed: int | None = None) -> NilpotentPair:
    """Multiplication by ``x1``, ``x2`` on the monomial quotient spanned by the diagram's boxes.

    Basis vectors are boxes ``(row, col)``; ``B1`` moves along a row and
    ``B2`` down a column, killing boxes on the boundary.
    """
    diagram = Partition(diagram)
    if diagram.weight < 1:
        raise ContractError("diagram must have at least one box")
    B1, B2 = _staircase_matrices(diagram)
    p = NilpotentPair.make(B1, B2, validate=False)
    if conjugate_by_random:
        p = conjugate_pair(p, random_invertible(p.dim, random.Random(seed)))
    p.validate()
    return p


def direct_sum(pairs: list[NilpotentPair]) -> NilpotentPair:
    n = sum(p.dim for p in pairs)
    B1, B2 = la.zeros(n), la.zeros(n)
    off = 0
    for p in pairs:
        for i in range(p.dim):
            for j in range(p.dim):
                B1[off + i][off + j] = p.B1[i][j]
                B2[off + i][off + j] = p.B2[i][j]
        off += p.dim
    return NilpotentPair.make(B1, B2, validate=False)


def _remix(p: NilpotentPair, rng: random.Random) -> NilpotentPair:
    """Replace the pair by two polynomials in it without constant term."""
    B1, B2 = p.m1(), p.m2()
    B12 = la.matmul(B1, B2)
    B22 = la.matmul(B2, B2)
    B11 = la.matmul(B1, B1)

    def poly(cs, mats):
        out = la.zeros(p.dim)
        for c, M in zip(cs, mats):
            if c:
                out = la.add(out, la.scale(M, c))
        return out

    mats = [B1, B2, B12, B11, B22]
    while True:
        c1 = [rng.choice([1, 1, 2, -1]), rng.randint(-1, 1)] + [rng.randint(-1, 1) for _ in range(3)]
        c2 = [rng.randint(-1, 1), rng.choice([1, 1, 2, -1])] + [rng.randint(-1, 1) for _ in range(3)]
        # invertible linear part: the new pair generates the same algebra
        if c1[0] * c2[1] - c1[1] * c2[0]:
            break
    return NilpotentPair.make(poly(c1, mats), poly(c2, mats), validate=False)


def random_instance(seed: int, max_dim: int = 12, r: int | None = None) -> QuotPoint:
    """A seeded commuting nilpotent pair with cyclic vectors, of dim at most ``max_dim``.

    Direct sum of one to three staircases, remixed by polynomials and
    conjugated by a random rational matrix.
    """
    rng = random.Random(seed)
    ncomp = rng.randint(1, 3)
    budget = rng.randint(ncomp, max(ncomp, max_dim))
    sizes = [1] * ncomp
    for _ in range(budget - ncomp):
        sizes[rng.randrange(ncomp)] += 1
    diagrams = [rng.choice(enumerate_partitions(s)) for s in sizes]
    pair = direct_sum([staircase_pair(d) for d in diagrams])
    pair = _remix(pair, rng)
    pair = conjugate_pair(pair, random_invertible(pair.dim, rng))
    pair.validate()
    fixed_r = r is not None
    r = ncomp + rng.randint(0, 1) if r is None else r
    for attempt in range(200):
        if not fixed_r and attempt and attempt % 20 == 0:
            r += 1
        vecs = [[Fraction(rng.randint(-2, 2)) for _ in range(pair.dim)] for _ in range(r)]
        if is_cyclic(pair, vecs):
            return QuotPoint.make(pair, vecs)
    raise ContractError(f"could not find {r} cyclic vectors for seed {seed}")


# -- cyclicity ----------------------------------------------------------------------


def krylov_closure(p: NilpotentPair, vectors) -> list:
    """Basis of the smallest subspace containing ``vectors`` and stable under ``B1``, ``B2``."""
    B1, B2 = p.m1(), p.m2()
    ech = la.EchelonBasis()
    queue = [list(map(la.frac, v)) for v in vectors]
    while queue and len(ech) < p.dim:
        v = queue.pop()
        if ech.add(v):
            queue.append(la.matvec(B1, v))
            queue.append(la.matvec(B2, v))
    return ech.rows


def is_cyclic(p: NilpotentPair, vectors) -> bool:
    if any(len(v) != p.dim for v in vectors):
        raise ContractError("vector length does not match dim")
    return len(krylov_closure(p, vectors)) == p.dim


# -- adapted basis and companion -----------------------------------------------------


@dataclass(frozen=True)
class AdaptedBasis:
    """Chains ``e_{i,1}, ..., e_{i,mu_i}`` with ``B1 e_{i,j} = e_{i,j+1}``."""

    mu: Partition
    chains: tuple  # chains[i][j] is e_{i+1, j+1}

    def vectors(self) -> list:
        return [list(v) for chain in self.chains for v in chain]

    def matrix(self) -> la.Matrix:
        """Columns are the basis vectors, chain by chain."""
        return la.from_columns(self.vectors())

    def position(self, i: int, j: int) -> int:
        """Column index of ``e_{i,j}`` (1-based labels)."""
        return sum(self.mu[:i - 1]) + (j - 1)


def nilpotency_index(A: la.Matrix) -> int:
    n = len(A)
    P = la.identity(n)
    for d in range(n + 1):
        if la.is_zero(P):
            return d
        P = la.matmul(P, A)
    raise ContractError("matrix is not nilpotent")


def adapted_basis(p: NilpotentPair) -> AdaptedBasis:
    """A Jordan basis of ``B1`` whose chain tops make ``B2`` triangular modulo ``im B1``.

    ``V_m = ker B1^(d-m)``; chain tops of length ``d - m`` are lifts of a basis
    of ``V_m / (B1 V_(m-1) + V_(m+1))``, chosen along the filtration
    ``K_j = {v : B2^j v in B1 V_(m-1) + V_(m+1)}`` from the top level down.
    """
    p.validate()
    n = p.dim
    B1, B2 = p.m1(), p.m2()
    d = nilpotency_index(B1)
    powers = [la.identity(n)]
    for _ in range(d):
        powers.append(la.matmul(powers[-1], B1))
    V = [la.span_basis(la.nullspace(powers[d - m], n)) for m in range(d + 1)]  # V[m] = ker B1^(d-m)
    chains = []
    for m in range(d):
        length = d - m
        prev = V[m - 1] if m > 0 else [list(r) for r in la.identity(n)]
        U = la.span_basis([la.matvec(B1, v) for v in prev] + V[m + 1])
        need = len(V[m]) - len(U)
        if need <= 0:
            continue
        levels = [U]
        B2j = la.identity(n)
        while len(levels[-1]) < len(V[m]):
            B2j = la.matmul(B2j, B2)
            levels.append(la.intersect_preimage(B2j, V[m], U))
        tops = []
        for j in range(len(levels) - 1, 0, -1):
            tops.extend(la.extend_basis(levels[j - 1], levels[j]))
        if len(tops) != need:
            raise ArithmeticError("chain-top count does not match the quotient dimension")
        for top in tops:
            chain = [top]
            for _ in range(length - 1):
                chain.append(la.matvec(B1, chain[-1]))
            chains.append(tuple(tuple(v) for v in chain))
    mu = Partition(len(c) for c in chains)
    if mu.weight != n:
        raise ArithmeticError("chains do not form a basis")
    return AdaptedBasis(mu, tuple(chains))


def check_adapted(p: NilpotentPair, basis: AdaptedBasis) -> dict:
    """Exact checks of the basis property, chain property (a) and triangularity (b)."""
    B1, B2 = p.m1(), p.m2()
    n = p.dim
    is_basis = la.rank(basis.vectors()) == n
    prop_a = True
    for chain in basis.chains:
        for j, e in enumerate(chain):
            img = la.matvec(B1, list(e))
            want = list(chain[j + 1]) if j + 1 < len(chain) else [Fraction(0)] * n
            if img != want:
                prop_a = False
    im_b1 = la.span_basis(la.columns(B1))
    prop_b = True
    tops = [list(c[0]) for c in basis.chains]
    for i, top in enumerate(tops):
        target = la.span_basis(tops[i + 1:] + im_b1)
        img = la.matvec(B2, top)
        if len(la.span_basis(target + [img])) != len(target):
            prop_b = False
    return {"basis": is_basis, "a": prop_a, "b": prop_b}


def companion(p: NilpotentPair, basis: AdaptedBasis | None = None):
    """``(B2', w, basis)`` with ``B2' e_{i,j} = e_{i+1,j}`` when ``j <= mu_{i+1}`` and ``w = e_{1,1}``."""
    basis = adapted_basis(p) if basis is None else basis
    n = p.dim
    mu = basis.mu
    shift = la.zeros(n)
    for i in range(1, mu.length):
        for j in range(1, mu[i] + 1):  # mu[i] is mu_{i+1}
            shift[basis.position(i + 1, j)][basis.position(i, j)] = Fraction(1)
    P = basis.matrix()
    B2p = la.matmul(la.matmul(P, shift), la.inverse(P))
    w = list(basis.chains[0][0])
    return B2p, w, basis


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 5))


def check_companion(p: NilpotentPair, B2p, w, samples: int = 20, rng: random.Random | None = None) -> dict:
    """Properties (i) commuting, (ii) nilpotent pencil on ``samples`` draws, (iii) ``w`` cyclic."""
    rng = rng or random.Random(0)
    B1, B2 = p.m1(), p.m2()
    commute = la.is_zero(la.commutator(B1, B2p))
    bad = []
    for _ in range(samples):
        a, b = random_rational(rng), random_rational(rng)
        pencil = la.add(la.scale(B2, a), la.scale(B2p, b))
        if not la.is_nilpotent(pencil):
            bad.append((str(a), str(b)))
    cyc = is_cyclic(NilpotentPair.make(B1, B2p, validate=False), [w])
    return {"i": commute, "ii": not bad, "ii_failures": bad, "iii": cyc}


def deformation_path(x: QuotPoint, t, comp=None) -> QuotPoint:
    """``Phi(t) = (B1, t B2' + (1-t) B2, t w + (1-t) v1, v2, ..., vr)``; ``Phi(0) = x``."""
    t = la.frac(t)
    B2p, w, _ = comp if comp is not None else companion(x.pair)
    B1, B2 = x.pair.m1(), x.pair.m2()
    B2t = la.add(la.scale(B2p, t), la.scale(B2, 1 - t))
    v1 = [t * a + (1 - t) * b for a, b in zip(w, x.vectors[0])]
    pair = NilpotentPair.make(B1, B2t, validate=False)
    return QuotPoint.make(pair, [v1] + [list(v) for v in x.vectors[1:]])


def point_is_valid(x: QuotPoint) -> dict:
    """Commuting, nilpotent and cyclic checks on a point."""
    B1, B2 = x.pair.m1(), x.pair.m2()
    return {
        "commute": la.is_zero(la.commutator(B1, B2)),
        "nilpotent": la.is_nilpotent(B1) and la.is_nilpotent(B2),
        "cyclic": is_cyclic(x.pair, [list(v) for v in x.vectors]),
    }


def stabilizer_is_trivial(x: QuotPoint) -> bool:
    """Only ``h = 0`` solves ``h B1 = B1 h``, ``h B2 = B2 h``, ``h v_k = 0``.

    Equivalently, the only ``g`` fixing the point is the identity (take ``g = 1 + h``).
    """
    n = x.pair.dim
    rows = []
    for B in (x.pair.m1(), x.pair.m2()):
        for i in range(n):
            for j in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    row[i * n + k] += B[k][j]  # (h B)_{ij}
                    row[k * n + j] -= B[i][k]  # (B h)_{ij}
                rows.append(row)
    for v in x.vectors:
        for i in range(n):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                row[i * n + k] = v[k]
            rows.append(row)
    return la.has_trivial_nullspace(rows)


def parameter_count(r: int, n: int) -> int:
    """Dimension of the open piece: rank ``(r-1) n`` bundle over an ``(n-1)``-dimensional base."""
    return (r - 1) * n + (n - 1)


# -- suite ---------------------------------------------------------------------------


def verify_instance(seed: int, max_dim: int = 12, samples: int = 20, t_samples: int = 2,
                    gl_check: bool = True, freeness: bool = False) -> dict:
    """Run every property on one seeded instance; returns a flat result record."""
    rng = random.Random(10_000 + seed)
    x = random_instance(seed, max_dim)
    p = x.pair
    basis = adapted_basis(p)
    adapted = check_adapted(p, basis)
    B2p, w, _ = companion(p, basis)
    comp = check_companion(p, B2p, w, samples, rng)
    start = deformation_path(x, 0, (B2p, w, basis))
    end = deformation_path(x, 1, (B2p, w, basis))
    end_ok = is_cyclic(end.pair, [list(end.vectors[0])])
    start_ok = start == x
    path_bad, generic_misses = [], []
    for _ in range(t_samples):
        t = Fraction(rng.randint(1, 98), 99)
        y = deformation_path(x, t, (B2p, w, basis))
        v = point_is_valid(y)
        if not (v["commute"] and v["nilpotent"]):
            path_bad.append(str(t))
        elif not v["cyclic"]:
            generic_misses.append(str(t))
    record = {
        "seed": seed,
        "dim": p.dim,
        "r": x.r,
        "mu": list(basis.mu),
        "adapted_basis": adapted["basis"],
        "property_a": adapted["a"],
        "property_b": adapted["b"],
        "companion_i": comp["i"],
        "companion_ii": comp["ii"],
        "companion_ii_failures": comp["ii_failures"],
        "companion_iii": comp["iii"],
        "path_start": start_ok,
        "path_end_cyclic": end_ok,
        "path_failures": path_bad,
        "generic_cyclicity_misses": generic_misses,
    }
    if gl_check:
        g = random_invertible(p.dim, rng)
        gx = act(x, g)
        first = [list(x.vectors[0])]
        gfirst = [list(gx.vectors[0])]
        record["gl_invariance"] = (
            is_cyclic(p, [list(v) for v in x.vectors]) == is_cyclic(gx.pair, [list(v) for v in gx.vectors])
            and is_cyclic(p, first) == is_cyclic(gx.pair, gfirst)
        )
    if freeness:
        record["stabilizer_trivial"] = stabilizer_is_trivial(x)
    keys = ["adapted_basis", "property_a", "property_b", "companion_i", "companion_ii",
            "companion_iii", "path_start", "path_end_cyclic", "gl_invariance", "stabilizer_trivial"]
    record["pass"] = all(record.get(k, True) for k in keys) and not path_bad
    return record
