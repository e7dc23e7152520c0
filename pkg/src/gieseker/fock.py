"""Super-Fock space of a surface's cohomology and the oscillator relations.

A basis state is a sorted tuple of creation labels ``(i, a)``: mode ``i >= 1``
and class index ``a``.  Labels of odd cohomological degree anticommute, so
they appear at most once and reordering them costs the sign of the
permutation they undergo (even labels commute with everything).

``create(i, a)`` is ``p^a_{-i}`` and ``annihilate(i, a)`` is ``p^a_i``, with

    [p^a_i, p^b_{-j}] = i <a, b> delta_{ij}     (graded commutator)

The relation checker builds integer sparse matrices on the span of states of
bounded energy and compares ``AB - (-1)^{|A||B|} BA`` against the expected
scalar for every pair of generators, many pairs at a time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
import scipy.sparse as sp

from .partitions import ContractError
from .qseries import InvalidSurfaceData, SurfaceBetti
from .rings import LaurentPoly, _clean
from .series import TruncatedSeries

Label = tuple  # (mode, class index)
State = tuple  # sorted tuple of labels


# -- surface data ------------------------------------------------------------


@dataclass(frozen=True)
class SurfaceDatum:
    """Graded basis of ``H*(S)`` with its intersection pairing."""

    name: str
    degrees: tuple
    pairing: tuple  # square tuple-of-tuples of Fraction
    labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        n = len(self.degrees)
        if n < 1:
            raise InvalidSurfaceData("a surface datum needs at least one class")
        if any(d not in (0, 1, 2, 3, 4) for d in self.degrees):
            raise InvalidSurfaceData(f"class degrees must lie in 0..4, got {self.degrees}")
        if len(self.pairing) != n or any(len(row) != n for row in self.pairing):
            raise InvalidSurfaceData("pairing matrix must be square of size class_count")
        object.__setattr__(self, "pairing", tuple(tuple(Fraction(x) for x in row) for row in self.pairing))
        for a in range(n):
            for b in range(n):
                v = self.pairing[a][b]
                da, db = self.degrees[a], self.degrees[b]
                if v and da + db != 4:
                    raise InvalidSurfaceData(f"<{a},{b}> = {v} but degrees {da}+{db} != 4")
                if v != (-1) ** (da * db) * self.pairing[b][a]:
                    raise InvalidSurfaceData(f"pairing is not graded-symmetric at ({a},{b})")
        self.betti()  # validates b0=b4, b1=b3

    @property
    def class_count(self) -> int:
        return len(self.degrees)

    def is_odd(self, a: int) -> bool:
        return self.degrees[a] % 2 == 1

    def betti(self) -> SurfaceBetti:
        counts = [sum(1 for d in self.degrees if d == k) for k in range(5)]
        return SurfaceBetti(*counts)

    def class_name(self, a: int) -> str:
        return self.labels[a] if self.labels else f"c{a}"

    def partners(self, a: int) -> list[tuple[int, Fraction]]:
        """Classes ``b`` with ``<a, b> != 0``."""
        return [(b, v) for b, v in enumerate(self.pairing[a]) if v]


def _block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[off + i][off + j] = v
        off += len(b)
    return out


_U = [[0, 1], [1, 0]]
# Cartan matrix of E8 (Bourbaki numbering); the K3 lattice uses its negative.
_E8 = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, -1],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, -1, 0, 0, 0, 0, 2],
]


def _assemble(name, middle_degrees, middle_pairing, labels):
    """Wrap a middle block with the unit class (degree 0) and point class (degree 4)."""
    k = len(middle_degrees)
    n = k + 2
    m = [[0] * n for _ in range(n)]
    m[0][n - 1] = m[n - 1][0] = 1
    for i in range(k):
        for j in range(k):
            m[i + 1][j + 1] = middle_pairing[i][j]
    return SurfaceDatum(name, (0, *middle_degrees, 4), tuple(tuple(r) for r in m), tuple(labels))


def p2_datum() -> SurfaceDatum:
    """``H*(P^2)``: unit, hyperplane ``H`` with ``H.H = 1``, point."""
    return _assemble("P2", (2,), [[1]], ("1", "H", "pt"))


def k3_datum() -> SurfaceDatum:
    """``H*(K3)`` with ``H^2`` the lattice ``U^3 + E8(-1)^2``."""
    e8neg = [[-x for x in row] for row in _E8]
    h2 = _block_diag(_U, _U, _U, e8neg, e8neg)
    labels = ["1"] + [f"e{k + 1}" for k in range(22)] + ["pt"]
    return _assemble("K3", (2,) * 22, h2, labels)


def abelian_datum() -> SurfaceDatum:
    """``H*`` of an abelian surface.

    Degree-one classes ``a1..a4`` pair with degree-three classes ``b1..b4``
    by ``<a_k, b_l> = delta_kl`` (so ``<b_l, a_k> = -delta_kl``); ``H^2`` is ``U^3``.
    """
    degrees = (1,) * 4 + (2,) * 6 + (3,) * 4
    n = len(degrees)
    m = [[0] * n for _ in range(n)]
    for k in range(4):
        m[k][10 + k] = 1
        m[10 + k][k] = -1
    for i, row in enumerate(_block_diag(_U, _U, _U)):
        for j, v in enumerate(row):
            m[4 + i][4 + j] = v
    labels = [f"a{k + 1}" for k in range(4)] + [f"e{k + 1}" for k in range(6)] + [f"b{k + 1}" for k in range(4)]
    return _assemble("abelian", degrees, m, labels)


def standard_datum(b: SurfaceBetti, name: str | None = None) -> SurfaceDatum:
    """A datum with the given Betti numbers: diagonal ``H^2`` form, ``H^1``/``H^3`` dual bases.

    Only surfaces with ``b0 = b4 = 1`` are supported.
    """
    if b.b0 != 1:
        raise InvalidSurfaceData("standard datum needs b0 = b4 = 1")
    k1, k2 = b.b1, b.b2
    degrees = (1,) * k1 + (2,) * k2 + (3,) * k1
    n = len(degrees)
    m = [[0] * n for _ in range(n)]
    for k in range(k1):
        m[k][k1 + k2 + k] = 1
        m[k1 + k2 + k][k] = -1
    for k in range(k2):
        m[k1 + k][k1 + k] = 1
    return _assemble(name or f"betti{b.as_tuple()}", degrees, m, ())


DATA = {"P2": p2_datum, "K3": k3_datum, "abelian": abelian_datum}


def datum_by_name(name: str) -> SurfaceDatum:
    try:
        return DATA[name]()
    except KeyError:
        raise InvalidSurfaceData(f"unknown surface {name!r}; choose from {sorted(DATA)}") from None


# -- states and vectors ------------------------------------------------------


VACUUM: State = ()


def energy(s: State) -> int:
    return sum(i for i, _ in s)


def shift_degree(S: SurfaceDatum, s: State) -> int:
    return sum(S.degrees[a] - 2 for _, a in s)


def _odd_before(S: SurfaceDatum, s: State, label: Label) -> int:
    return sum(1 for lab in s if lab < label and S.is_odd(lab[1]))


def insert_label(S: SurfaceDatum, s: State, label: Label):
    """``(sign, state)`` for creating ``label`` on ``s``; ``(0, None)`` if it vanishes."""
    odd = S.is_odd(label[1])
    if odd and label in s:
        return 0, None
    sign = -1 if odd and _odd_before(S, s, label) % 2 else 1
    return sign, tuple(sorted(s + (label,)))


def remove_label(S: SurfaceDatum, s: State, label: Label):
    """``(sign, multiplicity, state)`` for deleting one copy of ``label`` from ``s``."""
    m = s.count(label)
    if not m:
        return 0, 0, None
    sign = -1 if S.is_odd(label[1]) and _odd_before(S, s, label) % 2 else 1
    idx = s.index(label)
    return sign, m, s[:idx] + s[idx + 1:]


def state_str(S: SurfaceDatum, s: State) -> str:
    if not s:
        return "|0>"
    return " ".join(f"p[{S.class_name(a)}]_-{i}" for i, a in s) + " |0>"


class FockVector(dict):
    """Finite ``{state: Fraction}`` combination with no zero entries."""

    def add(self, s: State, c):
        v = self.get(s, 0) + c
        if v:
            self[s] = _clean(Fraction(v))
        else:
            self.pop(s, None)
        return self

    def __add__(self, other):
        out = FockVector(self)
        for s, c in other.items():
            out.add(s, c)
        return out

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        out = FockVector()
        for s, v in self.items():
            out.add(s, v * c)
        return out


def vacuum() -> FockVector:
    return FockVector({VACUUM: 1})


def basis_vector(s: State) -> FockVector:
    return FockVector({tuple(s): 1})


def create(S: SurfaceDatum, i: int, alpha: int, v: FockVector) -> FockVector:
    """``p^alpha_{-i} v``."""
    if i < 1:
        raise ContractError("mode must be positive")
    out = FockVector()
    for s, c in v.items():
        sign, t = insert_label(S, s, (i, alpha))
        if sign:
            out.add(t, sign * c)
    return out


def annihilate(S: SurfaceDatum, i: int, alpha: int, v: FockVector) -> FockVector:
    """``p^alpha_i v``."""
    if i < 1:
        raise ContractError("mode must be positive")
    out = FockVector()
    for gamma, pv in S.partners(alpha):
        label = (i, gamma)
        for s, c in v.items():
            sign, m, t = remove_label(S, s, label)
            if sign:
                out.add(t, i * pv * m * sign * c)
    return out


def apply_generator(S: SurfaceDatum, gen, v: FockVector) -> FockVector:
    """Apply ``gen = (mode, class)`` with negative mode creating, positive annihilating."""
    m, a = gen
    return create(S, -m, a, v) if m < 0 else annihilate(S, m, a, v)


def generator_parity(S: SurfaceDatum, gen) -> int:
    return S.degrees[gen[1]] % 2


def graded_commutator(S: SurfaceDatum, g1, g2, v: FockVector) -> FockVector:
    """``[g1, g2] v`` for generators ``(mode, class)``, an anticommutator when both are odd."""
    sign = -1 if generator_parity(S, g1) and generator_parity(S, g2) else 1
    ab = apply_generator(S, g1, apply_generator(S, g2, v))
    ba = apply_generator(S, g2, apply_generator(S, g1, v))
    return ab - ba.scaled(sign)


def expected_bracket(S: SurfaceDatum, g1, g2, rank: int | None = None) -> Fraction:
    """Scalar value of ``[g1, g2]`` for generators ``(mode, class)`` (negative mode creates)."""
    (m, a), (n, b) = g1, g2
    if m + n != 0:
        return Fraction(0)
    value = m * S.pairing[a][b]
    if rank is not None:
        value *= rank_factor(rank, abs(m))
    return Fraction(value)


def rank_factor(r: int, i: int) -> int:
    """``(-1)^(r i - 1) r``: creation operators are scaled by this in rank ``r``."""
    return (-1) ** (r * i - 1) * r


# -- enumeration ---------------------------------------------------------------


def all_labels(S: SurfaceDatum, max_mode: int) -> list[Label]:
    return [(i, a) for i in range(1, max_mode + 1) for a in range(S.class_count)]


def enumerate_states(S: SurfaceDatum, max_energy: int) -> list[State]:
    """All basis states of energy ``<= max_energy``, sorted by (energy, labels)."""
    labels = all_labels(S, max_energy)
    out: list[State] = []

    def rec(start, budget, acc):
        out.append(tuple(acc))
        for k in range(start, len(labels)):
            i, a = labels[k]
            if i > budget:
                break
            acc.append(labels[k])
            # odd labels cannot repeat
            rec(k + 1 if S.is_odd(a) else k, budget - i, acc)
            acc.pop()

    labels.sort()
    rec(0, max_energy, [])
    out.sort(key=lambda s: (energy(s), s))
    return out


# -- relation checking -----------------------------------------------------------


@dataclass
class RelationReport:
    surface: str
    max_energy: int
    ambient_energy: int
    rank: int | None
    pair_count: int = 0
    pair_state_checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "surface": self.surface,
            "max_energy": self.max_energy,
            "ambient_energy": self.ambient_energy,
            "rank": self.rank,
            "pairs": self.pair_count,
            "pair_state_checks": self.pair_state_checks,
            "failures": self.failures,
            "pass": self.passed,
        }


class _OperatorBank:
    """Integer sparse matrices of all generators on states of energy ``<= E``."""

    def __init__(self, S: SurfaceDatum, E: int, max_mode: int, rank: int | None):
        self.S = S
        self.states = enumerate_states(S, E)
        self.index = {s: k for k, s in enumerate(self.states)}
        self.energies = np.array([energy(s) for s in self.states])
        n = len(self.states)
        dens = [v.denominator for row in S.pairing for v in row if v]
        self.scale = math.lcm(*dens) if dens else 1
        # label removal data: removal[label] = (rows s', cols s, sign, multiplicity)
        removal: dict = {}
        for col, t in enumerate(self.states):
            for label in set(t):
                if label[0] > max_mode:
                    continue
                sign, m, s = remove_label(S, t, label)
                entry = removal.setdefault(label, ([], [], [], []))
                entry[0].append(self.index[s])
                entry[1].append(col)
                entry[2].append(sign)
                entry[3].append(m)
        self.create: dict = {}
        self.annihilate: dict = {}
        for i in range(1, max_mode + 1):
            factor = rank_factor(rank, i) if rank is not None else 1
            for a in range(S.class_count):
                rows, cols, signs, mults = removal.get((i, a), ([], [], [], []))
                rows, cols = np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64)
                signs = np.array(signs, dtype=np.int64)
                self.create[(i, a)] = sp.csr_matrix((signs * factor, (cols, rows)), shape=(n, n), dtype=np.int64)
            for a in range(S.class_count):
                acc = sp.csr_matrix((n, n), dtype=np.int64)
                for g, pv in S.partners(a):
                    rows, cols, signs, mults = removal.get((i, g), ([], [], [], []))
                    if not rows:
                        continue
                    w = int(pv * self.scale) * i
                    vals = np.array(signs, dtype=np.int64) * np.array(mults, dtype=np.int64) * w
                    acc = acc + sp.csr_matrix((vals, (rows, cols)), shape=(n, n), dtype=np.int64)
                self.annihilate[(i, a)] = acc.tocsr()

    def matrix(self, gen):
        m, a = gen
        if m < 0:
            return self.create[(-m, a)]
        return self.annihilate[(m, a)]

    def domain_size(self, limit: int) -> int:
        return int(np.searchsorted(self.energies, limit, side="right"))


def check_relations(
    S: SurfaceDatum,
    max_energy: int,
    rank: int | None = None,
    ambient_energy: int | None = None,
    max_mode: int | None = None,
) -> RelationReport:
    """Check ``[g1, g2] = <a,b> m delta_{m+n,0} Id`` for all generator pairs.

    Generators are ``p^a_{+-i}`` for ``1 <= i <= max_mode`` (default
    ``max_energy``).  Operators are realised on states of energy
    ``<= ambient_energy`` (default ``max_energy``); a pair is tested on each
    state of energy ``<= max_energy`` whose intermediate states stay inside
    that space.  With ``rank`` set, creation operators are scaled by
    ``(-1)^(r i - 1) r`` and so is the expected value.
    """
    if max_energy < 1:
        raise ContractError("max_energy must be >= 1")
    E = max_energy if ambient_energy is None else ambient_energy
    if E < max_energy:
        raise ContractError("ambient_energy must be >= max_energy")
    modes = max_energy if max_mode is None else max_mode
    bank = _OperatorBank(S, E, modes, rank)
    report = RelationReport(S.name, max_energy, E, rank)
    k = S.class_count
    parity = np.array([S.degrees[a] % 2 for a in range(k)], dtype=np.int64)
    sign_ab = (-1) ** np.outer(parity, parity)
    N = len(bank.states)
    scale = bank.scale
    signed_modes = [-i for i in range(1, modes + 1)] + list(range(1, modes + 1))

    for m in signed_modes:
        for n in signed_modes:
            reach = max(-m, 0) + max(-n, 0)
            nd = bank.domain_size(min(max_energy, E - reach))
            if nd <= 0:
                continue
            report.pair_count += k * k
            report.pair_state_checks += k * k * nd
            A_stack = sp.vstack([bank.matrix((m, a)) for a in range(k)]).tocsr()
            B_cols = sp.hstack([bank.matrix((n, b))[:, :nd] for b in range(k)]).tocsr()
            B_stack = sp.vstack([bank.matrix((n, b)) for b in range(k)]).tocsr()
            A_cols = sp.hstack([bank.matrix((m, a))[:, :nd] for a in range(k)]).tocsr()
            ab = (A_stack @ B_cols).tocoo()  # block (a, b) = A_a B_b
            ba = (B_stack @ A_cols).tocoo()  # block (b, a) = B_b A_a
            # move ba's block (b, a) to position (a, b) and apply the Koszul sign
            b_idx, x = np.divmod(ba.row, N)
            a_idx, y = np.divmod(ba.col, nd)
            ba_sign = sign_ab[a_idx, b_idx]
            rows = np.concatenate([ab.row, a_idx * N + x])
            cols = np.concatenate([ab.col, b_idx * nd + y])
            vals = np.concatenate([ab.data, -ba_sign * ba.data])
            if m + n == 0:
                # expected: m <a,b> Id on every block
                exp_factor = m * (rank_factor(rank, abs(m)) if rank is not None else 1)
                pa, pb = np.nonzero(np.array([[int(v * scale) for v in row] for row in S.pairing]))
                diag = np.arange(nd)
                e_rows = (pa[:, None] * N + diag[None, :]).ravel()
                e_cols = (pb[:, None] * nd + diag[None, :]).ravel()
                e_vals = np.repeat(
                    [-exp_factor * int(S.pairing[a][b] * scale) for a, b in zip(pa, pb)], nd
                )
                rows = np.concatenate([rows, e_rows])
                cols = np.concatenate([cols, e_cols])
                vals = np.concatenate([vals, e_vals])
            diff = sp.coo_matrix((vals, (rows, cols)), shape=(k * N, k * nd)).tocsr()
            diff.sum_duplicates()
            diff.eliminate_zeros()
            if diff.nnz:
                dc = diff.tocoo()
                for idx in range(min(dc.nnz, 5)):
                    a, x = divmod(int(dc.row[idx]), N)
                    b, y = divmod(int(dc.col[idx]), nd)
                    exp_v = expected_bracket(S, (m, a), (n, b), rank) if x == y else Fraction(0)
                    report.failures.append({
                        "relation": f"[p[{S.class_name(a)}]_{m}, p[{S.class_name(b)}]_{n}]",
                        "state": state_str(S, bank.states[y]),
                        "component": state_str(S, bank.states[x]),
                        "expected": str(exp_v),
                        "got": str(exp_v + Fraction(int(dc.data[idx]), scale)),
                        "pass": False,
                    })
    return report


def check_jacobi(S: SurfaceDatum, max_energy: int, max_mode: int) -> list:
    """Super-Jacobi identity on generator triples applied to basis states, by direct evaluation.

    Returns a list of failures ``(g1, g2, g3, state)``.
    """
    gens = [(s * i, a) for i in range(1, max_mode + 1) for s in (-1, 1) for a in range(S.class_count)]
    par = {g: generator_parity(S, g) for g in gens}
    op = {g: (lambda v, g=g: apply_generator(S, g, v)) for g in gens}

    def br(fx, px, fy, py):
        return (lambda v: fx(fy(v)) - fy(fx(v)).scaled((-1) ** (px * py))), (px + py) % 2

    failures = []
    for s in enumerate_states(S, max_energy):
        v = basis_vector(s)
        for g1 in gens:
            for g2 in gens:
                f12, p12 = br(op[g1], par[g1], op[g2], par[g2])
                for g3 in gens:
                    lhs = br(op[g1], par[g1], *br(op[g2], par[g2], op[g3], par[g3]))[0](v)
                    r1 = br(f12, p12, op[g3], par[g3])[0](v)
                    r2 = br(op[g2], par[g2], *br(op[g1], par[g1], op[g3], par[g3]))[0](v)
                    rhs = r1 + r2.scaled((-1) ** (par[g1] * par[g2]))
                    if lhs != rhs:
                        failures.append((g1, g2, g3, s))
    return failures


# -- bilinear form -------------------------------------------------------------------


def bilinear_form(S: SurfaceDatum):
    """The form with ``B(vac, vac) = 1`` and ``B(p_{-i}^a u, v) = B(u, p_i^a v)``.

    Defined by peeling the smallest label off the left argument (which
    carries no Koszul sign).  Returns a memoised function on basis states.
    """

    @lru_cache(maxsize=None)
    def form(s: State, t: State) -> Fraction:
        if energy(s) != energy(t):
            return Fraction(0)
        if not s:
            return Fraction(1) if not t else Fraction(0)
        (i, a), rest = s[0], s[1:]
        total = Fraction(0)
        for u, c in annihilate(S, i, a, basis_vector(t)).items():
            total += c * form(rest, u)
        return total

    def on_vectors(x: FockVector, y: FockVector) -> Fraction:
        return sum((cx * cy * form(s, t) for s, cx in x.items() for t, cy in y.items()), Fraction(0))

    on_vectors.on_states = form
    return on_vectors


# -- character ---------------------------------------------------------------------


def character(S: SurfaceDatum, order: int, vacuum_dim: int = 1) -> TruncatedSeries:
    """``sum q^energy t^shift`` over basis states of energy ``< order``, times ``vacuum_dim``.

    Counts states generator by generator: an even generator ``(i, a)`` may
    occur any number of times, an odd one at most once.
    """
    if order < 1:
        raise ContractError("order must be >= 1")
    counts = {(0, 0): 1}
    for i in range(1, order):
        for a in range(S.class_count):
            w = S.degrees[a] - 2
            new = dict(counts)
            if S.is_odd(a):
                for (e, d), c in counts.items():
                    if e + i < order:
                        new[(e + i, d + w)] = new.get((e + i, d + w), 0) + c
            else:
                # process energies in increasing order so repeats accumulate
                for e in range(i, order):
                    for (e0, d), c in list(new.items()):
                        if e0 == e - i:
                            new[(e, d + w)] = new.get((e, d + w), 0) + c
            counts = new
    by_energy: dict[int, dict] = {}
    for (e, d), c in counts.items():
        by_energy.setdefault(e, {})[(d,)] = by_energy.get(e, {}).get((d,), 0) + c * vacuum_dim
    one = LaurentPoly.constant(1, ("t",))
    return TruncatedSeries({e: LaurentPoly(t, ("t",)) for e, t in by_energy.items()}, order, 1, one)


def character_by_states(S: SurfaceDatum, order: int) -> TruncatedSeries:
    """Same graded count from explicit state enumeration (small orders only)."""
    coeffs: dict[int, dict] = {}
    for s in enumerate_states(S, order - 1):
        d = coeffs.setdefault(energy(s), {})
        key = (shift_degree(S, s),)
        d[key] = d.get(key, 0) + 1
    one = LaurentPoly.constant(1, ("t",))
    return TruncatedSeries({e: LaurentPoly(t, ("t",)) for e, t in coeffs.items()}, order, 1, one)


# -- constants c_n ---------------------------------------------------------------------


def intersection_binomial(r: int, pairing: int, order: int) -> TruncatedSeries:
    """``(1 - (-1)^r z^2)^(r * pairing)`` as a series in ``z`` known below ``z^order``."""
    base = TruncatedSeries({0: 1, 2: -((-1) ** r)}, order)
    return base ** (r * pairing)


def recover_constants(r: int, pairing: int, N: int, series: TruncatedSeries | None = None) -> list:
    """``c_1..c_N`` from ``Phi(z) = sum c_n/n^2 <C,C'> z^(2n) = log(series)``.

    ``series`` defaults to ``(1 - (-1)^r z^2)^(r * pairing)``; pass the
    Schubert-calculus intersection series to derive the constants from geometry.
    """
    if r < 1 or pairing < 1 or N < 1:
        raise ContractError("r, pairing and N must be positive")
    order = 2 * N + 1
    if series is None:
        series = intersection_binomial(r, pairing, order)
    elif series.order < order:
        raise ContractError(f"series known only below z^{series.order}, need z^{order - 1}")
    phi = series.truncate(order).log()
    return [_clean(Fraction(n * n) * Fraction(phi.coefficient(2 * n)) / pairing) for n in range(1, N + 1)]


def expected_constant(r: int, n: int) -> int:
    return (-1) ** (r * n - 1) * r * n
