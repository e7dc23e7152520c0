"""Schubert calculus on the Grassmannian of ``n``-dimensional quotients of ``C^r``.

Cohomology classes are integer combinations of Schur classes ``s_lambda``
with ``lambda`` inside the ``n x (r - n)`` box (at most ``n`` rows, parts at
most ``r - n``).  Products use the Littlewood-Richardson rule and drop
partitions leaving the box.  The tautological quotient ``Q`` (rank ``n``)
has ``c_j(Q) = s_(1^j)``; the subbundle ``S`` has ``c(S) = c(Q)^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import polys
from .partitions import ContractError, Partition, partitions_in_box
from .series import TruncatedSeries


@lru_cache(maxsize=None)
def lr_coefficient(nu: Partition, lam: Partition, mu: Partition) -> int:
    """Number of LR tableaux of shape ``nu / lam`` and content ``mu``."""
    nu, lam, mu = Partition(nu), Partition(lam), Partition(mu)
    if nu.weight != lam.weight + mu.weight:
        return 0
    if lam.length > nu.length or any(l > v for l, v in zip(lam, nu)):
        return 0
    if not mu:
        return 1
    # cells in reading order: rows top to bottom, each row right to left
    cells = []
    for r, row in enumerate(nu):
        start = lam[r] if r < lam.length else 0
        cells.extend((r, c) for c in range(row - 1, start - 1, -1))
    k = mu.length
    filling: dict = {}
    counts = [0] * (k + 1)

    def lower_bound(r, c):
        lo = 1
        if (r - 1, c) in filling:
            lo = filling[(r - 1, c)] + 1
        return lo

    def rec(idx):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = filling.get((r, c + 1), k)  # weakly increasing along rows
        total = 0
        for v in range(lower_bound(r, c), hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue  # lattice word condition
            filling[(r, c)] = v
            counts[v] += 1
            total += rec(idx + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return total

    return rec(0)


class BoxClass:
    """Integer combination of Schur classes on ``Gr(n quotients of C^r)``."""

    __slots__ = ("r", "n", "terms")

    def __init__(self, r: int, n: int, terms=None):
        if not 0 <= n <= r:
            raise ContractError(f"need 0 <= n <= r, got r={r}, n={n}")
        self.r, self.n = r, n
        out = {}
        for lam, c in (terms or {}).items():
            lam = Partition(lam)
            if not lam.fits_box(n, r - n):
                raise ContractError(f"{tuple(lam)} does not fit the {n}x{r - n} box")
            if c:
                out[lam] = out.get(lam, 0) + c
                if not out[lam]:
                    del out[lam]
        self.terms = out

    @property
    def dim(self) -> int:
        return self.n * (self.r - self.n)

    @property
    def full_box(self) -> Partition:
        return Partition((self.r - self.n,) * self.n)

    @classmethod
    def one(cls, r, n):
        return cls(r, n, {Partition(): 1})

    @classmethod
    def schur(cls, r, n, lam, c=1):
        return cls(r, n, {Partition(lam): c})

    def _check(self, other):
        if not isinstance(other, BoxClass) or (self.r, self.n) != (other.r, other.n):
            raise ContractError("classes live on different Grassmannians")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return BoxClass(self.r, self.n, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return BoxClass(self.r, self.n, {lam: v * c for lam, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, BoxClass):
            return schur_mult(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, BoxClass):
            return NotImplemented
        return (self.r, self.n) == (other.r, other.n) and self.terms == other.terms

    __hash__ = None

    def homogeneous(self, degree: int) -> "BoxClass":
        return BoxClass(self.r, self.n, {l: c for l, c in self.terms.items() if l.weight == degree})

    def constant_term(self):
        return self.terms.get(Partition(), 0)

    def __pow__(self, k: int):
        if k < 0:
            return total_inverse(self) ** (-k)
        out = BoxClass.one(self.r, self.n)
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        return f"BoxClass(r={self.r}, n={self.n}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: (kv[0].weight, tuple(kv[0])))
        return " + ".join(f"{c}*s{tuple(l)}" for l, c in items).replace("+ -", "- ")


def schur_mult(a: BoxClass, b: BoxClass) -> BoxClass:
    """Product in ``H*(Gr)``: Littlewood-Richardson with out-of-box terms dropped."""
    a._check(b)
    r, n = a.r, a.n
    out: dict = {}
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            w = lam.weight + mu.weight
            if w > a.dim:
                continue
            for nu in partitions_in_box(n, r - n, w):
                c = lr_coefficient(nu, lam, mu)
                if c:
                    out[nu] = out.get(nu, 0) + c * ca * cb
    return BoxClass(r, n, out)


def schur_mult_oracle(a: BoxClass, b: BoxClass) -> BoxClass:
    """Same product via Schur polynomials in ``n`` variables, re-expanded by leading monomials."""
    a._check(b)
    r, n = a.r, a.n
    if n == 0:
        return BoxClass(r, n, {Partition(): a.constant_term() * b.constant_term()})

    def poly(x: BoxClass):
        p: polys.Poly = {}
        for lam, c in x.terms.items():
            p = polys.padd(p, polys.schur_polynomial(lam, n), c)
        return p

    prod = polys.pmul(poly(a), poly(b))
    out: dict = {}
    while prod:
        lead = max(prod)
        c = prod[lead]
        out[Partition(lead)] = c
        prod = polys.padd(prod, polys.schur_polynomial(lead, n), -c)
    return BoxClass(r, n, {lam: c for lam, c in out.items() if lam.fits_box(n, r - n)})


def total_inverse(x: BoxClass) -> BoxClass:
    """Inverse of a class with constant term 1 (``1 + nilpotent``)."""
    if x.constant_term() != 1:
        raise ContractError("only classes with constant term 1 are inverted")
    nil = x - BoxClass.one(x.r, x.n)
    out = BoxClass.one(x.r, x.n)
    power = BoxClass.one(x.r, x.n)
    for k in range(1, x.dim + 1):
        power = power * nil
        out = out + power.scale((-1) ** k)
    return out


def integrate(x: BoxClass) -> int:
    """Degree of the top-dimensional part: the coefficient of the full box."""
    return x.terms.get(x.full_box, 0)


# -- Chern classes ---------------------------------------------------------------


@dataclass(frozen=True)
class ChernVector:
    """A bundle's rank and its total Chern class."""

    rank: int
    total: BoxClass

    @property
    def r(self):
        return self.total.r

    @property
    def n(self):
        return self.total.n

    def c(self, j: int) -> BoxClass:
        return self.total.homogeneous(j)

    def classes(self) -> list[BoxClass]:
        return [self.c(j) for j in range(self.total.dim + 1)]

    def top(self) -> BoxClass:
        """``c_rank``; zero when the rank exceeds the Grassmannian dimension."""
        return self.c(self.rank)

    def __mul__(self, other: "ChernVector") -> "ChernVector":
        """Whitney sum."""
        return ChernVector(self.rank + other.rank, self.total * other.total)

    def __truediv__(self, other: "ChernVector") -> "ChernVector":
        """Virtual difference."""
        return ChernVector(self.rank - other.rank, self.total * total_inverse(other.total))

    def __pow__(self, k: int) -> "ChernVector":
        return ChernVector(self.rank * k, self.total ** k)


def chern_Q(r: int, n: int) -> ChernVector:
    """Tautological rank-``n`` quotient: ``c_j = s_(1^j)``."""
    cols = [Partition((1,) * j) for j in range(n + 1)]
    total = BoxClass(r, n, {lam: 1 for lam in cols if lam.fits_box(n, r - n)})
    return ChernVector(n, total)


def chern_S(r: int, n: int) -> ChernVector:
    """Tautological rank-``(r - n)`` sub: ``c(S) = c(Q)^-1``."""
    inv = total_inverse(chern_Q(r, n).total)
    high = [lam for lam in inv.terms if lam.weight > r - n]
    if high:
        raise ArithmeticError(f"c(S) has classes above its rank: {high}")
    return ChernVector(r - n, inv)


def dual(A: ChernVector) -> ChernVector:
    """``c_j(A*) = (-1)^j c_j(A)``."""
    return ChernVector(A.rank, BoxClass(A.r, A.n, {l: c * (-1) ** l.weight for l, c in A.total.terms.items()}))


def trivial(r: int, n: int, rank: int = 1) -> ChernVector:
    return ChernVector(rank, BoxClass.one(r, n))


def chern_tensor(A: ChernVector, B: ChernVector) -> ChernVector:
    """``c(A (x) B)`` by the splitting principle.

    Expands ``prod (1 + a_i + b_j)`` over formal roots, rewrites it in the
    elementary symmetric functions of each root set and substitutes
    ``e_k(a) = c_k(A)``, ``e_k(b) = c_k(B)``.
    """
    if (A.r, A.n) != (B.r, B.n):
        raise ContractError("bundles live on different Grassmannians")
    r, n = A.r, A.n
    p, q = A.rank, B.rank
    D = A.total.dim
    rank = p * q
    if rank == 0:
        return ChernVector(0, BoxClass.one(r, n))
    nv = p + q
    prod = polys.constant(1, nv)
    for i in range(p):
        for j in range(q):
            factor = polys.padd(polys.padd(polys.constant(1, nv), polys.variable(i, nv)), polys.variable(p + j, nv))
            prod = polys.pmul(prod, factor, max_degree=D)
    reduced = polys.two_set_elementary_reduction(prod, p, q)
    ca = [A.c(k) for k in range(p + 1)]
    cb = [B.c(k) for k in range(q + 1)]
    total = BoxClass(r, n)
    for (pa, pb), coeff in reduced.items():
        term = BoxClass.one(r, n).scale(coeff)
        for k, e in enumerate(pa, start=1):
            for _ in range(e):
                term = term * ca[k]
        for k, e in enumerate(pb, start=1):
            for _ in range(e):
                term = term * cb[k]
        total = total + term
    return ChernVector(rank, total)


def tangent_bundle(r: int, n: int) -> ChernVector:
    """``T_Gr = S* (x) Q``."""
    return chern_tensor(dual(chern_S(r, n)), chern_Q(r, n))


def excess_bundle(r: int, n: int) -> ChernVector:
    """``c(V) = c(T_M) c(T_Gr) / (c(T_Quot) c(T_Quot'))``.

    With ``c(T_M) = (c(Q) c(Q*))^r`` and ``c(T_Quot) = c(Q)^r``.
    """
    if not 1 <= n <= r:
        raise ContractError(f"need 1 <= n <= r, got r={r}, n={n}")
    Q = chern_Q(r, n)
    tm = (Q * dual(Q)) ** r
    tquot = Q ** r
    V = tm * tangent_bundle(r, n) / (tquot * tquot)
    if V.rank != n * (r - n):
        raise ArithmeticError(f"excess rank {V.rank} != {n * (r - n)}")
    return V


def excess_target(r: int, n: int) -> ChernVector:
    """``c(Q* (x) S)``, the closed form the excess bundle should match."""
    return chern_tensor(dual(chern_Q(r, n)), chern_S(r, n))


def excess_integral(r: int, n: int) -> int:
    """``integral of c_top(V)``; 1 for ``n = 0`` (a point)."""
    if n == 0:
        return 1
    return integrate(excess_bundle(r, n).top())


def expected_excess_integral(r: int, n: int) -> int:
    return (-1) ** ((r - 1) * n) * comb(r, n)


def intersection_series(r: int, pairing: int = 1, order: int | None = None) -> TruncatedSeries:
    """``(sum_n z^(2n) integral c_top(V_{r,n}))^pairing`` as a series in ``z``.

    Grassmannians with ``n > r`` are empty and contribute nothing.  Several
    intersection points contribute independently, hence the power.
    """
    if r < 1 or pairing < 1:
        raise ContractError("r and pairing must be positive")
    if order is None:
        order = 2 * r * pairing + 1
    base = TruncatedSeries({2 * n: excess_integral(r, n) for n in range(r + 1)}, order)
    return base ** pairing


def binomial_series(r: int, pairing: int, order: int) -> TruncatedSeries:
    """``(1 - (-1)^r z^2)^(r pairing)`` expanded by the binomial theorem."""
    k = r * pairing
    sgn = -((-1) ** r)
    return TruncatedSeries({2 * j: comb(k, j) * sgn ** j for j in range(k + 1)}, order)

