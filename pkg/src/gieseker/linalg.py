"""Exact dense linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction`; vectors are
lists.  Everything is exact, with one optional shortcut:
:func:`full_column_rank_certificate` reduces modulo a prime, which can only
lower the rank, so a full rank there proves full rank over Q.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction

import numpy as np

Matrix = list
Vector = list

_ZERO = Fraction(0)
_ONE = Fraction(1)


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def matrix(rows) -> Matrix:
    return [[frac(x) for x in row] for row in rows]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[_ZERO] * (n if m is None else m) for _ in range(n)]


def identity(n: int) -> Matrix:
    return [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]


def shape(A: Matrix):
    return len(A), (len(A[0]) if A else 0)


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    m = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [_ZERO] * m
        for k, a in enumerate(row):
            if a:
                acc = [x + a * y if y else x for x, y in zip(acc, B[k])]
        out.append(acc)
    return out


def matvec(A: Matrix, v: Vector) -> Vector:
    nz = [(k, x) for k, x in enumerate(v) if x]
    return [sum((row[k] * x for k, x in nz if row[k]), _ZERO) for row in A]


def add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def sub(A: Matrix, B: Matrix) -> Matrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(A: Matrix, c) -> Matrix:
    c = frac(c)
    return [[c * a for a in row] for row in A]


def is_zero(A: Matrix) -> bool:
    return all(not x for row in A for x in row)


def commutator(A: Matrix, B: Matrix) -> Matrix:
    return sub(matmul(A, B), matmul(B, A))


def mat_pow(A: Matrix, k: int) -> Matrix:
    out = identity(len(A))
    base = A
    while k:
        if k & 1:
            out = matmul(out, base)
        k >>= 1
        if k:
            base = matmul(base, base)
    return out


def columns(A: Matrix) -> list[Vector]:
    return [list(c) for c in zip(*A)] if A else []


def from_columns(cols: list[Vector], n: int | None = None) -> Matrix:
    if not cols:
        return zeros(n or 0, 0)
    return [list(r) for r in zip(*cols)]


def rref(A: Matrix):
    """Reduced row echelon form and pivot columns."""
    R = [list(row) for row in A]
    rows, cols = shape(R)
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if R[i][c]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def rank(A: Matrix) -> int:
    return len(rref(A)[1]) if A and A[0] else 0


def nullspace(A: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of ``{x : A x = 0}``."""
    m = ncols if ncols is not None else shape(A)[1]
    if not A:
        return [[_ONE if i == j else _ZERO for i in range(m)] for j in range(m)]
    R, piv = rref(A)
    free = [c for c in range(m) if c not in piv]
    basis = []
    for f in free:
        v = [_ZERO] * m
        v[f] = _ONE
        for row, pc in zip(R, piv):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def inverse(A: Matrix) -> Matrix:
    n = len(A)
    R, piv = rref([row + e for row, e in zip(A, identity(n))])
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


class EchelonBasis:
    """Incrementally maintained echelon basis of a subspace."""

    def __init__(self, vectors=()):
        self.rows: list[Vector] = []
        self.pivots: list[int] = []
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Vector) -> Vector:
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                v = [x - f * y if y else x for x, y in zip(v, row)]
        return v

    def contains(self, v: Vector) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Vector) -> bool:
        """Add ``v``; returns False if it already lies in the span."""
        w = self.reduce(v)
        p = next((i for i, x in enumerate(w) if x), None)
        if p is None:
            return False
        inv = 1 / w[p]
        w = [x * inv for x in w]
        self.rows.append(w)
        self.pivots.append(p)
        return True


def span_basis(vectors: list[Vector]) -> list[Vector]:
    """A basis (rref rows) of the span of ``vectors``."""
    if not vectors:
        return []
    R, piv = rref(vectors)
    return R[: len(piv)]


def extend_basis(base: list[Vector], candidates: list[Vector]) -> list[Vector]:
    """Candidates that, added in order, extend ``span(base)`` one dimension at a time."""
    ech = EchelonBasis(base)
    return [v for v in candidates if ech.add(v)]


def intersect_preimage(A: Matrix, domain: list[Vector], target: list[Vector]) -> list[Vector]:
    """Basis of ``{v in span(domain) : A v in span(target)}``."""
    if not domain:
        return []
    images = [matvec(A, v) for v in domain]
    n = len(A)
    # solve sum x_k A d_k - sum y_l t_l = 0
    cols = images + [[-x for x in t] for t in target]
    M = from_columns(cols, n)
    sols = nullspace(M, len(cols))
    out = []
    for s in sols:
        x = s[: len(domain)]
        v = [sum((xk * d[i] for xk, d in zip(x, domain)), _ZERO) for i in range(n)]
        out.append(v)
    return span_basis(out)


def common_denominator(A: Matrix) -> int:
    return math.lcm(*(x.denominator for row in A for x in row)) if A else 1


def integer_matrix(A: Matrix) -> list[list[int]]:
    """``L * A`` as Python ints for the least common denominator ``L``."""
    L = common_denominator(A)
    return [[int(x * L) for x in row] for row in A]


def int_matmul(A, B):
    cols = list(zip(*B))
    return [[sum(map(operator.mul, row, col)) for col in cols] for row in A]


def is_nilpotent(A: Matrix) -> bool:
    """``A^dim == 0``, computed on the integer matrix with cleared denominators."""
    n = len(A)
    M = integer_matrix(A)
    out, base, k = None, M, n
    while k:
        if k & 1:
            out = base if out is None else int_matmul(out, base)
        k >>= 1
        if k:
            base = int_matmul(base, base)
    return all(not x for row in out for x in row)


_PRIME = 1_000_003


def _mod_p(x: Fraction, p: int) -> int:
    return (x.numerator % p) * pow(x.denominator % p, -1, p) % p


def full_column_rank_certificate(A: Matrix, p: int = _PRIME) -> bool:
    """True if ``A`` reduced mod ``p`` has full column rank (which implies it over Q).

    False means "not certified"; callers fall back to exact elimination.
    """
    rows, cols = shape(A)
    if any(x.denominator % p == 0 for row in A for x in row):
        return False
    M = np.array([[_mod_p(x, p) for x in row] for row in A], dtype=np.int64).reshape(rows, cols)
    r = 0
    for c in range(cols):
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            return False
        piv = r + nz[0]
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        f = M[:, c].copy()
        f[r] = 0
        M = (M - np.outer(f, M[r])) % p
        r += 1
    return True


def has_trivial_nullspace(A: Matrix) -> bool:
    if full_column_rank_certificate(A):
        return True
    return rank(A) == shape(A)[1]


def to_strings(A: Matrix) -> list[list[str]]:
    return [[f"{x.numerator}/{x.denominator}" for x in row] for row in A]


def vector_to_strings(v: Vector) -> list[str]:
    return [f"{x.numerator}/{x.denominator}" for x in v]


def parse_rational(s) -> Fraction:
    return Fraction(s)
