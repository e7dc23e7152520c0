"""Partitions, strata of the Uhlenbeck space, and dimension bookkeeping.

Partitions are stored as weakly decreasing tuples of positive integers.
Enumeration order is reverse lexicographic: ``(4), (3, 1), (2, 2), ...``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache


class ContractError(ValueError):
    """Raised when an operation is called outside its documented domain."""


class Partition(tuple):
    """An integer partition, e.g. ``Partition([3, 1, 1])``.

    Zero parts are dropped and the parts are sorted on construction, so
    ``Partition([1, 3, 0, 1]) == Partition([3, 1, 1])``.
    """

    def __new__(cls, parts=()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ContractError(f"negative part in {parts}")
        return super().__new__(cls, sorted((p for p in parts if p), reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        """Map part value ``i`` to ``m_i``, the number of parts equal to ``i``."""
        return dict(sorted(Counter(self).items()))

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def fits_box(self, rows: int, cols: int) -> bool:
        return len(self) <= rows and (not self or self[0] <= cols)

    def exponent_notation(self) -> str:
        """``(3, 1, 1)`` -> ``"1^2 3"``; the empty partition prints as ``"0"``."""
        if not self:
            return "0"
        out = []
        for value, mult in self.multiplicities().items():
            out.append(f"{value}^{mult}" if mult > 1 else str(value))
        return " ".join(out)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


EMPTY = Partition()


def _partitions_bounded(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ContractError(f"n must be nonnegative, got {n}")
    return list(_enumerate(n))


def partitions_in_box(rows: int, cols: int, weight: int | None = None) -> list[Partition]:
    """Partitions fitting a ``rows x cols`` box, optionally of a fixed weight."""
    weights = range(rows * cols + 1) if weight is None else [weight]
    out = []
    for w in weights:
        out.extend(p for p in enumerate_partitions(w) if p.fits_box(rows, cols))
    return out


def partition_count(n: int) -> int:
    """Number of partitions of ``n`` by the Euler pentagonal recurrence."""
    counts = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * counts[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * counts[m - g2]
            k += 1
        counts[m] = total
    return counts[n]


def add_part_coefficient(lam: Partition, mu: Partition, i: int) -> int:
    """Coefficient of ``m_lam`` in ``p_i * m_mu``.

    ``lam`` must arise from ``mu`` by adding ``i`` to one part (possibly a
    zero part) and re-sorting; the coefficient is then the number of parts of
    ``lam`` equal to the enlarged part.  Returns 0 when ``lam`` does not arise
    this way.
    """
    lam, mu = Partition(lam), Partition(mu)
    if i < 1:
        raise ContractError(f"i must be positive, got {i}")
    if lam.weight != mu.weight + i:
        raise ContractError(
            f"weight mismatch: |{list(lam)}| = {lam.weight} != |{list(mu)}| + {i}"
        )
    for value in set(mu) | {0}:
        grown = list(mu)
        if value:
            grown.remove(value)
        grown.append(value + i)
        if Partition(grown) == lam:
            return lam.count(value + i)
    return 0


def add_part_targets(mu: Partition, i: int) -> list[Partition]:
    """Distinct partitions obtained by adding ``i`` to one part of ``mu`` (or to 0)."""
    out = []
    for value in sorted(set(mu) | {0}, reverse=True):
        grown = list(mu)
        if value:
            grown.remove(value)
        grown.append(value + i)
        lam = Partition(grown)
        if lam not in out:
            out.append(lam)
    return out


def dim_gieseker_constant(r: int, c1_sq: int, chi_O: int, h1_O: int) -> int:
    """The ``n``-independent constant ``a`` with ``dim M^G(r, n) = 2rn + a``."""
    if r < 1:
        raise ContractError(f"rank must be positive, got {r}")
    return -(r - 1) * c1_sq - (r * r - 1) * chi_O + h1_O


def dim_gieseker(r: int, n: int, c1_sq: int, chi_O: int, h1_O: int) -> int:
    """Expected dimension of the Gieseker moduli space; negative means empty."""
    return 2 * r * n + dim_gieseker_constant(r, c1_sq, chi_O, h1_O)


def dim_punctual_quot(r: int, n: int) -> int:
    """Dimension ``rn - 1`` of the punctual Quot scheme of length-``n`` quotients of O^r."""
    if r < 1:
        raise ContractError(f"rank must be positive, got {r}")
    if n < 1:
        raise ContractError("the punctual Quot scheme needs n >= 1")
    return r * n - 1


def dim_punctual_quot_by_fibration(r: int, n: int) -> int:
    """Same dimension counted as a rank ``(r-1)n`` bundle over the punctual Hilbert scheme."""
    if n < 1:
        raise ContractError("the punctual Quot scheme needs n >= 1")
    return (r - 1) * n + (n - 1)


@dataclass(frozen=True)
class Stratum:
    """Stratum ``(s, mu)`` of ``M^U(r, n)`` with fiber and codimension data.

    ``codim`` is computed from the dimension count of the stratum itself
    (``dim N(r, n) - dim N(r, n-s) - 2 * length(mu)``), not from the fiber,
    so ``codim == 2 * fiber_dim`` is a genuine check.
    """

    s: int
    mu: Partition
    fiber_dim: int
    codim: int
    expected_empty: bool | None = None

    @property
    def semismall(self) -> bool:
        return self.codim == 2 * self.fiber_dim


def strata(
    r: int,
    n: int,
    c1_sq: int | None = None,
    chi_O: int | None = None,
    h1_O: int | None = None,
) -> list[Stratum]:
    """All strata ``(s, mu)`` with ``0 <= s < n`` and ``mu`` a partition of ``s``.

    With surface invariants supplied, ``expected_empty`` flags strata whose
    open part ``N(r, n - s)`` has negative expected dimension.  Such strata
    are kept, not dropped.
    """
    if r < 1:
        raise ContractError(f"rank must be positive, got {r}")
    have_surface = None not in (c1_sq, chi_O, h1_O)
    a = dim_gieseker_constant(r, c1_sq, chi_O, h1_O) if have_surface else 0
    out = []
    for s in range(n):
        for mu in enumerate_partitions(s):
            # fibre is a product of punctual Quot schemes, one per part
            fiber = sum(dim_punctual_quot(r, part) for part in mu)
            codim = (2 * r * n + a) - (2 * r * (n - s) + a) - 2 * mu.length
            empty = (2 * r * (n - s) + a < 0) if have_surface else None
            out.append(Stratum(s, mu, fiber, codim, empty))
    return out
