"""Symmetric functions in the monomial basis.

The only product implemented is multiplication by a power sum ``p_i``,
which on the monomial basis is the add-a-part rule of
:func:`gieseker.partitions.add_part_coefficient`.  A finite-variable
polynomial oracle (:func:`to_polynomial`, :func:`from_polynomial`) checks it.
"""

from __future__ import annotations

from fractions import Fraction

from . import polys
from .partitions import ContractError, Partition, add_part_coefficient, add_part_targets
from .rings import _clean


class SymFunc:
    """Finite rational combination of monomial symmetric functions ``m_lambda``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for lam, c in (terms or {}).items():
            lam = Partition(lam)
            c = _clean(Fraction(c))
            if c:
                out[lam] = out.get(lam, 0) + c
                if not out[lam]:
                    del out[lam]
        self.terms = out

    @classmethod
    def m(cls, *parts) -> "SymFunc":
        return cls({Partition(parts): 1})

    @classmethod
    def one(cls) -> "SymFunc":
        return cls({Partition(): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(out)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, c):
        if isinstance(c, SymFunc):
            raise TypeError("only power-sum multiplication is implemented; use mult_powersum")
        return SymFunc({lam: v * c for lam, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int | None:
        """Common weight of all terms, or None for an inhomogeneous combination."""
        weights = {lam.weight for lam in self.terms}
        return weights.pop() if len(weights) == 1 else None

    def max_length(self) -> int:
        return max((lam.length for lam in self.terms), default=0)

    def __repr__(self):
        return f"SymFunc({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: (kv[0].weight, tuple(kv[0])), reverse=True)
        def term(lam, c):
            base = f"m[{lam.exponent_notation()}]" if lam else "1"
            if c == 1:
                return base
            return str(c) if not lam else f"{c}*{base}"

        return " + ".join(term(lam, c) for lam, c in items).replace("+ -", "- ")


def mult_powersum(i: int, f: SymFunc) -> SymFunc:
    """``p_i * f``."""
    if i < 1:
        raise ContractError(f"power-sum index must be positive, got {i}")
    out: dict = {}
    for mu, c in f.terms.items():
        for lam in add_part_targets(mu, i):
            out[lam] = out.get(lam, 0) + c * add_part_coefficient(lam, mu, i)
    return SymFunc(out)


def to_polynomial(f: SymFunc, nvars: int) -> polys.Poly:
    """Expand in ``x_1..x_nvars``; terms with more than ``nvars`` parts vanish."""
    out: polys.Poly = {}
    for lam, c in f.terms.items():
        out = polys.padd(out, polys.monomial_symmetric(lam, nvars), c)
    return out


def from_polynomial(p: polys.Poly, nvars: int | None = None) -> SymFunc:
    """Monomial-basis expansion of a symmetric polynomial.

    Raises :class:`ContractError` naming the transposition that fails.
    """
    if nvars is None:
        nvars = len(next(iter(p))) if p else 0
    bad = polys.transposition_violation(p, nvars)
    if bad is not None:
        raise ContractError(f"polynomial is not symmetric under swapping x{bad[0] + 1} and x{bad[1] + 1}")
    return SymFunc({Partition(e): c for e, c in p.items() if list(e) == sorted(e, reverse=True)})


def elementary_chain(N: int) -> list[SymFunc]:
    """Coefficients of ``z^0..z^N`` in ``exp(sum_i z^i p_i / ((-1)^(i-1) i)) . 1``.

    The exponential is expanded as ``sum_k A^k / k!`` with ``A`` acting by
    power-sum multiplication; entry ``n`` should equal ``e_n = m_(1^n)``.
    """
    if N < 1:
        raise ContractError("N must be >= 1")
    weight = {i: Fraction((-1) ** (i - 1), i) for i in range(1, N + 1)}

    def apply_A(series):
        out = [SymFunc() for _ in range(N + 1)]
        for n, f in enumerate(series):
            if not f:
                continue
            for i in range(1, N - n + 1):
                out[n + i] = out[n + i] + mult_powersum(i, f) * weight[i]
        return out

    term = [SymFunc.one()] + [SymFunc() for _ in range(N)]
    total = list(term)
    for k in range(1, N + 1):
        term = [f * Fraction(1, k) for f in apply_A(term)]
        total = [a + b for a, b in zip(total, term)]
    return total
