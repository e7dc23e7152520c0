"""Truncated power series in ``q`` with exponents on a lattice ``(1/D) Z``.

A :class:`TruncatedSeries` stores coefficients for exponents strictly below
its ``order``.  Arithmetic tracks precision the usual way, so a product or
quotient is only claimed up to the order its inputs determine.
Coefficients may be ``int``/``Fraction`` or elements of the rings in
:mod:`gieseker.rings`.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .rings import LaurentPoly, RationalFunction, _clean


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _is_zero(c) -> bool:
    return not c


class SeriesError(ArithmeticError):
    pass


class TruncatedSeries:
    """``sum_k c_k q^(k/D)`` known for ``k/D < order``.

    ``one`` is the unit of the coefficient ring; it fixes which ring new
    coefficients (constants, monomials) are created in.
    """

    __slots__ = ("coeffs", "order", "D", "one")

    def __init__(self, coeffs=None, order=1, D=1, one=1):
        self.D = int(D)
        if self.D < 1:
            raise SeriesError("lattice denominator must be positive")
        self.order = Fraction(order)
        self.one = one
        bound = self.bound
        self.coeffs = {
            int(k): c for k, c in (coeffs or {}).items() if k < bound and not _is_zero(c)
        }

    # -- construction --------------------------------------------------

    @property
    def bound(self) -> int:
        """Exclusive bound on stored lattice indices."""
        return math.ceil(self.order * self.D)

    @classmethod
    def constant(cls, c, order, D=1, one=1):
        return cls({0: one * c if c != 1 else one}, order, D, one)

    @classmethod
    def monomial(cls, exponent, coeff, order, D=None, one=1):
        exponent = Fraction(exponent)
        if D is None:
            D = exponent.denominator
        k = exponent * D
        if k.denominator != 1:
            raise SeriesError(f"exponent {exponent} not on lattice 1/{D}")
        return cls({int(k): coeff}, order, D, one)

    def _new(self, coeffs, order=None, D=None):
        return TruncatedSeries(coeffs, self.order if order is None else order,
                               self.D if D is None else D, self.one)

    def copy(self):
        return self._new(dict(self.coeffs))

    def rescale(self, D: int) -> "TruncatedSeries":
        if D % self.D:
            raise SeriesError(f"cannot rescale lattice 1/{self.D} to 1/{D}")
        f = D // self.D
        return TruncatedSeries({k * f: c for k, c in self.coeffs.items()}, self.order, D, self.one)

    def _align(self, other):
        if self.D == other.D:
            return self, other
        D = _lcm(self.D, other.D)
        return self.rescale(D), other.rescale(D)

    # -- queries ---------------------------------------------------------

    def valuation(self) -> Fraction:
        if not self.coeffs:
            return self.order
        return Fraction(min(self.coeffs), self.D)

    def coefficient(self, exponent):
        exponent = Fraction(exponent)
        if exponent >= self.order:
            raise SeriesError(f"q^{exponent} is beyond the known order {self.order}")
        k = exponent * self.D
        if k.denominator != 1:
            return 0 * self.one
        return self.coeffs.get(int(k), 0 * self.one)

    def items(self):
        """Sorted ``(exponent, coefficient)`` pairs of nonzero terms."""
        return [(Fraction(k, self.D), self.coeffs[k]) for k in sorted(self.coeffs)]

    def truncate(self, order) -> "TruncatedSeries":
        order = Fraction(order)
        if order > self.order:
            raise SeriesError(f"cannot extend precision from {self.order} to {order}")
        return self._new(self.coeffs, order)

    def map_coefficients(self, fn, one=None) -> "TruncatedSeries":
        one = fn(self.one) if one is None else one
        return TruncatedSeries({k: fn(c) for k, c in self.coeffs.items()}, self.order, self.D, one)

    def differences(self, other: "TruncatedSeries", order=None):
        """Exponents below ``order`` (default: common precision) where the series differ."""
        a, b = self._align(other)
        order = min(a.order, b.order) if order is None else Fraction(order)
        if order > min(a.order, b.order):
            raise SeriesError("comparison order exceeds known precision")
        bound = math.ceil(order * a.D)
        out = []
        for k in sorted(set(a.coeffs) | set(b.coeffs)):
            if k >= bound:
                continue
            if a.coeffs.get(k, 0) != b.coeffs.get(k, 0):
                out.append(Fraction(k, a.D))
        return out

    def agrees_with(self, other, order=None) -> bool:
        return not self.differences(other, order)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order, self.D, self.one)

    def __add__(self, other):
        a, b = self._align(self._coerce(other))
        out = dict(a.coeffs)
        for k, c in b.coeffs.items():
            if k in out:
                v = out[k] + c
                if _is_zero(v):
                    del out[k]
                else:
                    out[k] = v
            else:
                out[k] = c
        return TruncatedSeries(out, min(a.order, b.order), a.D, a.one)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TruncatedSeries":
        """Multiply every coefficient by a coefficient-ring element or scalar."""
        return self._new({k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        a, b = self._align(other)
        order = min(a.order + b.valuation(), b.order + a.valuation())
        bound = math.ceil(order * a.D)
        out: dict = {}
        bk = sorted(b.coeffs.items())
        for i, ci in a.coeffs.items():
            for j, cj in bk:
                k = i + j
                if k >= bound:
                    break
                prod = ci * cj
                if k in out:
                    out[k] = out[k] + prod
                else:
                    out[k] = prod
        return TruncatedSeries(out, order, a.D, a.one)

    def __rmul__(self, other):
        return self.scale(other)

    def shift(self, exponent) -> "TruncatedSeries":
        """Multiply by ``q^exponent``."""
        exponent = Fraction(exponent)
        D = _lcm(self.D, exponent.denominator)
        s = self.rescale(D)
        k = int(exponent * D)
        return TruncatedSeries({i + k: c for i, c in s.coeffs.items()}, s.order + exponent, D, s.one)

    def substitute_q_power(self, l: int) -> "TruncatedSeries":
        """``q -> q^l`` for a positive integer ``l``."""
        if l < 1:
            raise SeriesError("substitution power must be positive")
        return self._new({k * l: c for k, c in self.coeffs.items()}, self.order * l)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the leading coefficient must be a unit."""
        if not self.coeffs:
            raise SeriesError("inverse of a series that vanishes to its known order")
        v = min(self.coeffs)
        lead = self.coeffs[v]
        try:
            inv_lead = _unit_inverse(lead)
        except ZeroDivisionError as exc:
            raise SeriesError(f"leading coefficient {lead} is not invertible") from exc
        val = Fraction(v, self.D)
        order = self.order - 2 * val
        n_terms = math.ceil(order * self.D) + v
        rel = {k - v: c for k, c in self.coeffs.items()}
        g: dict[int, object] = {0: inv_lead}
        keys = sorted(k for k in rel if k > 0)
        for n in range(1, max(n_terms, 0)):
            acc = None
            for j in keys:
                if j > n:
                    break
                gj = g.get(n - j)
                if gj is None:
                    continue
                term = rel[j] * gj
                acc = term if acc is None else acc + term
            if acc is not None and not _is_zero(acc):
                g[n] = -(acc * inv_lead)
        return TruncatedSeries({k - v: c for k, c in g.items()}, order, self.D, self.one)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self.scale(_unit_inverse(other))

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise SeriesError("only integer powers are supported")
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return TruncatedSeries.constant(1, self.order, self.D, self.one)
        result, base = None, self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exp(self) -> "TruncatedSeries":
        """``exp`` of a series with zero constant term and nonnegative exponents."""
        if self.coeffs and min(self.coeffs) <= 0:
            if min(self.coeffs) < 0 or not _is_zero(self.coeffs[0]):
                raise SeriesError("exp needs a series with positive valuation")
        n_max = self.bound
        g = sorted(self.coeffs.items())
        f: dict[int, object] = {0: self.one}
        for n in range(1, n_max):
            acc = None
            for j, gj in g:
                if j > n:
                    break
                fn = f.get(n - j)
                if fn is None:
                    continue
                term = gj * fn * j
                acc = term if acc is None else acc + term
            if acc is not None and not _is_zero(acc):
                f[n] = acc * Fraction(1, n)
        return self._new(f)

    def log(self) -> "TruncatedSeries":
        """``log`` of a series with constant term 1 and nonnegative exponents."""
        if self.coeffs.get(0) != 1 or min(self.coeffs) < 0:
            raise SeriesError("log needs constant term 1")
        n_max = self.bound
        f = {k: c for k, c in self.coeffs.items() if k > 0}
        g: dict[int, object] = {}
        for n in range(1, n_max):
            acc = f[n] * n if n in f else None
            for j in sorted(g):
                if j >= n:
                    break
                fnj = f.get(n - j)
                if fnj is None:
                    continue
                term = g[j] * fnj * j
                acc = -term if acc is None else acc - term
            if acc is not None and not _is_zero(acc):
                g[n] = acc * Fraction(1, n)
        return self._new(g)

    # -- comparison / output --------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        a, b = self._align(other)
        return a.order == b.order and a.coeffs == b.coeffs

    __hash__ = None

    def __repr__(self):
        return f"TruncatedSeries({self}, order={self.order}, D={self.D})"

    def __str__(self):
        if not self.coeffs:
            return f"O(q^{self.order})"
        parts = []
        for e, c in self.items():
            q = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            cs = str(c)
            if q and cs == "1":
                parts.append(q)
            elif q:
                parts.append(f"({cs})*{q}")
            else:
                parts.append(f"({cs})")
        return " + ".join(parts) + f" + O(q^{self.order})"

    def to_json(self) -> dict:
        return {
            "D": self.D,
            "order": f"{self.order.numerator}/{self.order.denominator}",
            "coeffs": [{"q_num": k, "value": str(self.coeffs[k])} for k in sorted(self.coeffs)],
        }


def _unit_inverse(c):
    if isinstance(c, (LaurentPoly, RationalFunction)):
        return c.inverse()
    return _clean(Fraction(1) / Fraction(c))


def product(factors, order, D=1, one=1) -> TruncatedSeries:
    out = TruncatedSeries.constant(1, order, D, one)
    for f in factors:
        out = out * f
    return out
