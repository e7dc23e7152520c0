"""Generating functions of Poincaré and Hodge polynomials.

Every function returns a :class:`~gieseker.series.TruncatedSeries` in ``q``.
Coefficients are Laurent polynomials in ``t`` (or ``x, y`` for Hodge
series); the rank-2 projective-plane series go through rational functions
because of the ``1/(t^2 - 1)`` factor and are converted back at the end.

Exponent lattices: ``D = 1`` except for theta-function expressions, which
live on ``D = 8`` with ``t = u^2`` so half-integral powers of ``t`` are
integral powers of ``u``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .partitions import ContractError, enumerate_partitions
from .rings import LaurentPoly, RationalFunction
from .series import TruncatedSeries, product

T = ("t",)
U = ("u",)
XY = ("x", "y")


class InternalConsistencyError(ArithmeticError):
    """An expansion produced a value its construction rules out."""


class InvalidSurfaceData(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceBetti:
    b0: int
    b1: int
    b2: int
    b3: int
    b4: int

    def __post_init__(self):
        bs = self.as_tuple()
        if any(b < 0 for b in bs):
            raise InvalidSurfaceData(f"Betti numbers must be nonnegative, got {bs}")
        if self.b0 != self.b4:
            raise InvalidSurfaceData(f"b0 != b4 ({self.b0} != {self.b4})")
        if self.b1 != self.b3:
            raise InvalidSurfaceData(f"b1 != b3 ({self.b1} != {self.b3})")

    def as_tuple(self) -> tuple[int, ...]:
        return (self.b0, self.b1, self.b2, self.b3, self.b4)

    @property
    def euler(self) -> int:
        return self.b0 - self.b1 + self.b2 - self.b3 + self.b4

    @classmethod
    def parse(cls, text: str) -> "SurfaceBetti":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 5:
            raise InvalidSurfaceData(f"expected five Betti numbers b0..b4, got {text!r}")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError as exc:
            if isinstance(exc, InvalidSurfaceData):
                raise
            raise InvalidSurfaceData(f"non-integer Betti number in {text!r}") from exc


P2 = SurfaceBetti(1, 0, 1, 0, 1)
K3 = SurfaceBetti(1, 0, 22, 0, 1)
ABELIAN = SurfaceBetti(1, 4, 6, 4, 1)


@dataclass(frozen=True)
class HodgeTable:
    """Hodge numbers ``h[p][q]`` of a surface, ``0 <= p, q <= 2``."""

    h: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        h = tuple(tuple(int(v) for v in row) for row in self.h)
        object.__setattr__(self, "h", h)
        if len(h) != 3 or any(len(row) != 3 for row in h):
            raise InvalidSurfaceData("Hodge table must be 3x3")
        for p in range(3):
            for q in range(3):
                if h[p][q] < 0:
                    raise InvalidSurfaceData("Hodge numbers must be nonnegative")
                if h[p][q] != h[q][p]:
                    raise InvalidSurfaceData(f"h^{p},{q} != h^{q},{p}")

    def betti(self) -> SurfaceBetti:
        return SurfaceBetti(*(sum(self.h[p][i - p] for p in range(3) if 0 <= i - p <= 2)
                              for i in range(5)))

    @classmethod
    def parse(cls, text: str) -> "HodgeTable":
        """Parse ``"h00,h01,h02;h10,h11,h12;h20,h21,h22"``."""
        rows = [r for r in text.split(";")]
        try:
            return cls(tuple(tuple(int(v) for v in r.split(",")) for r in rows))
        except ValueError as exc:
            if isinstance(exc, InvalidSurfaceData):
                raise
            raise InvalidSurfaceData(f"malformed Hodge table {text!r}") from exc


HODGE_P2 = HodgeTable(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
HODGE_K3 = HodgeTable(((1, 0, 1), (0, 20, 0), (1, 0, 1)))


def _one(variables=T):
    return LaurentPoly.constant(1, variables)


def _binomial_factor(coeff, l: int, power: int, order, one) -> TruncatedSeries:
    """``(1 + coeff * q^l)^power`` truncated at ``order``."""
    base = TruncatedSeries({0: one, l: coeff}, order, 1, one)
    return base ** power


def goettsche_product(b: SurfaceBetti, order: int) -> TruncatedSeries:
    """Generating series of shifted Poincaré polynomials of Hilbert schemes of points."""
    if order < 1:
        raise ValueError("order must be >= 1")
    one = _one()
    t = lambda e: LaurentPoly.monomial(e, 1, T)  # noqa: E731
    factors = []
    for l in range(1, order):
        factors += [
            _binomial_factor(t(-1), l, b.b1, order, one),
            _binomial_factor(t(1), l, b.b3, order, one),
            _binomial_factor(-t(-2), l, -b.b0, order, one),
            _binomial_factor(-one, l, -b.b2, order, one),
            _binomial_factor(-t(2), l, -b.b4, order, one),
        ]
    return product(factors, order, 1, one)


def macdonald_sym_power(b: SurfaceBetti, order: int) -> TruncatedSeries:
    """``sum_m a_m(t) q^m`` with ``a_m`` the shifted Poincaré polynomial of ``Sym^m S``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    one = _one()
    t = lambda e: LaurentPoly.monomial(e, 1, T)  # noqa: E731
    return product(
        [
            _binomial_factor(t(-1), 1, b.b1, order, one),
            _binomial_factor(t(1), 1, b.b3, order, one),
            _binomial_factor(-t(-2), 1, -b.b0, order, one),
            _binomial_factor(-one, 1, -b.b2, order, one),
            _binomial_factor(-t(2), 1, -b.b4, order, one),
        ],
        order, 1, one,
    )


def strata_sum(b: SurfaceBetti, order: int) -> TruncatedSeries:
    """``sum_{s, mu} q^s P_t(Sym^mu S)`` by explicit enumeration of partitions.

    ``Sym^mu S`` is ``prod_i Sym^{m_i} S`` where ``m_i`` counts the parts of
    ``mu`` equal to ``i``, so each partition contributes ``prod_i a_{m_i}(t)``.
    """
    a = macdonald_sym_power(b, order)
    one = a.one
    coeffs = {}
    for s in range(order):
        total = 0 * one
        for mu in enumerate_partitions(s):
            term = one
            for m in mu.multiplicities().values():
                term = term * a.coefficient(m)
            total = total + term
        coeffs[s] = total
    return TruncatedSeries(coeffs, order, 1, one)


def hodge_product(h: HodgeTable, order: int) -> TruncatedSeries:
    """Hodge-polynomial analogue of the Göttsche product, coefficients in ``x, y``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    one = LaurentPoly.constant(1, XY)
    factors = []
    for l in range(1, order):
        for i in (-1, 0, 1):
            for j in (-1, 0, 1):
                sign = -1 if (i + j + 1) % 2 else 1
                mult = h.h[i + 1][j + 1]
                if not mult:
                    continue
                coeff = LaurentPoly.monomial((i, j), sign, XY)
                factors.append(_binomial_factor(coeff, l, sign * mult, order, one))
    return product(factors, order, 1, one)


def specialize_xy(series: TruncatedSeries) -> TruncatedSeries:
    """Substitute ``x = y = t``."""
    sub = lambda c: c.substitute([(1,), (1,)], T)  # noqa: E731
    return series.map_coefficients(sub, _one())


def specialize_t(series: TruncatedSeries, value=1) -> TruncatedSeries:
    """Evaluate Laurent coefficients at ``t = value``."""
    return series.map_coefficients(lambda c: c.evaluate([value]), 1)


# -- theta functions -----------------------------------------------------


def theta(mu: int, nu: int, order, tau_scale: int = 1, z_scale: int = 1) -> TruncatedSeries:
    """``theta_{mu,nu}(tau_scale*tau, z_scale*z)`` as a series on ``q^(1/8)``.

    Coefficients are Laurent polynomials in ``u`` with ``t = u^2``.  The sum
    over ``n`` keeps exactly the terms whose ``q``-exponent is below ``order``.
    """
    if mu not in (0, 1) or nu not in (0, 1):
        raise ValueError("theta characteristics must be 0 or 1")
    order = Fraction(order)
    coeffs = {}
    reach = math.isqrt(int(8 * order) // tau_scale + 1) + 1
    for m in range(-reach, reach + 1):
        two_x = 2 * m + mu                      # 2 * (m + mu/2)
        k = tau_scale * two_x * two_x           # 8 * exponent
        if Fraction(k, 8) >= order:
            continue
        c = LaurentPoly.monomial(z_scale * two_x, -1 if (m * nu) % 2 else 1, U)
        coeffs[k] = coeffs[k] + c if k in coeffs else c
    return TruncatedSeries(coeffs, order, 8, LaurentPoly.constant(1, U))


def theta11_product_form(order) -> TruncatedSeries:
    """``q^(1/8) (u - u^-1) prod_l (1 - t^-1 q^l)(1 - q^l)(1 - t q^l)`` with ``t = u^2``."""
    order = Fraction(order)
    one = LaurentPoly.constant(1, U)
    inner_order = order - Fraction(1, 8)
    u = lambda e: LaurentPoly.monomial(e, 1, U)  # noqa: E731
    factors = []
    for l in range(1, int(inner_order) + 1):
        for c in (-u(-2), -one, -u(2)):
            factors.append(TruncatedSeries({0: one, l: c}, inner_order, 1, one))
    prod = product(factors, inner_order, 1, one)
    return prod.shift(Fraction(1, 8)).scale(u(1) - u(-1))


# -- the rank-2 projective plane ---------------------------------------


def _rf_one(var="t", t_power=1):
    return RationalFunction.constant(1, var, t_power)


def yoshioka_numerator(order, var="t", t_power=1) -> TruncatedSeries:
    """``sum_b t^(-2b) q^(b^2) / (1 - t^4 q^(2b-1))`` with every factor expanded in positive q.

    For ``b <= 0`` the factor is rewritten as
    ``-t^-4 q^(1-2b) / (1 - t^-4 q^(1-2b))``.
    """
    order = Fraction(order)
    one = _rf_one(var, t_power)
    tp = lambda e: RationalFunction.from_laurent(  # noqa: E731
        LaurentPoly.monomial(e * t_power, 1, (var,)), t_power)
    coeffs: dict[int, RationalFunction] = {}

    def add(k, c):
        coeffs[k] = coeffs[k] + c if k in coeffs else c

    b = 1
    while b * b < order:
        k = 0
        while b * b + k * (2 * b - 1) < order:
            add(b * b + k * (2 * b - 1), tp(-2 * b + 4 * k))
            k += 1
        b += 1
    b = 0
    while (1 - b) ** 2 < order:
        k = 1
        while b * b + k * (1 - 2 * b) < order:
            add(b * b + k * (1 - 2 * b), -tp(-2 * b - 4 * k))
            k += 1
        b -= 1
    return TruncatedSeries(coeffs, order, 1, one)


def _theta_t_sum(order, var="t", t_power=1) -> TruncatedSeries:
    """``sum_n t^(-2n) q^(n^2)``."""
    one = _rf_one(var, t_power)
    coeffs: dict[int, RationalFunction] = {}
    n = 0
    while n * n < order:
        for m in ({n, -n}):
            c = RationalFunction.from_laurent(LaurentPoly.monomial(-2 * m * t_power, 1, (var,)),
                                              t_power)
            coeffs[n * n] = coeffs[n * n] + c if n * n in coeffs else c
        n += 1
    return TruncatedSeries(coeffs, order, 1, one)


def _rf_product_cube(order, power: int) -> TruncatedSeries:
    """``prod_l ((1 - t^-2 q^l)(1 - q^l)(1 - t^2 q^l))^power`` over rational functions in t."""
    one = _rf_one()
    factors = []
    for l in range(1, math.ceil(order)):
        for e in (-2, 0, 2):
            c = RationalFunction.from_laurent(LaurentPoly.monomial(e, -1, T))
            factors.append(TruncatedSeries({0: one, l: c}, order, 1, one) ** power)
    return product(factors, order, 1, one)


def laurent_coefficients(series: TruncatedSeries, label: str) -> TruncatedSeries:
    """Convert rational-function coefficients to Laurent polynomials or raise."""
    bad = [e for e, c in series.items() if not c.is_laurent()]
    if bad:
        raise InternalConsistencyError(
            f"{label}: coefficients at q^{bad} are not Laurent polynomials"
        )
    var = series.one.var
    return series.map_coefficients(lambda c: c.to_laurent(), LaurentPoly.constant(1, (var,)))


def yoshioka_series_rational(order: int) -> TruncatedSeries:
    """Rank-2 projective-plane Gieseker series over rational functions in ``t``."""
    order = Fraction(order)
    work = order + 1
    num = yoshioka_numerator(work)
    den = _theta_t_sum(work)
    prod = _rf_product_cube(work, 2)
    t = RationalFunction.from_laurent(LaurentPoly.monomial(1, 1, T))
    prefactor = (t ** 4 * (t ** 2 - 1)).inverse()
    return (num / den / prod).scale(prefactor).truncate(order)


def yoshioka_series(order: int) -> TruncatedSeries:
    """Rank-2 projective-plane Gieseker series, Laurent coefficients in ``t``.

    Raises :class:`InternalConsistencyError` if some coefficient keeps a
    non-monomial denominator.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    return laurent_coefficients(yoshioka_series_rational(order), "yoshioka")


def _to_u(series: TruncatedSeries) -> TruncatedSeries:
    """Rational functions in ``t`` -> rational functions in ``u`` with ``t = u^2``, on D = 8."""
    one = _rf_one("u", 2)
    return series.map_coefficients(lambda c: c.substitute_power(2, "u"), one).rescale(8)


def _laurent_u_to_rf(series: TruncatedSeries) -> TruncatedSeries:
    return series.map_coefficients(lambda c: RationalFunction.from_laurent(c, 2), _rf_one("u", 2))


def yoshioka_theta_form(order) -> TruncatedSeries:
    """The theta-function expression of the same series, over ``u`` on ``q^(1/8)``."""
    order = Fraction(order)
    work = order + 2
    num = _to_u(yoshioka_numerator(work))
    u = lambda e: RationalFunction.from_laurent(LaurentPoly.monomial(e, 1, U), 2)  # noqa: E731
    th00 = _laurent_u_to_rf(theta(0, 0, work, tau_scale=2, z_scale=2))
    th11 = _laurent_u_to_rf(theta(1, 1, work, tau_scale=1, z_scale=2))
    top = num.shift(Fraction(1, 4)).scale(u(2) - u(-2))
    bottom = (th00 * th11 * th11).scale(u(10))
    return (top / bottom).truncate(order)


def uhlenbeck_series_p2(order: int) -> TruncatedSeries:
    """Intersection-cohomology series of rank-2 Uhlenbeck spaces of the projective plane.

    Obtained by dividing the Gieseker series by the Göttsche product.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    g = goettsche_product(P2, order)
    if g.coefficient(0) != 1:
        raise ContractError("Göttsche product must have constant term 1")
    return yoshioka_series(order) / g


def uhlenbeck_theta_form(order) -> TruncatedSeries:
    order = Fraction(order)
    work = order + 2
    num = _to_u(yoshioka_numerator(work))
    u = lambda e: RationalFunction.from_laurent(LaurentPoly.monomial(e, 1, U), 2)  # noqa: E731
    th00 = _laurent_u_to_rf(theta(0, 0, work, tau_scale=2, z_scale=2))
    th11 = _laurent_u_to_rf(theta(1, 1, work, tau_scale=1, z_scale=2))
    top = num.shift(Fraction(1, 8))
    bottom = (th00 * th11).scale(u(10))
    return (top / bottom).truncate(order)


def laurent_t_to_u(series: TruncatedSeries) -> TruncatedSeries:
    """Laurent series in ``t`` -> rational functions in ``u`` (``t = u^2``) on D = 8."""
    rf = series.map_coefficients(RationalFunction.from_laurent, _rf_one())
    return _to_u(rf)


def normalization_finding(series: TruncatedSeries, expected_dims=None):
    """For each coefficient, the monomial ``t^k`` making it palindromic in ``t``.

    Shifted Poincaré polynomials are invariant under ``t -> 1/t``; a nonzero
    ``k`` means the series carries an extra ``t``-power relative to that
    normalization.  Returns ``{exponent: k}`` for nonzero coefficients
    (``None`` when no shift makes the coefficient palindromic).
    """
    out = {}
    for e, c in series.items():
        lo, hi = c.degree_range()
        shift = -(lo + hi)
        if shift % 2:
            out[e] = None
            continue
        k = shift // 2
        shifted = c * LaurentPoly.monomial(k, 1, c.variables)
        mirrored = shifted.substitute([(-1,)], c.variables)
        out[e] = k if mirrored == shifted else None
    return out
