"""Exact coefficient rings for q-series.

Two rings are provided:

* :class:`LaurentPoly` -- Laurent polynomials with rational coefficients in
  one or more named variables (``t`` or ``x, y``).
* :class:`RationalFunction` -- reduced quotients of univariate polynomials
  with rational coefficients, needed whenever a denominator such as
  ``t^2 - 1`` appears.

Both interoperate with ``int`` and ``Fraction`` scalars.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) or isinstance(x, Rational)


def _fmt_scalar(c) -> str:
    c = _clean(Fraction(c))
    return str(c)


class LaurentPoly:
    """Sparse Laurent polynomial ``sum c_e * vars^e`` with exact coefficients."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, terms=None, variables=("t",)):
        self.variables = tuple(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps) if not isinstance(exps, int) else (exps,)
            if len(exps) != len(self.variables):
                raise ValueError(f"exponent {exps} does not match variables {self.variables}")
            c = _clean(Fraction(c)) if not isinstance(c, int) else c
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, exps, coeff=1, variables=("t",)):
        exps = (exps,) if isinstance(exps, int) else tuple(exps)
        return cls({exps: coeff}, variables)

    @classmethod
    def constant(cls, c, variables=("t",)):
        return cls({(0,) * len(variables): c}, variables)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch {self.variables} vs {other.variables}")
            return other
        if _is_scalar(other):
            return LaurentPoly.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return LaurentPoly._raw(terms, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()}, self.variables)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            if not other:
                return LaurentPoly._raw({}, self.variables)
            return LaurentPoly._raw(
                {e: _clean(c * other) for e, c in self.terms.items()}, self.variables
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                else:
                    terms.pop(e, None)
        return LaurentPoly._raw({e: _clean(c) for e, c in terms.items()}, self.variables)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * (Fraction(1) / Fraction(other))
        other = self._coerce(other)
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = LaurentPoly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    @classmethod
    def _raw(cls, terms, variables):
        obj = cls.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        obj._hash = None
        return obj

    def __eq__(self, other):
        if _is_scalar(other):
            other = LaurentPoly.constant(other, self.variables)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inverse(self) -> "LaurentPoly":
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self} is not a unit in the Laurent ring")
        (e, c), = self.terms.items()
        return LaurentPoly._raw({tuple(-a for a in e): _clean(Fraction(1) / Fraction(c))}, self.variables)

    def coefficient(self, exps):
        exps = (exps,) if isinstance(exps, int) else tuple(exps)
        return self.terms.get(exps, 0)

    def degree_range(self, var: int = 0) -> tuple[int, int]:
        degs = [e[var] for e in self.terms]
        return (min(degs), max(degs)) if degs else (0, 0)

    def substitute(self, images, variables) -> "LaurentPoly":
        """Monomial substitution: variable ``k`` maps to the monomial ``images[k]``.

        ``images[k]`` is an exponent tuple over the new ``variables``.
        """
        out: dict = {}
        for e, c in self.terms.items():
            new = tuple(sum(a * img[j] for a, img in zip(e, images)) for j in range(len(variables)))
            out[new] = out.get(new, 0) + c
        return LaurentPoly(out, variables)

    def evaluate(self, values) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for a, v in zip(e, values):
                term *= Fraction(v) ** a
            total += term
        return _clean(total)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = "*".join(
                (v if a == 1 else f"{v}^{a}") for v, a in zip(self.variables, e) if a
            )
            if not mono:
                pieces.append(_fmt_scalar(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{_fmt_scalar(c)}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")


# --- univariate polynomials over Q as coefficient tuples, low degree first ---


def _ptrim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(_clean(c) for c in p)


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


def _pscale(a, c):
    return _ptrim([x * c for x in a])


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] -= c * y
        a.pop()
        while a and not a[-1]:
            a.pop()
    return _ptrim(q), _ptrim(a)


def _pmonic(a):
    return _pscale(a, Fraction(1) / Fraction(a[-1]))


def _pgcd(a, b):
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _pmonic(a) if a else ()


class RationalFunction:
    """Reduced fraction ``num/den`` of univariate rational polynomials.

    Invariants: ``gcd(num, den) == 1`` and ``den`` is monic.  ``var`` names
    the indeterminate; ``t_power`` records the declared substitution
    ``t = var ** t_power`` (1 when ``var`` is ``t`` itself).
    """

    __slots__ = ("num", "den", "var", "t_power")

    def __init__(self, num, den=(1,), var="t", t_power=1, _reduced=False):
        num, den = _ptrim(num), _ptrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if not num:
                den = (1,)
            else:
                g = _pgcd(num, den)
                if len(g) > 1:
                    num = _pdivmod(num, g)[0]
                    den = _pdivmod(den, g)[0]
                lead = Fraction(den[-1])
                if lead != 1:
                    num, den = _pscale(num, 1 / lead), _pscale(den, 1 / lead)
        self.num, self.den, self.var, self.t_power = num, den, var, t_power

    @classmethod
    def from_laurent(cls, f: LaurentPoly, t_power=1):
        if len(f.variables) != 1:
            raise ValueError("only univariate Laurent polynomials convert")
        if not f.terms:
            return cls((), (1,), f.variables[0], t_power)
        lo = min(e[0] for e in f.terms)
        shift = -lo if lo < 0 else 0
        hi = max(e[0] for e in f.terms) + shift
        num = [0] * (hi + 1)
        for (e,), c in f.terms.items():
            num[e + shift] = c
        den = [0] * shift + [1]
        return cls(num, den, f.variables[0], t_power)

    @classmethod
    def constant(cls, c, var="t", t_power=1):
        return cls((c,), (1,), var, t_power, _reduced=True)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if (other.var, other.t_power) != (self.var, self.t_power):
                raise ValueError("rational functions in different variables")
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction.from_laurent(other, self.t_power)
        if _is_scalar(other):
            return RationalFunction.constant(other, self.var, self.t_power)
        return NotImplemented

    def _make(self, num, den):
        return RationalFunction(num, den, self.var, self.t_power)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return self._make(_padd(self.num, other.num), self.den)
        return self._make(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(_pneg(self.num), self.den, self.var, self.t_power, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return RationalFunction(_pscale(self.num, other), self.den, self.var, self.t_power,
                                    _reduced=True) if other else self._make((), (1,))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._make(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return self._make(self.den, self.num)

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * (Fraction(1) / Fraction(other))
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RationalFunction.constant(1, self.var, self.t_power)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return (self.num, self.den, self.var, self.t_power) == (
            other.num, other.den, other.var, other.t_power)

    def __hash__(self):
        return hash((self.num, self.den, self.var, self.t_power))

    def __bool__(self):
        return bool(self.num)

    def is_laurent(self) -> bool:
        """True when the reduced denominator is a monomial ``var^k``."""
        return all(not c for c in self.den[:-1])

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        shift = len(self.den) - 1
        return LaurentPoly({(i - shift,): c for i, c in enumerate(self.num) if c}, (self.var,))

    def substitute_power(self, k: int, var: str) -> "RationalFunction":
        """Substitute ``self.var -> var ** k``; coprimality is preserved."""
        def spread(p):
            out = [0] * ((len(p) - 1) * k + 1) if p else []
            for i, c in enumerate(p):
                out[i * k] = c
            return out
        return RationalFunction(spread(self.num), spread(self.den), var, self.t_power * k,
                                _reduced=True)

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        num = LaurentPoly({(i,): c for i, c in enumerate(self.num) if c}, (self.var,))
        if self.den == (1,):
            return str(num)
        den = LaurentPoly({(i,): c for i, c in enumerate(self.den) if c}, (self.var,))
        return f"({num})/({den})"


def t_poly(terms: dict[int, object], var: str = "t") -> LaurentPoly:
    """Convenience constructor: ``t_poly({-2: 1, 0: 1, 2: 1})``."""
    return LaurentPoly({(e,): c for e, c in terms.items()}, (var,))
