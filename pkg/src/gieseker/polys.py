"""Dense-free multivariate polynomials as ``{exponent tuple: coefficient}`` dicts.

These are the brute-force oracles: monomial and Schur polynomials in finitely
many variables, and reduction of symmetric polynomials to elementary ones.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .rings import _clean

Poly = dict  # exponent tuple -> int | Fraction


def padd(a: Poly, b: Poly, scale=1) -> Poly:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + scale * c
        if v:
            out[e] = _clean(v) if isinstance(v, Fraction) else v
        else:
            out.pop(e, None)
    return out


def pmul(a: Poly, b: Poly, max_degree: int | None = None) -> Poly:
    out: Poly = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            if max_degree is not None and sum(e) > max_degree:
                continue
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def pscale(a: Poly, c) -> Poly:
    return {e: v * c for e, v in a.items()} if c else {}


def constant(c, nvars: int) -> Poly:
    return {(0,) * nvars: c} if c else {}


def variable(k: int, nvars: int) -> Poly:
    return {tuple(1 if j == k else 0 for j in range(nvars)): 1}


def monomial_symmetric(parts, nvars: int) -> Poly:
    """``m_lambda(x_1, ..., x_nvars)``; zero when lambda has more parts than variables."""
    parts = tuple(parts)
    if len(parts) > nvars:
        return {}
    padded = parts + (0,) * (nvars - len(parts))
    return {e: 1 for e in set(permutations(padded))}


def power_sum(i: int, nvars: int) -> Poly:
    return {tuple(i if j == k else 0 for j in range(nvars)): 1 for k in range(nvars)}


def elementary(k: int, nvars: int) -> Poly:
    return monomial_symmetric((1,) * k, nvars) if k <= nvars else {}


def _ssyt_count_fillings(shape, nvars):
    """Yield content vectors of semistandard tableaux of ``shape`` with entries < nvars."""
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    filling: dict = {}

    def rec(idx):
        if idx == len(cells):
            content = [0] * nvars
            for v in filling.values():
                content[v] += 1
            yield tuple(content)
            return
        r, c = cells[idx]
        lo = 0
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, nvars):
            filling[(r, c)] = v
            yield from rec(idx + 1)
        filling.pop((r, c), None)

    yield from rec(0)


def schur_polynomial(parts, nvars: int) -> Poly:
    """``s_lambda(x_1..x_nvars)`` as a sum over semistandard tableaux."""
    parts = tuple(parts)
    if len(parts) > nvars:
        return {}
    out: Poly = {}
    for content in _ssyt_count_fillings(parts, nvars):
        out[content] = out.get(content, 0) + 1
    return out


def transposition_violation(p: Poly, nvars: int):
    """First adjacent transposition ``(k, k+1)`` under which ``p`` is not invariant, or None."""
    for k in range(nvars - 1):
        for e, c in p.items():
            f = list(e)
            f[k], f[k + 1] = f[k + 1], f[k]
            if p.get(tuple(f), 0) != c:
                return (k, k + 1)
    return None


def _leading(p: Poly):
    return max(p)


def symmetric_to_elementary(p: Poly, nvars: int) -> dict[tuple[int, ...], object]:
    """Write a symmetric polynomial as ``sum c * prod_k e_k^(a_k)``.

    Returns ``{(a_1, ..., a_nvars): c}``.  Standard leading-term reduction in
    lex order.
    """
    es = [elementary(k, nvars) for k in range(1, nvars + 1)]
    p = dict(p)
    out: dict = {}
    while p:
        lead = _leading(p)
        c = p[lead]
        powers = tuple(lead[k] - (lead[k + 1] if k + 1 < nvars else 0) for k in range(nvars))
        if any(a < 0 for a in powers):
            raise ValueError("polynomial is not symmetric")
        term = constant(1, nvars)
        for ek, a in zip(es, powers):
            for _ in range(a):
                term = pmul(term, ek)
        p = padd(p, term, -c)
        out[powers] = out.get(powers, 0) + c
    return out


def two_set_elementary_reduction(p: Poly, na: int, nb: int):
    """Reduce a polynomial symmetric separately in ``a_1..a_na`` and ``b_1..b_nb``.

    Variables are ordered ``a`` first.  Returns ``{(powers_a, powers_b): c}``
    meaning ``c * prod e_k(a)^powers_a[k] * prod e_k(b)^powers_b[k]``.
    """
    n = na + nb
    ea = [{e + (0,) * nb: c for e, c in elementary(k, na).items()} for k in range(1, na + 1)]
    eb = [{(0,) * na + e: c for e, c in elementary(k, nb).items()} for k in range(1, nb + 1)]
    p = dict(p)
    out: dict = {}
    while p:
        lead = max(p)
        c = p[lead]
        la, lb = lead[:na], lead[na:]
        pa = tuple(la[k] - (la[k + 1] if k + 1 < na else 0) for k in range(na))
        pb = tuple(lb[k] - (lb[k + 1] if k + 1 < nb else 0) for k in range(nb))
        if any(x < 0 for x in pa + pb):
            raise ValueError("polynomial is not symmetric in each variable set")
        term = constant(1, n)
        for ek, a in zip(ea, pa):
            for _ in range(a):
                term = pmul(term, ek)
        for ek, a in zip(eb, pb):
            for _ in range(a):
                term = pmul(term, ek)
        p = padd(p, term, -c)
        out[(pa, pb)] = out.get((pa, pb), 0) + c
    return out
