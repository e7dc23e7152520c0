"""Verification suites behind the command-line interface.

Each suite returns a :class:`~gieseker.report.Report`.  Orders follow one
convention: ``through`` is the highest ``q``-power compared, so a series is
built with order ``through + 1``.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction

from . import fock, partitions, qseries, quotlab, schubert, symfunc
from . import polys
from .partitions import Partition, enumerate_partitions
from .qseries import HodgeTable, SurfaceBetti
from .report import Report
from .rings import LaurentPoly
from .series import TruncatedSeries


def _diff_witness(a: TruncatedSeries, b: TruncatedSeries, order) -> dict:
    diffs = a.differences(b, order)
    w = {"order": str(Fraction(order)), "mismatched_exponents": [str(e) for e in diffs]}
    if diffs:
        e = diffs[0]
        w["first_mismatch"] = {"exponent": str(e), "left": str(a.coefficient(e)), "right": str(b.coefficient(e))}
    return w


def _palindromic(c: LaurentPoly) -> bool:
    return c.substitute([(-1,)], c.variables) == c


# -- series -------------------------------------------------------------------------------


def _euler_product(chi: int, order: int) -> TruncatedSeries:
    out = TruncatedSeries.constant(1, order)
    for l in range(1, order):
        out = out * TruncatedSeries({0: 1, l: -1}, order) ** (-chi)
    return out


def sym_power_oracle(b: SurfaceBetti, order: int) -> TruncatedSeries:
    """Graded dimensions of ``Sym^m H*(S)`` (odd classes anticommute) by counting multisets."""
    degrees = [k for k in range(5) for _ in range(b.as_tuple()[k])]
    counts = {(0, 0): 1}
    for d in degrees:
        new = dict(counts)
        if d % 2:
            for (m, w), c in counts.items():
                if m + 1 < order:
                    new[(m + 1, w + d - 2)] = new.get((m + 1, w + d - 2), 0) + c
        else:
            for m in range(1, order):
                for (m0, w), c in list(new.items()):
                    if m0 == m - 1:
                        new[(m, w + d - 2)] = new.get((m, w + d - 2), 0) + c
        counts = new
    coeffs: dict = {}
    for (m, w), c in counts.items():
        coeffs.setdefault(m, {})[(w,)] = c
    one = LaurentPoly.constant(1)
    return TruncatedSeries({m: LaurentPoly(t) for m, t in coeffs.items()}, order, 1, one)


SERIES_KINDS = ("goettsche", "macdonald", "ratio-3-7", "hodge-3-8", "theta", "yoshioka", "uhlenbeck-p2")


def series_suite(kind: str, betti: SurfaceBetti | None = None, hodge: HodgeTable | None = None,
                 through: int = 6):
    """Run one series comparison; returns ``(report, series)``."""
    if kind not in SERIES_KINDS:
        raise ValueError(f"unknown series kind {kind!r}")
    b = betti or qseries.P2
    order = through + 1
    rep = Report(f"series:{kind}")
    series = None
    if kind == "goettsche":
        series = qseries.goettsche_product(b, order)
        rep.add("goettsche.constant_term", "empty product gives 1", series.coefficient(0) == 1)
        bad = [str(e) for e, c in series.items() if not _palindromic(c)]
        rep.add("goettsche.poincare_symmetry", "each coefficient is symmetric under t -> 1/t", not bad,
                asymmetric_exponents=bad, betti=list(b.as_tuple()))
        euler = qseries.specialize_t(series, -1)
        rep.add("goettsche.euler_specialization", "t = -1 gives prod (1 - q^l)^(-euler characteristic)",
                euler.agrees_with(_euler_product(b.euler, order)),
                **_diff_witness(euler, _euler_product(b.euler, order), order))
    elif kind == "macdonald":
        series = qseries.macdonald_sym_power(b, order)
        oracle = sym_power_oracle(b, order)
        rep.add("macdonald.constant_term", "Sym^0 is a point", series.coefficient(0) == 1)
        rep.add("macdonald.symmetric_powers", "coefficients are graded dimensions of symmetric powers",
                series.agrees_with(oracle), **_diff_witness(series, oracle, order))
    elif kind == "ratio-3-7":
        series = qseries.goettsche_product(b, order)
        strata = qseries.strata_sum(b, order)
        rep.add("ratio-3-7.strata_sum", "sum over strata of symmetric-power polynomials equals the Göttsche product",
                strata.agrees_with(series), betti=list(b.as_tuple()), **_diff_witness(strata, series, order))
    elif kind == "hodge-3-8":
        h = hodge or qseries.HODGE_P2
        hp = qseries.hodge_product(h, order)
        series = hp
        spec = qseries.specialize_xy(hp)
        g = qseries.goettsche_product(h.betti(), order)
        rep.add("hodge-3-8.specialization", "Hodge product at x = y = t equals the Göttsche product",
                spec.agrees_with(g), hodge=[list(r) for r in h.h], **_diff_witness(spec, g, order))
    elif kind == "theta":
        order = Fraction(through) + Fraction(1, 8)
        s = qseries.theta(1, 1, order)
        p = qseries.theta11_product_form(order)
        series = s
        rep.add("theta.product_formula", "theta_11 sum form equals its triple-product form",
                s.agrees_with(p), **_diff_witness(s, p, order))
        th00 = qseries.theta(0, 0, order)
        rep.add("theta.constant_term", "theta_00 starts with 1", th00.coefficient(0) == LaurentPoly.constant(1, ("u",)))
    elif kind == "yoshioka":
        rep, series = _yoshioka_checks(rep, order)
    elif kind == "uhlenbeck-p2":
        rep, series = _uhlenbeck_checks(rep, order)
    return rep, series


def _finding(series: TruncatedSeries) -> tuple[bool, dict]:
    shifts = qseries.normalization_finding(series)
    values = {k for k in shifts.values()}
    uniform = len(values) == 1 and None not in values
    w = {"per_exponent_shift": {str(e): k for e, k in shifts.items()}}
    if uniform:
        k = values.pop()
        w["finding"] = f"global t^{-k} factor" if k else "no global factor"
        w["t_exponent"] = -k
    return uniform, w


def _yoshioka_checks(rep: Report, order: int):
    try:
        y = qseries.yoshioka_series(order)
    except qseries.InternalConsistencyError as exc:
        rep.add("yoshioka.laurent_coefficients", "every q-coefficient is a Laurent polynomial in t", False,
                error=str(exc))
        return rep, None
    rep.add("yoshioka.laurent_coefficients", "every q-coefficient is a Laurent polynomial in t", True)
    theta_form = qseries.yoshioka_theta_form(order)
    lhs = qseries.laurent_t_to_u(y)
    rep.add("yoshioka.theta_form", "Gieseker series equals its theta-function expression",
            lhs.agrees_with(theta_form), **_diff_witness(lhs, theta_form, order))
    rep.add("yoshioka.empty_q0", "no sheaves with c2 = 0: coefficient of q^0 vanishes",
            not y.coefficient(0), value=str(y.coefficient(0)))
    uniform, w = _finding(y)
    rep.add("yoshioka.global_normalization", "coefficients differ from palindromic polynomials by one global t-power",
            uniform, **w)
    return rep, y


def _uhlenbeck_checks(rep: Report, order: int):
    u = qseries.uhlenbeck_series_p2(order)
    g = qseries.goettsche_product(qseries.P2, order)
    y = qseries.yoshioka_series(order)
    back = u * g
    rep.add("uhlenbeck-p2.ring_identity", "ratio times Göttsche product gives back the Gieseker series",
            back.agrees_with(y), **_diff_witness(back, y, order))
    theta_form = qseries.uhlenbeck_theta_form(order)
    lhs = qseries.laurent_t_to_u(u)
    rep.add("uhlenbeck-p2.theta_form", "Uhlenbeck series equals its theta-function expression",
            lhs.agrees_with(theta_form), **_diff_witness(lhs, theta_form, order))
    uniform, w = _finding(u)
    rep.add("uhlenbeck-p2.global_normalization", "coefficients differ from palindromic polynomials by one global t-power",
            uniform, **w)
    return rep, u


# -- partitions / strata -------------------------------------------------------------------------


def strata_suite(ranks=(1, 2, 3), n_max: int = 10) -> Report:
    rep = Report("strata")
    bad = []
    count = 0
    for r in ranks:
        for n in range(n_max + 1):
            for st in partitions.strata(r, n):
                count += 1
                if not st.semismall:
                    bad.append({"r": r, "n": n, "s": st.s, "mu": list(st.mu)})
    rep.add("strata.semismall", "every stratum has codimension twice its fiber dimension", not bad,
            strata_checked=count, failures=bad[:10])
    hc_bad = [
        (n, st.s, list(st.mu)) for n in range(n_max + 1) for st in partitions.strata(1, n)
        if st.codim != 2 * (st.s - st.mu.length)
    ]
    rep.add("strata.hilbert_chow", "rank one: codim = 2(s - m)", not hc_bad, failures=hc_bad[:10])
    quot_bad = [(r, n) for r in range(1, 6) for n in range(1, 11)
                if partitions.dim_punctual_quot(r, n) != partitions.dim_punctual_quot_by_fibration(r, n)
                or quotlab.parameter_count(r, n) != r * n - 1]
    rep.add("strata.punctual_quot_dimension", "punctual Quot scheme has dimension rn - 1 by two counts",
            not quot_bad, failures=quot_bad)
    return rep


# -- symmetric functions ---------------------------------------------------------------------------


def symfunc_suite(max_weight: int = 6, max_index: int = 4, chain: int = 7) -> Report:
    rep = Report("symfunc")
    bad = []
    cases = 0
    for w in range(max_weight + 1):
        for mu in enumerate_partitions(w):
            f = symfunc.SymFunc({mu: 1})
            for i in range(1, max_index + 1):
                nv = w + i
                cases += 1
                p = polys.pmul(polys.power_sum(i, nv), symfunc.to_polynomial(f, nv))
                if symfunc.from_polynomial(p, nv) != symfunc.mult_powersum(i, f):
                    bad.append({"mu": list(mu), "i": i})
    rep.add("symfunc.powersum_oracle", "p_i m_mu by the add-a-part rule matches polynomial multiplication",
            not bad, cases=cases, failures=bad[:10])
    comm_bad = []
    for w in range(6):
        for mu in enumerate_partitions(w):
            f = symfunc.SymFunc({mu: 1})
            for i in range(1, 5):
                for j in range(i + 1, 5):
                    if symfunc.mult_powersum(i, symfunc.mult_powersum(j, f)) != \
                            symfunc.mult_powersum(j, symfunc.mult_powersum(i, f)):
                        comm_bad.append({"mu": list(mu), "i": i, "j": j})
    rep.add("symfunc.operators_commute", "power-sum multiplications commute", not comm_bad, failures=comm_bad[:10])
    seq = symfunc.elementary_chain(chain)
    chain_bad = [n for n in range(chain + 1) if seq[n] != symfunc.SymFunc({Partition((1,) * n): 1})]
    rep.add("symfunc.elementary_chain", "exponential of signed power sums gives the elementary functions",
            not chain_bad, N=chain, failures=chain_bad)
    return rep


# -- Fock space --------------------------------------------------------------------------------------


def load_pairing_file(path: str) -> fock.SurfaceDatum:
    """Read ``{"degrees": [...], "pairing": [[...]], "name": optional}``; rationals may be strings."""
    with open(path) as fh:
        data = json.load(fh)
    try:
        degrees = tuple(int(d) for d in data["degrees"])
        pairing = tuple(tuple(Fraction(x) for x in row) for row in data["pairing"])
    except (KeyError, TypeError, ValueError) as exc:
        raise qseries.InvalidSurfaceData(f"malformed pairing file: {exc}") from exc
    return fock.SurfaceDatum(data.get("name", "custom"), degrees, pairing)


def datum_for_betti(b: SurfaceBetti) -> fock.SurfaceDatum:
    for make in (fock.p2_datum, fock.k3_datum, fock.abelian_datum):
        S = make()
        if S.betti() == b:
            return S
    return fock.standard_datum(b)


def fock_suite(S: fock.SurfaceDatum, max_energy: int = 4, rank: int | None = None,
               ambient_energy: int | None = None, character_through: int = 6,
               recover: int | None = None) -> Report:
    rep = Report(f"fock:{S.name}")
    rel = fock.check_relations(S, max_energy, ambient_energy=ambient_energy)
    rep.add(f"fock.{S.name}.relations", "graded commutators of oscillators are <a,b> i delta Id",
            rel.passed, **{k: v for k, v in rel.to_json().items() if k != "pass"})
    if rank is not None:
        relr = fock.check_relations(S, max_energy, rank=rank, ambient_energy=ambient_energy)
        rep.add(f"fock.{S.name}.relations_rank{rank}", "rank-normalized creation operators satisfy the scaled relations",
                relr.passed, **{k: v for k, v in relr.to_json().items() if k != "pass"})
    order = character_through + 1
    ch = fock.character(S, order)
    g = qseries.goettsche_product(S.betti(), order)
    rep.add(f"fock.{S.name}.character", "Fock space character equals the Göttsche product",
            ch.agrees_with(g), **_diff_witness(ch, g, order))
    if recover is not None:
        r = rank or 1
        rep.extend(constants_report(r, recover))
    return rep


def constants_report(r: int, N: int, pairings=(1, 2, 3)) -> Report:
    rep = Report("constants")
    want = [fock.expected_constant(r, n) for n in range(1, N + 1)]
    results = {k: fock.recover_constants(r, k, N) for k in pairings}
    ok = all(v == want for v in results.values())
    rep.add(f"constants.r{r}", "c_n = (-1)^(rn-1) r n independent of the pairing", ok,
            c_n=[str(c) for c in results[pairings[0]]])
    return rep


def rank_example_check(rep: Report):
    S = fock.p2_datum()
    val = fock.expected_bracket(S, (1, 0), (-1, 2), rank=2)
    # direct evaluation on the vacuum: P_1 P_{-1} |0> with creation scaled by the rank factor
    v = fock.create(S, 1, 2, fock.vacuum()).scaled(fock.rank_factor(2, 1))
    got = fock.annihilate(S, 1, 0, v).get(fock.VACUUM, 0)
    rep.add("fock.rank2_example", "[P_1, P_-1] = -2 Id in rank two for <1, pt> = 1",
            val == -2 and got == -2, expected=-2, got=str(got))


# -- Schubert calculus ---------------------------------------------------------------------------------


def schubert_suite(r: int | None = None, n: int | None = None, r_max: int = 5, pairing_max: int = 3) -> Report:
    rep = Report("schubert")
    if r is not None and n is not None:
        cells = [(r, n)]
        boxes = [(r, n)]
        series_r = [r]
    else:
        cells = [(rr, nn) for rr in range(1, r_max + 1) for nn in range(1, rr + 1)]
        boxes = [(rr, nn) for rr in range(1, r_max + 1) for nn in range(0, rr + 1)]
        series_r = list(range(1, r_max + 1))
    lr_bad, cases = [], 0
    for rr, nn in boxes:
        B = partitions.partitions_in_box(nn, rr - nn)
        for lam in B:
            for mu in B:
                a, b = schubert.BoxClass.schur(rr, nn, lam), schubert.BoxClass.schur(rr, nn, mu)
                cases += 1
                if schubert.schur_mult(a, b) != schubert.schur_mult_oracle(a, b):
                    lr_bad.append({"r": rr, "n": nn, "lambda": list(lam), "mu": list(mu)})
    rep.add("schubert.lr_oracle", "Littlewood-Richardson products match Schur polynomial multiplication",
            not lr_bad, cases=cases, failures=lr_bad[:10])
    ex_bad, int_bad, values = [], [], {}
    for rr, nn in cells:
        V = schubert.excess_bundle(rr, nn)
        if V.total != schubert.excess_target(rr, nn).total:
            ex_bad.append([rr, nn])
        got = schubert.integrate(V.top())
        values[f"{rr},{nn}"] = got
        if got != schubert.expected_excess_integral(rr, nn):
            int_bad.append({"r": rr, "n": nn, "got": got, "expected": schubert.expected_excess_integral(rr, nn)})
    rep.add("schubert.excess_bundle", "excess bundle Chern class equals c(Q* (x) S)", not ex_bad, failures=ex_bad)
    rep.add("schubert.excess_integral", "top Chern class of the excess bundle integrates to (-1)^((r-1)n) C(r,n)",
            not int_bad, values=values, failures=int_bad)
    ser_bad = []
    for rr in series_r:
        for k in range(1, pairing_max + 1):
            s = schubert.intersection_series(rr, k)
            if s != schubert.binomial_series(rr, k, s.order):
                ser_bad.append({"r": rr, "pairing": k, "series": str(s)})
    rep.add("schubert.intersection_series", "intersection series equals (1 - (-1)^r z^2)^(r pairing)",
            not ser_bad, failures=ser_bad)
    const_bad = []
    for rr in series_r:
        s = schubert.intersection_series(rr, 1, order=2 * 8 + 1)
        got = fock.recover_constants(rr, 1, 8, series=s)
        if got != [fock.expected_constant(rr, n) for n in range(1, 9)]:
            const_bad.append({"r": rr, "c_n": [str(c) for c in got]})
    rep.add("schubert.constants_from_geometry", "log of the geometric intersection series gives c_n = (-1)^(rn-1) r n",
            not const_bad, failures=const_bad)
    return rep


# -- quotlab ----------------------------------------------------------------------------------------------


def quot_suite(instances: int = 200, seed: int = 0, max_dim: int = 12, samples: int = 20,
               t_samples: int = 2, freeness_count: int = 20) -> Report:
    rep = Report("quot", seed=seed)
    keys = {
        "adapted_basis": ("quot.adapted_basis", "adapted basis is a basis with properties (a) and (b)",
                          ("adapted_basis", "property_a", "property_b")),
        "companion_i": ("quot.companion_commutes", "companion B2' commutes with B1", ("companion_i",)),
        "companion_ii": ("quot.companion_pencil_nilpotent", "every sampled a B2 + b B2' is nilpotent", ("companion_ii",)),
        "companion_iii": ("quot.companion_cyclic", "e_11 is cyclic for (B1, B2')", ("companion_iii",)),
        "path_start": ("quot.path_start", "the deformation starts at the input point", ("path_start",)),
        "path_end": ("quot.path_end_cyclic", "the deformation ends over the one-vector-cyclic locus", ("path_end_cyclic",)),
        "gl": ("quot.gl_invariance", "cyclicity is invariant under simultaneous conjugation", ("gl_invariance",)),
    }
    failures = {k: [] for k in keys}
    path_fail, generic_misses, free_fail = [], [], []
    dims = []
    rng = random.Random(seed)
    seeds = [rng.randrange(1 << 30) for _ in range(instances)]
    for idx, s in enumerate(seeds):
        rec = quotlab.verify_instance(s, max_dim, samples, t_samples, gl_check=True, freeness=idx < freeness_count)
        dims.append(rec["dim"])
        for k, (_, _, fields) in keys.items():
            if not all(rec.get(f, True) for f in fields):
                failures[k].append(s)
        if rec["path_failures"]:
            path_fail.append({"seed": s, "t": rec["path_failures"]})
        if rec["generic_cyclicity_misses"]:
            generic_misses.append({"seed": s, "t": rec["generic_cyclicity_misses"]})
        if idx < freeness_count and not rec["stabilizer_trivial"]:
            free_fail.append(s)
    for k, (cid, anchor, _) in keys.items():
        rep.add(cid, anchor, not failures[k], instances=instances, failing_seeds=failures[k][:10])
    rep.add("quot.path_commuting_nilpotent", "every sampled point of the path is a commuting nilpotent pair",
            not path_fail, t_samples=t_samples, failures=path_fail[:10], generic_cyclicity_misses=generic_misses)
    rep.add("quot.freeness", "the stabilizer of a cyclic tuple is trivial", not free_fail,
            instances=min(freeness_count, instances), failing_seeds=free_fail)
    rep.add("quot.instances", "instances have dimension at most max_dim", max(dims, default=0) <= max_dim,
            max_dim_seen=max(dims, default=0), dims_histogram={str(d): dims.count(d) for d in sorted(set(dims))})
    return rep


# -- everything ---------------------------------------------------------------------------------------------


def verify_all(seed: int = 0, quick: bool = False) -> Report:
    """Every suite at acceptance scale (``quick`` shrinks the slow ones for smoke tests)."""
    rep = Report("verify-all", seed=seed)
    for b in (qseries.P2, qseries.K3, qseries.ABELIAN):
        sub, _ = series_suite("ratio-3-7", betti=b, through=4 if quick else 8)
        rep.extend(sub, prefix="b" + "-".join(map(str, b.as_tuple())) + ".")
    for name, h in (("P2", qseries.HODGE_P2), ("K3", qseries.HODGE_K3)):
        sub, _ = series_suite("hodge-3-8", hodge=h, through=4 if quick else 6)
        rep.extend(sub, prefix=f"{name}.")
    for kind, through in (("theta", 4), ("yoshioka", 4), ("uhlenbeck-p2", 3), ("goettsche", 6), ("macdonald", 6)):
        sub, _ = series_suite(kind, through=2 if quick else through)
        rep.extend(sub)
    rep.extend(strata_suite())
    rep.extend(symfunc_suite(max_weight=4 if quick else 6))
    ambient = {"P2": 12, "K3": 5, "abelian": 6}
    for make in (fock.p2_datum, fock.k3_datum, fock.abelian_datum):
        S = make()
        E = 2 if quick else 4
        amb = E if quick else ambient[S.name]
        rep.extend(fock_suite(S, max_energy=E, ambient_energy=amb, rank=2 if S.name == "P2" else None,
                              character_through=6))
    for r in range(1, 6):
        rep.extend(constants_report(r, 8))
    rank_example_check(rep)
    rep.extend(schubert_suite(r_max=4 if quick else 5))
    rep.extend(quot_suite(instances=10 if quick else 200, seed=seed, freeness_count=3 if quick else 20))
    return rep
