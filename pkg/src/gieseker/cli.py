"""Command-line entry point: ``gieseker <command> [options]``.

Exit status is 0 when every check passes, 1 when any fails and 2 on a usage
error (argparse's own convention).  Reports are JSON on stdout or ``--out``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fock, suites
from .partitions import ContractError
from .qseries import HodgeTable, InvalidSurfaceData, SurfaceBetti
from .report import Report, Timer


def _betti(text: str) -> SurfaceBetti:
    try:
        return SurfaceBetti.parse(text)
    except InvalidSurfaceData as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _hodge(text: str) -> HodgeTable:
    try:
        return HodgeTable.parse(text)
    except InvalidSurfaceData as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonnegative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("--no-timing", action="store_true",
                        help="report elapsed_ms as 0 so identical runs give identical output")
    common.add_argument("--summary", action="store_true", help="print one pass/fail line per check to stderr")

    p = argparse.ArgumentParser(prog="gieseker", description="Exact checks of generating functions, "
                                "oscillator relations, Schubert calculus and commuting nilpotent pairs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("series", parents=[common], help="q-series identities")
    s.add_argument("kind", choices=suites.SERIES_KINDS)
    s.add_argument("--order", type=_nonnegative, default=6, help="compare coefficients through q^ORDER (default 6)")
    s.add_argument("--betti", type=_betti, help="b0,b1,b2,b3,b4 (default 1,0,1,0,1)")
    s.add_argument("--hodge", type=_hodge, help="h00,h01,h02;h10,h11,h12;h20,h21,h22")
    s.add_argument("--series-out", help="also write the computed series as JSON here")

    f = sub.add_parser("fock", parents=[common], help="oscillator relations and Fock character")
    src = f.add_mutually_exclusive_group()
    src.add_argument("--betti", type=_betti, help="surface by Betti numbers (default 1,0,1,0,1)")
    src.add_argument("--surface", choices=sorted(fock.DATA), help="built-in surface datum")
    src.add_argument("--pairing-matrix", help='JSON file {"degrees": [...], "pairing": [[...]]}')
    f.add_argument("--max-energy", type=_positive, default=4)
    f.add_argument("--ambient-energy", type=_positive, help="energy bound of the space operators act on")
    f.add_argument("--rank", type=_positive, help="also check the rank-r normalization")
    f.add_argument("--recover-constants", type=_positive, metavar="N", help="recover c_1..c_N")
    f.add_argument("--character-order", type=_nonnegative, default=6, help="compare the character through q^N")

    sc = sub.add_parser("schubert", parents=[common], help="excess intersection on Grassmannians")
    sc.add_argument("--r", type=_positive)
    sc.add_argument("--n", type=_positive)
    sc.add_argument("--r-max", type=_positive, default=5)
    sc.add_argument("--pairing-max", type=_positive, default=3)

    q = sub.add_parser("quot", parents=[common], help="commuting nilpotent pairs and the companion path")
    q.add_argument("--instances", type=_positive, default=50)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--max-dim", type=_positive, default=12)
    q.add_argument("--samples", type=_positive, default=20, help="(alpha, beta) samples per instance")
    q.add_argument("--t-samples", type=_nonnegative, default=2, help="interior path points per instance")
    q.add_argument("--freeness", type=_nonnegative, default=20, help="instances given the stabilizer check")

    v = sub.add_parser("verify-all", parents=[common], help="every suite at acceptance scale")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--quick", action="store_true", help="smaller bounds, for smoke tests")
    return p


def _run(args, parser) -> tuple[Report, object]:
    series = None
    if args.command == "series":
        if args.kind == "hodge-3-8" and args.betti is not None:
            parser.error("hodge-3-8 takes --hodge, not --betti")
        rep, series = suites.series_suite(args.kind, betti=args.betti, hodge=args.hodge, through=args.order)
        return rep, series
    if args.command == "fock":
        try:
            if args.pairing_matrix:
                S = suites.load_pairing_file(args.pairing_matrix)
            elif args.surface:
                S = fock.datum_by_name(args.surface)
            else:
                S = suites.datum_for_betti(args.betti or SurfaceBetti(1, 0, 1, 0, 1))
        except (InvalidSurfaceData, OSError) as exc:
            parser.error(str(exc))
        if args.ambient_energy is not None and args.ambient_energy < args.max_energy:
            parser.error("--ambient-energy must be at least --max-energy")
        rep = suites.fock_suite(S, args.max_energy, rank=args.rank, ambient_energy=args.ambient_energy,
                                character_through=args.character_order, recover=args.recover_constants)
        return rep, None
    if args.command == "schubert":
        if (args.r is None) != (args.n is None):
            parser.error("--r and --n go together")
        if args.r is not None and args.n > args.r:
            parser.error(f"need n <= r, got r={args.r}, n={args.n}")
        return suites.schubert_suite(args.r, args.n, args.r_max, args.pairing_max), None
    if args.command == "quot":
        return suites.quot_suite(args.instances, args.seed, args.max_dim, args.samples,
                                 args.t_samples, args.freeness), None
    return suites.verify_all(args.seed, quick=args.quick), None


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    holder = Report("pending")
    with Timer(holder, enabled=not args.no_timing):
        try:
            rep, series = _run(args, parser)
        except ContractError as exc:
            parser.error(str(exc))
    rep.elapsed_ms = holder.elapsed_ms
    text = rep.dumps()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    if getattr(args, "series_out", None) and series is not None:
        with open(args.series_out, "w") as fh:
            json.dump(series.to_json(), fh, indent=2)
    if args.summary:
        for line in rep.summary_lines():
            print(line, file=sys.stderr)
    return rep.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
