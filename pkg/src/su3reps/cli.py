"""Command-line front end.

Usage::

    su3reps xi --dmax 110
    su3reps mod --dmax 110 --residue 1 --verify
    su3reps nss --d 100 --format json
    su3reps partitions --d 6
    su3reps fit-growth --dmax 110 --residue 1
    su3reps fit-ibeta --d 100 --out fit100.json

Exit status is 0 when every requested computation and verification
succeeded, 1 on a failed verification, non-converged fit or I/O error, and
2 on bad arguments.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import tables
from .cache import ResultCache
from .fitstats import FitError, SeriesPoints, fit_growth, fit_invbeta
from .irreps import build_census
from .modcount import ModuleTable, census_parts, component_counts, mod_singlet, module_table
from .partitions import PartSet, enumerate_restricted

log = logging.getLogger("su3reps")

DEFAULT_DMAX = 110


class VerificationError(Exception):
    pass


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


# -- cached module table ----------------------------------------------------


def _load_table(D_max: int, census, cache: ResultCache) -> ModuleTable:
    """Module table up to ``D_max``, served from the cache when every entry is intact."""
    comps, singles = [(1,)], [0]
    for D in range(1, D_max + 1):
        entry = cache.get(f"module/D={D}")
        try:
            row = tuple(int(v) for v in entry["components"])
            single = int(entry["singlet"])
            if len(row) != D + 1 or not 0 <= single <= sum(row):
                raise ValueError
        except (TypeError, KeyError, ValueError):
            break
        comps.append(row)
        singles.append(single)
    else:
        return ModuleTable(D_max, tuple(comps), tuple(singles))

    table = module_table(D_max, census)
    for D in range(len(comps), D_max + 1):
        cache.put(
            f"module/D={D}",
            {
                "components": [str(c) for c in table.components[D]],
                "singlet": str(table.singlet(D)),
            },
        )
    return table


def _verify_table(table: ModuleTable, census, Ds) -> None:
    """Recompute each dimension by partition enumeration and compare exactly."""
    parts = census_parts(census)
    no_one = parts.without(1)
    for D in Ds:
        by_n = component_counts(D, census, parts)
        fast = {N: c for N, c in enumerate(table.components[D]) if c}
        if by_n != fast:
            raise VerificationError(f"component counts differ at D={D}")
        direct = mod_singlet(D, census, "enumerate", check=False)
        complement = sum(by_n.values()) - sum(component_counts(D, census, no_one).values())
        if not direct == complement == table.singlet(D):
            raise VerificationError(f"singlet counts differ at D={D}")
        log.debug("D=%d verified", D)


# -- commands ---------------------------------------------------------------


def cmd_xi(args, cache) -> str:
    census = build_census(args.dmax, check=args.verify)
    if args.verify and census.discrepancies:
        raise VerificationError(
            f"closed form disagrees with diagram sweep at d in {list(census.discrepancies)}"
        )
    rows = tables.census_rows(census)
    return _emit(args, tables.CENSUS_HEADER, rows)


def cmd_mod(args, cache) -> str:
    census = build_census(args.dmax, check=args.verify)
    table = _load_table(args.dmax, census, cache)
    Ds = [D for D in range(1, args.dmax + 1) if args.residue is None or D % 3 == args.residue]
    if args.verify:
        _verify_table(table, census, Ds)
    return _emit(args, tables.MOD_HEADER, tables.mod_rows(table, Ds))


def cmd_nss(args, cache) -> str:
    census = build_census(args.d, check=args.verify)
    table = _load_table(args.d, census, cache)
    if args.verify:
        _verify_table(table, census, [args.d])
    dist = table.distribution(args.d)
    if sum(dist.weights.values()) != 1:
        raise VerificationError("weights do not sum to 1")
    return _emit(args, tables.NSS_HEADER, tables.nss_rows(dist))


def cmd_partitions(args, cache) -> str:
    if args.all_parts:
        parts = PartSet.positive_integers()
    else:
        parts = PartSet(build_census(max(args.d, 1), check=args.verify).support)
    stream = enumerate_restricted(args.d, parts)
    if args.format == "json":
        return json.dumps([list(p) for p in stream]) + "\n"
    return tables.partitions_text(stream)


def _read_points(path: str) -> SeriesPoints:
    with open(path, encoding="utf-8") as fh:
        header, rows = tables.read_csv(fh.read())
    try:
        ix, iy = header.index("x"), header.index("y")
    except ValueError:
        ix, iy = 0, 1
    pts = []
    for row in rows:
        y = row[iy]
        pts.append((int(row[ix]), int(y) if y.lstrip("-").isdigit() else float(y)))
    return SeriesPoints(tuple(pts))


def cmd_fit_growth(args, cache) -> str:
    if args.input:
        series = [_read_points(args.input)]
    else:
        census = build_census(args.dmax, check=args.verify)
        table = _load_table(args.dmax, census, cache)
        residues = [args.residue] if args.residue is not None else [0, 1, 2]
        series = [
            SeriesPoints(
                tuple((D, table.total(D)) for D in range(1, args.dmax + 1) if D % 3 == r), r
            )
            for r in residues
        ]
    reports, failed = [], False
    for pts in series:
        try:
            reports.append(fit_growth(pts).to_report())
        except FitError as err:
            reports.append(err.best.to_report())
            failed = True
    out = reports[0] if len(reports) == 1 else reports
    text = json.dumps(out, indent=2) + "\n"
    if failed:
        raise _FitFailed(text)
    return text


def cmd_fit_ibeta(args, cache) -> str:
    census = build_census(args.d, check=args.verify)
    table = _load_table(args.d, census, cache)
    dist = table.distribution(args.d)
    try:
        report = fit_invbeta(dist).to_report()
    except FitError as err:
        raise _FitFailed(json.dumps(err.best.to_report(), indent=2) + "\n")
    return json.dumps(report, indent=2) + "\n"


class _FitFailed(Exception):
    """Carries the report text of a fit that did not converge."""


def _emit(args, header, rows) -> str:
    if args.format == "json":
        return tables.to_json(header, rows)
    return tables.to_csv(header, rows)


COMMANDS = {
    "xi": cmd_xi,
    "mod": cmd_mod,
    "nss": cmd_nss,
    "partitions": cmd_partitions,
    "fit-growth": cmd_fit_growth,
    "fit-ibeta": cmd_fit_ibeta,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), help="default: csv, json for fits")
    common.add_argument("--cache", metavar="PATH", help="append-only result cache file")
    common.add_argument("--verify", action="store_true", help="run independent cross-checks")
    common.add_argument("--out", metavar="PATH", help="output file (default: stdout)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(
        prog="su3reps",
        description="Exact counts of su(3) representations and their singlet / noiseless-subsystem statistics.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("xi", parents=[common], help="irrep counts per dimension")
    s.add_argument("--dmax", type=_positive, default=DEFAULT_DMAX)

    s = sub.add_parser("mod", parents=[common], help="module totals and singlet fractions")
    s.add_argument("--dmax", type=_positive, default=DEFAULT_DMAX)
    s.add_argument("--residue", type=int, choices=(0, 1, 2))

    s = sub.add_parser("nss", parents=[common], help="noiseless-subsystem size distribution")
    s.add_argument("--d", type=_positive, required=True)

    s = sub.add_parser("partitions", parents=[common], help="list partitions into irrep dimensions")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--all-parts", action="store_true", help="allow every positive part")

    s = sub.add_parser("fit-growth", parents=[common], help="fit (a/n) exp(b n^c) to module totals")
    s.add_argument("--dmax", type=_positive, default=DEFAULT_DMAX)
    s.add_argument("--residue", type=int, choices=(0, 1, 2),
                   help="residue class of n mod 3 (default: fit all three)")
    s.add_argument("--input", metavar="CSV", help="fit points from a CSV with x,y columns instead")

    s = sub.add_parser("fit-ibeta", parents=[common], help="fit an inverted beta density to f_d(N)")
    s.add_argument("--d", type=_positive, default=100)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if args.command.startswith("fit-"):
        if args.format == "csv":
            parser.error("fit reports are JSON only")
        args.format = "json"
    elif args.format is None:
        args.format = "csv"
    if args.command == "partitions" and args.d < 0:
        parser.error("--d must be nonnegative")

    status = 0
    try:
        cache = ResultCache(args.cache)
        try:
            text = COMMANDS[args.command](args, cache)
        except _FitFailed as failed:
            text = failed.args[0]
            log.error("fit did not converge; best iterate reported")
            status = 1
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except VerificationError as err:
        log.error("verification failed: %s", err)
        return 1
    except OSError as err:
        log.error("%s", err)
        return 1
    return status


if __name__ == "__main__":
    sys.exit(main())
