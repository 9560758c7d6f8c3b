"""Command-line interface.

Subcommands: census, verify, csp, foata, equidist, cipher, ufr, unimodal,
phi.  Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.
JSON output is schema-versioned and deterministic (sorted keys).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import cipher as cipher_mod
from . import csp as csp_mod
from .foata import equidist_check as _equidist_check
from .foata import foata as _foata
from .foata import foata_trace as _foata_trace
from . import genfunc
from .cache import ResultsCache
from .core import format_word, parse_word
from .enumeration import BRUTE_CEILING, FIBER_CEILING, CensusRow, census
from .verify import SUITES

USAGE_ERROR = 2


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _guard(n: int, ceiling: int, force: bool, what: str) -> None:
    if n > ceiling and not force:
        raise ValueError(
            f"{what} at n={n} exceeds the default ceiling {ceiling};"
            " pass --force to run anyway"
        )


def cmd_census(args: argparse.Namespace) -> int:
    method = args.method
    if method == "auto" and args.jobs == 1:
        ceiling = FIBER_CEILING
    else:
        ceiling = BRUTE_CEILING if method == "brute" else FIBER_CEILING
    _guard(args.n, ceiling, args.force, "census")
    row: CensusRow | None = None
    cache = ResultsCache() if args.cache else None
    if cache is not None:
        hit = cache.get("census", args.n)
        if hit is not None:
            row = CensusRow(n=args.n, counts_by_maxdisp=tuple(hit))
    if row is None:
        row = census(args.n, method=method, jobs=args.jobs)
        if cache is not None:
            cache.put("census", args.n, None, list(row.counts_by_maxdisp))
    if args.format == "json":
        _emit_json(
            {"schema": 1, "n": row.n, "counts_by_maxdisp": list(row.counts_by_maxdisp)}
        )
    else:
        print("\t".join([str(row.n), *map(str, row.counts_by_maxdisp)]))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    suite = SUITES[args.suite]
    report = suite(args.n)
    if args.format == "json":
        _emit_json(report.to_json())
    else:
        for check in report.checks:
            status = "PASS" if check.passed else "FAIL"
            line = f"{check.check_id}\t{status}"
            if not check.passed and check.witness is not None:
                line += f"\twitness={check.witness}"
            print(line)
        print(
            f"# suite={report.suite} n={args.n} "
            f"{'pass' if report.passed else 'FAIL'} in {report.wall_time:.2f}s"
        )
    return 0 if report.passed else 1


def cmd_csp(args: argparse.Namespace) -> int:
    _guard(args.n, BRUTE_CEILING, args.force, "cyclic sieving verification")
    reports = csp_mod.csp_verify(args.n)
    if args.k is not None:
        reports = [r for r in reports if r.k == args.k]
        if not reports:
            raise ValueError(f"no displacement class k={args.k} at n={args.n}")
    if args.report == "json":
        _emit_json({"schema": 1, "n": args.n, "orbits": [r.to_json() for r in reports]})
    else:
        print("k\tfixed_counts\tevaluations\tok")
        for r in reports:
            print(
                f"{r.k}\t{','.join(map(str, r.fixed_counts))}"
                f"\t{','.join(map(str, r.evaluations))}\t{r.ok}"
            )
    return 0 if all(r.ok for r in reports) else 1


def cmd_foata(args: argparse.Namespace) -> int:
    word = parse_word(args.word)
    if args.trace:
        trace = _foata_trace(word)
        for step in trace.steps:
            print(
                f"letter {step.letter}: separators after {list(step.separators)}, "
                f"segments {[format_word(s) for s in step.segments]} -> "
                f"{format_word(step.cycled)}"
            )
        print(format_word(trace.output))
    else:
        print(format_word(_foata(word)))
    return 0


def cmd_equidist(args: argparse.Namespace) -> int:
    _guard(args.n, BRUTE_CEILING, args.force, "equidistribution scan")
    report = _equidist_check(args.n, args.ell)
    if args.format == "json":
        _emit_json({"schema": 1, **report.to_json()})
    else:
        print(f"n={report.n} ell={report.ell} equal={report.equal}")
        if not report.equal:
            print(f"first differing statistic value: {report.witness}")
        inv_h = report.inv_histogram
        maj_h = report.maj_histogram
        print("value\tinv\tmaj")
        for k in sorted(set(inv_h) | set(maj_h)):
            print(f"{k}\t{inv_h.get(k, 0)}\t{maj_h.get(k, 0)}")
    return 0


def cmd_cipher(args: argparse.Namespace) -> int:
    if args.upf:
        word = parse_word(args.upf)
        encoded = cipher_mod.cipher_of(word)
        if args.format == "json":
            _emit_json(
                {
                    "schema": 1,
                    "upf": list(word),
                    "cipher": encoded.to_text(),
                    "code": list(encoded.code()),
                    "blocks": encoded.m,
                    "inversions": encoded.k,
                }
            )
        else:
            print(encoded.to_text())
    else:
        encoded = cipher_mod.Cipher.from_text(args.cipher)
        word = cipher_mod.upf_of_cipher(encoded)
        if args.format == "json":
            _emit_json({"schema": 1, "cipher": encoded.to_text(), "upf": list(word)})
        else:
            print(format_word(word))
    return 0


def cmd_ufr(args: argparse.Namespace) -> int:
    tables = cipher_mod.ufr_boolean_tables(args.n)
    keys = sorted(set(tables.ranking_counts) | set(tables.interval_counts))
    if args.format == "json":
        _emit_json(
            {
                "schema": 1,
                "n": args.n,
                "equal": tables.equal,
                "rows": [
                    {
                        "rank": r,
                        "inversions": k,
                        "rankings": tables.ranking_counts.get((r, k), 0),
                        "intervals": tables.interval_counts.get((r, k), 0),
                    }
                    for r, k in keys
                ],
            }
        )
    else:
        print("rank\tinversions\trankings\tintervals")
        for r, k in keys:
            print(
                f"{r}\t{k}\t{tables.ranking_counts.get((r, k), 0)}"
                f"\t{tables.interval_counts.get((r, k), 0)}"
            )
    return 0 if tables.equal else 1


def cmd_unimodal(args: argparse.Namespace) -> int:
    _guard(args.n, FIBER_CEILING, args.force, "unimodality report")
    rows = []
    for m in range(1, args.n + 1):
        row = census(m, jobs=args.jobs)
        rows.append(
            {
                "n": m,
                "unimodal": row.is_unimodal(),
                "peak": row.peak(),
                "counts_by_maxdisp": list(row.counts_by_maxdisp),
            }
        )
    if args.format == "json":
        _emit_json({"schema": 1, "rows": rows})
    else:
        print("n\tunimodal\tpeak\tcounts")
        for r in rows:
            counts = ",".join(map(str, r["counts_by_maxdisp"]))
            print(f"{r['n']}\t{r['unimodal']}\t{r['peak']}\t{counts}")
    return 0


def cmd_phi(args: argparse.Namespace) -> int:
    _guard(args.n, BRUTE_CEILING, args.force, "permutation-sum polynomial")
    poly = genfunc.phi(args.n, args.ell)
    if args.format == "json":
        _emit_json(
            {"schema": 1, "n": args.n, "ell": args.ell, "terms": poly.to_triples()}
        )
    else:
        print(str(poly))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parkstat",
        description="Exact combinatorics of parking functions with bounded displacement.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, fmt: bool = True) -> None:
        if fmt:
            p.add_argument("--format", choices=("tsv", "json"), default="tsv")
        p.add_argument("--force", action="store_true", help="override resource ceilings")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p_census = sub.add_parser("census", help="counts by exact maximum displacement")
    p_census.add_argument("--n", type=int, required=True)
    p_census.add_argument("--method", choices=("auto", "brute", "fibers"), default="auto")
    p_census.add_argument(
        "--cache", action="store_true", help="use the results cache (PARKSTAT_CACHE)"
    )
    add_common(p_census)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=sorted(SUITES))
    p_verify.add_argument("--n", type=int, required=True)
    add_common(p_verify)

    p_csp = sub.add_parser("csp", help="cyclic sieving reports")
    p_csp.add_argument("--n", type=int, required=True)
    p_csp.add_argument("--k", type=int, default=None, help="restrict to one displacement class")
    p_csp.add_argument("--report", choices=("tsv", "json"), default="tsv")
    p_csp.add_argument("--force", action="store_true")
    p_csp.add_argument("--jobs", type=int, default=1)

    p_foata = sub.add_parser("foata", help="apply the Foata transform")
    p_foata.add_argument("--word", required=True, help="comma-separated word")
    p_foata.add_argument("--trace", action="store_true")

    p_eq = sub.add_parser("equidist", help="inversion/major-index histograms")
    p_eq.add_argument("--n", type=int, required=True)
    p_eq.add_argument("--ell", type=int, required=True)
    add_common(p_eq)

    p_cipher = sub.add_parser("cipher", help="encode or decode a cipher")
    group = p_cipher.add_mutually_exclusive_group(required=True)
    group.add_argument("--upf", help="unit interval parking function, comma-separated")
    group.add_argument("--cipher", help='cipher text, e.g. "0 0|1 1 0|3 1 1"')
    p_cipher.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p_ufr = sub.add_parser("ufr", help="unit Fubini ranking / Boolean interval tables")
    p_ufr.add_argument("--n", type=int, required=True)
    add_common(p_ufr)

    p_uni = sub.add_parser("unimodal", help="unimodality report for census rows")
    p_uni.add_argument("--n", type=int, required=True, help="largest length to report")
    add_common(p_uni)

    p_phi = sub.add_parser("phi", help="displacement/inversion polynomial")
    p_phi.add_argument("--n", type=int, required=True)
    p_phi.add_argument("--ell", type=int, required=True)
    add_common(p_phi)

    return parser


HANDLERS = {
    "census": cmd_census,
    "verify": cmd_verify,
    "csp": cmd_csp,
    "foata": cmd_foata,
    "equidist": cmd_equidist,
    "cipher": cmd_cipher,
    "ufr": cmd_ufr,
    "unimodal": cmd_unimodal,
    "phi": cmd_phi,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except SystemExit:
        raise
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
