"""Command line front end.

    quadres solve 4 5 3                 -> SAT x=2
    quadres decompose 97                -> 97 = 9^2 + 4^2
    quadres census --limit 25 --format csv

Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import IO, Iterator, Optional, Sequence

from . import export
from .experiments import bench_sqrt_methods, randomness_suite
from .gausscensus import enumerate_gaussian_primes, sector_histogram
from .lattice import lattice_census, prime_point_ratio
from .modmath import DomainError, primes_in_class, set_primality_seed, sqrt_mod_prime, wilson_sqrt_minus_one
from .quadcong import QCInstance, decide, parse_instances
from .twosquares import decompose, decompose_brute

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _common() -> argparse.ArgumentParser:
    # defaults suppressed so flags given before the subcommand are not
    # clobbered by the subparser
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("csv", "json"), default=argparse.SUPPRESS)
    p.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS, help="write output here instead of stdout")
    p.add_argument("--workers", type=_positive, default=argparse.SUPPRESS)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="Miller-Rabin base seed (n > 2^64 only)")
    return p


def build_parser() -> argparse.ArgumentParser:
    # parents share action objects, so the top level gets its own copy
    parser = _Parser(prog="quadres", description=__doc__.split("\n\n")[0], parents=[_common()])
    common = _common()
    parser.set_defaults(format=None, out=None, workers=1, seed=None)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", parents=[common], help="decide x^2 = a (mod b) with 0 < x < c")
    p.add_argument("abc", nargs="*", type=int, metavar="N")
    p.add_argument("--file", metavar="PATH", help="instances, one 'a b c' per line ('-' for stdin)")

    p = sub.add_parser("wilson", parents=[common], help="((p-1)/2)! mod p for a prime p = 4m+1")
    p.add_argument("p", type=int)

    p = sub.add_parser("decompose", parents=[common], help="p = s^2 + t^2")
    p.add_argument("p", type=int, nargs="?")
    p.add_argument("--brute", action="store_true", help="use the exhaustive scan and report its cost")
    p.add_argument("--limit", type=int, help="tabulate every prime p = 4m+1 up to LIMIT")

    p = sub.add_parser("census", parents=[common], help="Gaussian primes of norm <= LIMIT")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--bins", type=int, default=16)
    p.add_argument("--histogram", action="store_true", help="emit the angular histogram instead of the primes")
    p.add_argument("--exclude-axis", action="store_true", help="leave inert primes (arg 0) out of the histogram")

    p = sub.add_parser("lattice", parents=[common], help="lattice counts for squared radius R")
    p.add_argument("--R", type=_int_list, required=True, metavar="R[,R...]")

    p = sub.add_parser("ratio", parents=[common], help="prime lattice points vs octant points")
    p.add_argument("--R", type=_int_list, required=True, metavar="R[,R...]")

    p = sub.add_parser("stats", parents=[common], help="uniformity test suite")
    p.add_argument("--limit", type=int, required=True)

    p = sub.add_parser("bench", parents=[common], help="square-root cost scaling")
    p.add_argument("--grid", type=_int_list, required=True, metavar="P1,P2,...")
    p.add_argument("--reps", type=int, default=5)
    return parser


@contextlib.contextmanager
def _output(path: Optional[str]) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _solve(args: argparse.Namespace, out: IO[str]) -> None:
    if args.file is not None:
        if args.abc:
            raise _UsageError("solve: give either 'a b c' or --file, not both")
        if args.file == "-":
            rows = [(inst, decide(inst)) for inst in parse_instances(sys.stdin)]
        else:
            with open(args.file, encoding="utf-8") as fh:
                rows = [(inst, decide(inst)) for inst in parse_instances(fh)]
        export.write_table(export.verdict_table(rows), out, args.format or "csv")
        return
    if len(args.abc) != 3:
        raise _UsageError("solve: expected exactly three integers a b c")
    inst = QCInstance(*args.abc)
    v = decide(inst)
    if args.format:
        export.write_table(export.verdict_table([(inst, v)]), out, args.format)
    else:
        print(f"SAT x={v.witness}" if v.satisfiable else "UNSAT", file=out)


def _wilson(args: argparse.Namespace, out: IO[str]) -> None:
    p = args.p
    w = wilson_sqrt_minus_one(p)
    lo, hi = sqrt_mod_prime(p - 1, p)
    if args.format:
        header = ("p", "factorial_value", "root_lo", "root_hi")
        export.write_table((header, [(p, w, lo, hi)]), out, args.format)
    else:
        print(f"x={w} pair=({lo},{hi})", file=out)


def _decompose(args: argparse.Namespace, out: IO[str]) -> None:
    if args.limit is not None:
        if args.p is not None:
            raise _UsageError("decompose: give either p or --limit, not both")
        if args.brute:
            rows = [decompose_brute(p)[0] for p in primes_in_class(args.limit, 1, 4)]
        else:
            rows = [decompose(p) for p in primes_in_class(args.limit, 1, 4)]
        export.write_table(export.twosquares_table(rows), out, args.format or "csv")
        return
    if args.p is None:
        raise _UsageError("decompose: expected p or --limit")
    if args.brute:
        d, visited = decompose_brute(args.p)
    else:
        d, visited = decompose(args.p), None
    if args.format:
        export.write_table(export.twosquares_table([d]), out, args.format)
        return
    line = f"{d.p} = {d.s}^2 + {d.t}^2"
    if visited is not None:
        line += f" (visited {visited})"
    print(line, file=out)


def _census(args: argparse.Namespace, out: IO[str]) -> None:
    if args.limit < 2:
        raise DomainError(f"limit must be >= 2, got {args.limit}")
    if args.histogram:
        hist = sector_histogram(args.limit, args.bins, args.exclude_axis, workers=args.workers)
        table = export.histogram_table(hist)
    else:
        if args.bins < 2:
            raise DomainError(f"bins must be >= 2, got {args.bins}")
        table = export.census_table(enumerate_gaussian_primes(args.limit, workers=args.workers))
    export.write_table(table, out, args.format or "csv")


def _lattice(args: argparse.Namespace, out: IO[str]) -> None:
    rows = [(lattice_census(R), prime_point_ratio(R)) for R in args.R]
    export.write_table(export.lattice_table(rows), out, args.format or "csv")


def _ratio(args: argparse.Namespace, out: IO[str]) -> None:
    export.write_table(export.ratio_table(prime_point_ratio(R) for R in args.R), out, args.format or "csv")


def _stats(args: argparse.Namespace, out: IO[str]) -> None:
    reports = randomness_suite(args.limit)
    export.write_table(export.report_table(reports), out, args.format or "json")


def _bench(args: argparse.Namespace, out: IO[str]) -> None:
    result = bench_sqrt_methods(args.grid, args.reps)
    export.write_table(export.bench_table(result.samples), out, args.format or "csv")
    for label, slope in result.op_slopes.items():
        print(f"# {label}: op_count slope {slope:.3f}, time slope {result.time_slopes[label]:.3f}", file=sys.stderr)


COMMANDS = {
    "solve": _solve,
    "wilson": _wilson,
    "decompose": _decompose,
    "census": _census,
    "lattice": _lattice,
    "ratio": _ratio,
    "stats": _stats,
    "bench": _bench,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    set_primality_seed(args.seed)
    try:
        with _output(args.out) as out:
            COMMANDS[args.command](args, out)
    except _UsageError as exc:
        print(f"quadres: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, OSError) as exc:
        print(f"quadres: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    finally:
        set_primality_seed(None)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
