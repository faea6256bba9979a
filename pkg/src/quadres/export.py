"""Tabular export.

Each ``*_table`` function turns results into ``(header, rows)``; :func:`write_csv`
and :func:`write_json` serialise any such table. CSV is UTF-8 with a header
row and LF line endings; JSON is a single top-level array of objects keyed by
the header. Integers are written in full decimal and reals are formatted to
12 significant digits in CSV, so repeated runs produce byte-identical files.
"""

from __future__ import annotations

import csv
import json
from typing import IO, Any, Iterable, Sequence

from .experiments.bench import BenchSample
from .experiments.stats import StatReport
from .gausscensus import GaussianInteger, SectorHistogram
from .lattice import LatticeCensus, PrimePointRatio
from .quadcong import QCInstance, QCVerdict
from .twosquares import TwoSquareDecomposition

Table = tuple[Sequence[str], list[tuple[Any, ...]]]

TWOSQUARES_HEADER = ("p", "s", "t", "theta")
CENSUS_HEADER = ("re", "im", "norm", "arg")
HISTOGRAM_HEADER = ("bin_lo", "bin_hi", "count", "expected")
LATTICE_HEADER = ("R", "n_disc", "n_octant", "N", "ratio", "predicted")
RATIO_HEADER = ("R", "N", "N0", "ratio", "predicted", "half_pi_estimate", "log_estimate")
REPORT_HEADER = ("test_name", "n", "statistic", "p_value")
BENCH_HEADER = ("op", "p", "ns_median", "op_count", "reps")
VERDICT_HEADER = ("a", "b", "c", "satisfiable", "witness")


def twosquares_table(rows: Iterable[TwoSquareDecomposition]) -> Table:
    return TWOSQUARES_HEADER, [(d.p, d.s, d.t, d.theta) for d in rows]


def census_table(rows: Iterable[GaussianInteger]) -> Table:
    return CENSUS_HEADER, [(g.re, g.im, g.norm, g.arg) for g in rows]


def histogram_table(hist: SectorHistogram) -> Table:
    return HISTOGRAM_HEADER, list(hist.rows())


def lattice_table(rows: Iterable[tuple[LatticeCensus, PrimePointRatio]]) -> Table:
    return LATTICE_HEADER, [(c.R, c.n_disc, c.n_octant, r.N, r.ratio, r.predicted) for c, r in rows]


def ratio_table(rows: Iterable[PrimePointRatio]) -> Table:
    return RATIO_HEADER, [
        (r.R, r.N, r.N0, r.ratio, r.predicted, r.half_pi_estimate, r.log_estimate) for r in rows
    ]


def report_table(reports: Iterable[StatReport]) -> Table:
    return REPORT_HEADER, [(r.test_name, r.sample_size, r.statistic, r.p_value) for r in reports]


def bench_table(samples: Iterable[BenchSample]) -> Table:
    return BENCH_HEADER, [
        (s.op_label, s.input_magnitude, s.wall_time_ns, s.op_count, s.repetitions) for s in samples
    ]


def verdict_table(rows: Iterable[tuple[QCInstance, QCVerdict]]) -> Table:
    return VERDICT_HEADER, [(i.a, i.b, i.c, v.satisfiable, v.witness) for i, v in rows]


def _csv_cell(v: Any) -> Any:
    if v is None:
        return ""
    if isinstance(v, bool):
        return int(v)
    if isinstance(v, float):
        return f"{v:.12g}"
    return v


def write_csv(table: Table, fh: IO[str]) -> None:
    header, rows = table
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_csv_cell(v) for v in row])


def write_json(table: Table, fh: IO[str]) -> None:
    header, rows = table
    json.dump([dict(zip(header, row)) for row in rows], fh, indent=2)
    fh.write("\n")


def write_table(table: Table, fh: IO[str], fmt: str = "csv") -> None:
    if fmt == "csv":
        write_csv(table, fh)
    elif fmt == "json":
        write_json(table, fh)
    else:
        raise ValueError(f"unknown format {fmt!r}")
