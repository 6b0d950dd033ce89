"""Row builders and CSV/JSON emission for the exported tables.

Exact integers are written as decimal strings, exact fractions as
``num/den``; the only floats are the ``*_float`` columns, written with 17
significant digits.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Sequence

from .irreps import DimensionCensus
from .modcount import ModuleTable, NssDistribution
from .partitions import Partition, format_partition, parse_partition

CENSUS_HEADER = ("dimension", "xi")
MOD_HEADER = ("D", "mod_total", "mod_singlet", "singlet_fraction_exact", "singlet_fraction_float")
NSS_HEADER = ("d", "N", "count", "fraction_float")


def fmt_float(x) -> str:
    return format(float(x), ".17g")


def fmt_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den or 1))


def census_rows(census: DimensionCensus) -> list[tuple]:
    return [(d, c) for d, c in census.rows()]


def mod_rows(table: ModuleTable, Ds: Iterable[int]) -> list[tuple]:
    rows = []
    for D in Ds:
        q = table.fraction(D)
        rows.append((D, table.total(D), table.singlet(D), fmt_fraction(q), fmt_float(q)))
    return rows


def nss_rows(dist: NssDistribution) -> list[tuple]:
    return [
        (dist.d, N, dist.counts[N], fmt_float(w)) for N, w in dist.weights.items()
    ]


def to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([str(v) for v in row])
    return buf.getvalue()


def read_csv(text: str) -> tuple[list[str], list[list[str]]]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    return header, [row for row in reader]


# columns holding counts that can outgrow a double; emitted as strings in JSON
_BIG = {"mod_total", "mod_singlet", "count"}


def to_json(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    records = []
    for row in rows:
        rec = {}
        for k, v in zip(header, row):
            if k in _BIG:
                v = str(v)
            elif k.endswith("_float"):
                v = float(v)
            rec[k] = v
        records.append(rec)
    return json.dumps(records, indent=2) + "\n"


def partitions_text(parts: Iterable[Partition]) -> str:
    return "".join(format_partition(p) + "\n" for p in parts)


def read_partitions(text: str) -> list[Partition]:
    return [parse_partition(line) for line in text.splitlines()]
