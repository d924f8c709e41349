"""
Coefficient tables and their text format.

A table file is UTF-8 text:

    # class=P2planar
    # nmax=7
    # provenance=oracle
    4 4 3
    4 5 6
    4 6 1

Header lines are ``# key=value``; other ``#`` lines and blank lines are
ignored. Coefficient tables hold one ``n m count`` record per line; a
``# kind=totals`` header switches to ``n count`` records.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path

from core.constants import (
    CLASS_PLANAR,
    KIND_COEFFICIENTS,
    KIND_TOTALS,
    PROVENANCE_CHOICES,
    PROVENANCE_IMPORTED,
)
from core.exceptions import PreconditionError, TableParseError

logger = logging.getLogger(__name__)

_HEADER = re.compile(r'^#\s*(\w+)\s*=\s*(\S+)\s*$')
_PROVENANCES = {value for value, _ in PROVENANCE_CHOICES}


def max_planar_edges(n: int) -> int:
    """Edge bound of a 2-connected planar graph on n vertices."""
    if n < 2:
        return -1
    if n == 2:
        return 1
    return 3 * n - 6


@dataclass(frozen=True)
class CoefficientTable:
    """
    Exact (n, m, count) records of one class, or (n, count) totals.

    Records are kept sorted; for a totals table the m entry of each key is
    None.
    """
    class_name: str
    nmax: int
    records: tuple = field(default_factory=tuple)
    provenance: str = PROVENANCE_IMPORTED
    kind: str = KIND_COEFFICIENTS

    def __post_init__(self):
        if self.nmax < 0:
            raise PreconditionError(f"nmax must be >= 0, got {self.nmax}")
        if self.provenance not in _PROVENANCES:
            raise PreconditionError(f"unknown provenance {self.provenance!r}")
        if self.kind not in (KIND_COEFFICIENTS, KIND_TOTALS):
            raise PreconditionError(f"unknown table kind {self.kind!r}")
        records = tuple(sorted(tuple(r) for r in self.records))
        seen = set()
        for record in records:
            key = record[:-1]
            if key in seen:
                raise PreconditionError(f"duplicate key {key} in table {self.class_name}")
            seen.add(key)
            if record[-1] < 0:
                raise PreconditionError(f"negative count at {key} in table {self.class_name}")
            if record[0] > self.nmax:
                raise PreconditionError(f"record at n={record[0]} exceeds nmax={self.nmax}")
        object.__setattr__(self, 'records', records)
        if self.class_name == CLASS_PLANAR and self.kind == KIND_COEFFICIENTS:
            self._check_planar_bounds()

    def _check_planar_bounds(self):
        if self.nmax >= 2 and self.coefficient(2, 1) != 1:
            raise PreconditionError("a P2planar table must count K2 once at (2, 1)")
        for n, m, _ in self.records:
            if m > max_planar_edges(n):
                raise PreconditionError(f"P2planar record (n={n}, m={m}) breaks the planar edge bound")

    @property
    def is_totals(self) -> bool:
        return self.kind == KIND_TOTALS

    def coefficient(self, n: int, m: int) -> int:
        for record in self.records:
            if record[0] == n and record[1] == m:
                return record[2]
        return 0

    def totals(self) -> dict[int, int]:
        """Counts per n, summed over m for a coefficient table."""
        out: dict[int, int] = {}
        for record in self.records:
            out[record[0]] = out.get(record[0], 0) + record[-1]
        return out

    def as_dict(self) -> dict:
        return {record[:-1]: record[-1] for record in self.records}

    def restricted(self, nmax: int) -> CoefficientTable:
        """The same table cut down to n <= nmax."""
        return CoefficientTable(
            class_name=self.class_name,
            nmax=min(nmax, self.nmax),
            records=tuple(r for r in self.records if r[0] <= nmax),
            provenance=self.provenance,
            kind=self.kind,
        )

    @classmethod
    def from_series(cls, class_name, series, provenance, nmin: int = 0) -> CoefficientTable:
        """Freeze the integral coefficients of a series, from n = nmin on."""
        series.assert_integral(class_name)
        records = tuple(r for r in series.items() if r[0] >= nmin)
        return cls(class_name, series.nmax, records, provenance)

    @classmethod
    def totals_from_series(cls, class_name, series, provenance, nmin: int = 0) -> CoefficientTable:
        series.assert_integral(class_name)
        records = tuple(
            (n, series.row_total(n)) for n in range(nmin, series.nmax + 1)
        )
        return cls(class_name, series.nmax, records, provenance, KIND_TOTALS)


def render_table(table: CoefficientTable) -> str:
    lines = [
        f"# class={table.class_name}",
        f"# nmax={table.nmax}",
        f"# provenance={table.provenance}",
    ]
    if table.is_totals:
        lines.append(f"# kind={KIND_TOTALS}")
        lines.extend(f"{n} {count}" for n, count in table.records)
    else:
        lines.extend(f"{n} {m} {count}" for n, m, count in table.records)
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> CoefficientTable:
    """
    Parse the text format; every error names the offending line.
    """
    header: dict[str, str] = {}
    rows: list[tuple[int, tuple[int, ...]]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#'):
            match = _HEADER.match(line)
            if match and match.group(1) in ('class', 'nmax', 'provenance', 'kind'):
                if match.group(1) in header:
                    raise TableParseError(f"repeated header {match.group(1)!r}", number)
                header[match.group(1)] = match.group(2)
            continue
        parts = line.split()
        try:
            values = tuple(int(p) for p in parts)
        except ValueError:
            raise TableParseError(f"non-integer field in {line!r}", number)
        rows.append((number, values))

    if 'class' not in header:
        raise TableParseError("missing '# class=' header")
    if 'nmax' not in header:
        raise TableParseError("missing '# nmax=' header")
    try:
        nmax = int(header['nmax'])
    except ValueError:
        raise TableParseError(f"nmax header is not an integer: {header['nmax']!r}")
    provenance = header.get('provenance', PROVENANCE_IMPORTED)
    if provenance not in _PROVENANCES:
        raise TableParseError(f"unknown provenance {provenance!r}")
    kind = header.get('kind', KIND_COEFFICIENTS)
    if kind not in (KIND_COEFFICIENTS, KIND_TOTALS):
        raise TableParseError(f"unknown table kind {kind!r}")
    width = 2 if kind == KIND_TOTALS else 3

    seen: dict[tuple, int] = {}
    records = []
    for number, values in rows:
        if len(values) != width:
            raise TableParseError(f"expected {width} fields, got {len(values)}", number)
        key, count = values[:-1], values[-1]
        if any(v < 0 for v in key):
            raise TableParseError(f"negative index in {values}", number)
        if count < 0:
            raise TableParseError(f"negative count {count}", number)
        if key[0] > nmax:
            raise TableParseError(f"n={key[0]} exceeds nmax={nmax}", number)
        if key in seen:
            raise TableParseError(f"duplicate key {key} (first seen on line {seen[key]})", number)
        seen[key] = number
        records.append(values)

    try:
        return CoefficientTable(header['class'], nmax, tuple(records), provenance, kind)
    except PreconditionError as exc:
        raise TableParseError(str(exc))


def save_table(table: CoefficientTable, path) -> Path:
    path = Path(path)
    path.write_text(render_table(table), encoding='utf-8')
    logger.info(f"Saved table {table.class_name} (nmax={table.nmax}, {len(table.records)} records) to {path}")
    return path


def load_table(path) -> CoefficientTable:
    path = Path(path)
    table = parse_table(path.read_text(encoding='utf-8'))
    logger.debug(f"Loaded table {table.class_name} (nmax={table.nmax}) from {path}")
    return table


def first_missing_order(table: CoefficientTable) -> int | None:
    """
    Smallest 2 <= n <= table.nmax with no records, None when every order is
    present. Every order from 2 on has planar members, so a missing order in
    a P2planar table is a gap in its coverage.
    """
    present = {record[0] for record in table.records}
    for n in range(2, table.nmax + 1):
        if n not in present:
            return n
    return None


def merge_tables(tables) -> CoefficientTable:
    """
    Union of tables of one class and kind; overlapping records must agree.
    """
    tables = list(tables)
    if not tables:
        raise PreconditionError("no tables to merge")
    first = tables[0]
    merged: dict[tuple, int] = {}
    for table in tables:
        if (table.class_name, table.kind) != (first.class_name, first.kind):
            raise PreconditionError(
                f"cannot merge {table.class_name} ({table.kind}) into {first.class_name} ({first.kind})"
            )
        for key, count in table.as_dict().items():
            if merged.setdefault(key, count) != count:
                raise PreconditionError(f"tables disagree at {key}: {merged[key]} != {count}")
    if len(tables) == 1:
        return first
    provenance = first.provenance if all(t.provenance == first.provenance for t in tables) else PROVENANCE_IMPORTED
    records = tuple(key + (count,) for key, count in merged.items())
    return CoefficientTable(first.class_name, max(t.nmax for t in tables), records, provenance, first.kind)
