"""Immutable column-oriented tables: CSV ingestion, typing, summaries.

Columns are typed by inference at parse time: anything fully numeric is
``numeric``, a numeric column whose values are all 0/1 is ``binary`` (binary
wins over numeric), everything else is ``categorical``. Missing values are
rejected outright; this is a teaching tool and silent imputation would
corrupt lineups.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .errors import (
    ColumnNotFound,
    MissingValueError,
    RaggedRowError,
    SchemaError,
    TooFewRows,
    TypeMismatch,
)

# Integer or decimal literal with optional exponent. Deliberately narrower
# than float(): no inf/nan, no underscores, no locale separators.
_NUMERIC_RE = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")


class ColumnKind(Enum):
    NUMERIC = "numeric"
    CATEGORICAL = "categorical"
    BINARY = "binary"


@dataclass(frozen=True)
class Column:
    name: str
    kind: ColumnKind
    values: tuple | np.ndarray  # float64 array for numeric/binary, tuple of str otherwise

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Dataset:
    name: str
    columns: tuple[Column, ...]

    def __post_init__(self):
        names = [c.name for c in self.columns]
        if len(set(names)) != len(names):
            raise SchemaError("duplicate column names")
        if any(not n for n in names):
            raise SchemaError("empty column name")
        lengths = {len(c) for c in self.columns}
        if len(lengths) > 1:
            raise SchemaError(f"column lengths differ: {sorted(lengths)}")
        for c in self.columns:
            if c.kind is ColumnKind.CATEGORICAL:
                continue
            v = np.asarray(c.values)
            finite = np.isfinite(v)
            if not np.all(finite):
                raise MissingValueError(int(np.argmin(finite)) + 1, c.name)
            if c.kind is ColumnKind.BINARY and not np.all((v == 0.0) | (v == 1.0)):
                raise SchemaError(f"binary column {c.name!r} has values outside {{0,1}}")

    @property
    def n_rows(self) -> int:
        return len(self.columns[0]) if self.columns else 0

    def column(self, name: str) -> Column:
        for c in self.columns:
            if c.name == name:
                return c
        raise ColumnNotFound(f"no column named {name!r}")

    def numeric_values(self, name: str) -> np.ndarray:
        """Float64 values of a numeric or binary column (read-only)."""
        c = self.column(name)
        if c.kind is ColumnKind.CATEGORICAL:
            raise TypeMismatch(f"column {name!r} is categorical")
        return c.values

    def categorical_values(self, name: str) -> tuple:
        c = self.column(name)
        if c.kind is not ColumnKind.CATEGORICAL:
            raise TypeMismatch(f"column {name!r} is not categorical")
        return c.values

    def replace_column(self, name: str, values: np.ndarray, kind: ColumnKind | None = None) -> Dataset:
        """New Dataset with one column's values swapped; all other columns
        are shared untouched."""
        old = self.column(name)
        new_col = _make_numeric_column(name, values, kind or old.kind)
        cols = tuple(new_col if c.name == name else c for c in self.columns)
        return Dataset(self.name, cols)


def _make_numeric_column(name: str, values: np.ndarray, kind: ColumnKind) -> Column:
    arr = np.ascontiguousarray(values, dtype=np.float64)
    arr.flags.writeable = False
    return Column(name, kind, arr)


def numeric_column(name: str, values) -> Column:
    return _make_numeric_column(name, np.asarray(values, dtype=np.float64), ColumnKind.NUMERIC)


def binary_column(name: str, values) -> Column:
    return _make_numeric_column(name, np.asarray(values, dtype=np.float64), ColumnKind.BINARY)


def categorical_column(name: str, values) -> Column:
    return Column(name, ColumnKind.CATEGORICAL, tuple(str(v) for v in values))


def parse_csv(text: str, name: str = "data") -> Dataset:
    """Parse UTF-8 CSV (header row mandatory, rectangular, no empty cells)."""
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if not rows:
        raise SchemaError("empty input: header row required")
    header = rows[0]
    if len(set(header)) != len(header):
        raise SchemaError("duplicate header")
    if any(not h for h in header):
        raise SchemaError("empty header name")

    width = len(header)
    body = rows[1:]
    if not body:
        raise SchemaError("no data rows")
    for i, row in enumerate(body, start=1):
        if len(row) != width:
            raise RaggedRowError(i, width, len(row))
        for j, cell in enumerate(row):
            if cell == "":
                raise MissingValueError(i, header[j])

    columns = []
    for j, col_name in enumerate(header):
        raw = [row[j] for row in body]
        columns.append(_infer_column(col_name, raw))
    return Dataset(name, tuple(columns))


def _infer_column(name: str, raw: list[str]) -> Column:
    if raw and all(_NUMERIC_RE.match(v) for v in raw):
        values = np.array([float(v) for v in raw])
        if np.all((values == 0.0) | (values == 1.0)):
            return _make_numeric_column(name, values, ColumnKind.BINARY)
        return _make_numeric_column(name, values, ColumnKind.NUMERIC)
    return categorical_column(name, raw)


def to_csv(ds: Dataset) -> str:
    """Inverse of parse_csv: full-precision numerics so a round trip is
    value- and kind-identical."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([c.name for c in ds.columns])
    for i in range(ds.n_rows):
        row = []
        for c in ds.columns:
            if c.kind is ColumnKind.BINARY:
                row.append(str(int(c.values[i])))
            elif c.kind is ColumnKind.NUMERIC:
                row.append(repr(float(c.values[i])))
            else:
                row.append(c.values[i])
        writer.writerow(row)
    return buf.getvalue()


class NumericSummary(NamedTuple):
    min: float
    max: float
    mean: float
    sd: float
    q1: float
    median: float
    q3: float


def numeric_summary(ds: Dataset, col: str) -> NumericSummary:
    """Seven-number summary. Quartiles interpolate linearly between order
    statistics at position (n-1)p+1; sd is the sample (n-1) standard
    deviation, 0 for a single value."""
    v = ds.numeric_values(col)
    n = v.shape[0]
    if n < 1:
        raise TooFewRows(f"column {col!r} is empty")
    q1, med, q3 = np.quantile(v, [0.25, 0.5, 0.75])
    sd = 0.0 if n == 1 else float(np.std(v, ddof=1))
    return NumericSummary(
        min=float(np.min(v)),
        max=float(np.max(v)),
        mean=float(np.mean(v)),
        sd=sd,
        q1=float(q1),
        median=float(med),
        q3=float(q3),
    )
