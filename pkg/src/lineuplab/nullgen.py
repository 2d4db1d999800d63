"""Null dataset generators: every mechanism for producing data consistent
with a null hypothesis.

All four generators replace exactly one column and leave every other column
untouched (shared, not copied). Each takes an explicit RNG stream so panel
generation stays deterministic and parallel-safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from . import streams
from .errors import (
    DegenerateColumn,
    DegenerateFit,
    DegenerateGroups,
    InvalidFit,
    TooFewRows,
)
from .models import LinearFit, LogisticFit, _require_kind
from .table import ColumnKind, Dataset


@dataclass(frozen=True)
class PermuteGroups:
    response: str
    group: str


@dataclass(frozen=True)
class ParametricBootstrapLM:
    response: str
    predictor: str


@dataclass(frozen=True)
class SimulateLogistic:
    response: str
    predictor: str
    degree: int = 1


@dataclass(frozen=True)
class SimulateNormal:
    column: str


NullMethod = Union[PermuteGroups, ParametricBootstrapLM, SimulateLogistic, SimulateNormal]


def permute_groups(ds: Dataset, response: str, group: str, rng: np.random.Generator) -> Dataset:
    """Shuffle the response against fixed group labels (Fisher-Yates on the
    response vector). Group sizes and the response multiset are preserved
    exactly."""
    y = _require_kind(ds, response, ColumnKind.NUMERIC)
    levels = set(ds.categorical_values(group))
    if len(levels) < 2:
        raise DegenerateGroups(f"group column {group!r} has a single level")
    idx = streams.shuffled_indices(rng, y.shape[0])
    return ds.replace_column(response, y[idx])


def parametric_bootstrap_lm(fit: LinearFit, ds: Dataset, response: str, rng: np.random.Generator) -> Dataset:
    """y* = fitted + Normal(0, sigma_hat^2) noise, predictor untouched."""
    if fit.sigma_hat == 0.0:
        raise DegenerateFit("sigma_hat is 0; bootstrap nulls would be deterministic")
    noise = fit.sigma_hat * streams.normals(rng, fit.n)
    return ds.replace_column(response, fit.fitted + noise)


def simulate_logistic_null(fit: LogisticFit, ds: Dataset, response: str, rng: np.random.Generator) -> Dataset:
    """y* ~ Bernoulli(fitted probability), independently per row."""
    if not fit.converged:
        raise InvalidFit("refusing to simulate from an unconverged fit")
    n = fit.fitted_probs.shape[0]
    y_star = (streams.uniforms(rng, n) < fit.fitted_probs).astype(np.float64)
    return ds.replace_column(response, y_star)


def simulate_normal_null(ds: Dataset, column: str, rng: np.random.Generator) -> Dataset:
    """Replace a column with iid draws from Normal(sample mean, sample sd^2)."""
    v = _require_kind(ds, column, ColumnKind.NUMERIC)
    n = v.shape[0]
    if n < 3:
        raise TooFewRows(f"need at least 3 rows, got {n}")
    mean = float(np.mean(v))
    sd = float(np.std(v, ddof=1))
    if sd == 0.0:
        raise DegenerateColumn(f"column {column!r} has zero standard deviation")
    return ds.replace_column(column, mean + sd * streams.normals(rng, n))
