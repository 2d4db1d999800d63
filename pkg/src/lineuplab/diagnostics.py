"""Plot-ready statistics: boxplots, binned residuals, empirical logits,
normal Q-Q constructions, and the normal quantile function behind them.

Conventions pinned here for reproducibility: type-7 quartiles, Tukey
1.5*IQR whiskers, equal-count bins with larger bins first (stable sort on
ties), plotting positions (i - 0.5)/n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import BadGroupCount, DomainError, TooManyBins
from .models import LogisticFit, _require_kind, residuals
from .table import ColumnKind, Dataset


@dataclass(frozen=True)
class GroupBox:
    level: str
    q1: float
    median: float
    q3: float
    whisker_lo: float
    whisker_hi: float
    outliers: tuple[float, ...]
    mean: float


@dataclass(frozen=True)
class BoxplotStats:
    groups: tuple[GroupBox, ...]


@dataclass(frozen=True)
class ScatterPoints:
    x: np.ndarray
    y: np.ndarray


class BinPoint(NamedTuple):
    bin_center: float
    mean_residual: float
    bin_count: int


@dataclass(frozen=True)
class BinnedResidualPoints:
    points: tuple[BinPoint, ...]
    n_bins: int


class LogitPoint(NamedTuple):
    mean_x: float
    adj_logit: float
    successes: int
    cases: int


@dataclass(frozen=True)
class EmpiricalLogitPoints:
    points: tuple[LogitPoint, ...]
    g: int


@dataclass(frozen=True)
class QQPoints:
    theoretical: np.ndarray  # strictly increasing
    sample: np.ndarray       # sorted input

    @property
    def pairs(self) -> list[tuple[float, float]]:
        return list(zip(self.theoretical.tolist(), self.sample.tolist()))


def inverse_normal_cdf(p: float) -> float:
    """Standard normal quantile (rational approximation plus one Newton
    polish step; absolute error under 1e-9 across [1e-10, 1 - 1e-10])."""
    if not 0.0 < p < 1.0:
        raise DomainError(f"p must be in (0, 1), got {p}")
    return float(kernels.norm_quantile(np.array([p], dtype=np.float64))[0])


def boxplot_stats(ds: Dataset, response: str, group: str) -> BoxplotStats:
    """Tukey boxplot statistics per group level, plus the group mean.

    Levels appear in first-appearance order. Whiskers reach the most
    extreme value within 1.5*IQR of the quartiles; outliers are everything
    beyond, sorted ascending.
    """
    y = _require_kind(ds, response, ColumnKind.NUMERIC)
    labels = ds.categorical_values(group)
    levels = list(dict.fromkeys(labels))
    groups = []
    labels_arr = np.array(labels)
    for level in levels:
        v = y[labels_arr == level]
        q1, med, q3 = (float(q) for q in np.quantile(v, [0.25, 0.5, 0.75]))
        iqr = q3 - q1
        lo_fence = q1 - 1.5 * iqr
        hi_fence = q3 + 1.5 * iqr
        inside = v[(v >= lo_fence) & (v <= hi_fence)]
        whisker_lo = float(np.min(inside))
        whisker_hi = float(np.max(inside))
        outliers = np.sort(v[(v < lo_fence) | (v > hi_fence)])
        groups.append(GroupBox(
            level=level,
            q1=q1,
            median=med,
            q3=q3,
            whisker_lo=whisker_lo,
            whisker_hi=whisker_hi,
            outliers=tuple(float(o) for o in outliers),
            mean=float(np.mean(v)),
        ))
    return BoxplotStats(tuple(groups))


def bin_average(axis_values: np.ndarray, values: np.ndarray, n_bins: int) -> BinnedResidualPoints:
    """Sort by the axis variable (stable), partition into equal-count bins
    (sizes differ by at most 1, larger first), and average both per bin."""
    n = axis_values.shape[0]
    if not 2 <= n_bins <= n:
        raise TooManyBins(f"n_bins must be in [2, {n}], got {n_bins}")
    order = np.argsort(axis_values, kind="stable")
    sum_x, sum_v, counts = kernels.binned_sums(
        np.ascontiguousarray(axis_values[order], dtype=np.float64),
        np.ascontiguousarray(values[order], dtype=np.float64),
        n_bins,
    )
    points = tuple(
        BinPoint(float(sx / c), float(sv / c), int(c))
        for sx, sv, c in zip(sum_x, sum_v, counts)
    )
    return BinnedResidualPoints(points, n_bins)


def binned_residuals(fit: LogisticFit, axis: str = "fitted", n_bins: int | None = None) -> BinnedResidualPoints:
    """Average deviance residual per equal-count bin of the axis variable
    (fitted probabilities by default, or the predictor). Default bin count
    is floor(sqrt(n))."""
    if axis == "fitted":
        axis_values = fit.fitted_probs
    elif axis == "predictor":
        axis_values = fit.predictor_values
    else:
        raise ValueError(f"axis must be 'fitted' or 'predictor', got {axis!r}")
    n = axis_values.shape[0]
    if n_bins is None:
        n_bins = int(math.isqrt(n))
    return bin_average(axis_values, residuals(fit, "deviance"), n_bins)


def empirical_logit(ds: Dataset, response: str, predictor: str, g: int) -> EmpiricalLogitPoints:
    """Adjusted log-odds per equal-count predictor bin:
    p_adj = (successes + 0.5) / (cases + 1), plotted against the bin's mean
    predictor value. The adjustment keeps every point finite."""
    y = _require_kind(ds, response, ColumnKind.BINARY)
    x = _require_kind(ds, predictor, ColumnKind.NUMERIC)
    n = y.shape[0]
    if not 2 <= g <= n:
        raise BadGroupCount(f"g must be in [2, {n}], got {g}")
    order = np.argsort(x, kind="stable")
    sum_x, sum_y, counts = kernels.binned_sums(
        np.ascontiguousarray(x[order], dtype=np.float64),
        np.ascontiguousarray(y[order], dtype=np.float64),
        g,
    )
    points = []
    for sx, sy, c in zip(sum_x, sum_y, counts):
        s = int(round(sy))
        p_adj = (s + 0.5) / (c + 1)
        points.append(LogitPoint(
            mean_x=float(sx / c),
            adj_logit=float(np.log(p_adj / (1.0 - p_adj))),
            successes=s,
            cases=int(c),
        ))
    return EmpiricalLogitPoints(tuple(points), g)


def qq_points(values: np.ndarray) -> QQPoints:
    """Normal Q-Q pairs: i-th order statistic against the standard normal
    quantile at plotting position (i - 0.5)/n."""
    v = np.asarray(values, dtype=np.float64)
    n = v.shape[0]
    if n < 1:
        raise DomainError("need at least one value")
    positions = (np.arange(1, n + 1) - 0.5) / n
    theoretical = kernels.norm_quantile(positions)
    sample = np.sort(v)
    return QQPoints(theoretical=theoretical, sample=sample)
