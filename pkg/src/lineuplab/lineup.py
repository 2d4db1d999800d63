"""Lineup assembly, answer keys, and visual p-values.

A lineup embeds the observed-data panel at a seed-drawn position among
null panels. Panel i's null data comes from sub-stream (seed, i), so the
build is deterministic end-to-end and panels are order-independent.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone

from . import diagnostics, nullgen
from .diagnostics import (
    BinnedResidualPoints,
    BoxplotStats,
    EmpiricalLogitPoints,
    QQPoints,
    ScatterPoints,
)
from .errors import (
    BadCounts,
    IncompatibleSpec,
    KeyMismatch,
    KeyTampered,
    LineupError,
    NoDataPanel,
    NullGenerationFailed,
)
from .models import fit_logistic, fit_ols, residuals
from .nullgen import (
    NullMethod,
    ParametricBootstrapLM,
    PermuteGroups,
    SimulateLogistic,
    SimulateNormal,
)
from .streams import master_stream, panel_stream
from .table import ColumnKind, Dataset

PLOT_KINDS = ("boxplot", "scatter_residual", "binned_residual", "empirical_logit", "qq")

# Each plot kind pairs with exactly one null mechanism.
COMPATIBLE_NULLS = {
    "boxplot": PermuteGroups,
    "scatter_residual": ParametricBootstrapLM,
    "binned_residual": SimulateLogistic,
    "empirical_logit": SimulateLogistic,
    "qq": SimulateNormal,
}

MAX_NULL_RETRIES = 10


@dataclass(frozen=True)
class ModelParams:
    """Per-kind fitting parameters; unused fields stay None/default."""

    response: str | None = None
    predictor: str | None = None
    group: str | None = None
    degree: int = 1
    g: int = 5
    n_bins: int | None = None
    axis: str = "fitted"  # binned-residual x-axis: fitted | predictor


@dataclass(frozen=True)
class LineupSpec:
    plot_kind: str
    null_method: NullMethod
    model_params: ModelParams
    m: int = 20
    seed: int = 0
    rorschach: bool = False
    claim: str | None = None


def spec_for_kind(
    plot_kind: str,
    *,
    m: int = 20,
    seed: int = 0,
    rorschach: bool = False,
    claim: str | None = None,
    **params,
) -> LineupSpec:
    """Build a spec with the null method implied by the plot kind."""
    mp = ModelParams(**params)
    if plot_kind == "boxplot":
        nm = PermuteGroups(mp.response, mp.group)
    elif plot_kind == "scatter_residual":
        nm = ParametricBootstrapLM(mp.response, mp.predictor)
    elif plot_kind in ("binned_residual", "empirical_logit"):
        nm = SimulateLogistic(mp.response, mp.predictor, mp.degree)
    elif plot_kind == "qq":
        nm = SimulateNormal(mp.response)
    else:
        raise IncompatibleSpec(f"unknown plot kind {plot_kind!r}")
    return LineupSpec(plot_kind, nm, mp, m=m, seed=seed, rorschach=rorschach, claim=claim)


@dataclass(frozen=True)
class PanelData:
    kind: str
    payload: BoxplotStats | ScatterPoints | BinnedResidualPoints | EmpiricalLogitPoints | QQPoints
    panel_number: int


@dataclass(frozen=True)
class AnswerKey:
    seed: int
    data_panel: int | None
    digest: str

    @staticmethod
    def make(seed: int, data_panel: int | None) -> AnswerKey:
        return AnswerKey(seed, data_panel, compute_digest(seed, data_panel))


def compute_digest(seed: int, data_panel: int | None) -> str:
    tag = "rorschach" if data_panel is None else str(data_panel)
    return hashlib.sha256(f"{seed}:{tag}".encode("ascii")).hexdigest()


@dataclass(frozen=True)
class LineupBundle:
    spec: LineupSpec
    panels: tuple[PanelData, ...]
    key: AnswerKey
    created: datetime


@dataclass(frozen=True)
class VisualPValue:
    observers: int
    correct: int
    m: int
    p: float


def validate_spec(ds: Dataset, spec: LineupSpec) -> None:
    """Errors early: panel counts, seed range, kind/null pairing, columns."""
    if spec.plot_kind not in PLOT_KINDS:
        raise IncompatibleSpec(f"unknown plot kind {spec.plot_kind!r}")
    if not 2 <= spec.m <= 100:
        raise IncompatibleSpec(f"m must be in [2, 100], got {spec.m}")
    if not 0 <= spec.seed < 2 ** 64:
        raise IncompatibleSpec("seed must be an unsigned 64-bit integer")
    expected = COMPATIBLE_NULLS[spec.plot_kind]
    if not isinstance(spec.null_method, expected):
        raise IncompatibleSpec(
            f"plot kind {spec.plot_kind!r} requires null method "
            f"{expected.__name__}, got {type(spec.null_method).__name__}"
        )
    mp = spec.model_params
    kind = spec.plot_kind
    if kind == "boxplot":
        _check_columns(ds, {mp.response: ColumnKind.NUMERIC, mp.group: ColumnKind.CATEGORICAL})
        _check_names(spec.null_method, response=mp.response, group=mp.group)
    elif kind == "scatter_residual":
        _check_columns(ds, {mp.response: ColumnKind.NUMERIC, mp.predictor: ColumnKind.NUMERIC})
        _check_names(spec.null_method, response=mp.response, predictor=mp.predictor)
    elif kind in ("binned_residual", "empirical_logit"):
        _check_columns(ds, {mp.response: ColumnKind.BINARY, mp.predictor: ColumnKind.NUMERIC})
        _check_names(spec.null_method, response=mp.response, predictor=mp.predictor)
        if mp.degree not in (1, 2):
            raise IncompatibleSpec(f"degree must be 1 or 2, got {mp.degree}")
        if spec.null_method.degree != mp.degree:
            raise IncompatibleSpec("null method degree differs from model_params degree")
        if kind == "binned_residual" and mp.axis not in ("fitted", "predictor"):
            raise IncompatibleSpec(f"axis must be 'fitted' or 'predictor', got {mp.axis!r}")
    elif kind == "qq":
        _check_columns(ds, {mp.response: ColumnKind.NUMERIC})
        _check_names(spec.null_method, column=mp.response)


def _check_columns(ds: Dataset, wanted: dict) -> None:
    for name, kind in wanted.items():
        if name is None:
            raise IncompatibleSpec("missing required column name in model_params")
        col = ds.column(name)
        if col.kind is not kind:
            raise IncompatibleSpec(
                f"column {name!r} is {col.kind.value}, expected {kind.value}"
            )


def _check_names(nm: NullMethod, **expected) -> None:
    for attr, value in expected.items():
        if getattr(nm, attr) != value:
            raise IncompatibleSpec(
                f"null method {attr} {getattr(nm, attr)!r} does not match "
                f"model_params {value!r}"
            )


class _Builder:
    """Per-kind observed fit, null generation, and panel reduction."""

    def __init__(self, ds: Dataset, spec: LineupSpec):
        self.ds = ds
        self.spec = spec
        self.mp = spec.model_params
        kind = spec.plot_kind
        if kind == "scatter_residual":
            self.observed_fit = fit_ols(ds, self.mp.response, self.mp.predictor)
        elif kind in ("binned_residual", "empirical_logit"):
            self.observed_fit = fit_logistic(ds, self.mp.response, self.mp.predictor, self.mp.degree)
        else:
            self.observed_fit = None

    def null_dataset(self, rng) -> Dataset:
        nm = self.spec.null_method
        if isinstance(nm, PermuteGroups):
            return nullgen.permute_groups(self.ds, nm.response, nm.group, rng)
        if isinstance(nm, ParametricBootstrapLM):
            return nullgen.parametric_bootstrap_lm(self.observed_fit, self.ds, nm.response, rng)
        if isinstance(nm, SimulateLogistic):
            return nullgen.simulate_logistic_null(self.observed_fit, self.ds, nm.response, rng)
        return nullgen.simulate_normal_null(self.ds, nm.column, rng)

    def payload(self, ds: Dataset, observed: bool):
        kind = self.spec.plot_kind
        mp = self.mp
        if kind == "boxplot":
            return diagnostics.boxplot_stats(ds, mp.response, mp.group)
        if kind == "scatter_residual":
            fit = self.observed_fit if observed else fit_ols(ds, mp.response, mp.predictor)
            return ScatterPoints(
                x=ds.numeric_values(mp.predictor),
                y=residuals(fit, "raw"),
            )
        if kind == "binned_residual":
            fit = self.observed_fit if observed else fit_logistic(ds, mp.response, mp.predictor, mp.degree)
            return diagnostics.binned_residuals(fit, axis=mp.axis, n_bins=mp.n_bins)
        if kind == "empirical_logit":
            return diagnostics.empirical_logit(ds, mp.response, mp.predictor, mp.g)
        return diagnostics.qq_points(ds.numeric_values(mp.response))


def build_lineup(ds: Dataset, spec: LineupSpec, created: datetime | None = None) -> LineupBundle:
    """Assemble the full lineup: observed fit once, one null per remaining
    panel (every panel for Rorschach), data panel drawn from the master
    seed. Deterministic for fixed (ds, spec, created)."""
    validate_spec(ds, spec)
    builder = _Builder(ds, spec)
    m = spec.m

    if spec.rorschach:
        data_panel = None
    else:
        data_panel = 1 + int(master_stream(spec.seed).integers(m))

    panels = []
    for i in range(1, m + 1):
        if i == data_panel:
            payload = builder.payload(ds, observed=True)
        else:
            payload = _null_panel(builder, spec.seed, i)
        panels.append(PanelData(spec.plot_kind, payload, i))

    key = AnswerKey.make(spec.seed, data_panel)
    when = created if created is not None else datetime.now(timezone.utc)
    return LineupBundle(spec, tuple(panels), key, when)


def _null_panel(builder: _Builder, seed: int, panel: int):
    rng = panel_stream(seed, panel)
    attempts = 0
    while True:
        try:
            null_ds = builder.null_dataset(rng)
            return builder.payload(null_ds, observed=False)
        except LineupError as exc:
            attempts += 1
            if attempts > MAX_NULL_RETRIES:
                raise NullGenerationFailed(panel, MAX_NULL_RETRIES, exc) from exc


def visual_p_value(x: int, K: int, m: int) -> VisualPValue:
    """Exact binomial upper tail P(Binomial(K, 1/m) >= x) by direct pmf
    summation; p is exactly 1 when x = 0."""
    if K < 1:
        raise BadCounts(f"need at least one observer, got {K}")
    if m < 2:
        raise BadCounts(f"m must be at least 2, got {m}")
    if not 0 <= x <= K:
        raise BadCounts(f"correct count {x} outside [0, {K}]")
    if x == 0:
        return VisualPValue(K, 0, m, 1.0)
    q = 1.0 / m
    p = 0.0
    for k in range(x, K + 1):
        p += math.comb(K, k) * q ** k * (1.0 - q) ** (K - k)
    return VisualPValue(K, x, m, min(p, 1.0))


def reveal(bundle: LineupBundle, key: AnswerKey) -> int:
    """Verify the key against its digest and the bundle's seed, then return
    the data panel index."""
    if key.digest != compute_digest(key.seed, key.data_panel):
        raise KeyTampered("digest does not match key contents")
    if key.seed != bundle.spec.seed:
        raise KeyMismatch("key seed does not match bundle seed")
    if bundle.spec.rorschach:
        raise NoDataPanel("Rorschach lineup: all panels are null")
    if key.data_panel is None:
        raise KeyMismatch("key has no data panel but bundle is not Rorschach")
    return key.data_panel
