"""Visual statistical inference via the lineup protocol: fit simple
models, simulate from the null, hide the data plot among null plots, and
score observer picks into an exact binomial visual p-value."""

from .diagnostics import (
    BinnedResidualPoints,
    BoxplotStats,
    EmpiricalLogitPoints,
    QQPoints,
    ScatterPoints,
    bin_average,
    binned_residuals,
    boxplot_stats,
    empirical_logit,
    inverse_normal_cdf,
    qq_points,
)
from .errors import LineupError
from .lineup import (
    AnswerKey,
    LineupBundle,
    LineupSpec,
    ModelParams,
    PanelData,
    VisualPValue,
    build_lineup,
    reveal,
    spec_for_kind,
    validate_spec,
    visual_p_value,
)
from .models import (
    LinearFit,
    LogisticFit,
    fit_logistic,
    fit_ols,
    residuals,
    simulate_demo_logistic,
)
from .nullgen import (
    ParametricBootstrapLM,
    PermuteGroups,
    SimulateLogistic,
    SimulateNormal,
)
from .render import Scales, common_scales, render_lineup, render_panel
from .table import Dataset, NumericSummary, numeric_summary, parse_csv, to_csv

__version__ = "0.1.0"

__all__ = [
    "AnswerKey",
    "BinnedResidualPoints",
    "BoxplotStats",
    "Dataset",
    "EmpiricalLogitPoints",
    "LinearFit",
    "LineupBundle",
    "LineupError",
    "LineupSpec",
    "LogisticFit",
    "ModelParams",
    "NumericSummary",
    "PanelData",
    "ParametricBootstrapLM",
    "PermuteGroups",
    "QQPoints",
    "Scales",
    "ScatterPoints",
    "SimulateLogistic",
    "SimulateNormal",
    "VisualPValue",
    "bin_average",
    "binned_residuals",
    "boxplot_stats",
    "build_lineup",
    "common_scales",
    "empirical_logit",
    "fit_logistic",
    "fit_ols",
    "inverse_normal_cdf",
    "numeric_summary",
    "parse_csv",
    "qq_points",
    "render_lineup",
    "render_panel",
    "residuals",
    "reveal",
    "simulate_demo_logistic",
    "spec_for_kind",
    "to_csv",
    "validate_spec",
    "visual_p_value",
]
