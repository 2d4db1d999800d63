"""Model fitting: simple linear regression and binary logistic regression.

These are the two families the lineup diagnostics need. OLS is closed form;
the logistic fit is maximum likelihood via iteratively reweighted least
squares with step-halving, hard-stopping on separation (|coef| > 30).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import expit

from . import kernels, streams
from .errors import (
    DegenerateDesign,
    KindMismatch,
    SeparationError,
    TooFewRows,
    TypeMismatch,
)
from .table import ColumnKind, Dataset, binary_column, numeric_column

IRLS_MAX_ITER = 50
IRLS_TOL = 1e-8
COEF_CAP = 30.0
MAX_HALVINGS = 10

PROB_EPS = 1e-15


@dataclass(frozen=True)
class LinearFit:
    intercept: float
    slope: float
    fitted: np.ndarray
    residuals_raw: np.ndarray
    sigma_hat: float
    leverages: np.ndarray
    n: int


@dataclass(frozen=True)
class LogisticFit:
    coefficients: np.ndarray  # intercept first
    fitted_probs: np.ndarray
    deviance: float
    converged: bool
    iterations: int
    design_degree: int
    response_values: np.ndarray
    predictor_values: np.ndarray
    deviance_path: np.ndarray


def _require_kind(ds: Dataset, name: str, kind: ColumnKind) -> np.ndarray:
    col = ds.column(name)
    if col.kind is not kind:
        raise TypeMismatch(
            f"column {name!r} is {col.kind.value}, expected {kind.value}"
        )
    return np.asarray(col.values)


def fit_ols(ds: Dataset, response: str, predictor: str) -> LinearFit:
    """Closed-form least squares of response on a single predictor."""
    y = _require_kind(ds, response, ColumnKind.NUMERIC)
    x = _require_kind(ds, predictor, ColumnKind.NUMERIC)
    n = y.shape[0]
    if n < 3:
        raise TooFewRows(f"need at least 3 rows, got {n}")
    x_bar = np.mean(x)
    dx = x - x_bar
    sxx = np.sum(dx * dx)
    if sxx == 0.0:
        raise DegenerateDesign(f"predictor {predictor!r} is constant")
    slope = float(np.sum(dx * (y - np.mean(y))) / sxx)
    intercept = float(np.mean(y) - slope * x_bar)
    fitted = intercept + slope * x
    resid = y - fitted
    rss = float(np.sum(resid * resid))
    sigma_hat = float(np.sqrt(rss / (n - 2)))
    leverages = 1.0 / n + dx * dx / sxx
    return LinearFit(
        intercept=intercept,
        slope=slope,
        fitted=fitted,
        residuals_raw=resid,
        sigma_hat=sigma_hat,
        leverages=leverages,
        n=n,
    )


def logistic_design(x: np.ndarray, degree: int) -> np.ndarray:
    """(1, x) or (1, x, (x - mean(x))^2); the quadratic column is centered
    before squaring to tame collinearity with x."""
    if degree not in (1, 2):
        raise ValueError(f"degree must be 1 or 2, got {degree}")
    cols = [np.ones_like(x), x]
    if degree == 2:
        xc = x - np.mean(x)
        cols.append(xc * xc)
    return np.ascontiguousarray(np.column_stack(cols))


def fit_logistic(ds: Dataset, response: str, predictor: str, degree: int = 1) -> LogisticFit:
    """Binary logistic regression by IRLS.

    Convergence: max absolute coefficient change < 1e-8 within 50
    iterations. Any |coefficient| > 30 during iteration, or failure of
    step-halving to reduce the deviance, raises SeparationError.
    """
    y = _require_kind(ds, response, ColumnKind.BINARY)
    x = _require_kind(ds, predictor, ColumnKind.NUMERIC)
    n = y.shape[0]
    if n < 10:
        raise TooFewRows(f"need at least 10 rows, got {n}")
    if np.all(x == x[0]):
        raise DegenerateDesign(f"predictor {predictor!r} is constant")
    X = logistic_design(x, degree)
    y = np.ascontiguousarray(y)

    beta, dev_path, iterations, status = kernels.irls_logistic(
        X, y, IRLS_MAX_ITER, IRLS_TOL, COEF_CAP, MAX_HALVINGS
    )
    if status == 2:
        raise SeparationError(
            f"coefficient magnitude exceeded {COEF_CAP:g} (complete or "
            f"quasi-separation)"
        )
    if status == 3:
        raise SeparationError(
            f"step-halving failed to reduce the deviance after "
            f"{MAX_HALVINGS} halvings"
        )
    if status == 1:
        raise SeparationError(f"no convergence in {IRLS_MAX_ITER} iterations")

    eta = X @ beta
    probs = np.clip(expit(eta), PROB_EPS, 1.0 - PROB_EPS)
    return LogisticFit(
        coefficients=beta,
        fitted_probs=probs,
        deviance=float(dev_path[-1]),
        converged=True,
        iterations=int(iterations),
        design_degree=degree,
        response_values=y,
        predictor_values=x,
        deviance_path=dev_path,
    )


def residuals(fit: LinearFit | LogisticFit, kind: str) -> np.ndarray:
    """Residual vector of the requested kind.

    raw/standardized belong to linear fits, pearson/deviance to logistic
    fits; any other pairing is a KindMismatch.
    """
    if isinstance(fit, LinearFit):
        if kind == "raw":
            return fit.residuals_raw.copy()
        if kind == "standardized":
            # zero denominator only where the residual is itself forced to 0
            # (noiseless fit or a leverage-1 point)
            denom = fit.sigma_hat * np.sqrt(np.maximum(1.0 - fit.leverages, 0.0))
            safe = np.where(denom > 0.0, denom, 1.0)
            return np.where(denom > 0.0, fit.residuals_raw / safe, 0.0)
        raise KindMismatch(f"kind {kind!r} not valid for a linear fit")
    if isinstance(fit, LogisticFit):
        y = fit.response_values
        p = fit.fitted_probs
        if kind == "pearson":
            return (y - p) / np.sqrt(p * (1.0 - p))
        if kind == "deviance":
            loglik_term = np.where(y == 1.0, np.log(p), np.log(1.0 - p))
            return np.sign(y - p) * np.sqrt(-2.0 * loglik_term)
        raise KindMismatch(f"kind {kind!r} not valid for a logistic fit")
    raise KindMismatch(f"unsupported fit type {type(fit).__name__}")


def simulate_demo_logistic(
    n: int,
    beta: tuple[float, float, float],
    x_range: tuple[float, float],
    seed: int,
) -> Dataset:
    """Two-column demo dataset: x uniform on [lo, hi] and
    y ~ Bernoulli(inv-logit(b0 + b1*x + b2*x^2)). Deterministic per seed."""
    if n < 20:
        raise TooFewRows(f"need at least 20 rows, got {n}")
    lo, hi = x_range
    if not lo < hi:
        raise ValueError(f"x_range must satisfy lo < hi, got ({lo}, {hi})")
    b0, b1, b2 = beta
    rng = streams.master_stream(seed)
    x = lo + (hi - lo) * rng.random(n)
    p = expit(b0 + b1 * x + b2 * x * x)
    y = (rng.random(n) < p).astype(np.float64)
    return Dataset(
        "demo_logistic",
        (numeric_column("x", x), binary_column("y", y)),
    )
