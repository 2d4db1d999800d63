"""Shared dataset builders for the test suite."""

from __future__ import annotations

import numpy as np

from lineuplab import Dataset, parse_csv
from lineuplab.table import categorical_column, numeric_column


def grouped_csv(n_per_group: int = 20, shift: float = 0.0, seed: int = 7) -> str:
    """Three-group CSV with optional mean shift on the first group."""
    rng = np.random.default_rng(seed)
    rows = ["score,motivation"]
    for level_index, level in enumerate(["intrinsic", "extrinsic", "control"]):
        mu = 20.0 + (shift if level_index == 0 else 0.0)
        for value in rng.normal(mu, 4.0, n_per_group):
            rows.append(f"{round(float(value), 4)},{level}")
    return "\n".join(rows) + "\n"


def grouped_dataset(n_per_group: int = 20, shift: float = 0.0, seed: int = 7) -> Dataset:
    return parse_csv(grouped_csv(n_per_group, shift, seed), name="grouped")


def linear_dataset(n: int = 80, slope: float = 0.8, sd: float = 0.6, seed: int = 11) -> Dataset:
    rng = np.random.default_rng(seed)
    x = rng.uniform(-2.0, 3.0, n)
    y = 1.0 + slope * x + rng.normal(0.0, sd, n)
    return Dataset("linear", (numeric_column("y", y), numeric_column("x", x)))


def normal_dataset(n: int = 40, mu: float = 0.0, sd: float = 1.0, seed: int = 3) -> Dataset:
    rng = np.random.default_rng(seed)
    return Dataset("normal", (numeric_column("v", rng.normal(mu, sd, n)),))


def make_grouped(values_by_level: dict[str, list[float]], name: str = "g") -> Dataset:
    values = []
    labels = []
    for level, vals in values_by_level.items():
        values.extend(vals)
        labels.extend([level] * len(vals))
    return Dataset(
        name,
        (
            numeric_column("y", np.asarray(values, dtype=np.float64)),
            categorical_column("grp", labels),
        ),
    )
