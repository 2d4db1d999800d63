"""Seeded RNG streams.

One master stream per lineup seed; each panel gets an independent
sub-stream derived from (seed, panel index) so panels are order-independent
and safely parallel. Normal deviates go through the package's own quantile
function (inverse-CDF of uniforms) so outputs are pinned to one code path.
"""

import numpy as np

from . import kernels


def master_stream(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def panel_stream(seed: int, panel: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(panel,))
    return np.random.Generator(np.random.PCG64(ss))


def uniforms(rng: np.random.Generator, n: int) -> np.ndarray:
    # floor away the one-in-2^53 exact zero so quantile stays finite
    return np.maximum(rng.random(n), 1e-300)


def normals(rng: np.random.Generator, n: int) -> np.ndarray:
    return kernels.norm_quantile(uniforms(rng, n))


def shuffled_indices(rng: np.random.Generator, n: int) -> np.ndarray:
    """Fisher-Yates permutation of 0..n-1 driven by the stream's uniforms."""
    if n < 2:
        return np.arange(n, dtype=np.int64)
    return kernels.fisher_yates(n, rng.random(n - 1))
