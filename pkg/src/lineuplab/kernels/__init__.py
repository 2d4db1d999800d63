"""Hot-kernel backend selection.

The jit backend (numba) is used when available; set ``LINEUP_NO_JIT=1`` to
force the pure-numpy reference implementations. ``BACKEND`` records the
active choice. Both backends are importable directly for parity tests and
the benchmark in ``benchmarks/kernel_bench.py``.
"""

import os

from . import reference

if os.environ.get("LINEUP_NO_JIT", "") not in ("", "0"):
    _impl = reference
    BACKEND = "reference"
else:
    try:
        from . import jit as _impl
        BACKEND = "jit"
    except ImportError:
        _impl = reference
        BACKEND = "reference"

norm_quantile = _impl.norm_quantile
irls_logistic = _impl.irls_logistic
binned_sums = _impl.binned_sums
fisher_yates = _impl.fisher_yates

__all__ = [
    "BACKEND",
    "reference",
    "norm_quantile",
    "irls_logistic",
    "binned_sums",
    "fisher_yates",
]
