"""Pure-numpy implementations of the hot kernels.

This is the fallback backend (``LINEUP_NO_JIT=1``) and the semantic
reference the jit twins in :mod:`lineuplab.kernels.jit` are tested against.
"""

import numpy as np
from scipy.special import erfc

_SQRT2 = np.sqrt(2.0)
_SQRT_2PI = np.sqrt(2.0 * np.pi)

# Acklam's rational approximation to the standard normal quantile.
# Peak relative error ~1.15e-9 before polishing; one Newton step against
# the erfc-based CDF brings it near machine precision.
_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
      1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
      6.680131188771972e+01, -1.328068155288572e+01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
      -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
      3.754408661907416e+00)
_P_LOW = 0.02425


def _tail_branch(q):
    num = ((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]
    den = (((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0
    return num / den


def norm_quantile(p):
    """Standard normal quantile of each element of ``p`` (all in (0,1)).

    Evaluated on the lower half via symmetry (1 - p is exact for p >= 0.5),
    so the Newton polish never subtracts two numbers near 1.
    """
    p = np.asarray(p, dtype=np.float64)
    upper = p > 0.5
    q = np.where(upper, 1.0 - p, p)
    x = np.empty_like(q)

    tail = q < _P_LOW
    if np.any(tail):
        t = np.sqrt(-2.0 * np.log(q[tail]))
        x[tail] = _tail_branch(t)
    mid = ~tail
    if np.any(mid):
        s = q[mid] - 0.5
        r = s * s
        num = ((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]
        den = ((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0
        x[mid] = s * num / den

    # Newton polish on the half-line (x <= 0): the cdf 0.5*erfc(-x/sqrt(2))
    # is small there, so cdf - q keeps full relative precision. Skipped
    # where the density underflows (far outside the accuracy contract).
    half_sq = 0.5 * x * x
    ok = half_sq < 700.0
    cdf = 0.5 * erfc(-x[ok] / _SQRT2)
    dens = np.exp(-half_sq[ok]) / _SQRT_2PI
    x[ok] -= (cdf - q[ok]) / dens
    return np.where(upper, -x, x)


def irls_logistic(X, y, max_iter, tol, coef_cap, max_halvings):
    """Logistic maximum likelihood via iteratively reweighted least squares.

    Returns ``(beta, dev_path, iterations, status)`` with status 0 converged,
    1 iteration limit, 2 coefficient cap exceeded, 3 step-halving exhausted.
    ``dev_path[0]`` is the deviance at the zero start; step-halving keeps the
    path non-increasing.
    """
    n, k = X.shape
    beta = np.zeros(k)
    eta = X @ beta
    dev = _deviance(y, eta)
    path = np.empty(max_iter + 1)
    path[0] = dev
    status = 1
    it = 0
    while it < max_iter:
        it += 1
        mu = _sigmoid(eta)
        w = np.maximum(mu * (1.0 - mu), 1e-10)
        z = eta + (y - mu) / w
        wx = w[:, None] * X
        A = X.T @ wx
        b = wx.T @ z
        cand = np.linalg.solve(A, b)

        step = cand - beta
        halved = 0
        beta_new = cand
        eta_new = X @ beta_new
        dev_new = _deviance(y, eta_new)
        slack = 1e-9 * (1.0 + abs(dev))
        while dev_new > dev + slack and halved < max_halvings:
            halved += 1
            step = step / 2.0
            beta_new = beta + step
            eta_new = X @ beta_new
            dev_new = _deviance(y, eta_new)
        if dev_new > dev + slack:
            status = 3
            path[it] = dev_new
            return beta_new, path[: it + 1], it, status

        path[it] = dev_new
        delta = np.max(np.abs(beta_new - beta))
        beta = beta_new
        eta = eta_new
        dev = dev_new
        if np.max(np.abs(beta)) > coef_cap:
            status = 2
            break
        if delta < tol:
            status = 0
            break
    return beta, path[: it + 1], it, status


def _sigmoid(eta):
    out = np.empty_like(eta)
    pos = eta >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-eta[pos]))
    t = np.exp(eta[~pos])
    out[~pos] = t / (1.0 + t)
    return out


def _deviance(y, eta):
    # -2 * sum(y*eta - log(1 + exp(eta))), overflow-safe softplus form.
    softplus = np.maximum(eta, 0.0) + np.log1p(np.exp(-np.abs(eta)))
    return -2.0 * np.sum(y * eta - softplus)


def binned_sums(x_sorted, v_sorted, n_bins):
    """Partition two aligned sorted vectors into ``n_bins`` contiguous
    equal-count bins (sizes differ by at most 1, larger bins first) and
    return per-bin sums of both plus the counts.

    Sums accumulate strictly left to right; vectorized reductions
    (np.sum, np.add.reduceat) associate differently and would give
    results a few ulp away from the jit backend."""
    n = x_sorted.shape[0]
    base, rem = divmod(n, n_bins)
    counts = np.full(n_bins, base, dtype=np.int64)
    counts[:rem] += 1
    sum_x = np.zeros(n_bins)
    sum_v = np.zeros(n_bins)
    pos = 0
    for g in range(n_bins):
        for _ in range(int(counts[g])):
            sum_x[g] += x_sorted[pos]
            sum_v[g] += v_sorted[pos]
            pos += 1
    return sum_x, sum_v, counts


def fisher_yates(n, u):
    """Permutation of 0..n-1 from n-1 uniform draws (Fisher-Yates, swapping
    from the back; ``u[k]`` drives the swap at position n-1-k)."""
    idx = np.arange(n, dtype=np.int64)
    for i in range(n - 1, 0, -1):
        j = int(u[n - 1 - i] * (i + 1))
        idx[i], idx[j] = idx[j], idx[i]
    return idx
