"""Numba-compiled twins of the reference kernels.

Loop-style bodies; same contracts and (up to last-bit float noise in the
reductions) same outputs as :mod:`lineuplab.kernels.reference`.
"""

import math

import numpy as np
from numba import njit

_SQRT2 = math.sqrt(2.0)
_SQRT_2PI = math.sqrt(2.0 * math.pi)

_A0, _A1, _A2, _A3, _A4, _A5 = (
    -3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
    1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_B0, _B1, _B2, _B3, _B4 = (
    -5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
    6.680131188771972e+01, -1.328068155288572e+01)
_C0, _C1, _C2, _C3, _C4, _C5 = (
    -7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
    -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_D0, _D1, _D2, _D3 = (
    7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
    3.754408661907416e+00)
_P_LOW = 0.02425


@njit(cache=True)
def _nq_scalar(p):
    # reflect to the lower half: 1 - p is exact for p >= 0.5, and the
    # Newton polish keeps full precision when the cdf is small
    upper = p > 0.5
    q = 1.0 - p if upper else p

    if q < _P_LOW:
        t = math.sqrt(-2.0 * math.log(q))
        num = ((((_C0 * t + _C1) * t + _C2) * t + _C3) * t + _C4) * t + _C5
        den = (((_D0 * t + _D1) * t + _D2) * t + _D3) * t + 1.0
        x = num / den
    else:
        s = q - 0.5
        r = s * s
        num = ((((_A0 * r + _A1) * r + _A2) * r + _A3) * r + _A4) * r + _A5
        den = ((((_B0 * r + _B1) * r + _B2) * r + _B3) * r + _B4) * r + 1.0
        x = s * num / den

    half_sq = 0.5 * x * x
    if half_sq < 700.0:
        cdf = 0.5 * math.erfc(-x / _SQRT2)
        dens = math.exp(-half_sq) / _SQRT_2PI
        x -= (cdf - q) / dens
    return -x if upper else x


@njit(cache=True)
def norm_quantile(p):
    out = np.empty_like(p)
    for i in range(p.shape[0]):
        out[i] = _nq_scalar(p[i])
    return out


@njit(cache=True)
def _sigmoid_scalar(eta):
    if eta >= 0.0:
        return 1.0 / (1.0 + math.exp(-eta))
    t = math.exp(eta)
    return t / (1.0 + t)


@njit(cache=True)
def _deviance(y, eta):
    acc = 0.0
    for i in range(y.shape[0]):
        e = eta[i]
        softplus = max(e, 0.0) + math.log1p(math.exp(-abs(e)))
        acc += y[i] * e - softplus
    return -2.0 * acc


@njit(cache=True)
def irls_logistic(X, y, max_iter, tol, coef_cap, max_halvings):
    n, k = X.shape
    beta = np.zeros(k)
    eta = np.zeros(n)
    dev = _deviance(y, eta)
    path = np.empty(max_iter + 1)
    path[0] = dev
    status = 1
    it = 0
    A = np.empty((k, k))
    b = np.empty(k)
    while it < max_iter:
        it += 1
        A[:, :] = 0.0
        b[:] = 0.0
        for i in range(n):
            mu = _sigmoid_scalar(eta[i])
            w = max(mu * (1.0 - mu), 1e-10)
            z = eta[i] + (y[i] - mu) / w
            for a in range(k):
                xa = X[i, a]
                b[a] += w * xa * z
                for c in range(k):
                    A[a, c] += w * xa * X[i, c]
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
        delta = 0.0
        for a in range(k):
            d = abs(beta_new[a] - beta[a])
            if d > delta:
                delta = d
        beta = beta_new
        eta = eta_new
        dev = dev_new
        cap_hit = False
        for a in range(k):
            if abs(beta[a]) > coef_cap:
                cap_hit = True
        if cap_hit:
            status = 2
            break
        if delta < tol:
            status = 0
            break
    return beta, path[: it + 1], it, status


@njit(cache=True)
def binned_sums(x_sorted, v_sorted, n_bins):
    n = x_sorted.shape[0]
    base = n // n_bins
    rem = n % n_bins
    sum_x = np.zeros(n_bins)
    sum_v = np.zeros(n_bins)
    counts = np.empty(n_bins, dtype=np.int64)
    pos = 0
    for g in range(n_bins):
        size = base + 1 if g < rem else base
        counts[g] = size
        for _ in range(size):
            sum_x[g] += x_sorted[pos]
            sum_v[g] += v_sorted[pos]
            pos += 1
    return sum_x, sum_v, counts


@njit(cache=True)
def fisher_yates(n, u):
    idx = np.arange(n)
    for i in range(n - 1, 0, -1):
        j = int(u[n - 1 - i] * (i + 1))
        tmp = idx[i]
        idx[i] = idx[j]
        idx[j] = tmp
    return idx
