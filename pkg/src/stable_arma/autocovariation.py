"""Normalized autocovariation, the covariance substitute for heavy tails.

For a stationary process the population quantity at lag k is
E[X_t sign(X_{t-k})] / E|X_{t-k}|; the sample version divides a truncated
cross-sign sum by the total absolute sum.  Lag 0 is identically 1.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .stable import as_values

__all__ = ["NcvSystem", "ncv", "build_ncv_system"]


@dataclass
class NcvSystem:
    """Linear system lambda = Lambda * Phi built from sample autocovariations.

    lambda_vec[i-1] holds the lag-i value; Lambda_mat[i-1, j-1] holds the
    lag (i - j) value, so the diagonal is exactly 1.
    """

    lambda_vec: np.ndarray
    Lambda_mat: np.ndarray


def ncv(series, k: int) -> float:
    """Sample normalized autocovariation at (possibly negative) lag k.

    sum_{t=l}^{r} x_t sign(x_{t-k}) / sum_t |x_t| with l = max(1, 1+k) and
    r = min(N, N+k); sign(0) = 0.
    """
    x = as_values(series)
    n = x.size
    if n < 2:
        raise DomainError(f"series length must be >= 2, got {n}")
    if abs(k) >= n:
        raise DomainError(f"|lag| must be < series length, got lag {k} for length {n}")
    denom = np.abs(x).sum()
    if denom == 0.0:
        raise DomainError("normalized autocovariation undefined for an all-zero series")
    if k >= 0:
        num = float(np.dot(x[k:], np.sign(x[: n - k])))
    else:
        m = -k
        num = float(np.dot(x[: n - m], np.sign(x[m:])))
    return num / float(denom)


def build_ncv_system(series, a: int) -> NcvSystem:
    """Assemble the order-a system used by the modified Yule-Walker step."""
    x = as_values(series)
    if a < 1:
        raise DomainError(f"system order must be >= 1, got {a}")
    if x.size <= a:
        raise DomainError(f"series length {x.size} must exceed system order {a}")
    # Lags needed: 1..a for the vector, -(a-1)..(a-1) for the matrix.
    cache = {k: ncv(x, k) for k in range(-(a - 1), a + 1)}
    lam = np.array([cache[i] for i in range(1, a + 1)])
    mat = np.empty((a, a))
    for i in range(1, a + 1):
        for j in range(1, a + 1):
            mat[i - 1, j - 1] = cache[i - j]
    return NcvSystem(lambda_vec=lam, Lambda_mat=mat)
