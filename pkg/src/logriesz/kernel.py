"""Log-weighted Riesz kernel: K(t) = t^(-alpha) * log(1+t)^beta.

Admissible exponents keep K locally integrable in dimension N:
0 <= alpha <= N and beta > alpha - N.  Near t = 0 the weight log(1+t)
behaves like t, so K(t) ~ t^(beta-alpha); at infinity K(t) ~
t^(-alpha) * log(t)^beta.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InvalidAlpha, InvalidBeta, InvalidDimension, NonpositiveRadius


def approx_eq(a: float, b: float, tol: float = 1e-12) -> bool:
    """Equality for critical-exponent comparisons on user-supplied reals."""
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


@dataclass(frozen=True)
class AsymptoticSpec:
    """Power-log shape (A + r)^power * log(A + r)^logpower (A supplied by context)."""

    power: float
    logpower: float


class Regime(enum.Enum):
    AT_ZERO = "at_zero"
    AT_INFINITY = "at_infinity"


@dataclass(frozen=True)
class KernelParams:
    N: int
    alpha: float
    beta: float


def validate(params: KernelParams) -> None:
    """Reject kernels that are not locally integrable in dimension N."""
    if not isinstance(params.N, (int, np.integer)) or params.N < 1:
        raise InvalidDimension(f"dimension must be a positive integer, got {params.N!r}")
    if not (0.0 <= params.alpha <= params.N):
        raise InvalidAlpha(f"alpha must lie in [0, {params.N}], got {params.alpha}")
    if not (params.beta > params.alpha - params.N):
        raise InvalidBeta(
            f"beta must exceed alpha - N = {params.alpha - params.N}, got {params.beta}"
        )


def eval_kernel(params: KernelParams, t):
    """Evaluate K at t > 0 (scalar or array).

    log1p keeps the weight accurate for t near 0, where log(1+t) underflows
    to t with naive log(1+t) evaluation in float arithmetic.
    """
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr <= 0.0):
        raise NonpositiveRadius("kernel argument must be positive")
    out = t_arr ** (-params.alpha) * np.log1p(t_arr) ** params.beta
    if np.isscalar(t) or t_arr.ndim == 0:
        return float(out)
    return out


def kernel_asymptotics(params: KernelParams, regime: Regime) -> AsymptoticSpec:
    """Exact leading shape of K at zero (power beta-alpha, no log) or infinity."""
    if regime is Regime.AT_ZERO:
        return AsymptoticSpec(power=params.beta - params.alpha, logpower=0.0)
    if regime is Regime.AT_INFINITY:
        return AsymptoticSpec(power=-params.alpha, logpower=params.beta)
    raise TypeError(f"unknown regime {regime!r}")
