"""Predicted growth/decay envelopes for K * f and their numerical checks.

The predictions mirror the sharp two-sided estimates for kernels
t^(-alpha) log(1+t)^beta against profiles with declared power-log decay
(A + r)^(-sigma) log(A + r)^kappa:

lower bounds (valid for r large, shapes in (1 + r)-form)
  * baseline (-alpha, beta) whenever the profile holds positive mass near 0;
  * improved (-alpha, 1 + beta) when beta <= 0 and the profile dominates
    c r^(-N) at infinity (declared decay no faster than r^(-N));
  * tail-driven (N - alpha - sigma, beta + kappa) when sigma > N - alpha,
    or (0, 1 + beta + kappa) on the critical line sigma = N - alpha with
    1 + beta + kappa < 0; divergence otherwise.

upper bounds (alpha < N), shapes in (A + r)-form
  sigma < N - alpha            out of hypothesis (divergent)
  sigma = N - alpha            (0, 1+beta+kappa) if 1+beta+kappa < 0, else divergent
  N - alpha < sigma < N        (N-alpha-sigma, beta+kappa)
  sigma = N, kappa > -1        (-alpha, 1+beta+kappa)
  sigma = N, kappa = -1        (-alpha, beta) with an extra loglog factor
  sigma = N, kappa < -1        (-alpha, beta)
  sigma > N                    (-alpha, beta)
and for alpha = N the same ladder with every power replaced by
max(-sigma, -N) and the sigma < N rows carrying 1+beta+kappa.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .convolution import ConvolutionResult, QuadratureConfig, DEFAULT_CONFIG, RadialProfile, convolve_radial
from .errors import DegenerateSamples, MissingAsymptoticSpec, OutOfHypothesis
from .kernel import AsymptoticSpec, KernelParams, validate


class BoundKind(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"
    DIVERGENT = "divergent"


@dataclass(frozen=True)
class PredictedBound:
    kind: BoundKind
    spec: AsymptoticSpec | None
    extra_loglog: bool = False
    scale: float = 1.0

    def shape(self, r):
        """Evaluate the predicted envelope (A+r)^p log(A+r)^q [loglog(e+r)]."""
        if self.spec is None:
            raise OutOfHypothesis("divergent prediction has no finite shape")
        r = np.asarray(r, dtype=float)
        base = self.scale + r
        out = base ** self.spec.power * np.log(base) ** self.spec.logpower
        if self.extra_loglog:
            out = out * np.log(np.log(math.e + r))
        return out[()]


@dataclass(frozen=True)
class FitResult:
    power_est: float
    logpower_est: float
    residual: float


def lower_bound_prediction(kernel: KernelParams, f: RadialProfile) -> PredictedBound:
    """Strongest applicable lower envelope for (K * f)(r) at large r."""
    validate(kernel)
    N, alpha, beta = kernel.N, kernel.alpha, kernel.beta
    candidates: list[tuple[float, float]] = []

    if f.support_radius is None:
        if f.infinity_spec is None:
            raise MissingAsymptoticSpec("lower bounds need a declared tail or compact support")
        sigma = -f.infinity_spec.power
        kappa = f.infinity_spec.logpower
        gap = N - alpha - sigma
        if gap > 0.0 or (gap == 0.0 and 1.0 + beta + kappa >= 0.0):
            return PredictedBound(kind=BoundKind.DIVERGENT, spec=None)
        if gap < 0.0:
            candidates.append((gap, beta + kappa))
        else:
            candidates.append((0.0, 1.0 + beta + kappa))
        dominates_newton = sigma < N or (sigma == N and kappa >= 0.0)
        if beta <= 0.0 and dominates_newton:
            candidates.append((-alpha, 1.0 + beta))

    if f.positive_mass_near_zero:
        candidates.append((-alpha, beta))

    if not candidates:
        raise MissingAsymptoticSpec(
            "no lower bound applies: declare a tail shape or positive mass near zero"
        )
    power, logpower = max(candidates)
    return PredictedBound(kind=BoundKind.LOWER, spec=AsymptoticSpec(power, logpower), scale=1.0)


def upper_bound_prediction(kernel: KernelParams, f: RadialProfile) -> PredictedBound:
    """Sharp upper envelope for (K * f)(r), (A + r)-form with the profile's A."""
    validate(kernel)
    N, alpha, beta = kernel.N, kernel.alpha, kernel.beta
    if f.infinity_spec is None:
        raise MissingAsymptoticSpec("upper bounds need a declared tail shape")
    if f.scale <= 1.0:
        raise OutOfHypothesis("upper envelopes are stated for profiles with scale A > 1")
    sigma = -f.infinity_spec.power
    kappa = f.infinity_spec.logpower
    A = f.scale

    if sigma < N - alpha:
        raise OutOfHypothesis("declared decay slower than N - alpha: convolution diverges")
    if sigma == N - alpha:
        if 1.0 + beta + kappa < 0.0:
            return PredictedBound(BoundKind.UPPER, AsymptoticSpec(0.0, 1.0 + beta + kappa), scale=A)
        raise OutOfHypothesis(
            "critical decay with 1 + beta + kappa >= 0 diverges; no finite envelope exists"
        )

    if alpha < N:
        if sigma < N:
            spec = AsymptoticSpec(N - alpha - sigma, beta + kappa)
        elif sigma > N:
            spec = AsymptoticSpec(-alpha, beta)
        elif kappa > -1.0:
            spec = AsymptoticSpec(-alpha, 1.0 + beta + kappa)
        elif kappa < -1.0:
            spec = AsymptoticSpec(-alpha, beta)
        else:
            return PredictedBound(BoundKind.UPPER, AsymptoticSpec(-alpha, beta), extra_loglog=True, scale=A)
        return PredictedBound(BoundKind.UPPER, spec, scale=A)

    # alpha == N: powers saturate at -N
    if sigma <= 0.0:
        raise OutOfHypothesis("alpha = N needs a decaying profile")
    if sigma < N:
        spec = AsymptoticSpec(-sigma, 1.0 + beta + kappa)
    elif sigma > N:
        spec = AsymptoticSpec(-N, beta)
    elif kappa > -1.0:
        spec = AsymptoticSpec(-N, 1.0 + beta + kappa)
    elif kappa < -1.0:
        spec = AsymptoticSpec(-N, beta)
    else:
        return PredictedBound(BoundKind.UPPER, AsymptoticSpec(-N, beta), extra_loglog=True, scale=A)
    return PredictedBound(BoundKind.UPPER, spec, scale=A)


def fit_asymptotics(samples: Sequence[tuple[float, float]], A: float = 1.0) -> FitResult:
    """Least squares of log v on {1, log(A+r), loglog(A+r)}.

    Exact (up to conditioning) on pure shapes c (A+r)^a log(A+r)^b.  Needs
    at least 6 samples spanning 3 decades with positive values.
    """
    arr = np.asarray(samples, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 6:
        raise DegenerateSamples("need at least 6 (radius, value) samples")
    radii, values = arr[:, 0], arr[:, 1]
    if np.any(values <= 0.0) or not np.all(np.isfinite(values)):
        raise DegenerateSamples("sample values must be positive and finite")
    if radii.max() / radii.min() < 1e3:
        raise DegenerateSamples("sample radii must span at least 3 decades")
    logs = np.log(A + radii)
    if logs.min() <= 1.0:
        raise DegenerateSamples("A + r must exceed e for the loglog basis column")
    X = np.column_stack([np.ones_like(logs), logs, np.log(logs)])
    y = np.log(values)
    coef, *_ = np.linalg.lstsq(X, y, rcond=None)
    fitted = X @ coef
    residual = float(np.max(np.abs(np.expm1(fitted - y))))
    return FitResult(power_est=float(coef[1]), logpower_est=float(coef[2]), residual=residual)


@dataclass(frozen=True)
class BoundCheckReport:
    case_id: str
    predicted: PredictedBound
    fitted: FitResult
    margin: float
    passed: bool
    radii: tuple
    values: tuple

    def to_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "predicted": {
                "power": self.predicted.spec.power,
                "logpower": self.predicted.spec.logpower,
                "loglog": self.predicted.extra_loglog,
            },
            "fitted": {
                "power": self.fitted.power_est,
                "logpower": self.fitted.logpower_est,
                "residual": self.fitted.residual,
            },
            "margin": self.margin,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def check_bound(
    kernel: KernelParams,
    f: RadialProfile,
    bound: PredictedBound,
    window: tuple[float, float],
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    case_id: str = "",
) -> BoundCheckReport:
    """Sample K * f on 8 log-spaced radii and compare against the envelope.

    Passes when the value/shape ratio stays within a factor 10 across the
    window (constants are not tracked, shapes are).
    """
    if bound.kind is BoundKind.DIVERGENT or bound.spec is None:
        raise OutOfHypothesis("cannot window-check a divergent prediction")
    lo, hi = window
    if not (0.0 < lo < hi):
        raise DegenerateSamples("window must satisfy 0 < lo < hi")
    radii = np.geomspace(lo, hi, 8)
    values = []
    for r in radii:
        res = convolve_radial(kernel, f, float(r), cfg)
        if res.divergent:
            raise OutOfHypothesis("convolution divergent inside the check window")
        values.append(res.value)
    values = np.asarray(values)
    shape = np.asarray(bound.shape(radii), dtype=float)
    ratios = values / shape
    margin = float(ratios.max() / ratios.min())
    passed = bool(margin < 10.0 and ratios.min() > 0.0)
    fitted = fit_asymptotics(np.column_stack([radii, values]), A=bound.scale)
    return BoundCheckReport(
        case_id=case_id,
        predicted=bound,
        fitted=fitted,
        margin=margin,
        passed=passed,
        radii=tuple(float(x) for x in radii),
        values=tuple(float(x) for x in values),
    )
