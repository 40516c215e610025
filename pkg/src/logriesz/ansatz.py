"""Explicit supersolution family built from w(x) = sqrt(A + |x|^2).

The source v = w^(-gamma) log(w)^tau has a decaying potential u with
-Laplace(u) = v, and the fourth-order drift expression evaluates in closed
form (r^2 = w^2 - A, L = log w):

    Lap^2(u) - lam*Lap(u) = -Lap(v) + lam*v
      = gamma(N-gamma-2) w^(-gamma-2) L^tau
      + tau(2gamma+2-N)  w^(-gamma-2) L^(tau-1)
      + A gamma(gamma+2) w^(-gamma-4) L^tau
      - A tau(2gamma+2)  w^(-gamma-4) L^(tau-1)
      + tau(1-tau) r^2   w^(-gamma-4) L^(tau-2)
      + lam w^(-gamma) L^tau.

The half-drift certificate -Lap(v) + (lam/2) v is nonnegative for every
lam >= lambda_star = 2 max(0, sup_r Lap(v)/v); above that threshold the
left side dominates (lam/2) v, which is what the case catalogue compares
the reaction term against.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.optimize import minimize_scalar

from .bounds import BoundKind, PredictedBound
from .convolution import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    RadialProfile,
    convolve_radial,
    newtonian_potential_radial,
)
from .errors import (
    EmptyParameterInterval,
    HypothesisViolated,
    InvalidDimension,
    OutOfHypothesis,
    ParameterError,
    ScalingUndefined,
)
from .kernel import AsymptoticSpec, KernelParams, approx_eq, validate


@dataclass(frozen=True)
class AnsatzParams:
    N: int
    gamma: float
    tau: float
    A: float

    def __post_init__(self) -> None:
        if not isinstance(self.N, (int, np.integer)) or self.N < 3:
            raise InvalidDimension("ansatz family needs integer N >= 3")
        if not (2.0 < self.gamma <= self.N):
            raise ParameterError(f"gamma must lie in (2, N], got {self.gamma}")
        if not (-1.0 < self.tau < 1.0):
            raise ParameterError(f"tau must lie in (-1, 1), got {self.tau}")
        if not (self.A > math.e):
            raise ParameterError(f"A must exceed e so log(w) > 1/2 everywhere, got {self.A}")


@dataclass(frozen=True)
class ExistenceCase:
    case_id: str
    gamma: float
    tau: float
    constraint_notes: str = ""


def w_eval(params: AnsatzParams, r):
    r = np.asarray(r, dtype=float)
    return np.sqrt(params.A + r * r)[()]


def source_eval(params: AnsatzParams, r):
    """v(r) = w^(-gamma) log(w)^tau; log(w) > 1/2 since A > e."""
    r = np.asarray(r, dtype=float)
    lw = 0.5 * np.log(params.A + r * r)
    return (np.exp(-0.5 * params.gamma * np.log(params.A + r * r)) * lw ** params.tau)[()]


def source_profile(params: AnsatzParams) -> RadialProfile:
    return RadialProfile(
        evaluate=lambda s: source_eval(params, s),
        zero_spec=AsymptoticSpec(0.0, 0.0),
        infinity_spec=AsymptoticSpec(-params.gamma, params.tau),
        scale=math.sqrt(params.A),
        positive_mass_near_zero=True,
    )


def u_eval(params: AnsatzParams, r: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Potential of the source: -Laplace(u) = v, u decaying (gamma > 2)."""
    return newtonian_potential_radial(params.N, source_profile(params), r, cfg)


def biharmonic_closed_form(params: AnsatzParams, lam: float, r):
    """Lap^2(u) - lam*Lap(u) at radius r (vectorized), from the display above."""
    N, g, tau, A = params.N, params.gamma, params.tau, params.A
    r = np.asarray(r, dtype=float)
    w2 = A + r * r
    L = 0.5 * np.log(w2)

    def w_pow(e):
        return np.exp(-0.5 * e * np.log(w2))

    out = (
        g * (N - g - 2.0) * w_pow(g + 2.0) * L ** tau
        + tau * (2.0 * g + 2.0 - N) * w_pow(g + 2.0) * L ** (tau - 1.0)
        + A * g * (g + 2.0) * w_pow(g + 4.0) * L ** tau
        - A * tau * (2.0 * g + 2.0) * w_pow(g + 4.0) * L ** (tau - 1.0)
        + tau * (1.0 - tau) * (r * r) * w_pow(g + 4.0) * L ** (tau - 2.0)
        + lam * w_pow(g) * L ** tau
    )
    return out[()]


def lambda_star(params: AnsatzParams, r_max: float = 1e8, n_grid: int = 400) -> float:
    """Smallest lam with -Lap(v) + (lam/2) v >= 0 everywhere.

    Equals 2 sup_r Lap(v)/v clipped at 0; grid scan plus bounded scalar
    refinement around the best grid point.
    """
    root_a = math.sqrt(params.A)

    def h(r):
        neg_lap_v = biharmonic_closed_form(params, 0.0, r)
        return -2.0 * neg_lap_v / source_eval(params, r)

    grid = np.concatenate(([0.0], np.geomspace(1e-4 * root_a, r_max, n_grid)))
    vals = h(grid)
    i = int(np.argmax(vals))
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, len(grid) - 1)]
    if hi <= lo:
        return max(float(vals[i]), 0.0)
    # refine in the log coordinate x = log(root_a + r)
    res = minimize_scalar(
        lambda x: -h(max(math.exp(x) - root_a, 0.0)),
        bounds=(math.log(root_a + lo), math.log(root_a + hi)),
        method="bounded",
        options={"xatol": 1e-12},
    )
    best = max(float(vals[i]), float(-res.fun))
    return max(best, 0.0)


def u_upper_bound(params: AnsatzParams) -> PredictedBound:
    """Sharp envelope of the potential: w^(2-gamma) log^tau w for gamma < N,
    w^(2-N) log^(1+tau) w at gamma = N; stated in (sqrt(A)+r)-form."""
    g, N, tau = params.gamma, params.N, params.tau
    if approx_eq(g, float(N)):
        spec = AsymptoticSpec(-(N - 2.0), 1.0 + tau)
    else:
        spec = AsymptoticSpec(-(g - 2.0), tau)
    return PredictedBound(BoundKind.UPPER, spec, scale=math.sqrt(params.A))


def rhs_upper_bound(params: AnsatzParams, kernel: KernelParams, p: float, q: float) -> PredictedBound:
    """Envelope of (K * u^p) u^q from the sharp product estimates.

    gamma < N (exponents below are in the potential power g2 = gamma - 2):
      p = (N-alpha)/g2, beta + tau*p < -1   (-g2*q, 1+beta+tau(p+q))
      (N-alpha)/g2 < p < N/g2              (N-alpha-g2(p+q), beta+tau(p+q))
      p = N/g2, tau*p > -1                 (-alpha-g2*q, 1+beta+tau(p+q))
      p > N/g2                             (-alpha-g2*q, beta+tau*q)
    gamma = N: same ladder with tau replaced by 1+tau in every log exponent
    and the critical column p = N/(N-2) valid for all tau.
    alpha = N (tau = 0 only):
      gamma < N, p < N/(gamma-2)           (-(gamma-2)(p+q), 1+beta)
      gamma = N, p > N/(N-2)               (-N-(N-2)q, beta+q)
    """
    validate(kernel)
    if kernel.N != params.N:
        raise HypothesisViolated("kernel and ansatz dimensions disagree")
    if p <= 0.0 or q <= 0.0:
        raise ParameterError("exponents p, q must be positive")
    N, alpha, beta = params.N, kernel.alpha, kernel.beta
    g, tau = params.gamma, params.tau
    A = math.sqrt(params.A)
    gamma_is_n = approx_eq(g, float(N))

    if approx_eq(alpha, float(N)):
        if not approx_eq(tau, 0.0):
            raise OutOfHypothesis("alpha = N product bounds are stated for tau = 0 only")
        if not gamma_is_n:
            if p < N / (g - 2.0):
                return PredictedBound(BoundKind.UPPER, AsymptoticSpec(-(g - 2.0) * (p + q), 1.0 + beta), scale=A)
            raise OutOfHypothesis("alpha = N, gamma < N bound needs p < N/(gamma-2)")
        if p > N / (N - 2.0):
            return PredictedBound(BoundKind.UPPER, AsymptoticSpec(-N - (N - 2.0) * q, beta + q), scale=A)
        raise OutOfHypothesis("alpha = N, gamma = N bound needs p > N/(N-2)")

    g2 = g - 2.0
    p_low = (N - alpha) / g2
    p_high = N / g2
    # equality rows first: the open-interval row would otherwise claim
    # p within float noise of N/(gamma-2) (e.g. 3/0.8 != 3.75 exactly)
    if gamma_is_n:
        tau_eff = 1.0 + tau
        if approx_eq(p, p_low):
            if beta + tau_eff * p < -1.0:
                return PredictedBound(BoundKind.UPPER, AsymptoticSpec(-g2 * q, 1.0 + beta + tau_eff * (p + q)), scale=A)
            raise OutOfHypothesis("critical p = (N-alpha)/(N-2) needs beta + (1+tau)p < -1")
        if approx_eq(p, p_high):
            return PredictedBound(BoundKind.UPPER, AsymptoticSpec(-alpha - g2 * q, 1.0 + beta + tau_eff * (p + q)), scale=A)
        if p_low < p < p_high:
            return PredictedBound(BoundKind.UPPER, AsymptoticSpec(N - alpha - g2 * (p + q), beta + tau_eff * (p + q)), scale=A)
        if p > p_high:
            return PredictedBound(BoundKind.UPPER, AsymptoticSpec(-alpha - g2 * q, beta + tau_eff * q), scale=A)
        raise OutOfHypothesis("p below (N-alpha)/(N-2): the convolution of u^p diverges")

    if approx_eq(p, p_low):
        if beta + tau * p < -1.0:
            return PredictedBound(BoundKind.UPPER, AsymptoticSpec(-g2 * q, 1.0 + beta + tau * (p + q)), scale=A)
        raise OutOfHypothesis("critical p = (N-alpha)/(gamma-2) needs beta + tau*p < -1")
    if approx_eq(p, p_high):
        if tau * p > -1.0:
            return PredictedBound(BoundKind.UPPER, AsymptoticSpec(-alpha - g2 * q, 1.0 + beta + tau * (p + q)), scale=A)
        raise OutOfHypothesis("p = N/(gamma-2) with tau*p <= -1 has no catalogued product bound")
    if p_low < p < p_high:
        return PredictedBound(BoundKind.UPPER, AsymptoticSpec(N - alpha - g2 * (p + q), beta + tau * (p + q)), scale=A)
    if p > p_high:
        return PredictedBound(BoundKind.UPPER, AsymptoticSpec(-alpha - g2 * q, beta + tau * q), scale=A)
    raise OutOfHypothesis("p below (N-alpha)/(gamma-2): the convolution of u^p diverges")


class PotentialTable:
    """Spline cache of the potential u on [0, r_max], exact at its nodes.

    Interpolates log u against log(sqrt(A) + r); every node value is a
    genuine layer-cake quadrature, so the cache only smooths between
    quadrature points.
    """

    def __init__(self, params: AnsatzParams, cfg: QuadratureConfig = DEFAULT_CONFIG,
                 r_max: float = 1e10, n_nodes: int = 480):
        self.params = params
        self.r_max = float(r_max)
        root_a = math.sqrt(params.A)
        radii = np.concatenate(([0.0], np.geomspace(1e-3 * root_a, self.r_max, n_nodes)))
        values = np.array([u_eval(params, float(r), cfg) for r in radii])
        if np.any(values <= 0.0):
            raise ParameterError("potential must be positive")
        x = np.log(root_a + radii)
        self._root_a = root_a
        self._spline = CubicSpline(x, np.log(values))

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        clipped = np.minimum(r, self.r_max)
        return np.exp(self._spline(np.log(self._root_a + clipped)))[()]


@dataclass(frozen=True)
class VerificationReport:
    case_id: str
    N: int
    alpha: float
    beta: float
    p: float
    q: float
    gamma: float
    tau: float
    A: float
    lam: float
    lam_threshold: float
    S: float
    C: float
    stable: bool
    passed: bool
    margin_profile: tuple

    def to_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "params": {
                "N": self.N, "alpha": self.alpha, "beta": self.beta,
                "p": self.p, "q": self.q,
                "gamma": self.gamma, "tau": self.tau, "A": self.A,
            },
            "lambda": self.lam,
            "lambda_star": self.lam_threshold,
            "S": self.S,
            "C": self.C,
            "stable": self.stable,
            "pass": self.passed,
            "margin_profile": [list(row) for row in self.margin_profile],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def verify_supersolution(
    case: ExistenceCase,
    kernel: KernelParams,
    p: float,
    q: float,
    lam: float | None = None,
    A: float = 10.0,
    grid: Sequence[float] | None = None,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Certify L(r) = Lap^2(u) - lam*Lap(u) >= S^(-1) (K * u^p)(r) u(r)^q on a grid.

    S is the largest reaction/drift ratio on the grid; the scaled profile
    C u with C = S^(-1/(p+q-1)) then satisfies the inequality at every grid
    point.  Stability demands the grid extension to twice the outer radius
    move S by less than 10 percent.
    """
    validate(kernel)
    params = AnsatzParams(N=kernel.N, gamma=case.gamma, tau=case.tau, A=A)
    threshold = lambda_star(params)
    if lam is None:
        lam = 2.0 * threshold if threshold > 0.0 else 1.0
    if lam <= threshold:
        raise HypothesisViolated(f"lambda must exceed the drift threshold {threshold}")

    if grid is None:
        grid = np.concatenate(([0.0], np.geomspace(1e-2, 1e6, 59)))
    grid = np.asarray(grid, dtype=float)
    r_out = float(grid.max())
    ext = np.geomspace(r_out * 1.09, 2.0 * r_out, 8)

    table = PotentialTable(params, cfg, r_max=max(4.0 * cfg.truncation_factor * r_out, 1e6))

    N, alpha = kernel.N, kernel.alpha
    sigma_up = (case.gamma - 2.0) * p
    logpow_up = (1.0 + case.tau) * p if approx_eq(case.gamma, float(N)) else case.tau * p
    if abs(sigma_up - (N - alpha)) < 1e-9:
        sigma_up = N - alpha  # snap onto the critical line the case hypothesis targets
    powered = RadialProfile(
        evaluate=lambda s: table(s) ** p,
        zero_spec=AsymptoticSpec(0.0, 0.0),
        infinity_spec=AsymptoticSpec(-sigma_up, logpow_up),
        scale=math.sqrt(A),
        positive_mass_near_zero=True,
    )

    def ratio_rows(radii):
        rows = []
        for r in radii:
            lhs = float(biharmonic_closed_form(params, lam, r))
            conv = convolve_radial(kernel, powered, float(r), cfg)
            rhs = conv.value * float(table(r)) ** q
            rows.append((float(r), lhs, rhs))
        return rows

    main_rows = ratio_rows(grid)
    s_main = max((rhs / lhs) for _, lhs, rhs in main_rows)
    ext_rows = ratio_rows(ext)
    s_ext = max(s_main, max((rhs / lhs) for _, lhs, rhs in ext_rows))
    stable = bool(abs(s_ext - s_main) <= 0.1 * s_main)
    s_final = s_ext
    passed = bool(math.isfinite(s_final) and s_final > 0.0 and stable)

    if approx_eq(p + q, 1.0):
        if s_final <= 1.0:
            scale_c = 1.0
        else:
            raise ScalingUndefined("p + q = 1 admits no scaling fix when S > 1")
    else:
        scale_c = s_final ** (-1.0 / (p + q - 1.0))

    return VerificationReport(
        case_id=case.case_id,
        N=N, alpha=kernel.alpha, beta=kernel.beta, p=p, q=q,
        gamma=case.gamma, tau=case.tau, A=A,
        lam=float(lam), lam_threshold=float(threshold),
        S=float(s_final), C=float(scale_c),
        stable=stable, passed=passed,
        margin_profile=tuple(main_rows + ext_rows),
    )


def _midpoint(lo: float, hi: float) -> float:
    return 0.5 * (lo + hi)


def choose_case_params(case_id: str, N: int, alpha: float, beta: float, p: float, q: float) -> ExistenceCase:
    """Pick (gamma, tau) for a catalogued existence case, or explain why not.

    Open intervals are resolved to midpoints; hypotheses that fail raise
    HypothesisViolated, admissible-but-empty parameter intervals raise
    EmptyParameterInterval.
    """
    if N < 3:
        raise InvalidDimension("constructions need N >= 3")
    validate(KernelParams(N=N, alpha=alpha, beta=beta))
    if p <= 0.0 or q <= 0.0:
        raise ParameterError("exponents p, q must be positive")
    t = N - 2.0
    thr = (N - alpha) / t
    thr_n = N / t
    thr_2 = (2.0 * N - alpha) / t
    s = p + q

    if case_id in ("1a", "1b", "2", "3", "4", "5", "6") and approx_eq(alpha, float(N)):
        raise HypothesisViolated("cases 1a-6 need alpha < N; use T4-1 or T4-2")
    if case_id in ("T4-1", "T4-2") and not approx_eq(alpha, float(N)):
        raise HypothesisViolated("T4 cases need alpha = N")

    if case_id == "1a":
        if not (p > thr and q > thr and s > thr_2):
            raise HypothesisViolated("case 1a needs p, q > (N-alpha)/(N-2) and p+q > (2N-alpha)/(N-2)")
        lo = max(2.0 + (N - alpha) / p, 2.0 + (2.0 * N - alpha) / s, 2.0)
        hi = min(2.0 + N / p, float(N))
        if not lo < hi:
            raise EmptyParameterInterval(f"no admissible gamma in ({lo}, {hi}); p > N/(N-2) wants case 1b")
        gamma = _midpoint(lo, hi)
        return ExistenceCase("1a", gamma, 0.0, f"gamma in ({lo:.6g}, {hi:.6g}), tau = 0")

    if case_id == "1b":
        if not (p > thr_n and q > thr):
            raise HypothesisViolated("case 1b needs p > N/(N-2) and q > (N-alpha)/(N-2)")
        return ExistenceCase("1b", float(N), 0.0, "gamma = N, tau = 0")

    if case_id == "2":
        if not (approx_eq(p, thr) and q > thr_n and beta < -1.0):
            raise HypothesisViolated("case 2 needs p = (N-alpha)/(N-2), q > N/(N-2), beta < -1")
        hi = min(1.0, (-1.0 - beta) / p - 1.0)
        if not hi > -1.0:
            raise EmptyParameterInterval("no tau with beta + (1+tau)p < -1")
        tau = _midpoint(-1.0, hi)
        return ExistenceCase("2", float(N), tau, f"gamma = N, tau in (-1, {hi:.6g})")

    if case_id == "3":
        if not (p > thr_n and approx_eq(q, thr) and beta < -1.0):
            raise HypothesisViolated("case 3 needs p > N/(N-2), q = (N-alpha)/(N-2), beta < -1")
        if approx_eq(q, 1.0):
            lo, hi = -1.0, 1.0
        elif q > 1.0:
            lo, hi = -1.0, min(1.0, -(beta + q) / (q - 1.0))
        else:
            lo, hi = max(-1.0, (beta + q) / (1.0 - q)), 1.0
        if not lo < hi:
            raise EmptyParameterInterval("no tau with tau > beta + (1+tau)q")
        tau = _midpoint(lo, hi)
        return ExistenceCase("3", float(N), tau, f"gamma = N, tau in ({lo:.6g}, {hi:.6g})")

    if case_id == "4":
        if not (p > thr and q > thr and approx_eq(s, thr_2) and beta < -1.0):
            raise HypothesisViolated(
                "case 4 needs p, q > (N-alpha)/(N-2), p+q = (2N-alpha)/(N-2), beta < -1"
            )
        hi = min(1.0, -(beta + s) / (s - 1.0))
        if not hi > -1.0:
            raise EmptyParameterInterval("no tau with tau > beta + (1+tau)(p+q)")
        tau = _midpoint(-1.0, hi)
        return ExistenceCase("4", float(N), tau, f"gamma = N, tau in (-1, {hi:.6g})")

    if case_id == "5":
        if not (approx_eq(p, thr) and approx_eq(q, thr_n) and beta < -2.0):
            raise HypothesisViolated("case 5 needs p = (N-alpha)/(N-2), q = N/(N-2), beta < -2")
        hi = min(1.0, -(1.0 + beta + s) / (s - 1.0), (-1.0 - beta) / p - 1.0)
        if not hi > -1.0:
            raise EmptyParameterInterval("no tau with tau > 1 + beta + (1+tau)(p+q)")
        tau = _midpoint(-1.0, hi)
        return ExistenceCase("5", float(N), tau, f"gamma = N, tau in (-1, {hi:.6g})")

    if case_id == "6":
        if not (approx_eq(p, thr_n) and approx_eq(q, thr) and beta < -2.0):
            raise HypothesisViolated("case 6 needs p = N/(N-2), q = (N-alpha)/(N-2), beta < -2")
        hi = min(1.0, -(1.0 + beta + s) / (s - 1.0))
        if not hi > -1.0:
            raise EmptyParameterInterval("no tau with tau > 1 + beta + (1+tau)(p+q)")
        tau = _midpoint(-1.0, hi)
        return ExistenceCase("6", float(N), tau, f"gamma = N, tau in (-1, {hi:.6g})")

    if case_id == "T4-1":
        if not (beta > 0.0 and 1.0 <= p <= thr_n and q > 0.0 and s > thr_n):
            raise HypothesisViolated("T4-1 needs beta > 0, 1 <= p <= N/(N-2), p+q > N/(N-2)")
        lo = 2.0 + N / s
        hi = min(2.0 + N / p, float(N))
        if not lo < hi:
            raise EmptyParameterInterval(f"no admissible gamma in ({lo}, {hi})")
        gamma = _midpoint(lo, hi)
        return ExistenceCase("T4-1", gamma, 0.0, f"gamma in ({lo:.6g}, {hi:.6g}), tau = 0")

    if case_id == "T4-2":
        if not (beta > 0.0 and p > thr_n and q > 0.0):
            raise HypothesisViolated("T4-2 needs beta > 0 and p > N/(N-2)")
        return ExistenceCase("T4-2", float(N), 0.0, "gamma = N, tau = 0")

    raise ParameterError(f"unknown case id {case_id!r}")
