"""End-to-end acceptance checks, one test per numbered criterion.

`pytest -v tests/test_acceptance.py` yields one pass/fail line per
criterion; with -s each test additionally prints a stamped summary line.
Stated tolerances and wall-clock budgets are asserted inside the tests.
"""

import math
import time

import numpy as np
from scipy.integrate import quad

from logriesz import (
    AnsatzParams,
    KernelParams,
    ProblemParams,
    Side,
    UClass,
    ball_profile,
    biharmonic_closed_form,
    check_bound,
    choose_case_params,
    classify,
    convolve_radial,
    divergence_certificate,
    emit_regime_table,
    lambda_star,
    power_profile,
    source_eval,
    thm2_clause,
    thm3_clause,
    u_eval,
    upper_bound_prediction,
    verify_supersolution,
)
from logriesz import TestFunctionSpec as FunctionSpec
from logriesz import test_function_bound as annulus_bound


def _stamp(num: int, label: str, t0: float) -> None:
    print(f"criterion {num:02d} {label}: PASS ({time.perf_counter() - t0:.2f}s)")


def test_criterion_01_regime_tables_exact():
    t0 = time.perf_counter()
    for N, expected_rows in ((3, 125), (5, 151)):
        records = emit_regime_table(N)
        assert len(records) == expected_rows
        for rec in records:
            assert rec.match, f"N={N} row {rec.row_id} expected " \
                f"{rec.expected_verdict}/{rec.expected_clause} got {rec.verdict}/{rec.clause}"
    assert time.perf_counter() - t0 < 1.0
    _stamp(1, "regime tables exact for N=3 and N=5", t0)


def test_criterion_02_clause_sweep_no_contradiction():
    t0 = time.perf_counter()
    rng = np.random.default_rng(20260818)
    n = 100_000
    Ns = rng.integers(3, 7, size=n)
    ps = rng.uniform(0.05, 6.0, size=n)
    qs = rng.uniform(0.05, 6.0, size=n)
    for i in range(n):
        N = int(Ns[i])
        alpha = rng.uniform(0.0, N)
        beta = rng.uniform(alpha - N + 1e-6, 3.0)
        two = thm2_clause(N, ps[i], qs[i], alpha, beta)
        three = thm3_clause(N, ps[i], qs[i], alpha, beta)
        assert not (two is not None and three is not None), \
            f"clauses overlap at N={N} p={ps[i]} q={qs[i]} alpha={alpha} beta={beta}"
    assert time.perf_counter() - t0 < 10.0
    _stamp(2, "100k-tuple sweep finds no overlapping clauses", t0)


def test_criterion_03_newtonian_ball_oracle():
    t0 = time.perf_counter()
    kernel = KernelParams(N=3, alpha=1.0, beta=0.0)
    f = ball_profile(1.0)
    mass = 4.0 * math.pi / 3.0
    for r in (1.0, 2.0, 10.0, 1e3):
        res = convolve_radial(kernel, f, r)
        assert math.isclose(res.value, mass / max(r, 1.0), rel_tol=1e-6)
    assert time.perf_counter() - t0 < 5.0
    _stamp(3, "unit-ball potential matches closed form to 1e-6", t0)


def test_criterion_04_constant_kernel_invariance():
    t0 = time.perf_counter()
    kernel = KernelParams(N=3, alpha=0.0, beta=0.0)
    ball = ball_profile(1.5)
    ball_mass = 4.0 * math.pi * 1.5**3 / 3.0
    tail = power_profile(5.0, 0.0, A=10.0)
    tail_mass = 4.0 * math.pi * quad(lambda s: s * s * (10.0 + s) ** -5, 0, np.inf)[0]
    for f, mass in ((ball, ball_mass), (tail, tail_mass)):
        for r in (0.0, 1.0, 10.0):
            res = convolve_radial(kernel, f, r)
            assert math.isclose(res.value, mass, rel_tol=1e-8)
    _stamp(4, "alpha=0 kernel reproduces total mass at every radius", t0)


FIT_CASES = [
    # (sigma, kappa, A, alpha, expected power, expected logpower)
    (4.0, 0.0, 10.0, 1.0, -1.0, 0.0),
    (2.2, 0.0, 3.0, 1.0, -0.2, 0.0),
    (3.0, 0.0, 1.05, 1.0, -1.0, 1.0),
    (3.0, -4.0, 1.05, 1.0, -1.0, 0.0),
    (2.0, -1.3, 10.0, 1.0, 0.0, -0.3),
]


def test_criterion_05_decay_fits_match_predictions():
    t0 = time.perf_counter()
    for sigma, kappa, A, alpha, want_pow, want_log in FIT_CASES:
        kernel = KernelParams(N=3, alpha=alpha, beta=0.0)
        f = power_profile(sigma, kappa, A=A)
        bound = upper_bound_prediction(kernel, f)
        report = check_bound(kernel, f, bound, (1e3, 1e7))
        assert abs(report.fitted.power_est - want_pow) <= 0.05, \
            f"sigma={sigma} kappa={kappa}: power {report.fitted.power_est} vs {want_pow}"
        assert abs(report.fitted.logpower_est - want_log) <= 0.2, \
            f"sigma={sigma} kappa={kappa}: logpower {report.fitted.logpower_est} vs {want_log}"
    assert time.perf_counter() - t0 < 120.0
    _stamp(5, "five decay fits land within 0.05 / 0.2 of predictions", t0)


def test_criterion_06_potential_solves_poisson():
    t0 = time.perf_counter()
    rng = np.random.default_rng(7)
    radii = np.geomspace(0.5, 50.0, 10)
    for _ in range(5):
        N = int(rng.integers(3, 6))
        gamma = rng.uniform(2.2, N)
        tau = rng.uniform(-0.8, 0.8)
        A = rng.uniform(3.0, 30.0)
        params = AnsatzParams(N=N, gamma=gamma, tau=tau, A=A)
        for r in radii:
            h = 0.01 * r
            up, u0, um = (u_eval(params, r + h), u_eval(params, r),
                          u_eval(params, r - h))
            lap = (up - 2.0 * u0 + um) / h**2 + (N - 1) / r * (up - um) / (2.0 * h)
            assert math.isclose(-lap, source_eval(params, r), rel_tol=1e-3)
    assert time.perf_counter() - t0 < 60.0
    _stamp(6, "-Lap(potential) reproduces the source to 1e-3", t0)


def test_criterion_07_threshold_and_certificate():
    t0 = time.perf_counter()
    grid = np.concatenate([[0.0], np.geomspace(1e-3, 1e8, 200)])
    for N, A in ((3, 10.0), (5, 20.0)):
        params = AnsatzParams(N=N, gamma=float(N), tau=0.0, A=A)
        star = lambda_star(params)
        assert math.isclose(star, 2.0 * N / (A * (N + 2)), rel_tol=1e-4)
        vals = biharmonic_closed_form(params, 1.001 * star, grid)
        assert np.all(vals >= 0.0)
    _stamp(7, "drift threshold matches closed form; certificate grid nonnegative", t0)


VERIFY_CASES = [
    ("1a", 5, 1.0, 1.0, 1.5, 2.0),
    ("1b", 3, 1.0, 0.0, 4.0, 3.0),
    ("2", 3, 1.0, -1.5, 2.0, 4.0),
    ("3", 3, 1.0, -1.5, 4.0, 2.0),
    ("4", 3, 1.0, -1.5, 2.4, 2.6),
    ("5", 3, 0.5, -2.25, 2.5, 3.0),
    ("6", 3, 0.5, -2.25, 3.0, 2.5),
    ("T4-1", 3, 3.0, 1.0, 2.0, 1.5),
    ("T4-2", 3, 3.0, 1.0, 4.0, 1.0),
]


def test_criterion_08_all_constructions_certify():
    t0 = time.perf_counter()
    for case_id, N, alpha, beta, p, q in VERIFY_CASES:
        case = choose_case_params(case_id, N, alpha, beta, p, q)
        report = verify_supersolution(case, KernelParams(N, alpha, beta), p, q)
        assert report.passed, f"case {case_id} failed certification"
        assert report.stable, f"case {case_id} unstable at the grid edge"
        assert math.isfinite(report.S) and report.S > 0.0
    assert time.perf_counter() - t0 < 600.0
    _stamp(8, "all nine supersolution cases certify with stable S", t0)


def test_criterion_09_alpha_equals_N_split():
    t0 = time.perf_counter()
    exists = classify(ProblemParams(Side.PPLUS, 3, 2.0, 1.5, 3.0, 1.0,
                                    u_class=UClass.GENERAL))
    gone = classify(ProblemParams(Side.PPLUS, 3, 2.0, 0.5, 3.0, 1.0,
                                  u_class=UClass.GENERAL))
    assert exists.verdict.value == "Exists" and exists.clause == "Thm4"
    assert gone.verdict.value == "NotExists" and gone.clause == "Thm4"
    _stamp(9, "alpha=N boundary splits into Exists/NotExists as stated", t0)


def test_criterion_10_divergence_certificates_grow():
    t0 = time.perf_counter()
    for args, clause in (((3, 2.0, 2.0, 0.0, 0.0), "Thm2(iv)"),
                         ((3, 4.0, 2.0, 0.0, 7.0), "Thm2(v)")):
        series = divergence_certificate(*args)
        assert series.clause == clause
        assert series.strictly_increasing
        assert series.growth_ratio > 1e3
    _stamp(10, "nonexistence certificates increase with ratio above 1e3", t0)


def test_criterion_11_annulus_constant_uniform_in_R():
    t0 = time.perf_counter()
    consts = [annulus_bound(FunctionSpec(k=5, delta=2.0, R=R), 5.0, N=3)
              for R in (10.0, 1e2, 1e3)]
    assert max(consts) / min(consts) < 2.0
    _stamp(11, "cutoff drift constant varies by under 2x across scales", t0)
