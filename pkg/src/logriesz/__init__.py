"""Numerical laboratory for log-perturbed Riesz convolutions and the
fourth-order existence/nonexistence regime they govern."""

from .ansatz import (
    AnsatzParams,
    ExistenceCase,
    PotentialTable,
    VerificationReport,
    biharmonic_closed_form,
    choose_case_params,
    lambda_star,
    rhs_upper_bound,
    source_eval,
    source_profile,
    u_eval,
    u_upper_bound,
    verify_supersolution,
    w_eval,
)
from .bounds import (
    BoundCheckReport,
    BoundKind,
    FitResult,
    PredictedBound,
    check_bound,
    fit_asymptotics,
    lower_bound_prediction,
    upper_bound_prediction,
)
from .classifier import (
    ProblemParams,
    RegimeDecision,
    Side,
    TableRowRecord,
    UClass,
    Verdict,
    classify,
    classify_pminus,
    classify_pplus,
    emit_regime_table,
    thm2_clause,
    thm3_clause,
)
from .convolution import (
    DEFAULT_CONFIG,
    ConvolutionResult,
    QuadratureConfig,
    RadialProfile,
    angular_factor,
    ball_profile,
    colatitude_total,
    convolution_rows,
    convolve_radial,
    detect_divergence,
    newtonian_potential_radial,
    power_profile,
    unit_sphere_area,
    write_convolution_csv,
)
from .errors import (
    DegenerateSamples,
    DivergentIntegral,
    EmptyParameterInterval,
    HypothesisViolated,
    InvalidAlpha,
    InvalidBeta,
    InvalidDimension,
    LabError,
    MissingAsymptoticSpec,
    NonpositiveRadius,
    OutOfHypothesis,
    ParameterError,
    QuadratureFailure,
    ScalingUndefined,
)
from .kernel import (
    AsymptoticSpec,
    KernelParams,
    Regime,
    approx_eq,
    eval_kernel,
    kernel_asymptotics,
    validate,
)
from .probes import (
    BumpProfile,
    CertificateSeries,
    ChainResult,
    HarnackMass,
    TestFunctionSpec,
    divergence_certificate,
    harnack_mass,
    lower_bound_chain,
    test_function_bound,
    write_certificate_csv,
)

__version__ = "0.1.0"

__all__ = [
    "AnsatzParams", "ExistenceCase", "PotentialTable", "VerificationReport",
    "biharmonic_closed_form", "choose_case_params", "lambda_star",
    "rhs_upper_bound", "source_eval", "source_profile", "u_eval",
    "u_upper_bound", "verify_supersolution", "w_eval",
    "BoundCheckReport", "BoundKind", "FitResult", "PredictedBound",
    "check_bound", "fit_asymptotics", "lower_bound_prediction",
    "upper_bound_prediction",
    "ProblemParams", "RegimeDecision", "Side", "TableRowRecord", "UClass",
    "Verdict", "classify", "classify_pminus", "classify_pplus",
    "emit_regime_table", "thm2_clause", "thm3_clause",
    "DEFAULT_CONFIG", "ConvolutionResult", "QuadratureConfig", "RadialProfile",
    "angular_factor", "ball_profile", "colatitude_total", "convolution_rows",
    "convolve_radial", "detect_divergence", "newtonian_potential_radial",
    "power_profile", "write_convolution_csv",
    "DegenerateSamples", "DivergentIntegral", "EmptyParameterInterval",
    "HypothesisViolated", "InvalidAlpha", "InvalidBeta", "InvalidDimension",
    "LabError", "MissingAsymptoticSpec", "NonpositiveRadius", "OutOfHypothesis",
    "ParameterError", "QuadratureFailure", "ScalingUndefined",
    "AsymptoticSpec", "KernelParams", "Regime", "approx_eq", "eval_kernel",
    "kernel_asymptotics", "validate",
    "BumpProfile", "CertificateSeries", "ChainResult", "HarnackMass",
    "TestFunctionSpec", "divergence_certificate", "harnack_mass",
    "lower_bound_chain", "test_function_bound", "write_certificate_csv",
    "__version__",
]
