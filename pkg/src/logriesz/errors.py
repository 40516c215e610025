"""Exception hierarchy shared across the package.

ParameterError subclasses signal rejected inputs (CLI exit code 2),
QuadratureFailure signals a quadrature that could not reach its tolerance
(exit code 5), DivergentIntegral a convolution proven infinite (exit code 6).
"""


class LabError(Exception):
    pass


class ParameterError(LabError, ValueError):
    pass


class InvalidDimension(ParameterError):
    pass


class InvalidAlpha(ParameterError):
    pass


class InvalidBeta(ParameterError):
    pass


class NonpositiveRadius(ParameterError):
    pass


class MissingAsymptoticSpec(ParameterError):
    pass


class OutOfHypothesis(ParameterError):
    pass


class HypothesisViolated(ParameterError):
    pass


class EmptyParameterInterval(ParameterError):
    pass


class DegenerateSamples(ParameterError):
    pass


class ScalingUndefined(ParameterError):
    pass


class QuadratureFailure(LabError):
    pass


class DivergentIntegral(LabError):
    pass
