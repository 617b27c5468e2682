"""Exception hierarchy shared by all evaluators."""


class HznError(Exception):
    """Base class for every error raised by this package."""


class DomainError(HznError, ValueError):
    """A parameter lies outside the domain of the requested operation."""


class PoleError(HznError, ArithmeticError):
    """Evaluation requested at (or too close to) a pole."""


class PoleProximityError(PoleError):
    """An integration pole sits closer to the contour than the configured clearance."""


class BranchCutError(HznError, ValueError):
    """An argument lies on a branch cut and no one-sided limit was requested."""


class DegenerateParameterError(DomainError):
    """Coincident parameters; a dedicated special-case evaluator must be used instead."""


class ConvergenceError(HznError, ArithmeticError):
    """A series evaluation cannot converge for the given parameters."""


class NearPoleError(ConvergenceError):
    """A series denominator fell below the configured floor (argument too close to a pole)."""


class ResourceLimitError(HznError, RuntimeError):
    """A requested computation exceeds the configured resource cap."""
