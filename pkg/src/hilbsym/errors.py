class HilbsymError(Exception):
    """Base class for package errors."""


class BasisMismatchError(HilbsymError):
    """Operator/vector combined across incompatible Fock bases."""


class PoleError(HilbsymError):
    """Numeric evaluation hit (or got too close to) a Gamma pole or a zero."""


class NonInvertibleError(HilbsymError):
    """Inversion of a series or matrix without an invertible leading part."""


class TailBoundError(HilbsymError):
    """Series tail estimate at the handoff point exceeds the budget."""


class StepSizeError(HilbsymError):
    """Adaptive integrator step size underflowed."""


class TwoRouteMismatchError(HilbsymError):
    """Two independent computations of the same quantity disagree.

    This always signals a bug (or a bad parameter sample), never a legitimate
    domain condition.
    """
