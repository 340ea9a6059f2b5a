"""hilbsym: exact and numeric verification toolkit for the quantum
differential equation of Hilb^n(C^2) and the Gamma-class integral structures
of the Hilb/Sym correspondence."""

from ._kernel import KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
