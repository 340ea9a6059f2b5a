from .rationals import QQ, RATIONAL_BACKEND
from .multipoly import MultiPoly, poly_gcd, VAR_ORDER
from .ratfunc import RatFunc, set_gcd_threshold
from .series import TruncSeries
from .numeric import NumericContext, Numerics, cgamma, cpow, clog, ensure_finite
from .exactcx import CycUnit

__all__ = [
    "QQ",
    "RATIONAL_BACKEND",
    "MultiPoly",
    "poly_gcd",
    "VAR_ORDER",
    "RatFunc",
    "set_gcd_threshold",
    "TruncSeries",
    "NumericContext",
    "Numerics",
    "cgamma",
    "cpow",
    "clog",
    "ensure_finite",
    "CycUnit",
]
