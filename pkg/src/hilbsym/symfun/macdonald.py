"""Modified Macdonald polynomials H~_lambda(q,t).

Route: monic Macdonald P_lambda(q,t) by Gram-Schmidt against the (q,t)
power-sum pairing, integral form J_lambda = prod_boxes (1 - q^arm t^(leg+1))
P_lambda, then the plethystic renormalization

    H~_lambda = t^{n(lambda)} J_lambda[X / (1 - t^{-1}); q, t^{-1}]

realized on the p-basis as t -> 1/t in coefficients followed by
p_k -> p_k * t^k/(t^k - 1).  The s_(n) coefficient comes out 1; that is
checked by the test suite, not forced here.
"""

from __future__ import annotations

from functools import lru_cache

from ..algebra.ratfunc import RatFunc
from ..partitions import Partition
from .core import pairing_qt, plethysm_scale
from .orth import orthogonal_family

_Q = RatFunc.var("q")
_T = RatFunc.var("t")


def macdonald_monic(lam):
    fam = orthogonal_family(
        lam.n, "macdonald-qt", lambda f, g: pairing_qt(f, g, _Q, _T)
    )
    return fam[lam][0]


def macdonald_integral(lam):
    """J_lambda(q,t) with the arm/leg hook normalization."""
    c = RatFunc.const(1)
    for (i, j) in lam.boxes():
        c = c * (1 - _Q ** lam.arm(i, j) * _T ** (lam.leg(i, j) + 1))
    return c * macdonald_monic(lam)


@lru_cache(maxsize=None)
def _macdonald_modified_parts(parts):
    lam = Partition(parts)
    J = macdonald_integral(lam)
    J = J.map_coeffs(lambda c: c.substitute({"t": 1 / _T}))
    H = plethysm_scale(J, lambda k: _T**k / (_T**k - 1))
    return (_T ** lam.n_stat()) * H


def macdonald_modified(lam):
    """H~_lambda(q,t) in the p-basis over Q(q,t)."""
    return _macdonald_modified_parts(lam.parts)
