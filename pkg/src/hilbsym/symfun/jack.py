"""Integral-form Jack symmetric functions J_lambda(alpha).

Monic Jack polynomials come from Gram-Schmidt against the alpha-deformed
power-sum pairing; the integral form rescales so the m_(1^n) coefficient
is n!.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from ..algebra.ratfunc import RatFunc
from ..partitions import Partition
from .core import pairing_alpha
from .orth import orthogonal_family

_ALPHA = RatFunc.var("alpha")


def jack_monic(lam):
    """P_lambda^(alpha): coefficient of m_lambda is 1."""
    fam = orthogonal_family(
        lam.n, "jack-alpha", lambda f, g: pairing_alpha(f, g, _ALPHA)
    )
    return fam[lam][0]


def jack_norm(lam):
    """<P_lambda, P_lambda> under the alpha pairing."""
    fam = orthogonal_family(
        lam.n, "jack-alpha", lambda f, g: pairing_alpha(f, g, _ALPHA)
    )
    return fam[lam][1]


@lru_cache(maxsize=None)
def _jack_integral_parts(parts):
    lam = Partition(parts)
    P = jack_monic(lam)
    c = P.convert("m")[Partition((1,) * lam.n)]
    return (factorial(lam.n) / c) * P


def jack_integral(lam):
    """J_lambda(alpha) in the p-basis over Q(alpha)."""
    return _jack_integral_parts(lam.parts)
