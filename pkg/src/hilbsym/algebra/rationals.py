"""Arbitrary-precision rationals: gmpy2 when present, fractions otherwise.

All exact coefficients in the package go through QQ().  Both backends keep
fractions reduced with a positive denominator, which is exactly the
invariant the rest of the code relies on.
"""

from math import gcd as _int_gcd

try:
    from gmpy2 import mpq as _mpq

    RATIONAL_BACKEND = "gmpy2"

    def QQ(a=0, b=1):
        return _mpq(a, b)

except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _Fraction

    RATIONAL_BACKEND = "fractions"

    def QQ(a=0, b=1):
        return _Fraction(a, b)


QQ0 = QQ(0)
QQ1 = QQ(1)


def qq_content(values):
    """gcd of a nonempty collection of rationals: gcd(nums)/lcm(dens) > 0."""
    gn = 0
    ld = 1
    for v in values:
        gn = _int_gcd(gn, abs(int(v.numerator)))
        d = int(v.denominator)
        ld = ld * d // _int_gcd(ld, d)
    if gn == 0:
        return QQ0
    return QQ(gn, ld)
