"""Exact scalars of the shape r * i^k * (2*pi)^m with r rational.

Enough to verify the unit-matching identities between the two Fock-space
normalizations without any floating point: products of +-1, +-i and integer
powers of 2*pi are closed under multiplication.
"""

from __future__ import annotations

from .rationals import QQ


class CycUnit:
    __slots__ = ("r", "k", "m")

    def __init__(self, r=1, k=0, m=0):
        r = QQ(r) if isinstance(r, int) else r
        k %= 4
        if k >= 2:  # i^2 = -1
            r = -r
            k -= 2
        self.r, self.k, self.m = r, k, m

    @classmethod
    def i_power(cls, k):
        return cls(1, k, 0)

    @classmethod
    def minus_i_power(cls, k):
        # (-i)^k = (-1)^k i^k = i^{3k}
        return cls(1, 3 * k, 0)

    @classmethod
    def two_pi_i_power(cls, k):
        return cls(1, k, k)

    def __mul__(self, other):
        if isinstance(other, CycUnit):
            return CycUnit(self.r * other.r, self.k + other.k, self.m + other.m)
        return NotImplemented

    def __pow__(self, n):
        out = CycUnit(1)
        for _ in range(n):
            out = out * self
        return out

    def __neg__(self):
        return CycUnit(-self.r, self.k, self.m)

    def __eq__(self, other):
        return (
            isinstance(other, CycUnit)
            and self.r == other.r
            and self.k == other.k
            and self.m == other.m
        )

    def is_real_sign(self):
        return self.k == 0

    def sign_value(self):
        """The rational r*(2*pi)^0 part check helper: requires k == 0, m == 0."""
        if self.k != 0 or self.m != 0:
            raise ValueError("not a pure rational unit")
        return self.r

    def __repr__(self):
        s = f"{self.r}"
        if self.k:
            s += "*i"
        if self.m:
            s += f"*(2pi)^{self.m}"
        return s
