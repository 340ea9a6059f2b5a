"""Truncated power series in one variable with generic scalar coefficients.

Coefficients may be RatFunc, QQ, complex, or operator-valued; the only
requirements are ring operations.  Arithmetic never extends past the
truncation order; mixed orders truncate to the shorter one.
"""

from __future__ import annotations

from ..errors import NonInvertibleError


class TruncSeries:
    __slots__ = ("var", "order", "coeffs")

    def __init__(self, var, coeffs, order=None):
        if order is None:
            order = len(coeffs) - 1
        if len(coeffs) != order + 1:
            raise ValueError("coefficient list must have length order+1")
        self.var = var
        self.order = order
        self.coeffs = list(coeffs)

    @classmethod
    def from_scalar(cls, var, c, order):
        return cls(var, [c] + [0 * c] * order, order)

    def _check(self, other):
        if self.var != other.var:
            raise ValueError(f"series variables differ: {self.var} vs {other.var}")
        return min(self.order, other.order)

    def __add__(self, other):
        n = self._check(other)
        return TruncSeries(self.var, [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    def __sub__(self, other):
        n = self._check(other)
        return TruncSeries(self.var, [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)], n)

    def __neg__(self):
        return TruncSeries(self.var, [-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            n = self._check(other)
            out = []
            for k in range(n + 1):
                acc = None
                for i in range(k + 1):
                    t = self.coeffs[i] * other.coeffs[k - i]
                    acc = t if acc is None else acc + t
                out.append(acc)
            return TruncSeries(self.var, out, n)
        return TruncSeries(self.var, [c * other for c in self.coeffs], self.order)

    __rmul__ = __mul__

    def invert(self):
        """Multiplicative inverse; the constant term must be invertible."""
        c0 = self.coeffs[0]
        try:
            b0 = 1 / c0
        except (ZeroDivisionError, TypeError) as exc:
            raise NonInvertibleError("constant term is not invertible") from exc
        out = [b0]
        for k in range(1, self.order + 1):
            acc = None
            for j in range(1, k + 1):
                t = self.coeffs[j] * out[k - j]
                acc = t if acc is None else acc + t
            out.append(-b0 * acc)
        return TruncSeries(self.var, out, self.order)

    def qdq(self):
        """The logarithmic derivative operator q*d/dq applied termwise."""
        return TruncSeries(self.var, [k * c for k, c in enumerate(self.coeffs)], self.order)

    def map(self, f):
        return TruncSeries(self.var, [f(c) for c in self.coeffs], self.order)

    def evaluate(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, TruncSeries)
            and self.var == other.var
            and self.order == other.order
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __repr__(self):
        return f"TruncSeries({self.var!r}, order={self.order}, {self.coeffs!r})"
