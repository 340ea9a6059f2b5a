"""Exact rational functions (quotients of MultiPoly).

Reduction strategy: rational content and common monomial factors are always
stripped and the denominator is kept integer-primitive with positive leading
coefficient; the full multivariate gcd runs only while the operands are
small (equality tests cross-multiply, so canonical forms are a performance
knob, not a correctness requirement).
"""

from __future__ import annotations

from .multipoly import MultiPoly, poly_gcd
from .rationals import QQ

# full-gcd size cutoff: combined term count above which reduction skips
# poly_gcd and keeps only content/monomial stripping
_GCD_THRESHOLD = 600


def set_gcd_threshold(n):
    global _GCD_THRESHOLD
    _GCD_THRESHOLD = n


def _as_poly(x, vars=()):
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, int):
        return MultiPoly.const(QQ(x), vars)
    return MultiPoly.const(x, vars)  # QQ


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=1, _reduced=False):
        num = _as_poly(num)
        den = _as_poly(den, num.vars)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")
        if _reduced:
            self.num, self.den = num, den
            return
        self.num, self.den = _reduce(num, den)

    # ------------------------------------------------------------------

    @classmethod
    def const(cls, c):
        return cls(_as_poly(c if not isinstance(c, int) else QQ(c)), 1, _reduced=True)

    @classmethod
    def var(cls, name):
        return cls(MultiPoly.variable(name), 1, _reduced=True)

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        return self.num.constant_value() / self.den.constant_value()

    # ------------------------------------------------------------------

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    def _combine(self, other, sign):
        if self.den.vars == other.den.vars and self.den.terms == other.den.terms:
            return RatFunc(self.num + sign * other.num, self.den)
        if not self.den.is_constant() and not other.den.is_constant():
            g = poly_gcd(self.den, other.den)
            if not g.is_constant():
                db = self.den.divexact(g)
                dd = other.den.divexact(g)
                return RatFunc(self.num * dd + sign * (other.num * db), self.den * dd)
        return RatFunc(
            self.num * other.den + sign * (other.num * self.den),
            self.den * other.den,
        )

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return RatFunc(self.den**(-n), self.num**(-n))
        return RatFunc(self.num**n, self.den**n)

    # ------------------------------------------------------------------

    def evaluate(self, values):
        den = self.den.evaluate(values)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.evaluate(values) / den

    def substitute(self, assignments):
        """Exact substitution; values may be RatFunc, MultiPoly, QQ, or int."""
        vars = set(self.num.vars) | set(self.den.vars)
        values = {}
        for v in vars:
            if v in assignments:
                x = assignments[v]
                if not isinstance(x, RatFunc):
                    x = RatFunc(_as_poly(x if not isinstance(x, int) else QQ(x)))
                values[v] = x
            else:
                values[v] = RatFunc.var(v)
        num = self.num.evaluate(values)
        den = self.den.evaluate(values)
        num = num if isinstance(num, RatFunc) else RatFunc.const(num)
        den = den if isinstance(den, RatFunc) else RatFunc.const(den)
        return num / den

    def flip_sign(self, names):
        return RatFunc(self.num.flip_sign(names), self.den.flip_sign(names))

    def __repr__(self):
        if self.den.is_constant() and self.den.constant_value() == 1:
            return repr(self.num)
        return f"({self.num!r}) / ({self.den!r})"


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, MultiPoly):
        return RatFunc(x, 1, _reduced=True)
    if isinstance(x, int):
        return RatFunc.const(QQ(x))
    if type(x).__name__ in ("mpq", "Fraction"):
        return RatFunc.const(x)
    return NotImplemented


def _reduce(num, den):
    if num.is_zero():
        return num, MultiPoly.const(1, num.vars)
    if num.vars != den.vars:
        num = num + MultiPoly.zero(den.vars)
        den = den + MultiPoly.zero(num.vars)

    # common monomial factor
    common = tuple(map(min, num.monomial_content(), den.monomial_content()))
    if any(common):
        num = num.shift_down(common)
        den = den.shift_down(common)

    cn, pn = num.integer_primitive()
    cd, pd = den.integer_primitive()

    if len(pn.terms) + len(pd.terms) <= _GCD_THRESHOLD and not pd.is_constant():
        g = poly_gcd(pn, pd)
        if not g.is_constant():
            pn = pn.divexact(g)
            pd = pd.divexact(g)

    return pn.scale_coeffs(cn / cd), pd
