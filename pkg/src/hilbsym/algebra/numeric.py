"""Complex-numeric layer: Lanczos Gamma, branch-aware powers, contexts.

Everything analytic downstream funnels through a Numerics instance so the
extended-precision mode (mpmath) is a drop-in swap for the default 64-bit
path.  The only non-principal branch in the whole suite is log q on the
negative real q-axis, where the context decides between +i*pi and -i*pi.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from ..errors import PoleError

# Lanczos g=7, 9-term coefficient set; ~13 significant digits in double
# precision away from the poles.
_LG = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


def cgamma(z):
    """Complex Gamma via Lanczos with reflection for Re(z) < 1/2."""
    z = complex(z)
    if z.real < 0.5:
        n = round(z.real)
        if z.imag == 0.0 and z.real == n and n <= 0:
            raise PoleError(f"Gamma pole at {z}")
        s = cmath.sin(cmath.pi * z)
        if s == 0:
            raise PoleError(f"Gamma pole at {z}")
        return cmath.pi / (s * cgamma(1.0 - z))
    z -= 1.0
    x = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        x += _LANCZOS[i] / (z + i)
    t = z + _LG + 0.5
    return _SQRT_TWO_PI * t ** (z + 0.5) * cmath.exp(-t) * x


def clog(x, branch=+1):
    """Principal log, except on the negative real axis where the sign of the
    imaginary part follows `branch` (+1 -> +i*pi, -1 -> -i*pi)."""
    if x == 0:
        raise ZeroDivisionError("log of zero")
    x = complex(x)
    if x.imag == 0.0 and x.real < 0.0:
        return complex(math.log(-x.real), branch * math.pi)
    return cmath.log(x)


def cpow(base, expo, branch=+1):
    """base**expo via exp(expo*log base) with the branch rule of clog."""
    if base == 0:
        e = complex(expo)
        if e.imag == 0.0 and e.real > 0.0:
            return 0j
        raise ZeroDivisionError("0 raised to a non-positive-real power")
    return cmath.exp(complex(expo) * clog(base, branch))


def ensure_finite(x):
    x = complex(x)
    if not (math.isfinite(x.real) and math.isfinite(x.imag)):
        raise PoleError(f"non-finite numeric result {x}")
    return x


class Numerics:
    """Elementary complex functions at a fixed precision and branch."""

    def __init__(self, branch=+1, precision="f64", prec_bits=53):
        if branch not in (+1, -1):
            raise ValueError("branch must be +1 or -1")
        if precision not in ("f64", "ext"):
            raise ValueError("precision must be 'f64' or 'ext'")
        if precision == "ext" and prec_bits < 106:
            prec_bits = 106
        self.branch = branch
        self.precision = precision
        self.prec_bits = prec_bits
        if precision == "ext":
            import mpmath

            self._mp = mpmath.mp.clone()
            self._mp.prec = prec_bits
        else:
            self._mp = None

    def to_scalar(self, x):
        if self._mp is None:
            return complex(x)
        return self._mp.mpc(x)

    @property
    def pi(self):
        return math.pi if self._mp is None else self._mp.pi

    @property
    def I(self):
        return 1j if self._mp is None else self._mp.mpc(0, 1)

    def gamma(self, z):
        if self._mp is None:
            return cgamma(z)
        try:
            return self._mp.gamma(self._mp.mpc(z))
        except ValueError as exc:
            raise PoleError(str(exc)) from exc

    def exp(self, z):
        if self._mp is None:
            return cmath.exp(complex(z))
        return self._mp.exp(self._mp.mpc(z))

    def log(self, z):
        if self._mp is None:
            return clog(z, self.branch)
        z = self._mp.mpc(z)
        if z == 0:
            raise ZeroDivisionError("log of zero")
        if z.imag == 0 and z.real < 0:
            return self._mp.log(-z.real) + self.branch * self._mp.pi * self.I
        return self._mp.log(z)

    def power(self, base, expo):
        if self._mp is None:
            return cpow(base, expo, self.branch)
        if base == 0:
            e = self._mp.mpc(expo)
            if e.imag == 0 and e.real > 0:
                return self._mp.mpc(0)
            raise ZeroDivisionError("0 raised to a non-positive-real power")
        return self._mp.exp(self._mp.mpc(expo) * self.log(base))

    def sqrt(self, z):
        # principal square root
        if self._mp is None:
            return cmath.sqrt(complex(z))
        return self._mp.sqrt(self._mp.mpc(z))

    def abs(self, z):
        return abs(z) if self._mp is None else float(self._mp.fabs(z))


@dataclass(frozen=True)
class NumericContext:
    """Evaluation environment for the analytic formulas.

    t1, t2 are the torus weights, z the quantization parameter, branch the
    sign of Im(log q) on the negative real axis, tol the generic relative
    tolerance for internal two-route assertions.
    """

    t1: complex = 0.83 + 0.21j
    t2: complex = -0.47 + 0.59j
    z: complex = 1.13 - 0.35j
    branch: int = +1
    precision: str = "f64"
    prec_bits: int = 53
    tol: float = 1e-9
    num: Numerics = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "num", Numerics(self.branch, self.precision, self.prec_bits)
        )
        for name in ("t1", "t2", "z"):
            v = self.num.to_scalar(getattr(self, name))
            object.__setattr__(self, name, v)
            if v == 0:
                raise ValueError(f"{name} must be nonzero")

    def with_z(self, z):
        return NumericContext(
            t1=complex(self.t1), t2=complex(self.t2), z=z,
            branch=self.branch, precision=self.precision,
            prec_bits=self.prec_bits, tol=self.tol,
        )

    def flipped_branch(self):
        return NumericContext(
            t1=complex(self.t1), t2=complex(self.t2), z=complex(self.z),
            branch=-self.branch, precision=self.precision,
            prec_bits=self.prec_bits, tol=self.tol,
        )
