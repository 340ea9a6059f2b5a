"""Partition combinatorics and the torus weights of Hilb^n(C^2) fixed points.

Box coordinates are (i, j) = (row, column), 1-based, so the content form of
a partition reads sum over boxes of (j-1)*t1 + (i-1)*t2.  The basis order
used everywhere is the reverse-lexicographic one produced by partitions(),
which refines dominance: (n) first, (1^n) last.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra.multipoly import MultiPoly
from .algebra.ratfunc import RatFunc
from .algebra.rationals import QQ


class Partition:
    __slots__ = ("parts", "n", "_hash")

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")
        self.parts = parts
        self.n = sum(parts)
        self._hash = hash(parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __repr__(self):
        return f"({','.join(map(str, self.parts))})"

    @property
    def length(self):
        return len(self.parts)

    def multiplicities(self):
        out = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def m_k(self, k):
        return sum(1 for p in self.parts if p == k)

    def conjugate(self):
        if not self.parts:
            return Partition(())
        return Partition(
            tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1))
        )

    def boxes(self):
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                yield (i, j)

    def arm(self, i, j):
        return self.parts[i - 1] - j

    def leg(self, i, j):
        return sum(1 for p in self.parts if p >= j) - i

    def n_stat(self):
        """sum_i (i-1) * lambda_i."""
        return sum((i - 1) * p for i, p in enumerate(self.parts, start=1))

    def remove_part(self, k):
        parts = list(self.parts)
        parts.remove(k)
        return Partition(tuple(parts))

    def add_part(self, k):
        parts = sorted(self.parts + (k,), reverse=True)
        return Partition(tuple(parts))


EMPTY = Partition(())


@lru_cache(maxsize=None)
def partitions(n):
    """All partitions of n, reverse-lexicographic (refines dominance)."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for k in range(min(rest, maxpart), 0, -1):
            for tail in gen(rest - k, k):
                yield (k,) + tail

    return tuple(Partition(p) for p in gen(n, n))


def index_of(lam):
    return partitions(lam.n).index(lam)


def zfactor(mu):
    """|Aut(mu)| * prod(mu_i) as a big rational."""
    z = 1
    for k, m in mu.multiplicities().items():
        f = 1
        for j in range(2, m + 1):
            f *= j
        z *= f * k**m
    return QQ(z)


def dominance_leq(mu, lam):
    """mu <= lam in dominance order (|mu| == |lam| assumed)."""
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu.parts[i] if i < len(mu) else 0
        b += lam.parts[i] if i < len(lam) else 0
        if a > b:
            return False
    return True


class WeightForm:
    """The linear form a*t1 + b*t2 with exact rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = QQ(a) if isinstance(a, int) else a
        self.b = QQ(b) if isinstance(b, int) else b

    def __add__(self, other):
        return WeightForm(self.a + other.a, self.b + other.b)

    def __neg__(self):
        return WeightForm(-self.a, -self.b)

    def __eq__(self, other):
        return isinstance(other, WeightForm) and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def swap(self):
        return WeightForm(self.b, self.a)

    def to_poly(self):
        t1 = MultiPoly.variable("t1", ("t1", "t2"))
        t2 = MultiPoly.variable("t2", ("t1", "t2"))
        return t1.scale_coeffs(self.a) + t2.scale_coeffs(self.b)

    def to_ratfunc(self):
        return RatFunc(self.to_poly())

    def evaluate(self, t1, t2):
        a = QQ(self.a)
        b = QQ(self.b)
        return (int(a.numerator) / int(a.denominator)) * t1 + (
            int(b.numerator) / int(b.denominator)
        ) * t2

    def __repr__(self):
        return f"{self.a}*t1 + {self.b}*t2"


def content_sum(lam):
    """c(lambda; t1, t2) = sum over boxes of (j-1)*t1 + (i-1)*t2, returned
    positively (callers negate for the eigenvalue)."""
    a = sum(j - 1 for _, j in lam.boxes())
    b = sum(i - 1 for i, _ in lam.boxes())
    return WeightForm(a, b)


def tangent_weights(lam):
    """The 2n torus weights of the tangent space at the fixed point lam.

    Per box: (arm+1)*t1 - leg*t2 and -arm*t1 + (leg+1)*t2.  The pairing of
    arms with t1 is the convention that makes prod(w) equal the Jack-class
    norm; the conjugate convention fails that identity (see tests).
    """
    out = []
    for (i, j) in lam.boxes():
        a = lam.arm(i, j)
        l = lam.leg(i, j)
        out.append(WeightForm(a + 1, -l))
        out.append(WeightForm(-a, l + 1))
    return out
