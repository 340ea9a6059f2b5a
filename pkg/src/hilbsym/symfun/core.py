"""Symmetric functions of a fixed degree in the p/m/s bases.

Transition tables are built once per degree behind a lock and shared
read-only afterwards.  Coefficients are whatever scalars the caller uses
(QQ for the classical matrices, RatFunc over alpha or (q,t) for the
deformed families).
"""

from __future__ import annotations

import threading
from functools import lru_cache

from ..algebra.linalg import inverse
from ..algebra.rationals import QQ, QQ0
from ..partitions import Partition, partitions, zfactor

DEGREE_BOUND = 8

_tables_lock = threading.RLock()  # m2p builds on p2m re-entrantly
_tables: dict = {}


class SymFunc:
    """Basis-tagged coefficient map Partition(n) -> scalar."""

    __slots__ = ("basis", "n", "coeffs")

    def __init__(self, basis, n, coeffs):
        if basis not in ("p", "m", "s"):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.n = n
        self.coeffs = {mu: c for mu, c in coeffs.items() if c}
        for mu in self.coeffs:
            if mu.n != n:
                raise ValueError(f"index {mu} has wrong size for degree {n}")

    @classmethod
    def unit(cls, basis, lam, scalar=None):
        return cls(basis, lam.n, {lam: QQ(1) if scalar is None else scalar})

    def __getitem__(self, mu):
        zero = None
        for c in self.coeffs.values():
            zero = 0 * c
            break
        return self.coeffs.get(mu, QQ0 if zero is None else zero)

    def __add__(self, other):
        if self.basis != other.basis or self.n != other.n:
            raise ValueError("basis/degree mismatch in addition")
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = out[mu] + c if mu in out else c
        return SymFunc(self.basis, self.n, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, scalar):
        return SymFunc(self.basis, self.n, {mu: c * scalar for mu, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymFunc) or self.n != other.n:
            return NotImplemented
        a = self.convert("p") if self.basis != other.basis else self
        b = other.convert("p") if self.basis != other.basis else other
        keys = set(a.coeffs) | set(b.coeffs)
        return all(a[mu] == b[mu] for mu in keys)

    def is_zero(self):
        return not self.coeffs

    def map_coeffs(self, f):
        return SymFunc(self.basis, self.n, {mu: f(c) for mu, c in self.coeffs.items()})

    def convert(self, target):
        """Exact change of basis through the cached transition tables."""
        if target == self.basis:
            return self
        if self.n > DEGREE_BOUND:
            raise ValueError(f"degree {self.n} exceeds the conversion bound {DEGREE_BOUND}")
        route = {
            ("p", "m"): [("p2m",)],
            ("m", "p"): [("m2p",)],
            ("s", "p"): [("s2p",)],
            ("p", "s"): [("p2s",)],
            ("s", "m"): [("s2p",), ("p2m",)],
            ("m", "s"): [("m2p",), ("p2s",)],
        }[(self.basis, target)]
        f = self
        for (table_name,) in route:
            table = transition_table(self.n, table_name)
            out: dict = {}
            for mu, c in f.coeffs.items():
                for nu, t in table[mu].items():
                    out[nu] = out[nu] + c * t if nu in out else c * t
            mid = {"p2m": "m", "m2p": "p", "s2p": "p", "p2s": "s"}[table_name]
            f = SymFunc(mid, self.n, out)
        return f

    def __repr__(self):
        terms = ", ".join(f"{mu}: {c}" for mu, c in sorted(self.coeffs.items(), key=lambda x: x[0].parts, reverse=True))
        return f"SymFunc[{self.basis}]{{{terms}}}"


# ----------------------------------------------------------------------
# transition tables


def transition_table(n, which):
    key = (n, which)
    with _tables_lock:
        if key not in _tables:
            _tables[key] = _build_table(n, which)
        return _tables[key]


def _build_table(n, which):
    if which == "p2m":
        return {lam: _p_in_m(lam) for lam in partitions(n)}
    if which == "m2p":
        return _invert_table(n, transition_table(n, "p2m"))
    if which == "s2p":
        return {
            lam: {
                mu: QQ(character(lam.parts, mu.parts), 1) / zfactor(mu)
                for mu in partitions(n)
                if character(lam.parts, mu.parts)
            }
            for lam in partitions(n)
        }
    if which == "p2s":
        return {
            mu: {
                lam: QQ(character(lam.parts, mu.parts))
                for lam in partitions(n)
                if character(lam.parts, mu.parts)
            }
            for mu in partitions(n)
        }
    raise ValueError(which)


def _p_in_m(lam):
    """Expand p_lam in the monomial basis by multiplying in one p_r at a time."""
    acc = {Partition(()): QQ(1)}
    for r in lam.parts:
        nxt: dict = {}
        for nu, c in acc.items():
            for tgt, mult in _mul_p_targets(nu, r):
                nxt[tgt] = nxt.get(tgt, QQ0) + c * mult
        acc = nxt
    return {mu: c for mu, c in acc.items() if c}


def _mul_p_targets(nu, r):
    """m_nu * p_r = sum of mult * m_target (target distinct per receiving part)."""
    out = []
    for s in sorted(set(nu.parts)):
        tgt = nu.remove_part(s).add_part(s + r)
        out.append((tgt, QQ(tgt.m_k(s + r))))
    tgt = nu.add_part(r)
    out.append((tgt, QQ(tgt.m_k(r))))
    return out


def _invert_table(n, table):
    plist = partitions(n)
    idx = {lam: i for i, lam in enumerate(plist)}
    A = [[QQ0] * len(plist) for _ in plist]
    for lam, row in table.items():
        for mu, c in row.items():
            A[idx[mu]][idx[lam]] = c  # column lam holds p_lam's m-coefficients
    B = inverse(A)
    return {
        lam: {mu: B[idx[mu]][idx[lam]] for mu in plist if B[idx[mu]][idx[lam]]}
        for lam in plist
    }


# ----------------------------------------------------------------------
# symmetric group characters (Murnaghan-Nakayama)


@lru_cache(maxsize=None)
def character(lam_parts, mu_parts):
    """chi^lam(mu) for partitions given as part tuples."""
    if not mu_parts:
        return 1 if not lam_parts else 0
    r, rest = mu_parts[0], mu_parts[1:]
    total = 0
    L = len(lam_parts)
    beta = [lam_parts[i] + (L - 1 - i) for i in range(L)]
    bset = set(beta)
    for i, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        nbeta = sorted([x for j, x in enumerate(beta) if j != i] + [nb], reverse=True)
        nlam = tuple(x - (L - 1 - k) for k, x in enumerate(nbeta))
        nlam = tuple(x for x in nlam if x > 0)
        total += (-1) ** height * character(nlam, rest)
    return total


# ----------------------------------------------------------------------
# pairings and plethysm


def pairing_alpha(f, g, alpha):
    """<p_lam, p_mu> = delta * z_lam * alpha^len(lam), extended bilinearly."""
    fp, gp = f.convert("p"), g.convert("p")
    acc = None
    for mu, c in fp.coeffs.items():
        d = gp.coeffs.get(mu)
        if d is None:
            continue
        t = c * d * zfactor(mu) * alpha ** len(mu)
        acc = t if acc is None else acc + t
    return 0 * alpha if acc is None else acc


def pairing_qt(f, g, q, t):
    """<p_lam, p_mu> = delta * z_lam * prod (1-q^lam_i)/(1-t^lam_i)."""
    fp, gp = f.convert("p"), g.convert("p")
    acc = None
    for mu, c in fp.coeffs.items():
        d = gp.coeffs.get(mu)
        if d is None:
            continue
        t2 = c * d * zfactor(mu)
        for part in mu.parts:
            t2 = t2 * (1 - q**part) / (1 - t**part)
        acc = t2 if acc is None else acc + t2
    return 0 * q if acc is None else acc


def plethysm_scale(f, rule):
    """p_k -> rule(k) * p_k extended multiplicatively (exact)."""
    fp = f.convert("p")
    out = {}
    for mu, c in fp.coeffs.items():
        for part in mu.parts:
            c = c * rule(part)
        out[mu] = c
    return SymFunc("p", f.n, out)
