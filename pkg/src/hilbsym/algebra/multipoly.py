"""Exact multivariate polynomials over big rationals.

Variables come from the fixed ambient list VAR_ORDER; every polynomial
carries the ordered subset it actually uses.  Mixed-variable arithmetic
extends both operands to the union.  Term storage is the packed-exponent
dict of the kernel backend (see hilbsym._kernel).
"""

from __future__ import annotations

from .rationals import QQ, QQ0, QQ1, qq_content
from .._kernel import polycore as _pc

VAR_ORDER = ("t1", "t2", "q", "t", "alpha", "z")
_VAR_POS = {v: i for i, v in enumerate(VAR_ORDER)}

BITS = _pc.BITS
MASK = _pc.MASK


def canonical_vars(names):
    names = set(names)
    unknown = names - set(VAR_ORDER)
    if unknown:
        raise ValueError(f"unknown variables {sorted(unknown)}")
    return tuple(v for v in VAR_ORDER if v in names)


def pack(exps):
    key = 0
    for i, e in enumerate(exps):
        key |= e << (BITS * i)
    return key


def unpack(key, nvars):
    return tuple((key >> (BITS * i)) & MASK for i in range(nvars))


def _remap(terms, old_vars, new_vars):
    if old_vars == new_vars:
        return dict(terms)
    pos = [new_vars.index(v) for v in old_vars]
    out = {}
    n_old = len(old_vars)
    for k, c in terms.items():
        nk = 0
        for i in range(n_old):
            nk |= ((k >> (BITS * i)) & MASK) << (BITS * pos[i])
        out[nk] = c
    return out


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms):
        # internal: assumes canonical vars and no stored zeros
        self.vars = vars
        self.terms = terms

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, vars=()):
        return cls(canonical_vars(vars), {})

    @classmethod
    def const(cls, c, vars=()):
        c = c if not isinstance(c, int) else QQ(c)
        if not c:
            return cls.zero(vars)
        return cls(canonical_vars(vars), {0: c})

    @classmethod
    def variable(cls, name, vars=None):
        vars = canonical_vars([name] if vars is None else vars)
        i = vars.index(name)
        return cls(vars, {1 << (BITS * i): QQ1})

    @classmethod
    def from_exponents(cls, vars, exp_map):
        """Build from {exponent tuple: coefficient}."""
        vars = canonical_vars(vars)
        terms = {}
        for exps, c in exp_map.items():
            c = QQ(c) if isinstance(c, int) else c
            if c:
                terms[pack(exps)] = terms.get(pack(exps), QQ0) + c
        return cls(vars, {k: c for k, c in terms.items() if c})

    # ------------------------------------------------------------------
    # structure

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        if not self.terms:
            return QQ0
        if len(self.terms) == 1 and 0 in self.terms:
            return self.terms[0]
        raise ValueError("not a constant polynomial")

    def exponents(self):
        n = len(self.vars)
        return {unpack(k, n): c for k, c in self.terms.items()}

    def sorted_terms(self):
        """(exponent tuple, coefficient) pairs in a deterministic order."""
        n = len(self.vars)
        return [(unpack(k, n), self.terms[k]) for k in sorted(self.terms, reverse=True)]

    def total_degree(self):
        n = len(self.vars)
        return max((sum(unpack(k, n)) for k in self.terms), default=0)

    def degree_in(self, name):
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        return max(((k >> (BITS * i)) & MASK for k in self.terms), default=0)

    def is_homogeneous(self, degree=None):
        n = len(self.vars)
        degs = {sum(unpack(k, n)) for k in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def leading(self):
        """(packed key, coefficient) of the largest monomial; poly must be nonzero."""
        k = max(self.terms)
        return k, self.terms[k]

    # ------------------------------------------------------------------
    # arithmetic

    def _align(self, other):
        if isinstance(other, MultiPoly):
            if self.vars == other.vars:
                return self.vars, self.terms, other.terms
            vars = canonical_vars(set(self.vars) | set(other.vars))
            return vars, _remap(self.terms, self.vars, vars), _remap(other.terms, other.vars, vars)
        raise TypeError

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        _, ta, tb = self._align(other)
        return ta == tb

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other, self.vars)
        elif not isinstance(other, MultiPoly):
            return NotImplemented
        vars, ta, tb = self._align(other)
        return MultiPoly(vars, _pc.padd(ta, tb))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other, self.vars)
        elif not isinstance(other, MultiPoly):
            return NotImplemented
        vars, ta, tb = self._align(other)
        return MultiPoly(vars, _pc.psub(ta, tb))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return MultiPoly(self.vars, _pc.pneg(self.terms))

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            vars, ta, tb = self._align(other)
            return MultiPoly(vars, _pc.pmul(ta, tb))
        if isinstance(other, int):
            other = QQ(other)
        return MultiPoly(self.vars, _pc.pscale(self.terms, other))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale_coeffs(self, c):
        if isinstance(c, int):
            c = QQ(c)
        return MultiPoly(self.vars, _pc.pscale(self.terms, c))

    def mul_monomial(self, exps, c=QQ1):
        return MultiPoly(self.vars, _pc.pmul_term(self.terms, pack(exps), c))

    def divexact(self, other):
        """self / other when exact, else None."""
        vars, ta, tb = self._align(other)
        q = _pc.pdiv_exact(ta, tb, len(vars))
        return None if q is None else MultiPoly(vars, q)

    def flip_sign(self, names):
        """Substitute v -> -v for each named variable (used by the bar map)."""
        idx = [self.vars.index(v) for v in names if v in self.vars]
        if not idx:
            return self
        out = {}
        for k, c in self.terms.items():
            s = sum((k >> (BITS * i)) & MASK for i in idx)
            out[k] = -c if s & 1 else c
        return MultiPoly(self.vars, out)

    # ------------------------------------------------------------------
    # content / primitive part

    def integer_primitive(self):
        """Write self = content * primitive with integer primitive coefficients.

        Returns (content, primitive); content > 0 unless self == 0, and the
        primitive's leading coefficient is positive.
        """
        if not self.terms:
            return QQ0, self
        cont = qq_content(self.terms.values())
        lead = self.terms[max(self.terms)]
        if lead < 0:
            cont = -cont
        prim = MultiPoly(self.vars, _pc.pscale(self.terms, 1 / cont))
        return cont, prim

    def monomial_content(self):
        """Per-variable minimum exponents as a tuple."""
        n = len(self.vars)
        if not self.terms:
            return (0,) * n
        mins = None
        for k in self.terms:
            e = unpack(k, n)
            mins = e if mins is None else tuple(map(min, mins, e))
        return mins

    def shift_down(self, exps):
        """Divide by the monomial with the given exponents (must divide)."""
        key = pack(exps)
        if key == 0:
            return self
        return MultiPoly(self.vars, {k - key: c for k, c in self.terms.items()})

    # ------------------------------------------------------------------
    # evaluation / substitution

    def evaluate(self, values):
        """Numeric (or generic ring) evaluation; `values` maps every used variable."""
        n = len(self.vars)
        powers = [{} for _ in range(n)]
        result = None
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            term = None
            for i in range(n):
                e = (k >> (BITS * i)) & MASK
                if not e:
                    continue
                cache = powers[i]
                p = cache.get(e)
                if p is None:
                    p = values[self.vars[i]] ** e
                    cache[e] = p
                term = p if term is None else term * p
            val = c if term is None else term * c
            result = val if result is None else result + val
        if result is None:
            return 0
        return result

    def substitute(self, assignments):
        """Substitute polynomials/scalars for variables, exactly.

        Unassigned variables stay symbolic.  Values may be MultiPoly, int, or
        QQ; rational-function substitution lives on RatFunc.
        """
        remaining = tuple(v for v in self.vars if v not in assignments)
        n = len(self.vars)
        acc = MultiPoly.zero(remaining)
        for k, c in self.terms.items():
            term = MultiPoly.const(c, remaining)
            for i in range(n):
                e = (k >> (BITS * i)) & MASK
                if not e:
                    continue
                v = self.vars[i]
                if v in assignments:
                    val = assignments[v]
                    if isinstance(val, int):
                        val = QQ(val)
                    if isinstance(val, MultiPoly):
                        term = term * val**e
                    else:
                        term = term * MultiPoly.const(val**e)
                else:
                    term = term * MultiPoly.variable(v, remaining) ** e
            acc = acc + term
        return acc

    # ------------------------------------------------------------------
    # univariate views (for the PRS gcd)

    def to_univar(self, name):
        """Dense coefficient list in `name`; entries are MultiPoly in the rest."""
        if name not in self.vars:
            return [self]
        i = self.vars.index(name)
        rest = tuple(v for v in self.vars if v != name)
        deg = self.degree_in(name)
        coeffs = [dict() for _ in range(deg + 1)]
        for k, c in self.terms.items():
            e = (k >> (BITS * i)) & MASK
            nk = 0
            j_out = 0
            for j in range(len(self.vars)):
                if j == i:
                    continue
                nk |= ((k >> (BITS * j)) & MASK) << (BITS * j_out)
                j_out += 1
            coeffs[e][nk] = c
        return [MultiPoly(rest, t) for t in coeffs]

    @staticmethod
    def from_univar(coeffs, name):
        vars = canonical_vars(set().union(*(set(c.vars) for c in coeffs)) | {name})
        i = vars.index(name)
        terms = {}
        for e, c in enumerate(coeffs):
            re = _remap(c.terms, c.vars, vars)
            for k, v in re.items():
                nk = k | (e << (BITS * i))
                terms[nk] = v
        return MultiPoly(vars, terms)

    # ------------------------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.vars, exps)
                if e
            )
            if mono:
                bits.append(f"({c})*{mono}" if c != 1 else mono)
            else:
                bits.append(f"({c})")
        return " + ".join(bits)


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Multivariate gcd over Q: primitive PRS in the smallest-degree variable,
    with a deterministic evaluation probe that short-circuits the (common)
    coprime case.

    The result is integer-primitive with positive leading coefficient; any
    rational content is dropped (units of Q[x]).
    """
    if a.is_zero():
        return b.integer_primitive()[1] if not b.is_zero() else a
    if b.is_zero():
        return a.integer_primitive()[1]
    vars = canonical_vars(set(a.vars) | set(b.vars))
    a = MultiPoly(vars, _remap(a.terms, a.vars, vars))
    b = MultiPoly(vars, _remap(b.terms, b.vars, vars))

    # strip common monomial factor first
    ma, mb = a.monomial_content(), b.monomial_content()
    common = tuple(map(min, ma, mb)) if vars else ()
    a = a.shift_down(ma).integer_primitive()[1]
    b = b.shift_down(mb).integer_primitive()[1]

    g = _gcd_rec(a, b)
    if g.vars != vars:
        g = MultiPoly(vars, _remap(g.terms, g.vars, vars))
    g = g.mul_monomial(common)
    return g.integer_primitive()[1]


# deterministic probe points for the evaluation shortcut
_PROBE_VALUES = (3, 5, 7, 11)

# modulus for the gcd-degree prefilter (2^61 - 1, prime); a degree-0 gcd of
# the mod-P images certifies coprimality, so the exact PRS only runs when a
# common factor can actually exist
_P = (1 << 61) - 1


class _ModFail(Exception):
    pass


def _modred(x):
    d = int(x.denominator) % _P
    if d == 0:
        raise _ModFail
    return int(x.numerator) % _P * pow(d, _P - 2, _P) % _P


def _euclid_mod_degree(u, v):
    """Degree of gcd of dense mod-P coefficient lists (leads nonzero)."""
    while True:
        if len(u) < len(v):
            u, v = v, u
        m, n = len(u) - 1, len(v) - 1
        if n == 0:
            return 0
        inv = pow(v[n], _P - 2, _P)
        r = list(u)
        for k in range(m - n, -1, -1):
            top = r[n + k] * inv % _P
            if top:
                for j in range(n + 1):
                    r[j + k] = (r[j + k] - top * v[j]) % _P
            r.pop()
        while r and not r[-1]:
            r.pop()
        if not r:
            return n
        u, v = v, r


def _gcd_rec(a, b):
    if a.is_constant() or b.is_constant():
        return MultiPoly.const(1, a.vars)
    if a.vars != b.vars:
        vars = canonical_vars(set(a.vars) | set(b.vars))
        a = MultiPoly(vars, _remap(a.terms, a.vars, vars))
        b = MultiPoly(vars, _remap(b.terms, b.vars, vars))
    active = [v for v in a.vars if a.degree_in(v) or b.degree_in(v)]
    if len(active) == 1:
        name = active[0]
        g = _univar_gcd([c.constant_value() for c in a.to_univar(name)],
                        [c.constant_value() for c in b.to_univar(name)])
        return MultiPoly.from_exponents(
            a.vars,
            {tuple(e if v == name else 0 for v in a.vars): c
             for e, c in enumerate(g) if c},
        )

    name = min(active, key=lambda v: max(a.degree_in(v), b.degree_in(v)))

    # probe: if a univariate specialization in `name` is coprime, the gcd has
    # degree 0 in `name` and only the coefficient contents can contribute
    probe_deg = None
    others = [v for v in active if v != name]
    for base in _PROBE_VALUES:
        point = {v: base + 2 * i for i, v in enumerate(others)}
        try:
            ea = _eval_mod_univar(a, name, point)
            eb = _eval_mod_univar(b, name, point)
        except _ModFail:
            break
        if len(ea) == a.degree_in(name) + 1 and len(eb) == b.degree_in(name) + 1:
            probe_deg = _euclid_mod_degree(ea, eb) if len(ea) > 1 and len(eb) > 1 else 0
            break
    if probe_deg == 0:
        ca = _coeff_content(a.to_univar(name))
        cb = _coeff_content(b.to_univar(name))
        return _gcd_rec_or_const(ca, cb)

    if len(active) == 2:
        # Brown-style modular gcd: interpolate the gcd of mod-p images and
        # verify the lift with two exact divisions; unlucky primes fall back
        # to the PRS below.  The interpolation only sees the part of the gcd
        # with positive main-variable degree, so the coefficient-content gcd
        # is computed separately and multiplied back.
        sec = next(v for v in active if v != name)
        for p in _GCD_PRIMES:
            cand = _brown2(a, b, name, sec, p)
            if cand is None:
                continue
            ca = _coeff_content(a.to_univar(name))
            cb = _coeff_content(b.to_univar(name))
            cont_gcd = _gcd_rec_or_const(ca, cb)
            if not cont_gcd.is_constant():
                cand = (cont_gcd * cand).integer_primitive()[1]
            if a.divexact(cand) is not None and b.divexact(cand) is not None:
                return cand
        # fall through to PRS

    ua, ub = a.to_univar(name), b.to_univar(name)
    if len(ua) < len(ub):
        ua, ub = ub, ua

    ca, cb = _coeff_content(ua), _coeff_content(ub)
    cont_gcd = _gcd_rec_or_const(ca, cb)
    ua = _primitive(ua, ca)
    ub = _primitive(ub, cb)

    # primitive PRS with integer contents stripped each step
    while True:
        r = _pseudo_rem(ua, ub)
        while r and r[-1].is_zero():
            r.pop()
        if not r:
            g = MultiPoly.from_univar(ub, name)
            break
        if len(r) == 1:
            g = MultiPoly.const(1, a.vars)
            break
        r = _strip_int_content(r)
        cr = _coeff_content(r)
        r = _primitive(r, cr)
        ua, ub = ub, r
    return cont_gcd * g.integer_primitive()[1]


def _dense2_mod(p_poly, main, sec, p):
    """p_poly as dense [main_exp][sec_exp] lists of residues mod p."""
    im = p_poly.vars.index(main)
    isec = p_poly.vars.index(sec)
    dm = p_poly.degree_in(main)
    ds = p_poly.degree_in(sec)
    out = [[0] * (ds + 1) for _ in range(dm + 1)]
    for k, c in p_poly.terms.items():
        em = (k >> (BITS * im)) & MASK
        es = (k >> (BITS * isec)) & MASK
        d = int(c.denominator) % p
        if d == 0:
            raise _ModFail
        out[em][es] = (out[em][es] + int(c.numerator) * pow(d, p - 2, p)) % p
    return out


def _eval_inner(rows, xi, p):
    """Evaluate each inner (sec-variable) list at xi; dense main-var list."""
    out = []
    for inner in rows:
        acc = 0
        for c in reversed(inner):
            acc = (acc * xi + c) % p
        out.append(acc)
    while out and not out[-1]:
        out.pop()
    return out


def _brown2(a, b, main, sec, p):
    """Bivariate modular gcd candidate; None when this prime looks unlucky.

    The caller must verify the candidate by exact division: a degree-deficient
    set of sample points (or a bad prime) can produce a wrong lift, never a
    silently wrong return.
    """
    try:
        F = _dense2_mod(a, main, sec, p)
        G = _dense2_mod(b, main, sec, p)
    except _ModFail:
        return None
    lcF, lcG = list(F[-1]), list(G[-1])
    while lcF and not lcF[-1]:
        lcF.pop()
    while lcG and not lcG[-1]:
        lcG.pop()
    if not lcF or not lcG:
        return None  # leading coefficient vanished mod p
    gamma = _euclid_mod(lcF, lcG, p) if (len(lcF) > 1 and len(lcG) > 1) else [1]
    ds_bound = (len(gamma) - 1) + min(
        max(len(r) for r in F) - 1, max(len(r) for r in G) - 1
    )
    needed = ds_bound + 1
    samples = []
    dmin = None
    xi = 0
    while len(samples) < needed:
        if xi >= p:
            return None
        fxi = _eval_inner(F, xi, p)
        gxi = _eval_inner(G, xi, p)
        if len(fxi) != len(F) or len(gxi) != len(G):
            xi += 1
            continue  # lc vanished at this point
        if len(fxi) == 1 or len(gxi) == 1:
            return None  # inputs not primitive in main var; unexpected
        gx = _euclid_mod(fxi, gxi, p)
        d = len(gx) - 1
        if d == 0:
            return MultiPoly.const(1, a.vars)
        if dmin is None or d < dmin:
            dmin = d
            samples = []
        if d == dmin:
            gacc = 0
            for c in reversed(gamma):
                gacc = (gacc * xi + c) % p
            samples.append((xi, [c * gacc % p for c in gx]))
        xi += 1
        if xi > 4 * needed + 16:
            # too many unlucky points; give up on this prime
            return None
    # Newton interpolation per main-variable coefficient
    coeffs = []
    for i in range(dmin + 1):
        pts = [(x, g[i]) for x, g in samples]
        coeffs.append(_interp_mod(pts, p))
    # assemble, lift symmetrically, strip integer content
    exp_map = {}
    for em, inner in enumerate(coeffs):
        for es, c in enumerate(inner):
            if not c:
                continue
            if c > p // 2:
                c -= p
            exp_map[tuple(
                em if v == main else (es if v == sec else 0) for v in a.vars
            )] = QQ(c)
    if not exp_map:
        return None
    cand = MultiPoly.from_exponents(a.vars, exp_map)
    return cand.integer_primitive()[1]


def _interp_mod(pts, p):
    """Newton interpolation through (x, y) pairs mod p; dense coefficients."""
    xs = [x for x, _ in pts]
    divided = [y for _, y in pts]
    n = len(pts)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = (divided[i] - divided[i - 1]) % p
            den = (xs[i] - xs[i - j]) % p
            divided[i] = num * pow(den, p - 2, p) % p
    # expand Newton form into monomial coefficients
    poly = [divided[n - 1]]
    for k in range(n - 2, -1, -1):
        # poly = poly * (x - xs[k]) + divided[k]
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] = (nxt[i + 1] + c) % p
            nxt[i] = (nxt[i] - c * xs[k]) % p
        nxt[0] = (nxt[0] + divided[k]) % p
        poly = nxt
    while poly and not poly[-1]:
        poly.pop()
    return poly


def _coeff_content(u):
    c = u[0]
    for x in u[1:]:
        c = _gcd_rec_or_const(c, x)
        if c.is_constant() and not c.is_zero():
            break
    if c.is_constant() and not c.is_zero():
        return MultiPoly.const(1, c.vars)
    return c.integer_primitive()[1] if not c.is_zero() else c


def _primitive(u, cont):
    if cont.is_constant():
        cv = cont.constant_value()
        if cv == 1 or cv == 0:
            return u
        return [x.scale_coeffs(1 / cv) for x in u]
    return [x.divexact(cont) for x in u]


def _strip_int_content(u):
    vals = [c for x in u for c in x.terms.values()]
    if not vals:
        return u
    cont = qq_content(vals)
    if cont == 1 or cont == 0:
        return u
    return [x.scale_coeffs(1 / cont) for x in u]


def _gcd_rec_or_const(a, b):
    if a.is_zero():
        return b if b.is_zero() else b.integer_primitive()[1]
    if b.is_zero():
        return a.integer_primitive()[1]
    if a.is_constant() or b.is_constant():
        return MultiPoly.const(1, a.vars)
    return _gcd_rec(a, b).integer_primitive()[1]


def _eval_mod_univar(p, name, point):
    """Dense mod-P coefficient list of p in `name`, other vars at int `point`.

    Trailing zeros are stripped, so callers can detect leading-coefficient
    collapse by comparing lengths with degree+1.
    """
    i = p.vars.index(name)
    out = [0] * (p.degree_in(name) + 1)
    powers = {v: {} for v in point}
    for k, c in p.terms.items():
        e_main = (k >> (BITS * i)) & MASK
        val = _modred(c)
        for j, v in enumerate(p.vars):
            if v == name:
                continue
            e = (k >> (BITS * j)) & MASK
            if not e:
                continue
            cache = powers[v]
            pw = cache.get(e)
            if pw is None:
                pw = pow(point[v], e, _P)
                cache[e] = pw
            val = val * pw % _P
        out[e_main] = (out[e_main] + val) % _P
    while out and not out[-1]:
        out.pop()
    return out


_GCD_PRIMES = ((1 << 61) - 1, 1000000007, (1 << 31) - 1)


def _univar_gcd(u, v):
    """Primitive gcd of dense QQ coefficient lists (positive leading coeff).

    Modular images with an exact trial-division check do nearly all the
    work; the primitive PRS only runs if every probe prime is unlucky.
    """
    u = [QQ(x) if isinstance(x, int) else x for x in u]
    v = [QQ(x) if isinstance(x, int) else x for x in v]
    while u and not u[-1]:
        u.pop()
    while v and not v[-1]:
        v.pop()
    if not u:
        u, v = v, u
    if not v:
        if not u:
            return []
        return _int_prim(u)
    if len(u) < len(v):
        u, v = v, u
    if len(v) == 1:
        return [QQ(1)]
    u, v = _int_prim(u), _int_prim(v)
    from math import gcd as _ig

    L = _ig(abs(int(u[-1])), abs(int(v[-1])))
    for p in _GCD_PRIMES:
        du = [int(x) % p for x in u]
        dv = [int(x) % p for x in v]
        if not du[-1] or not dv[-1]:
            continue
        g = _euclid_mod(du, dv, p)
        if len(g) == 1:
            return [QQ(1)]
        # lift: scale the monic image by the leading-coefficient gcd and map
        # into the symmetric residue range, then verify by exact division
        cand = []
        ok = True
        for c in g:
            c = c * (L % p) % p
            if c > p // 2:
                c -= p
            cand.append(QQ(c))
        cand = _int_prim(cand)
        if _dense_divides(u, cand) and _dense_divides(v, cand):
            return cand
    # fallback: primitive PRS (unlucky primes)
    while True:
        m, n = len(u) - 1, len(v) - 1
        if n == 0:
            return [QQ(1)]
        r = list(u)
        lead = v[n]
        for k in range(m - n, -1, -1):
            top = r[n + k]
            if top:
                r = [lead * x for x in r]
                for j in range(n + 1):
                    r[j + k] = r[j + k] - top * v[j]
            r.pop()
        while r and not r[-1]:
            r.pop()
        if not r:
            return _int_prim(v)
        u, v = v, _int_prim(r)


def _euclid_mod(u, v, p):
    """Monic gcd of dense mod-p coefficient lists (leads nonzero)."""
    while True:
        if len(u) < len(v):
            u, v = v, u
        m, n = len(u) - 1, len(v) - 1
        if n == 0:
            return [1]
        inv = pow(v[n], p - 2, p)
        r = list(u)
        for k in range(m - n, -1, -1):
            top = r[n + k] * inv % p
            if top:
                for j in range(n + 1):
                    r[j + k] = (r[j + k] - top * v[j]) % p
            r.pop()
        while r and not r[-1]:
            r.pop()
        if not r:
            inv = pow(v[n], p - 2, p)
            return [c * inv % p for c in v]
        u, v = v, r


def _dense_divides(u, g):
    """True when g divides u exactly.

    Both lists must be integer-valued and primitive (Gauss: the quotient is
    then integral), so the whole check runs on raw ints with early exit.
    """
    dg = len(g) - 1
    du = len(u) - 1
    if du < dg:
        return False
    U = [int(x) for x in u]
    G = [int(x) for x in g]
    lead = G[-1]
    for k in range(du - dg, -1, -1):
        top = U[dg + k]
        if top:
            c, rem = divmod(top, lead)
            if rem:
                return False
            for j in range(dg):
                U[j + k] -= c * G[j]
            U[dg + k] = 0
    return not any(U)


def _int_prim(u):
    cont = qq_content([x for x in u if x])
    if u and u[-1] < 0:
        cont = -cont
    return [x / cont for x in u]


def _pseudo_rem(u, v):
    """Pseudo-remainder of coefficient lists (deg u >= deg v >= 1)."""
    m, n = len(u) - 1, len(v) - 1
    lead = v[n]
    r = list(u)
    for k in range(m - n, -1, -1):
        top = r[n + k]
        if top.is_zero():
            r.pop()
            continue
        r = [lead * x for x in r]
        for j in range(n + 1):
            r[j + k] = r[j + k] - top * v[j]
        # degree n+k coefficient is now exactly zero
        r.pop()
    return r
