"""Pure-Python polynomial-dict kernel.

Polynomials are dicts mapping a packed exponent key (one Python int, BITS
bits per variable, variable 0 in the least significant slot) to a nonzero
rational coefficient.  Packing exponents into a single int makes monomial
multiplication a plain integer addition and gives a valid monomial order
(integer comparison) for the division loop.

The compiled twin `_polycore_cy` implements the same functions; both must
stay behaviorally identical (see tests/test_kernel_backends.py).
"""

from heapq import heapify, heappop, heappush

BACKEND = "python"

BITS = 24
MASK = (1 << BITS) - 1


def padd(a, b):
    if len(b) > len(a):
        a, b = b, a
    out = dict(a)
    for k, c in b.items():
        v = out.get(k)
        if v is None:
            out[k] = c
        else:
            v = v + c
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def psub(a, b):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k)
        if v is None:
            out[k] = -c
        else:
            v = v - c
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def pneg(a):
    return {k: -c for k, c in a.items()}


def pscale(a, c):
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


def pmul_term(a, k, c):
    if not c:
        return {}
    return {ka + k: c * va for ka, va in a.items()}


def pmul(a, b):
    if not a or not b:
        return {}
    if len(b) > len(a):
        a, b = b, a
    out = {}
    for kb, cb in b.items():
        for ka, ca in a.items():
            k = ka + kb
            v = out.get(k)
            if v is None:
                out[k] = ca * cb
            else:
                v = v + ca * cb
                if v:
                    out[k] = v
                else:
                    del out[k]
    return out


def _fields_ge(ka, kb, nvars):
    for _ in range(nvars):
        if (ka & MASK) < (kb & MASK):
            return False
        ka >>= BITS
        kb >>= BITS
    return True


def pdiv_exact(a, b, nvars):
    """Exact polynomial division a / b; returns None when not divisible."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    kb = max(b)
    cb = b[kb]
    work = dict(a)
    heap = [-k for k in work]
    heapify(heap)
    quot = {}
    while heap:
        k = -heappop(heap)
        c = work.pop(k, None)
        if c is None:
            continue
        if not _fields_ge(k, kb, nvars):
            return None
        kq = k - kb
        cq = c / cb
        quot[kq] = cq
        for kt, ct in b.items():
            if kt == kb:
                continue
            knew = kq + kt
            v = work.get(knew)
            if v is None:
                work[knew] = -cq * ct
                heappush(heap, -knew)
            else:
                v = v - cq * ct
                if v:
                    work[knew] = v
                else:
                    del work[knew]
    if work:
        return None
    return quot
