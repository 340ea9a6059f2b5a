# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled polynomial-dict kernel.

Same contract as `_polycore_py` (see its docstring for the packed-exponent
representation).  Coefficients stay generic Python objects (gmpy2.mpq or
Fraction); the win comes from doing the dict/heap bookkeeping in C.
"""

from cpython.dict cimport PyDict_GetItem, PyDict_SetItem, PyDict_DelItem
from heapq import heapify, heappop, heappush

BACKEND = "cython"

DEF _BITS = 24
BITS = _BITS
MASK = (1 << _BITS) - 1

_MASK = (1 << _BITS) - 1


def padd(dict a, dict b):
    cdef dict out
    cdef void* hit
    if len(b) > len(a):
        a, b = b, a
    out = dict(a)
    for k, c in b.items():
        hit = PyDict_GetItem(out, k)
        if hit == NULL:
            PyDict_SetItem(out, k, c)
        else:
            v = (<object>hit) + c
            if v:
                PyDict_SetItem(out, k, v)
            else:
                PyDict_DelItem(out, k)
    return out


def psub(dict a, dict b):
    cdef dict out = dict(a)
    cdef void* hit
    for k, c in b.items():
        hit = PyDict_GetItem(out, k)
        if hit == NULL:
            PyDict_SetItem(out, k, -c)
        else:
            v = (<object>hit) - c
            if v:
                PyDict_SetItem(out, k, v)
            else:
                PyDict_DelItem(out, k)
    return out


def pneg(dict a):
    cdef dict out = {}
    for k, c in a.items():
        PyDict_SetItem(out, k, -c)
    return out


def pscale(dict a, c):
    cdef dict out = {}
    if not c:
        return out
    for k, v in a.items():
        PyDict_SetItem(out, k, c * v)
    return out


def pmul_term(dict a, k, c):
    cdef dict out = {}
    if not c:
        return out
    for ka, va in a.items():
        PyDict_SetItem(out, ka + k, c * va)
    return out


def pmul(dict a, dict b):
    cdef dict out = {}
    cdef void* hit
    if not a or not b:
        return out
    if len(b) > len(a):
        a, b = b, a
    for kb, cb in b.items():
        for ka, ca in a.items():
            k = ka + kb
            hit = PyDict_GetItem(out, k)
            if hit == NULL:
                PyDict_SetItem(out, k, ca * cb)
            else:
                v = (<object>hit) + ca * cb
                if v:
                    PyDict_SetItem(out, k, v)
                else:
                    PyDict_DelItem(out, k)
    return out


cdef bint _fields_ge(object ka, object kb, int nvars):
    cdef int i
    for i in range(nvars):
        if (ka & _MASK) < (kb & _MASK):
            return False
        ka >>= _BITS
        kb >>= _BITS
    return True


def pdiv_exact(dict a, dict b, int nvars):
    """Exact polynomial division a / b; returns None when not divisible."""
    cdef dict work, quot
    cdef void* hit
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
        hit = PyDict_GetItem(work, k)
        if hit == NULL:
            continue
        c = <object>hit
        PyDict_DelItem(work, k)
        if not _fields_ge(k, kb, nvars):
            return None
        kq = k - kb
        cq = c / cb
        PyDict_SetItem(quot, kq, cq)
        for kt, ct in b.items():
            if kt == kb:
                continue
            knew = kq + kt
            hit = PyDict_GetItem(work, knew)
            if hit == NULL:
                PyDict_SetItem(work, knew, -cq * ct)
                heappush(heap, -knew)
            else:
                v = (<object>hit) - cq * ct
                if v:
                    PyDict_SetItem(work, knew, v)
                else:
                    PyDict_DelItem(work, knew)
    if work:
        return None
    return quot
