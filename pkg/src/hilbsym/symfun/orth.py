"""Gram-Schmidt for deformed monomial-triangular orthogonal families.

Partitions are processed in reverse-lexicographic ascending order, which is
a linear refinement of dominance; any such refinement produces the same
family since the true triangularity is along dominance.
"""

from __future__ import annotations

import threading

from ..partitions import partitions
from .core import SymFunc

_lock = threading.Lock()
_families: dict = {}


def orthogonal_family(n, pairing_key, pairing):
    """dict lam -> (P_lam in p-basis, <P_lam, P_lam>), monic on m_lam."""
    key = (n, pairing_key)
    with _lock:
        if key in _families:
            return _families[key]
    fam = {}
    for lam in reversed(partitions(n)):
        f = SymFunc.unit("m", lam).convert("p")
        for mu, (P, norm) in fam.items():
            c = pairing(f, P) / norm
            if c:
                f = f - c * P
        norm = pairing(f, f)
        if not norm:
            raise ZeroDivisionError(f"degenerate pairing norm at {lam}")
        fam[lam] = (f, norm)
    with _lock:
        _families[key] = fam
    return fam
