from .core import (
    SymFunc,
    DEGREE_BOUND,
    character,
    pairing_alpha,
    pairing_qt,
    plethysm_scale,
)
from .jack import jack_integral, jack_monic, jack_norm
from .macdonald import macdonald_integral, macdonald_modified, macdonald_monic

__all__ = [
    "SymFunc",
    "DEGREE_BOUND",
    "character",
    "pairing_alpha",
    "pairing_qt",
    "plethysm_scale",
    "jack_integral",
    "jack_monic",
    "jack_norm",
    "macdonald_integral",
    "macdonald_modified",
    "macdonald_monic",
]
