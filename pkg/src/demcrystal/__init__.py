"""Exact crystal-base characters for level-k Demazure modules of affine sl(2)."""

from .qlaurent import BivariatePolynomial, gaussian, q_multinomial
from .weights import Weight, demazure_character_oracle, specialize
from .eyd import ExtendedYoungDiagram, EYDTuple
from .characters import (
    f_recursive,
    f_bosonic,
    f_fermionic,
    ch_path_bruteforce,
    ch_via_f,
    demazure_ch,
    demazure_ch_bruteforce,
    demazure_ch_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "BivariatePolynomial",
    "gaussian",
    "q_multinomial",
    "Weight",
    "demazure_character_oracle",
    "specialize",
    "ExtendedYoungDiagram",
    "EYDTuple",
    "f_recursive",
    "f_bosonic",
    "f_fermionic",
    "ch_path_bruteforce",
    "ch_via_f",
    "demazure_ch",
    "demazure_ch_bruteforce",
    "demazure_ch_oracle",
    "__version__",
]
