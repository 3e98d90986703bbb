"""Incremental feature-chain compression over bitstrings.

Bitstrings cross the boundary as '0'/'1' text; containers as bytes.
"""

from ._core import __version__
from ._core import (
    HostFeature,
    IndexOutOfRange,
    NotATest,
    bits_to_nat,
    bounded_complexity,
    compress,
    e1_decode,
    e1_encode,
    e2_decode,
    e2_encode,
    expand,
    nat_to_bits,
    pack,
    phi,
    run_program,
    unpack,
)

__all__ = [
    "__version__",
    "HostFeature",
    "IndexOutOfRange",
    "NotATest",
    "bits_to_nat",
    "bounded_complexity",
    "compress",
    "e1_decode",
    "e1_encode",
    "e2_decode",
    "e2_encode",
    "expand",
    "nat_to_bits",
    "pack",
    "phi",
    "run_program",
    "unpack",
]
