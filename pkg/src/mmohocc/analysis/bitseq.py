"""Bit sequences for the statistical analysis operations."""

from __future__ import annotations

import numpy as np


class LengthMismatch(ValueError):
    pass


class SequenceTooShort(ValueError):
    pass


class BitSequence:
    """A {0,1} sequence stored unpacked for fast vector math.

    Octet input is unpacked most-significant-bit first, which matches the
    keystream serialization (word = p then q, each MSB first).
    """

    __slots__ = ("bits",)

    def __init__(self, bits):
        arr = np.asarray(bits, dtype=np.uint8)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("need a non-empty 1-D bit array")
        if arr.max(initial=0) > 1:
            raise ValueError("bits must be 0 or 1")
        self.bits = arr

    @classmethod
    def from_bytes(cls, data: bytes, n_bits=None) -> "BitSequence":
        bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8))
        if n_bits is not None:
            bits = bits[:n_bits]
        return cls(bits)

    def packed(self) -> bytes:
        return np.packbits(self.bits).tobytes()

    def __len__(self):
        return int(self.bits.size)

    @property
    def n(self):
        return int(self.bits.size)
