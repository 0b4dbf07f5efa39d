"""Key expansion: hash the key/IV halves, interleave the bits, split subkeys.

The master key is split into equal halves K_L, K_R and the IV into V_L, V_R.
H_L = H(V_L || K_L) and H_R = H(V_R || K_R) with H = SHA-256 for the 128 and
256-bit variants and SHA-512 for the 512-bit variant.  The two digests are
interleaved bit by bit (H_L supplies the first bit of each pair, octets are
read most-significant-bit first) and the result is cut into consecutive
64-bit subkeys: 8 of them for V128/V256, 16 for V512.

Subkey layout, most significant field first:

    hpsn[8] | orbits_code[4] | samples_code[6] | settles_code[6]
            | seed_code[20] | offset_code[20]

decoded:  #orbits = 20 + orbits_code, #samples = 8 + samples_code,
          #settles = 32 + settles_code.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from . import maps
from .maps import V128, V256, V512

KEY_LEN = {V128: 16, V256: 32, V512: 64}
IV_LEN = {V128: 8, V256: 8, V512: 16}
N_MAPS = {V128: 8, V256: 8, V512: 16}

# Global skew applied to hop offsets when computing orbit start points.
HOPPING_SKEW = 0.19

_SEED_DENOM = float(2 ** 20 + 2)


class KeyFormatError(ValueError):
    pass


def variant_for_key(data: bytes) -> str:
    for v, n in KEY_LEN.items():
        if len(data) == n:
            return v
    raise KeyFormatError("key must be 16, 32 or 64 octets, got %d" % len(data))


@dataclass(frozen=True)
class MasterKey:
    variant: str
    data: bytes

    def __post_init__(self):
        if self.variant not in KEY_LEN:
            raise KeyFormatError("unknown variant: %r" % (self.variant,))
        if len(self.data) != KEY_LEN[self.variant]:
            raise KeyFormatError("%s key needs %d octets, got %d"
                                 % (self.variant, KEY_LEN[self.variant], len(self.data)))

    @classmethod
    def of(cls, data: bytes) -> "MasterKey":
        return cls(variant_for_key(data), data)


@dataclass(frozen=True)
class InitVector:
    data: bytes

    def __post_init__(self):
        if len(self.data) not in (8, 16):
            raise KeyFormatError("IV must be 8 or 16 octets, got %d" % len(self.data))


@dataclass(frozen=True)
class SubKey:
    raw: int
    hpsn: int
    orbits_code: int
    samples_code: int
    settles_code: int
    seed_code: int
    offset_code: int

    @property
    def n_orbits(self):
        return 20 + self.orbits_code

    @property
    def n_samples(self):
        return 8 + self.samples_code

    @property
    def n_settles(self):
        return 32 + self.settles_code


@dataclass(frozen=True)
class SubKeySet:
    variant: str
    subkeys: tuple

    def __post_init__(self):
        if len(self.subkeys) != N_MAPS[self.variant]:
            raise KeyFormatError("%s expects %d subkeys, got %d"
                                 % (self.variant, N_MAPS[self.variant], len(self.subkeys)))

    def __len__(self):
        return len(self.subkeys)

    def __iter__(self):
        return iter(self.subkeys)

    def __getitem__(self, i):
        return self.subkeys[i]


def decode_subkey(raw: int) -> SubKey:
    """Split a 64-bit word into its control fields.  Every word decodes."""
    if not 0 <= raw < 1 << 64:
        raise ValueError("raw subkey must be a 64-bit word")
    return SubKey(
        raw=raw,
        hpsn=(raw >> 56) & 0xFF,
        orbits_code=(raw >> 52) & 0xF,
        samples_code=(raw >> 46) & 0x3F,
        settles_code=(raw >> 40) & 0x3F,
        seed_code=(raw >> 20) & 0xFFFFF,
        offset_code=raw & 0xFFFFF,
    )


def encode_subkey(hpsn, orbits_code, samples_code, settles_code,
                  seed_code, offset_code) -> int:
    """Inverse of decode_subkey; used by tests and tooling."""
    for val, width in ((hpsn, 8), (orbits_code, 4), (samples_code, 6),
                       (settles_code, 6), (seed_code, 20), (offset_code, 20)):
        if not 0 <= val < 1 << width:
            raise ValueError("field value %r does not fit %d bits" % (val, width))
    return ((hpsn << 56) | (orbits_code << 52) | (samples_code << 46)
            | (settles_code << 40) | (seed_code << 20) | offset_code)


# Spread table: bit i of a byte moves to even position 2i, leaving the odd
# positions free for the other digest's bits.
_SPREAD = [sum(((b >> i) & 1) << (2 * i) for i in range(8)) for b in range(256)]


def _spread(digest: bytes) -> int:
    v = 0
    for byte in digest:
        v = (v << 16) | _SPREAD[byte]
    return v


def interleave_bits(hl: bytes, hr: bytes) -> int:
    """Bitwise interleave of two equal-length digests, H_L bit first.

    Returns an integer of 16*len(hl) bits; bit order inside each octet is
    most-significant first.
    """
    if len(hl) != len(hr):
        raise ValueError("digest lengths differ")
    return (_spread(hl) << 1) | _spread(hr)


def schedule(key: MasterKey, iv: InitVector) -> SubKeySet:
    """Expand (key, iv) into one 64-bit subkey per chaotic map."""
    if len(iv.data) != IV_LEN[key.variant]:
        raise KeyFormatError("%s needs a %d-octet IV, got %d"
                             % (key.variant, IV_LEN[key.variant], len(iv.data)))
    kl, kr = key.data[:len(key.data) // 2], key.data[len(key.data) // 2:]
    vl, vr = iv.data[:len(iv.data) // 2], iv.data[len(iv.data) // 2:]
    h = hashlib.sha512 if key.variant == V512 else hashlib.sha256
    hl = h(vl + kl).digest()
    hr = h(vr + kr).digest()
    inter = interleave_bits(hl, hr)
    total_bits = 16 * len(hl)
    n = N_MAPS[key.variant]
    subkeys = tuple(
        decode_subkey((inter >> (total_bits - 64 * (k + 1))) & 0xFFFFFFFFFFFFFFFF)
        for k in range(n))
    return SubKeySet(key.variant, subkeys)


def schedule_raw(key_bytes: bytes, iv_bytes: bytes) -> SubKeySet:
    return schedule(MasterKey.of(key_bytes), InitVector(iv_bytes))


def seed_real(m: maps.MapDescriptor, seed_code: int) -> float:
    """Map a 20-bit seed field to a strictly interior point of the map domain."""
    u = (seed_code + 1) / _SEED_DENOM
    x = u if m.kind == maps.LOGISTIC else 4.0 * u - 2.0
    return maps.guard(m, x)


def offset_real(offset_code: int) -> float:
    """Small positive hop offset in (0, 1/32)."""
    return ((offset_code + 1) / _SEED_DENOM) / 32.0
