"""Encrypted file container.

Layout:  magic "MMOH" | version 0x01 | variant code | IV | ciphertext

variant codes: 0x00 = V128, 0x01 = V256, 0x02 = V512.  The IV is 8 octets
for V128/V256 and 16 for V512.  No authentication tag: the format carries
confidentiality only.
"""

from __future__ import annotations

from . import engine as _engine
from .keyschedule import IV_LEN, KeyFormatError, MasterKey
from .maps import V128, V256, V512

MAGIC = b"MMOH"
VERSION = 0x01

VARIANT_CODE = {V128: 0x00, V256: 0x01, V512: 0x02}
CODE_VARIANT = {v: k for k, v in VARIANT_CODE.items()}

_CHUNK = 1 << 20


class FormatError(ValueError):
    """Container is malformed or inconsistent with the supplied key."""


def header(variant: str, iv: bytes) -> bytes:
    if variant not in VARIANT_CODE:
        raise KeyFormatError("unknown variant: %r" % (variant,))
    if len(iv) != IV_LEN[variant]:
        raise KeyFormatError("%s needs a %d-octet IV" % (variant, IV_LEN[variant]))
    return MAGIC + bytes([VERSION, VARIANT_CODE[variant]]) + iv


def parse_header(blob: bytes):
    """-> (variant, iv, payload_offset).  Raises FormatError on bad input."""
    if len(blob) < 6 or blob[:4] != MAGIC:
        raise FormatError("missing container magic")
    if blob[4] != VERSION:
        raise FormatError("unsupported container version 0x%02x" % blob[4])
    try:
        variant = CODE_VARIANT[blob[5]]
    except KeyError:
        raise FormatError("unknown variant code 0x%02x" % blob[5]) from None
    ivlen = IV_LEN[variant]
    if len(blob) < 6 + ivlen:
        raise FormatError("truncated container header")
    return variant, blob[6:6 + ivlen], 6 + ivlen


def encrypt_file(key: bytes, iv: bytes, src_path, dst_path):
    key = MasterKey.of(key)
    eng = _engine.Engine(key, iv)
    with open(src_path, "rb") as src, open(dst_path, "wb") as dst:
        dst.write(header(key.variant, bytes(iv)))
        while True:
            block = src.read(_CHUNK)
            if not block:
                break
            dst.write(_engine._xor(block, eng.read(len(block))))


def decrypt_file(key: bytes, src_path, dst_path):
    key = MasterKey.of(key)
    with open(src_path, "rb") as src:
        head = src.read(6 + 16)
        variant, iv, off = parse_header(head)
        if variant != key.variant:
            raise FormatError("container is %s but key is %s"
                              % (variant, key.variant))
        eng = _engine.Engine(key, iv)
        src.seek(off)
        with open(dst_path, "wb") as dst:
            while True:
                block = src.read(_CHUNK)
                if not block:
                    break
                dst.write(_engine._xor(block, eng.read(len(block))))


def encrypt_bytes(key: bytes, iv: bytes, plaintext: bytes) -> bytes:
    key = MasterKey.of(key)
    return header(key.variant, bytes(iv)) + _engine.encrypt(key, iv, plaintext)


def decrypt_bytes(key: bytes, blob: bytes) -> bytes:
    key = MasterKey.of(key)
    variant, iv, off = parse_header(blob)
    if variant != key.variant:
        raise FormatError("container is %s but key is %s" % (variant, key.variant))
    return _engine.decrypt(key, iv, blob[off:])
