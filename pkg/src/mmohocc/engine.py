"""Keystream engine: multi-map orbit hopping with a 32-to-16 bit extraction.

Orchestration per map, driven entirely by the decoded subkey fields:

    for each map i:                      (outer loop restarts forever)
      for each orbit in hopping pattern of map i:
        first visit only: seed the orbit from start_orbit() and run
            #settles silent iterations
        for k in range(#samples):
            advance the orbit one step, emit extract_word(new point)

Orbit state is carried across passes; nothing is ever re-seeded, so the
stream period is governed by the joint state of all orbits rather than by a
single pass.  All stepping uses the guarded map step (fold escapees back
into the domain, nudge exact fixed points), which never raises.

The byte-compiled fast path in kernels.py implements the identical
arithmetic; the pure Python path here is the reference.  Tests assert the
two produce bit-identical output.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from . import keyschedule, maps, patterns
from .keyschedule import HOPPING_SKEW, InitVector, KeyFormatError, MasterKey


class KeystreamWord(NamedTuple):
    p: int
    q: int

    @property
    def word(self) -> int:
        return (self.p << 8) | self.q


_POW52 = 4503599627370496.0  # 2**52


def extract_word(x: float) -> KeystreamWord:
    """Compress one orbit point (|x| < 4) into a 16-bit keystream word.

    u = floor(|x| * 2**52) is exact: the multiply only shifts the exponent.
    The low 32 bits of u are split into octets a,b,c,d (a most significant)
    and folded to p = a^c, q = b^d.
    """
    u = int(abs(x) * _POW52)
    w = u & 0xFFFFFFFF
    p = ((w >> 24) ^ (w >> 8)) & 0xFF
    q = ((w >> 16) ^ w) & 0xFF
    return KeystreamWord(p, q)


def _start_point(m: maps.MapDescriptor, seed: float, offset: float,
                 hop_value: int) -> float:
    # Unconditional fold: unlike the step fold this also normalizes values
    # already inside the domain, so the formula below is the full definition.
    lo, hi = m.domain_lo, m.domain_hi
    raw = seed + float(hop_value) * offset * HOPPING_SKEW
    t = (raw - lo) / (hi - lo)
    t = t - math.floor(t)
    return maps.guard(m, lo + t * (hi - lo))


def start_orbit(subkey: keyschedule.SubKey, m: maps.MapDescriptor,
                hop_value: int) -> float:
    """Initial point for one orbit of one map."""
    if not 1 <= hop_value <= subkey.n_orbits:
        raise ValueError("hop_value out of range")
    seed = keyschedule.seed_real(m, subkey.seed_code)
    offset = keyschedule.offset_real(subkey.offset_code)
    return _start_point(m, seed, offset, hop_value)


def _coerce_key(key) -> MasterKey:
    if isinstance(key, MasterKey):
        return key
    return MasterKey.of(bytes(key))


def _coerce_iv(iv) -> InitVector:
    if isinstance(iv, InitVector):
        return iv
    return InitVector(bytes(iv))


class Engine:
    """One keystream instance.  Single-writer; distinct streams independent."""

    def __init__(self, key, iv, bank: maps.MapBank | None = None,
                 use_kernel: bool = True):
        key = _coerce_key(key)
        iv = _coerce_iv(iv)
        self.subkeys = keyschedule.schedule(key, iv)
        self.variant = self.subkeys.variant
        self.bank = bank if bank is not None else maps.default_bank(self.variant)
        if len(self.bank) != len(self.subkeys):
            raise KeyFormatError("bank size %d does not match subkey count %d"
                                 % (len(self.bank), len(self.subkeys)))
        self.use_kernel = use_kernel

        nm = len(self.bank)
        self._kind = np.empty(nm, dtype=np.int8)
        self._param = np.empty(nm, dtype=np.float64)
        self._lo = np.empty(nm, dtype=np.float64)
        self._hi = np.empty(nm, dtype=np.float64)
        self._fpa = np.empty(nm, dtype=np.float64)
        self._fpb = np.empty(nm, dtype=np.float64)
        self._orbits = np.empty(nm, dtype=np.int64)
        self._samples = np.empty(nm, dtype=np.int64)
        self._settles = np.empty(nm, dtype=np.int64)
        self._seed = np.empty(nm, dtype=np.float64)
        self._offset = np.empty(nm, dtype=np.float64)
        for i, (m, sk) in enumerate(zip(self.bank, self.subkeys)):
            self._kind[i] = 0 if m.kind == maps.LOGISTIC else 1
            self._param[i] = m.param
            self._lo[i] = m.domain_lo
            self._hi[i] = m.domain_hi
            self._fpa[i], self._fpb[i] = m.fixed_points()
            self._orbits[i] = sk.n_orbits
            self._samples[i] = sk.n_samples
            self._settles[i] = sk.n_settles
            self._seed[i] = keyschedule.seed_real(m, sk.seed_code)
            self._offset[i] = keyschedule.offset_real(sk.offset_code)

        max_orb = int(self._orbits.max())
        self._pattern = np.zeros((nm, max_orb), dtype=np.int64)
        for i, sk in enumerate(self.subkeys):
            row = patterns.pattern(sk.hpsn, sk.n_orbits)
            self._pattern[i, :len(row)] = [o - 1 for o in row]
        self._points = np.zeros((nm, max_orb), dtype=np.float64)
        self._visited = np.zeros((nm, max_orb), dtype=np.uint8)
        self._cursor = np.zeros(3, dtype=np.int64)
        self._pending = b""

    @property
    def words_per_pass(self) -> int:
        return int((self._orbits * self._samples).sum())

    def next_word(self) -> KeystreamWord:
        """Produce the next word of the stream (reference path)."""
        i, j, k = self._cursor
        m = self.bank[i]
        orb = int(self._pattern[i, j])
        if not self._visited[i, orb]:
            x = _start_point(m, float(self._seed[i]), float(self._offset[i]),
                             orb + 1)
            for _ in range(int(self._settles[i])):
                x = maps.step_guarded(m, x)
            self._points[i, orb] = x
            self._visited[i, orb] = 1
        x = maps.step_guarded(m, float(self._points[i, orb]))
        self._points[i, orb] = x
        k += 1
        if k == self._samples[i]:
            k = 0
            j += 1
            if j == self._orbits[i]:
                j = 0
                i = (i + 1) % len(self.bank)
        self._cursor[:] = (i, j, k)
        return extract_word(x)

    def _fill(self, nbytes: int) -> bytes:
        # nbytes is even; one word per two octets
        out = np.empty(nbytes, dtype=np.uint8)
        if self.use_kernel:
            from . import kernels
            kernels.fill_keystream(
                self._kind, self._param, self._lo, self._hi,
                self._fpa, self._fpb, self._seed, self._offset,
                HOPPING_SKEW, self._orbits, self._samples, self._settles,
                self._pattern, self._points, self._visited, self._cursor, out)
        else:
            for t in range(0, nbytes, 2):
                w = self.next_word()
                out[t] = w.p
                out[t + 1] = w.q
        return out.tobytes()

    def read(self, n: int) -> bytes:
        """The next n keystream octets."""
        if n < 0:
            raise ValueError("n must be >= 0")
        take = min(n, len(self._pending))
        head, self._pending = self._pending[:take], self._pending[take:]
        need = n - take
        if need == 0:
            return head
        chunk = self._fill(need + (need & 1))
        if need & 1:
            self._pending = chunk[-1:]
            chunk = chunk[:-1]
        return head + chunk


def keystream(key, iv, n_bytes: int, use_kernel: bool = True) -> bytes:
    """First n_bytes octets of the (key, iv) stream."""
    return Engine(key, iv, use_kernel=use_kernel).read(n_bytes)


def _xor(data: bytes, ks: bytes) -> bytes:
    a = np.frombuffer(data, dtype=np.uint8)
    b = np.frombuffer(ks, dtype=np.uint8)
    return np.bitwise_xor(a, b).tobytes()


def encrypt(key, iv, plaintext: bytes) -> bytes:
    """XOR the plaintext with the keystream.  Symmetric: also decrypts."""
    return _xor(plaintext, keystream(key, iv, len(plaintext)))


def decrypt(key, iv, ciphertext: bytes) -> bytes:
    return encrypt(key, iv, ciphertext)
