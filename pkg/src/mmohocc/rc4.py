"""RC4 reference implementation and the throughput comparison harness.

RC4 is here purely as a speed yardstick for the chaotic engine; it is not
exposed for encryption.  The keystream routine follows the textbook
KSA/PRGA and matches the RFC 6229 vectors.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from . import engine as _engine
from .keyschedule import KeyFormatError


def _ksa(key: bytes):
    if not 5 <= len(key) <= 32:
        raise KeyFormatError("RC4 key must be 5..32 octets")
    S = list(range(256))
    j = 0
    for i in range(256):
        j = (j + S[i] + key[i % len(key)]) & 0xFF
        S[i], S[j] = S[j], S[i]
    return S


class Rc4State:
    """S-box permutation plus the PRGA indices."""

    def __init__(self, key: bytes):
        self.S = _ksa(key)
        self.i = 0
        self.j = 0

    def stream(self, n: int) -> bytes:
        S, i, j = self.S, self.i, self.j
        out = bytearray(n)
        for t in range(n):
            i = (i + 1) & 0xFF
            j = (j + S[i]) & 0xFF
            S[i], S[j] = S[j], S[i]
            out[t] = S[(S[i] + S[j]) & 0xFF]
        self.i, self.j = i, j
        return bytes(out)


def rc4_keystream(key: bytes, n: int) -> bytes:
    return Rc4State(key).stream(n)


@dataclass
class BenchResult:
    payload_bytes: int
    mmohocc_seconds: float
    rc4_seconds: float
    mmohocc_mbps: float
    rc4_mbps: float
    ratio: float  # mmohocc_time / rc4_time


# Default payload ladder, in KB (1 KB = 1000 octets).
DEFAULT_SIZES_KB = (584, 11200, 22400, 145600)


def bench(payload_sizes_kb=DEFAULT_SIZES_KB, trials: int = 5,
          key: bytes = b"\x00" * 16, iv: bytes = b"\x00" * 8,
          rc4_key: bytes = b"\x01\x02\x03\x04\x05"):
    """Median wall-clock of keystream generation + XOR for both ciphers.

    Key scheduling is excluded from the timed region for both sides (it is
    a one-time setup cost); a fresh payload buffer is XORed each trial.
    """
    if trials < 3:
        raise ValueError("trials must be >= 3")
    from . import kernels

    results = []
    for size_kb in payload_sizes_kb:
        n = int(size_kb) * 1000
        if n <= 0:
            raise ValueError("payload size must be positive")
        payload = np.frombuffer(np.random.default_rng(7).bytes(n), dtype=np.uint8)
        ks = np.empty(n + (n & 1), dtype=np.uint8)

        eng = _engine.Engine(key, iv)
        eng.read(2)  # warm the JIT outside the timed region
        S = np.array(_ksa(rc4_key), dtype=np.uint8)
        ij = np.zeros(2, dtype=np.int64)
        kernels.rc4_prga(S, ij, np.empty(2, dtype=np.uint8))

        mmo_times, rc4_times = [], []
        for _ in range(trials):
            t0 = time.perf_counter()
            kernels.fill_keystream(
                eng._kind, eng._param, eng._lo, eng._hi, eng._fpa, eng._fpb,
                eng._seed, eng._offset, _engine.HOPPING_SKEW,
                eng._orbits, eng._samples, eng._settles, eng._pattern,
                eng._points, eng._visited, eng._cursor, ks)
            np.bitwise_xor(payload, ks[:n])
            mmo_times.append(time.perf_counter() - t0)

            t0 = time.perf_counter()
            kernels.rc4_prga(S, ij, ks[:n])
            np.bitwise_xor(payload, ks[:n])
            rc4_times.append(time.perf_counter() - t0)

        tm = statistics.median(mmo_times)
        tr = statistics.median(rc4_times)
        results.append(BenchResult(
            payload_bytes=n,
            mmohocc_seconds=tm,
            rc4_seconds=tr,
            mmohocc_mbps=n / tm / 1e6,
            rc4_mbps=n / tr / 1e6,
            ratio=tm / tr,
        ))
    return results


def format_results(results) -> str:
    lines = ["payload_kb,mmohocc_s,rc4_s,mmohocc_mbps,rc4_mbps,ratio"]
    for r in results:
        lines.append("%d,%.6f,%.6f,%.1f,%.1f,%.3f" % (
            r.payload_bytes // 1000, r.mmohocc_seconds, r.rc4_seconds,
            r.mmohocc_mbps, r.rc4_mbps, r.ratio))
    return "\n".join(lines) + "\n"
