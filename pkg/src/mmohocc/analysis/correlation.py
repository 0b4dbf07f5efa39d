"""Circular auto/cross-correlation of bit sequences.

Bits are analyzed as {0,1} with the sample mean subtracted, indices taken
modulo N:

    AC(m)  = (1/N) sum_n (s_n - mu)(s_{n+m} - mu)
    CC(m)  = (1/N) sum_n (s_n(i) - mu_i)(s_{n+m}(j) - mu_j)

For a balanced random stream AC(0) is the variance mu(1-mu) ~= 0.25 and
every other lag sits near zero with standard deviation 0.25/sqrt(N).
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .bitseq import BitSequence, LengthMismatch


def _centered(s: BitSequence):
    x = s.bits.astype(np.float64)
    return x - x.mean()


def autocorrelation(s: BitSequence, m: int) -> float:
    """AC at a single lag; |m| <= N/2."""
    return crosscorrelation(s, s, m)


def crosscorrelation(s_i: BitSequence, s_j: BitSequence, m: int) -> float:
    n = len(s_i)
    if len(s_j) != n:
        raise LengthMismatch("sequences differ in length: %d vs %d"
                             % (n, len(s_j)))
    if abs(m) > n // 2:
        raise ValueError("|lag| must be <= N/2")
    x = _centered(s_i)
    y = _centered(s_j)
    # roll(y, -m)[k] == y[(k+m) mod n]
    return float(np.dot(x, np.roll(y, -m)) / n)


@dataclass
class CorrelationScan:
    lags: np.ndarray     # -N/2 .. +N/2 inclusive
    values: np.ndarray

    def to_csv(self, path_or_file):
        close = False
        f = path_or_file
        if not hasattr(f, "write"):
            f = open(f, "w")
            close = True
        try:
            f.write("lag,value\n")
            for lag, v in zip(self.lags, self.values):
                f.write("%d,%.17g\n" % (lag, v))
        finally:
            if close:
                f.close()

    def csv(self) -> str:
        buf = io.StringIO()
        self.to_csv(buf)
        return buf.getvalue()

    def max_off_peak(self) -> float:
        return float(np.max(np.abs(self.values[self.lags != 0])))


def correlation_scan(s_i: BitSequence, s_j: BitSequence | None = None) -> CorrelationScan:
    """All lags in one FFT pass.  s_j = None scans the autocorrelation."""
    auto = s_j is None
    n = len(s_i)
    x = _centered(s_i)
    y = x if auto else _centered(s_j)
    if not auto and len(s_j) != n:
        raise LengthMismatch("sequences differ in length")
    fx = np.fft.rfft(x)
    fy = fx if auto else np.fft.rfft(y)
    # c[m] = (1/n) sum_k x[k] * y[(k+m) mod n]
    c = np.fft.irfft(np.conj(fx) * fy, n) / n
    half = n // 2
    lags = np.arange(-half, half + 1)
    values = c[np.mod(lags, n)]
    return CorrelationScan(lags=lags, values=values)


def gaussian_bound(n: int, sigmas: float = 5.0) -> float:
    """sigmas * 0.25/sqrt(n): the expected off-peak envelope for random bits."""
    return sigmas * 0.25 / np.sqrt(n)
