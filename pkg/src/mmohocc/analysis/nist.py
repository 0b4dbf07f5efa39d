"""NIST SP 800-22 subset battery.

Implements the eight-test subset used for keystream qualification: monobit
frequency, block frequency (M=128), cumulative sums in both directions,
runs, longest run of ones, serial (m=16, two p-values) and approximate
entropy (m=10).  Statistics and p-values follow the SP 800-22 definitions;
a test passes at p >= 0.01.

Note on serial: the SP 800-22 guideline m < floor(log2 n) - 2 holds for the
default m=16 only once n is around 10^6; shorter sequences still compute
but the chi-square approximation coarsens.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erfc, gammaincc
from scipy.stats import norm

from .bitseq import BitSequence, SequenceTooShort

ALPHA = 0.01


@dataclass
class TestReport:
    name: str
    statistic: float
    p_value: float
    passed: bool

    @classmethod
    def make(cls, name, statistic, p):
        p = float(min(max(p, 0.0), 1.0))
        return cls(name, float(statistic), p, p >= ALPHA)

    def record(self) -> str:
        return "name=%s statistic=%.6g p=%.6f pass=%s" % (
            self.name, self.statistic, self.p_value,
            "yes" if self.passed else "no")


def _need(s: BitSequence, n_min: int, test: str):
    if len(s) < n_min:
        raise SequenceTooShort("%s needs at least %d bits, got %d"
                               % (test, n_min, len(s)))


def monobit(s: BitSequence) -> TestReport:
    _need(s, 100, "monobit")
    n = len(s)
    total = 2 * int(s.bits.sum()) - n
    stat = abs(total) / math.sqrt(n)
    p = erfc(stat / math.sqrt(2.0))
    return TestReport.make("monobit", stat, p)


def block_frequency(s: BitSequence, block: int = 128) -> TestReport:
    _need(s, block, "block-frequency")
    n = len(s)
    nb = n // block
    pi = s.bits[:nb * block].reshape(nb, block).mean(axis=1)
    chi2 = 4.0 * block * float(np.sum((pi - 0.5) ** 2))
    p = gammaincc(nb / 2.0, chi2 / 2.0)
    return TestReport.make("block-frequency", chi2, p)


def _cusum_p(z: int, n: int) -> float:
    sn = math.sqrt(n)
    k1 = np.arange(int(math.floor((-n / z + 1) / 4)),
                   int(math.floor((n / z - 1) / 4)) + 1)
    k2 = np.arange(int(math.floor((-n / z - 3) / 4)),
                   int(math.floor((n / z - 1) / 4)) + 1)
    t1 = np.sum(norm.cdf((4 * k1 + 1) * z / sn) - norm.cdf((4 * k1 - 1) * z / sn))
    t2 = np.sum(norm.cdf((4 * k2 + 3) * z / sn) - norm.cdf((4 * k2 + 1) * z / sn))
    return 1.0 - t1 + t2


def cusum(s: BitSequence, reverse: bool = False) -> TestReport:
    _need(s, 100, "cusum")
    n = len(s)
    steps = 2 * s.bits.astype(np.int64) - 1
    if reverse:
        steps = steps[::-1]
    z = int(np.max(np.abs(np.cumsum(steps))))
    p = _cusum_p(z, n)
    name = "cusum-reverse" if reverse else "cusum-forward"
    return TestReport.make(name, z, p)


def runs(s: BitSequence) -> TestReport:
    _need(s, 100, "runs")
    n = len(s)
    pi = float(s.bits.mean())
    if abs(pi - 0.5) >= 2.0 / math.sqrt(n):
        # frequency prerequisite failed; scored as a hard fail
        return TestReport.make("runs", 0.0, 0.0)
    v = 1 + int(np.count_nonzero(s.bits[1:] != s.bits[:-1]))
    num = abs(v - 2.0 * n * pi * (1.0 - pi))
    den = 2.0 * math.sqrt(2.0 * n) * pi * (1.0 - pi)
    p = erfc(num / den)
    return TestReport.make("runs", v, p)


# (block size M, chi-square categories, category probabilities)
_LONGEST_RUN_TABLES = (
    (8, (1, 2, 3, 4), (0.2148, 0.3672, 0.2305, 0.1875)),
    (128, (4, 5, 6, 7, 8, 9), (0.1174, 0.2430, 0.2493, 0.1752, 0.1027, 0.1124)),
    (10000, (10, 11, 12, 13, 14, 15, 16),
     (0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727)),
)


def _max_runs_per_block(blocks: np.ndarray) -> np.ndarray:
    # index of the most recent zero at or before each column, rowwise
    nb, m = blocks.shape
    idx = np.arange(m, dtype=np.int64)
    last_zero = np.where(blocks == 0, idx[None, :], -1)
    last_zero = np.maximum.accumulate(last_zero, axis=1)
    return (idx[None, :] - last_zero).max(axis=1)


def longest_run(s: BitSequence) -> TestReport:
    n = len(s)
    _need(s, 128, "longest-run")
    if n < 6272:
        m, cats, pis = _LONGEST_RUN_TABLES[0]
    elif n < 750000:
        m, cats, pis = _LONGEST_RUN_TABLES[1]
    else:
        m, cats, pis = _LONGEST_RUN_TABLES[2]
    nb = n // m
    blocks = s.bits[:nb * m].reshape(nb, m)
    longest = _max_runs_per_block(blocks)
    lo, hi = cats[0], cats[-1]
    v = np.clip(longest, lo, hi)
    counts = np.bincount(v - lo, minlength=hi - lo + 1)
    expected = nb * np.asarray(pis)
    chi2 = float(np.sum((counts - expected) ** 2 / expected))
    p = gammaincc(len(cats) / 2.0 - 0.5, chi2 / 2.0)
    return TestReport.make("longest-run", chi2, p)


def _window_counts(bits: np.ndarray, m: int) -> np.ndarray:
    """Counts of all circular m-bit windows (n of them)."""
    n = bits.size
    pad = np.concatenate([bits, bits[:m - 1]]) if m > 1 else bits
    w = np.zeros(n, dtype=np.uint32)
    for b in range(m):
        w = (w << np.uint32(1)) | pad[b:b + n]
    return np.bincount(w, minlength=1 << m)


def _marginalize(counts: np.ndarray) -> np.ndarray:
    # drop the last window bit: counts over m-windows -> (m-1)-windows
    return counts.reshape(-1, 2).sum(axis=1)


def _psi_sq(counts: np.ndarray, n: int) -> float:
    m_cells = counts.size
    return float(m_cells / n * np.sum(counts.astype(np.float64) ** 2) - n)


def serial(s: BitSequence, m: int = 16):
    """Two TestReports (first and second difference of psi^2)."""
    if m < 3 or m > 20:
        raise ValueError("serial m must be in [3, 20]")
    _need(s, 1 << m, "serial")
    n = len(s)
    c_m = _window_counts(s.bits, m)
    c_m1 = _marginalize(c_m)
    c_m2 = _marginalize(c_m1)
    psi_m = _psi_sq(c_m, n)
    psi_m1 = _psi_sq(c_m1, n)
    psi_m2 = _psi_sq(c_m2, n)
    d1 = psi_m - psi_m1
    d2 = psi_m - 2.0 * psi_m1 + psi_m2
    p1 = gammaincc(2.0 ** (m - 2), d1 / 2.0)
    p2 = gammaincc(2.0 ** (m - 3), d2 / 2.0)
    return [TestReport.make("serial-1", d1, p1),
            TestReport.make("serial-2", d2, p2)]


def approximate_entropy(s: BitSequence, m: int = 10) -> TestReport:
    if m < 1 or m > 20:
        raise ValueError("approximate entropy m must be in [1, 20]")
    _need(s, 1 << (m + 1), "approximate-entropy")
    n = len(s)

    def phi(mm):
        c = _window_counts(s.bits, mm).astype(np.float64)
        c = c[c > 0] / n
        return float(np.sum(c * np.log(c)))

    apen = phi(m) - phi(m + 1)
    chi2 = 2.0 * n * (math.log(2.0) - apen)
    p = gammaincc(2.0 ** (m - 1), chi2 / 2.0)
    return TestReport.make("approximate-entropy", chi2, p)


def nist_subset(s: BitSequence):
    """The full battery, in a fixed order.  Nine p-values."""
    _need(s, 100000, "nist-subset")
    reports = [
        monobit(s),
        block_frequency(s),
        cusum(s, reverse=False),
        cusum(s, reverse=True),
        runs(s),
        longest_run(s),
    ]
    reports.extend(serial(s))
    reports.append(approximate_entropy(s))
    return reports
