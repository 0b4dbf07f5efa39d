"""Finite-precision cycle laboratory.

Any deterministic map on a finite grid is eventually periodic.  This module
measures that directly at toy precisions (4..24 bits): single orbits via
Brent cycle finding, and a scaled-down multi-orbit engine whose joint state
cycle can be compared against its constituent single-orbit cycles.

Quantization maps x to the grid index k = floor((x - lo)/(hi - lo) * 2^p)
clamped to [0, 2^p - 1], and back to the left grid edge lo + k/2^p*(hi-lo).
The edge convention keeps dyadic fixed points (logistic r=4 at x=0.75)
exactly representable at any precision, so their cycle length is 1.  Steps
use the raw map with out-of-domain folding but no fixed-point nudging: the
lab is about observing collapse, not preventing it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import maps as _maps
from .. import patterns as _patterns
from ..keyschedule import HOPPING_SKEW


def _check_precision(precision_bits: int):
    if not 4 <= precision_bits <= 24:
        raise ValueError("precision_bits must be in [4, 24]")


def quantize(m: _maps.MapDescriptor, x: float, precision_bits: int) -> int:
    _check_precision(precision_bits)
    two_p = float(1 << precision_bits)
    k = int((x - m.domain_lo) / (m.domain_hi - m.domain_lo) * two_p)
    return min(max(k, 0), (1 << precision_bits) - 1)


def dequantize(m: _maps.MapDescriptor, k: int, precision_bits: int) -> float:
    two_p = float(1 << precision_bits)
    return m.domain_lo + (k / two_p) * (m.domain_hi - m.domain_lo)


def _step_quantized(m: _maps.MapDescriptor, k: int, precision_bits: int) -> int:
    x = dequantize(m, k, precision_bits)
    if m.kind == _maps.LOGISTIC:
        y = m.param * x * (1.0 - x)
    else:
        y = x * x + m.param
    return quantize(m, _maps.fold(m, y), precision_bits)


def cycle_length(m: _maps.MapDescriptor, x0: float, precision_bits: int):
    """(tail, cycle) of the quantized orbit of x0, via Brent's method."""
    _check_precision(precision_bits)
    k0 = quantize(m, x0, precision_bits)

    def step(k):
        return _step_quantized(m, k, precision_bits)

    # Brent: find cycle length, then the tail
    power = lam = 1
    tortoise = k0
    hare = step(k0)
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = step(hare)
        lam += 1
    tortoise = hare = k0
    for _ in range(lam):
        hare = step(hare)
    mu = 0
    while tortoise != hare:
        tortoise = step(tortoise)
        hare = step(hare)
        mu += 1
    return mu, lam


def _toy_start(m, seed, offset, hop_value, precision_bits):
    raw = seed + float(hop_value) * offset * HOPPING_SKEW
    lo, hi = m.domain_lo, m.domain_hi
    t = (raw - lo) / (hi - lo)
    t = t - np.floor(t)
    return quantize(m, lo + t * (hi - lo), precision_bits)


@dataclass
class EngineCycleResult:
    found: bool
    tail_passes: int
    cycle_passes: int
    words_per_pass: int
    output_period_words: int
    max_constituent_cycle: int

    def record(self) -> str:
        return ("found=%s tail_passes=%d cycle_passes=%d words_per_pass=%d "
                "output_period_words=%d max_constituent_cycle=%d" % (
                    self.found, self.tail_passes, self.cycle_passes,
                    self.words_per_pass, self.output_period_words,
                    self.max_constituent_cycle))


def constituent_cycles(maps_, n_orbits, seeds, offsets, precision_bits):
    """Single-orbit (tail, cycle) for every orbit the toy engine will use."""
    out = []
    for i, m in enumerate(maps_):
        for hop in range(1, n_orbits[i] + 1):
            k0 = _toy_start(m, seeds[i], offsets[i], hop, precision_bits)
            x0 = dequantize(m, k0, precision_bits)
            out.append((i, hop) + cycle_length(m, x0, precision_bits))
    return out


def _min_period(block: np.ndarray) -> int:
    n = block.size
    for d in range(1, n + 1):
        if n % d:
            continue
        if np.array_equal(block[d:], block[:n - d]):
            return d
    return n


def engine_cycle(maps_, n_orbits, n_samples, seeds, offsets, hpsns,
                 precision_bits, n_settles=None, max_passes=50000):
    """Joint-state cycle of a scaled-down hopping engine.

    The engine mirrors the real orchestration (hopping pattern per map,
    #samples words per orbit visit, state carried across passes) but holds
    every orbit on the precision_bits grid.  The emitted symbol per sample
    is the quantized orbit index itself: on a p-bit grid the binary64
    extraction filter would see only trailing zero mantissa bits, so the
    state index is the faithful toy keystream.  Pass-boundary snapshots of
    the joint state locate the cycle; the reported output period is the
    minimal period of the emitted symbol sequence over one state cycle.
    """
    _check_precision(precision_bits)
    nm = len(maps_)
    if n_settles is None:
        n_settles = [0] * nm
    pats = [_patterns.pattern(hpsns[i], n_orbits[i]) for i in range(nm)]

    state = []
    for i, m in enumerate(maps_):
        row = []
        for hop in range(1, n_orbits[i] + 1):
            k = _toy_start(m, seeds[i], offsets[i], hop, precision_bits)
            for _ in range(n_settles[i]):
                k = _step_quantized(m, k, precision_bits)
            row.append(k)
        state.append(row)

    words_per_pass = sum(n_orbits[i] * n_samples[i] for i in range(nm))
    words = []
    seen = {}
    tail_p = cycle_p = -1
    for pass_no in range(max_passes):
        snap = tuple(tuple(r) for r in state)
        if snap in seen:
            tail_p = seen[snap]
            cycle_p = pass_no - tail_p
            break
        seen[snap] = pass_no
        for i, m in enumerate(maps_):
            for orb in pats[i]:
                k = state[i][orb - 1]
                for _ in range(n_samples[i]):
                    k = _step_quantized(m, k, precision_bits)
                    words.append(k)
                state[i][orb - 1] = k

    singles = constituent_cycles(maps_, n_orbits, seeds, offsets,
                                 precision_bits)
    max_single = max(c for (_, _, _, c) in singles)

    if cycle_p < 0:
        return EngineCycleResult(False, -1, -1, words_per_pass, -1, max_single)
    block = np.asarray(words[tail_p * words_per_pass:
                             (tail_p + cycle_p) * words_per_pass],
                       dtype=np.uint16)
    return EngineCycleResult(True, tail_p, cycle_p, words_per_pass,
                             _min_period(block), max_single)
