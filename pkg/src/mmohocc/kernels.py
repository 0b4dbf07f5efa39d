"""Compiled hot loops (numba).

Every function here mirrors a pure-Python reference path elsewhere in the
package and must stay arithmetically identical to it: same operation order,
plain binary64, no fastmath.  The test suite asserts bit-equality between
the two paths, so any change here needs the matching reference change.
"""

import math

import numpy as np
from numba import njit

GUARD_EPS = 2.0 ** -40
_POW52 = 4503599627370496.0


@njit(cache=True)
def _step(kind, param, lo, hi, fa, fb, x):
    if kind == 0:
        y = param * x * (1.0 - x)
    else:
        y = x * x + param
    if y < lo or y > hi:
        t = (y - lo) / (hi - lo)
        t = t - math.floor(t)
        y = lo + t * (hi - lo)
    if y == lo or y == hi or y == fa or y == fb:
        y = y + GUARD_EPS
        if y >= hi:
            y = hi - GUARD_EPS
        elif y <= lo:
            y = lo + GUARD_EPS
    return y


@njit(cache=True)
def _start_point(lo, hi, fa, fb, seed, offset, skew, hop):
    raw = seed + hop * offset * skew
    t = (raw - lo) / (hi - lo)
    t = t - math.floor(t)
    y = lo + t * (hi - lo)
    if y == lo or y == hi or y == fa or y == fb:
        y = y + GUARD_EPS
        if y >= hi:
            y = hi - GUARD_EPS
        elif y <= lo:
            y = lo + GUARD_EPS
    return y


@njit(cache=True)
def fill_keystream(kind, param, lo, hi, fa, fb, seeds, offsets, skew,
                   orbits, samples, settles, pattern, points, visited,
                   cursor, out):
    """Emit len(out)//2 words into out (even length), advancing the state."""
    nmaps = kind.shape[0]
    i = cursor[0]
    j = cursor[1]
    k = cursor[2]
    n = out.shape[0]
    pos = 0
    while pos < n:
        orb = pattern[i, j]
        if visited[i, orb] == 0:
            x = _start_point(lo[i], hi[i], fa[i], fb[i], seeds[i],
                             offsets[i], skew, float(orb + 1))
            for _ in range(settles[i]):
                x = _step(kind[i], param[i], lo[i], hi[i], fa[i], fb[i], x)
            points[i, orb] = x
            visited[i, orb] = 1
        x = _step(kind[i], param[i], lo[i], hi[i], fa[i], fb[i],
                  points[i, orb])
        points[i, orb] = x
        u = np.int64(abs(x) * _POW52)
        w = u & 0xFFFFFFFF
        out[pos] = ((w >> 24) ^ (w >> 8)) & 0xFF
        out[pos + 1] = ((w >> 16) ^ w) & 0xFF
        pos += 2
        k += 1
        if k == samples[i]:
            k = 0
            j += 1
            if j == orbits[i]:
                j = 0
                i += 1
                if i == nmaps:
                    i = 0
    cursor[0] = i
    cursor[1] = j
    cursor[2] = k


@njit(cache=True)
def domain_closure_probe(kind, param, lo, hi, fa, fb, seeds, n_iter):
    """Guarded-step stress: returns True if any iterate leaves the closed
    domain.  seeds is per-map 2-D (nmaps, nseeds)."""
    nmaps = kind.shape[0]
    for i in range(nmaps):
        for s in range(seeds.shape[1]):
            x = seeds[i, s]
            for _ in range(n_iter):
                x = _step(kind[i], param[i], lo[i], hi[i], fa[i], fb[i], x)
                if x < lo[i] or x > hi[i]:
                    return True
    return False


@njit(cache=True)
def rc4_prga(S, ij, out):
    """Standard RC4 PRGA continuing from (S, i, j); fills out in place."""
    i = ij[0]
    j = ij[1]
    for t in range(out.shape[0]):
        i = (i + 1) & 0xFF
        j = (j + S[i]) & 0xFF
        tmp = S[i]
        S[i] = S[j]
        S[j] = tmp
        out[t] = S[(S[i] + S[j]) & 0xFF]
    ij[0] = i
    ij[1] = j
