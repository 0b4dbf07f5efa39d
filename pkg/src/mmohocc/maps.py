"""Chaotic map bank and bit-exact binary64 map iteration.

Two map families are supported:

    logistic   x -> r*x*(1-x)   on (0, 1),  3.57 < r <= 4.0
    quadratic  x -> x*x + c     on (-2, 2), -2.0 <= c <= -1.9

All arithmetic is plain IEEE 754 binary64 with round-to-nearest-even and a
fixed evaluation order, so iterates are reproducible bit-for-bit across
platforms.  No extended-precision intermediates, no FMA.
"""

from __future__ import annotations

import functools
import math
import struct
from dataclasses import dataclass, field

LOGISTIC = "logistic"
QUADRATIC = "quadratic"

V128 = "V128"
V256 = "V256"
V512 = "V512"

# Nudge applied when an orbit lands exactly on a fixed point or a domain
# endpoint.  Must be big enough to survive x+eps rounding anywhere in (-2,2).
GUARD_EPS = 2.0 ** -40


class DomainError(ValueError):
    """An orbit value left the map domain (corrupted state or a bad seed)."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


@dataclass(frozen=True)
class MapDescriptor:
    kind: str
    param: float
    domain_lo: float = field(init=False)
    domain_hi: float = field(init=False)

    def __post_init__(self):
        if self.kind == LOGISTIC:
            if not 3.57 < self.param <= 4.0:
                raise ValueError("logistic r outside chaotic range: %r" % self.param)
            lo, hi = 0.0, 1.0
        elif self.kind == QUADRATIC:
            if not -2.0 <= self.param <= -1.9:
                raise ValueError("quadratic c outside chaotic range: %r" % self.param)
            lo, hi = -2.0, 2.0
        else:
            raise ValueError("unknown map kind: %r" % (self.kind,))
        object.__setattr__(self, "domain_lo", lo)
        object.__setattr__(self, "domain_hi", hi)

    def fixed_points(self):
        """The two binary64 fixed points of the map."""
        if self.kind == LOGISTIC:
            # x = r*x*(1-x)  =>  x = 0 or x = (r-1)/r
            return 0.0, (self.param - 1.0) / self.param
        # x = x*x + c  =>  x = (1 +- sqrt(1-4c)) / 2
        s = math.sqrt(1.0 - 4.0 * self.param)
        return (1.0 - s) / 2.0, (1.0 + s) / 2.0


def iterate(m: MapDescriptor, x: float) -> float:
    """One map step F(x), bit-exact.

    Accepts any x in the closed domain (the quadratic family at c = -2.0
    legitimately walks on the endpoints).  Raises DomainError when x or the
    result falls outside the closed domain, which for in-range parameters can
    only happen for quadratic seeds beyond the invariant interval.
    """
    lo, hi = m.domain_lo, m.domain_hi
    if not lo <= x <= hi:
        raise DomainError("input %r outside [%r, %r]" % (x, lo, hi))
    if m.kind == LOGISTIC:
        y = m.param * x * (1.0 - x)
    else:
        y = x * x + m.param
    if not lo <= y <= hi:
        raise DomainError("iterate of %r escaped to %r" % (x, y))
    return y


def iterate_n(m: MapDescriptor, x: float, n: int) -> float:
    """n-fold composition; iterate_n(m, x, 0) == x."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for i in range(n):
        try:
            x = iterate(m, x)
        except DomainError as e:
            raise DomainError("step %d: %s" % (i, e), step=i) from None
    return x


def fold(m: MapDescriptor, y: float) -> float:
    """Map an out-of-domain value back by taking the fractional position."""
    lo, hi = m.domain_lo, m.domain_hi
    if y < lo or y > hi:
        t = (y - lo) / (hi - lo)
        t = t - math.floor(t)
        y = lo + t * (hi - lo)
    return y


def guard(m: MapDescriptor, x: float) -> float:
    """Nudge x off exact fixed points and domain endpoints.

    Without this an orbit that lands on an absorbing value would emit a
    constant keystream forever.
    """
    fa, fb = m.fixed_points()
    lo, hi = m.domain_lo, m.domain_hi
    if x == lo or x == hi or x == fa or x == fb:
        x = x + GUARD_EPS
        if x >= hi:
            x = hi - GUARD_EPS
        elif x <= lo:
            x = lo + GUARD_EPS
    return x


def step_guarded(m: MapDescriptor, x: float) -> float:
    """Total version of iterate: folds escapees back, then applies guard().

    This is the stepping rule the keystream engine uses; it never raises.
    """
    if m.kind == LOGISTIC:
        y = m.param * x * (1.0 - x)
    else:
        y = x * x + m.param
    return guard(m, fold(m, y))


_WINDOW_TRANSIENT = 1024
_WINDOW_MAX_PERIOD = 64


def is_window_free(m: MapDescriptor, probe_seed: float = 0.1,
                   horizon: int = 4096) -> bool:
    """Detect periodic windows (e.g. logistic r = 3.82).

    Runs a 1024-step transient, then `horizon` further steps; returns False
    when the trailing orbit has collapsed onto a cycle of period <= 64,
    detected by exact binary64 recurrence.  Attracting cycles pull the
    rounded orbit onto an exactly periodic loop well within the transient.
    """
    if horizon < 4096:
        raise ValueError("horizon must be >= 4096")
    x = iterate_n(m, probe_seed, _WINDOW_TRANSIENT + horizon)
    y = x
    for _ in range(_WINDOW_MAX_PERIOD):
        y = iterate(m, y)
        if y == x:
            return False
    return True


@dataclass(frozen=True)
class MapBank:
    maps: tuple

    def __post_init__(self):
        if len(self.maps) not in (8, 16):
            raise ValueError("a bank holds 8 or 16 maps, got %d" % len(self.maps))
        kinds = {m.kind for m in self.maps}
        if kinds != {LOGISTIC, QUADRATIC}:
            raise ValueError("bank must mix both map kinds")

    def __len__(self):
        return len(self.maps)

    def __iter__(self):
        return iter(self.maps)

    def __getitem__(self, i):
        return self.maps[i]


# Published parameter grids.  Values sit inside the stated chaotic ranges and
# are spaced to dodge the known periodic windows; is_window_free() is the
# normative check and runs over the whole table in the test suite.
_LOGISTIC_R_8 = (3.99, 3.97, 3.93, 3.91)
_QUADRATIC_C_8 = (-1.99, -1.97, -1.93, -1.91)
_LOGISTIC_R_16 = _LOGISTIC_R_8 + (3.98, 3.96, 3.92, 3.90)
_QUADRATIC_C_16 = _QUADRATIC_C_8 + (-1.98, -1.96, -1.94, -1.92)


@functools.lru_cache(maxsize=None)
def default_bank(variant: str) -> MapBank:
    """The fixed map bank for a variant: 8 maps (V128/V256) or 16 (V512)."""
    if variant in (V128, V256):
        rs, cs = _LOGISTIC_R_8, _QUADRATIC_C_8
    elif variant == V512:
        rs, cs = _LOGISTIC_R_16, _QUADRATIC_C_16
    else:
        raise ValueError("unknown variant: %r" % (variant,))
    maps = tuple([MapDescriptor(LOGISTIC, r) for r in rs]
                 + [MapDescriptor(QUADRATIC, c) for c in cs])
    return MapBank(maps)


def bank_manifest(bank: MapBank) -> str:
    """Text manifest, one line per map: kind, param as raw binary64 hex.

    Lets an external verifier replay every iteration bit-exactly.
    """
    lines = []
    for m in bank:
        bits = struct.pack(">d", m.param).hex()
        lines.append("%s,%s" % (m.kind, bits))
    return "\n".join(lines) + "\n"
