"""State-space accounting: extracted-entropy bits and the period exponent.

Each live orbit contributes 32 bits of extractable state (the low half of
the scaled mantissa), so a configuration with M maps of K orbits each holds
M*K*32 bits.  The cycle-length estimate for the full engine is 2^bits,
which is reported as an exponent; it is an estimate, not something any
test can verify directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..keyschedule import SubKeySet

BITS_PER_ORBIT = 32


def state_space_bits(subkeys: SubKeySet) -> int:
    """Sum of decoded #orbits times 32 over all maps."""
    return BITS_PER_ORBIT * sum(sk.n_orbits for sk in subkeys)


def state_space_bits_uniform(n_maps: int, n_orbits: int) -> int:
    """The uniform-configuration arithmetic: n_maps * n_orbits * 32."""
    if n_maps <= 0 or n_orbits <= 0:
        raise ValueError("counts must be positive")
    return n_maps * n_orbits * BITS_PER_ORBIT


@dataclass
class StateSpaceReport:
    bits: int

    @property
    def period_estimate_exponent(self) -> int:
        return self.bits

    def record(self) -> str:
        return "state_bits=%d period_estimate=2^%d" % (
            self.bits, self.period_estimate_exponent)


def report(subkeys: SubKeySet) -> StateSpaceReport:
    return StateSpaceReport(bits=state_space_bits(subkeys))
