"""Statistical and structural analysis of keystreams."""

from .bitseq import BitSequence, LengthMismatch, SequenceTooShort
from .correlation import (CorrelationScan, autocorrelation, correlation_scan,
                          crosscorrelation, gaussian_bound)
from .cycles import (EngineCycleResult, constituent_cycles, cycle_length,
                     dequantize, engine_cycle, quantize)
from .nist import (TestReport, approximate_entropy, block_frequency, cusum,
                   longest_run, monobit, nist_subset, runs, serial)
from .statespace import (StateSpaceReport, report, state_space_bits,
                         state_space_bits_uniform)

__all__ = [
    "BitSequence", "LengthMismatch", "SequenceTooShort",
    "CorrelationScan", "autocorrelation", "crosscorrelation",
    "correlation_scan", "gaussian_bound",
    "EngineCycleResult", "engine_cycle", "cycle_length",
    "constituent_cycles", "quantize", "dequantize",
    "TestReport", "monobit", "block_frequency", "cusum", "runs",
    "longest_run", "serial", "approximate_entropy", "nist_subset",
    "StateSpaceReport", "report", "state_space_bits",
    "state_space_bits_uniform",
]
