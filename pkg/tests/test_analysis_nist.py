"""Statistical battery: worked examples, naive-loop oracles, guards."""

import math

import numpy as np
import pytest
from scipy.special import erfc, gammaincc

from mmohocc.analysis import (BitSequence, SequenceTooShort,
                              approximate_entropy, block_frequency, cusum,
                              longest_run, monobit, nist_subset, runs, serial)
from mmohocc.analysis.nist import _marginalize, _window_counts


def _random_bits(n, seed):
    rng = np.random.default_rng(seed)
    return BitSequence(rng.integers(0, 2, n, dtype=np.uint8))


def test_monobit_worked_example():
    # 58 ones in 100 bits: S = 16, statistic 1.6
    bits = np.zeros(100, dtype=np.uint8)
    bits[:58] = 1
    rep = monobit(BitSequence(bits))
    assert rep.statistic == pytest.approx(1.6, abs=1e-12)
    assert rep.p_value == pytest.approx(0.109599, abs=1e-6)
    assert rep.passed


def test_monobit_rejects_heavy_bias():
    bits = np.zeros(1000, dtype=np.uint8)
    bits[:700] = 1
    rep = monobit(BitSequence(bits))
    assert not rep.passed


def test_block_frequency_matches_naive_loops():
    s = _random_bits(2048, 21)
    rep = block_frequency(s, block=128)
    chi2 = 0.0
    for b in range(2048 // 128):
        pi = sum(s.bits[b * 128:(b + 1) * 128]) / 128.0
        chi2 += 4.0 * 128 * (pi - 0.5) ** 2
    assert rep.statistic == pytest.approx(chi2, rel=1e-12)
    assert rep.p_value == pytest.approx(float(gammaincc(8.0, chi2 / 2.0)),
                                        rel=1e-12)


def test_cusum_statistic_matches_naive_loops():
    s = _random_bits(500, 22)
    walk = np.cumsum(2 * s.bits.astype(int) - 1)
    assert cusum(s).statistic == max(abs(int(v)) for v in walk)
    walk_r = np.cumsum((2 * s.bits.astype(int) - 1)[::-1])
    assert cusum(s, reverse=True).statistic == max(abs(int(v)) for v in walk_r)


def test_cusum_monotone_in_drift():
    flat = BitSequence(np.tile([0, 1], 200))
    biased = np.zeros(400, dtype=np.uint8)
    biased[:230] = 1
    rng = np.random.default_rng(23)
    rng.shuffle(biased)
    p_flat = cusum(flat).p_value
    p_biased = cusum(BitSequence(biased)).p_value
    assert 0.0 < p_biased < p_flat <= 1.0


def test_runs_matches_naive_loops():
    s = _random_bits(1000, 24)
    rep = runs(s)
    v = 1 + sum(1 for i in range(999) if s.bits[i] != s.bits[i + 1])
    assert rep.statistic == v
    pi = float(s.bits.mean())
    num = abs(v - 2.0 * 1000 * pi * (1 - pi))
    den = 2.0 * math.sqrt(2.0 * 1000) * pi * (1 - pi)
    assert rep.p_value == pytest.approx(float(erfc(num / den)), rel=1e-12)


def test_runs_prerequisite_scores_zero():
    bits = np.zeros(1000, dtype=np.uint8)
    bits[:900] = 1
    rep = runs(BitSequence(bits))
    assert rep.p_value == 0.0
    assert not rep.passed


def _naive_longest_run_chi2(bits, m, cats, pis):
    nb = len(bits) // m
    counts = [0] * len(cats)
    for b in range(nb):
        longest = run = 0
        for bit in bits[b * m:(b + 1) * m]:
            run = run + 1 if bit else 0
            longest = max(longest, run)
        c = min(max(longest, cats[0]), cats[-1])
        counts[c - cats[0]] += 1
    return sum((counts[i] - nb * pis[i]) ** 2 / (nb * pis[i])
               for i in range(len(cats)))


def test_longest_run_matches_naive_loops_small_blocks():
    s = _random_bits(1000, 25)
    rep = longest_run(s)
    chi2 = _naive_longest_run_chi2(
        list(map(int, s.bits)), 8, (1, 2, 3, 4),
        (0.2148, 0.3672, 0.2305, 0.1875))
    assert rep.statistic == pytest.approx(chi2, rel=1e-12)


def test_longest_run_matches_naive_loops_medium_blocks():
    s = _random_bits(6272, 26)
    rep = longest_run(s)
    chi2 = _naive_longest_run_chi2(
        list(map(int, s.bits)), 128, (4, 5, 6, 7, 8, 9),
        (0.1174, 0.2430, 0.2493, 0.1752, 0.1027, 0.1124))
    assert rep.statistic == pytest.approx(chi2, rel=1e-12)
    assert rep.p_value == pytest.approx(float(gammaincc(2.5, chi2 / 2.0)),
                                        rel=1e-12)


def _naive_window_counts(bits, m):
    n = len(bits)
    counts = {}
    for i in range(n):
        w = tuple(int(bits[(i + k) % n]) for k in range(m))
        counts[w] = counts.get(w, 0) + 1
    return counts


def _naive_psisq(bits, m):
    n = len(bits)
    counts = _naive_window_counts(bits, m)
    return (1 << m) / n * sum(c * c for c in counts.values()) - n


def test_window_counts_match_naive_dict():
    s = _random_bits(200, 27)
    for m in (1, 2, 3, 5):
        fast = _window_counts(s.bits, m)
        naive = _naive_window_counts(s.bits, m)
        assert int(fast.sum()) == 200
        for w, c in naive.items():
            idx = int("".join(map(str, w)), 2)
            assert fast[idx] == c


def test_marginalization_drops_last_window_bit():
    s = _random_bits(300, 28)
    assert np.array_equal(_marginalize(_window_counts(s.bits, 4)),
                          _window_counts(s.bits, 3))


def test_serial_matches_naive_loops():
    s = _random_bits(512, 29)
    r1, r2 = serial(s, m=4)
    bits = list(map(int, s.bits))
    psi4 = _naive_psisq(bits, 4)
    psi3 = _naive_psisq(bits, 3)
    psi2 = _naive_psisq(bits, 2)
    assert r1.statistic == pytest.approx(psi4 - psi3, abs=1e-9)
    assert r2.statistic == pytest.approx(psi4 - 2 * psi3 + psi2, abs=1e-9)
    assert r1.p_value == pytest.approx(float(gammaincc(4.0, r1.statistic / 2)),
                                       rel=1e-12)
    assert r2.p_value == pytest.approx(float(gammaincc(2.0, r2.statistic / 2)),
                                       rel=1e-12)


def test_approximate_entropy_matches_naive_loops():
    s = _random_bits(300, 30)
    rep = approximate_entropy(s, m=3)
    bits = list(map(int, s.bits))

    def phi(mm):
        counts = _naive_window_counts(bits, mm)
        return sum(c / 300 * math.log(c / 300) for c in counts.values())

    chi2 = 2.0 * 300 * (math.log(2.0) - (phi(3) - phi(4)))
    assert rep.statistic == pytest.approx(chi2, abs=1e-9)


def test_parameter_guards():
    s = _random_bits(100000, 31)
    with pytest.raises(ValueError):
        serial(s, m=2)
    with pytest.raises(ValueError):
        serial(s, m=21)
    with pytest.raises(ValueError):
        approximate_entropy(s, m=0)
    with pytest.raises(SequenceTooShort):
        monobit(_random_bits(99, 32))
    with pytest.raises(SequenceTooShort):
        serial(_random_bits(512, 33), m=16)
    with pytest.raises(SequenceTooShort):
        nist_subset(_random_bits(99999, 34))


def test_battery_shape_and_order():
    reports = nist_subset(_random_bits(100000, 1234))
    names = [r.name for r in reports]
    assert names == ["monobit", "block-frequency", "cusum-forward",
                     "cusum-reverse", "runs", "longest-run", "serial-1",
                     "serial-2", "approximate-entropy"]
    for r in reports:
        assert 0.0 <= r.p_value <= 1.0
        assert r.record().startswith("name=%s " % r.name)
        assert ("pass=yes" in r.record()) == r.passed


def test_battery_calibration_on_reference_randomness():
    # PCG64-driven bits: p-values should be roughly uniform
    pvals = []
    for seed in range(20):
        reports = nist_subset(_random_bits(100000, 9000 + seed))
        pvals += [r.p_value for r in reports]
    pvals = np.asarray(pvals)
    assert 0.40 <= float(pvals.mean()) <= 0.60
    assert float((pvals < 0.01).mean()) <= 0.05


def test_battery_rejects_structured_input():
    bits = np.zeros(100000, dtype=np.uint8)
    bits[::3] = 1  # strongly periodic
    reports = nist_subset(BitSequence(bits))
    assert sum(0 if r.passed else 1 for r in reports) >= 5
