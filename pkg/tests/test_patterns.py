"""Hopping-pattern enumeration: block structure, unranking, the two sets."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mmohocc.patterns import block_structure, pattern, table, table_csv


def test_block_structure_pairs_and_trailing_triple():
    assert block_structure(2) == [(1, 2)]
    assert block_structure(4) == [(1, 2), (3, 4)]
    assert block_structure(3) == [(1, 2, 3)]
    assert block_structure(5) == [(1, 2), (3, 4, 5)]
    assert block_structure(11) == [(1, 2), (3, 4), (5, 6), (7, 8), (9, 10, 11)]
    with pytest.raises(ValueError):
        block_structure(1)
    with pytest.raises(ValueError):
        block_structure(65)


def test_block_structure_covers_every_orbit():
    for n in range(2, 65):
        flat = [i for blk in block_structure(n) for i in blk]
        assert flat == list(range(1, n + 1))


def test_worked_example_hpsn_141():
    assert pattern(141, 11) == (2, 1, 9, 11, 10, 6, 5, 8, 7, 4, 3)


def test_sequential_set_starts_at_identity():
    assert pattern(0, 11) == (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11)
    assert pattern(0, 8) == (1, 2, 3, 4, 5, 6, 7, 8)


def test_sequential_lexicographic_order_small():
    # 4 orbits: 2 blocks, 2 sequential ranks, then the swapped set
    assert pattern(0, 4) == (1, 2, 3, 4)
    assert pattern(1, 4) == (3, 4, 1, 2)
    assert pattern(2, 4) == (2, 1, 4, 3)
    assert pattern(3, 4) == (4, 3, 2, 1)
    # beyond both sets the swapped set repeats cyclically
    assert pattern(4, 4) == pattern(2, 4)
    assert pattern(5, 4) == pattern(3, 4)


def test_swapped_set_reverses_pairs_and_rotates_triple():
    # 5 orbits: blocks (1,2) and (3,4,5); 2 sequential ranks
    assert pattern(0, 5) == (1, 2, 3, 4, 5)
    assert pattern(1, 5) == (3, 4, 5, 1, 2)
    assert pattern(2, 5) == (2, 1, 3, 5, 4)
    assert pattern(3, 5) == (3, 5, 4, 2, 1)


def test_large_orbit_counts_stay_sequential():
    # 64 orbits: 32 blocks, 32! >> 256, every hpsn is a sequential rank
    assert pattern(0, 64) == tuple(range(1, 65))
    p255 = pattern(255, 64)
    assert sorted(p255) == list(range(1, 65))
    assert p255[0] == 1  # rank 255 < 31! keeps the first block in place


@given(st.integers(min_value=0, max_value=255),
       st.integers(min_value=2, max_value=64))
def test_every_pattern_is_a_permutation(hpsn, n):
    assert sorted(pattern(hpsn, n)) == list(range(1, n + 1))


def test_hpsn_range_enforced():
    with pytest.raises(ValueError):
        pattern(-1, 11)
    with pytest.raises(ValueError):
        pattern(256, 11)


def test_table_and_csv_shape():
    t = table(11)
    assert len(t) == 256
    assert t[141] == pattern(141, 11)
    lines = table_csv(11).strip().split("\n")
    assert len(lines) == 256
    assert lines[141] == "2,1,9,11,10,6,5,8,7,4,3"


def test_distinct_patterns_up_to_set_size():
    # with 11 orbits each set holds 5! = 120 distinct orderings
    t = table(11)
    assert len(set(t[:120])) == 120
    assert len(set(t[120:240])) == 120
    assert not set(t[:120]) & set(t[120:240])
