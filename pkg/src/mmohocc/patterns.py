"""Hopping-pattern lookup: hpsn -> orbit visit order.

Orbits 1..n are grouped into consecutive blocks (1,2), (3,4), ... with a
final block of three when n is odd.  With B blocks there are B! block
orderings, enumerated in lexicographic rank order.  An hpsn below min(B!,256)
selects the rank-hpsn ordering with each block emitted ascending (the
"sequential" set); larger hpsn values select rank (hpsn - B!) mod B! with
pairs emitted reversed and a trailing triple (a,b,c) emitted as (a,c,b) (the
"swapped" set).  For B! >= 256 only the sequential set is reachable, which
is fine: hpsn is an 8-bit field.
"""

from __future__ import annotations

import math


def block_structure(n_orbits: int):
    """Partition {1..n} into pairs plus one trailing triple when n is odd."""
    if not 2 <= n_orbits <= 64:
        raise ValueError("n_orbits must be in [2, 64]")
    last_pair_end = n_orbits if n_orbits % 2 == 0 else n_orbits - 3
    blocks = [(i, i + 1) for i in range(1, last_pair_end, 2)]
    if n_orbits % 2:
        blocks.append((n_orbits - 2, n_orbits - 1, n_orbits))
    return blocks


def _unrank(items, rank):
    # standard factorial-base unranking, lexicographic order
    pool = list(items)
    out = []
    for i in range(len(pool), 0, -1):
        f = math.factorial(i - 1)
        out.append(pool.pop(rank // f))
        rank %= f
    return out


def pattern(hpsn: int, n_orbits: int) -> tuple:
    """Resolve one hpsn to its orbit visit order (1-based orbit numbers)."""
    if not 0 <= hpsn <= 255:
        raise ValueError("hpsn is an 8-bit value")
    blocks = block_structure(n_orbits)
    bf = math.factorial(len(blocks))
    if hpsn < min(bf, 256):
        ordered = _unrank(blocks, hpsn)
        flat = [i for blk in ordered for i in blk]
    else:
        ordered = _unrank(blocks, (hpsn - bf) % bf)
        flat = []
        for blk in ordered:
            if len(blk) == 2:
                flat += [blk[1], blk[0]]
            else:
                flat += [blk[0], blk[2], blk[1]]
    return tuple(flat)


def table(n_orbits: int):
    """All 256 patterns for one orbit count, indexed by hpsn."""
    return [pattern(h, n_orbits) for h in range(256)]


def table_csv(n_orbits: int) -> str:
    """One line per hpsn (0..255), fields are the orbit numbers."""
    return "\n".join(",".join(str(i) for i in row) for row in table(n_orbits)) + "\n"
