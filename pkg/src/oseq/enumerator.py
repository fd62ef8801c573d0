"""Constructive enumeration of finite O-sequences by multiplicity.

Sequences are grouped by multiplicity d (the sum of the entries).  Writing
A_d for the set of O-sequences of multiplicity d whose last entry exceeds 1,
every member of A_d arises from exactly one of two moves:

  * append 2 to a member of A_{d-2}, or
  * increment the last entry of a member of A_{d-1} (when the growth bound
    at that position allows it).

Children of the first move end in 2 and children of the second end in >= 3,
so the union is disjoint.  The O-sequences of multiplicity d that end in 1
are exactly the members of A_m (m < d) padded with 1s, plus the all-ones
sequence, giving the count recurrence O_d = O_{d-1} + |A_d|.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterator

from .macaulay import growth_bound

Sequence = tuple[int, ...]


@dataclass
class CountTable:
    """Counts O[d] and A[d] for 1 <= d <= max_d; index 0 is unused."""

    max_d: int
    O: list[int]
    A: list[int]

    def rows(self) -> Iterator[tuple[int, int, int]]:
        for d in range(1, self.max_d + 1):
            yield d, self.O[d], self.A[d]


def _can_increment(seq: Sequence) -> bool:
    # position s = len - 1; the step a_{s-1} -> a_s is unconstrained at s = 1
    s = len(seq) - 1
    return s == 1 or seq[-1] < growth_bound(seq[-2], s - 1)


def successors(seq: Sequence) -> dict[int, Sequence]:
    """The children of a last-entry-above-1 sequence, keyed by multiplicity gain.

    Key 2 maps to the appended child (always present), key 1 to the
    incremented child (present only when the growth bound permits).
    """
    if len(seq) < 2 or seq[0] != 1 or seq[-1] < 2:
        raise ValueError(f"not a last-entry-above-1 O-sequence stem: {seq!r}")
    out: dict[int, Sequence] = {2: seq + (2,)}
    if _can_increment(seq):
        out[1] = seq[:-1] + (seq[-1] + 1,)
    return out


def _iter_buckets(max_d: int) -> Iterator[tuple[int, list[Sequence]]]:
    """Yield (d, members of A_d) for d = 3 .. max_d.

    A_1 and A_2 are empty; the window below only ever holds the two most
    recent nonempty buckets.
    """
    if max_d < 3:
        return
    two_back: list[Sequence] = [(1, 2)]
    yield 3, two_back
    if max_d < 4:
        return
    one_back: list[Sequence] = [(1, 3)]
    yield 4, one_back
    for d in range(5, max_d + 1):
        bucket = [seq + (2,) for seq in two_back]
        bucket.extend(
            seq[:-1] + (seq[-1] + 1,) for seq in one_back if _can_increment(seq)
        )
        yield d, bucket
        two_back, one_back = one_back, bucket


def iter_last_gt1(d: int) -> Iterator[Sequence]:
    """O-sequences of multiplicity d with last entry > 1, in lexicographic order."""
    if d < 1:
        raise ValueError(f"multiplicity must be positive, got {d}")
    last: list[Sequence] = []
    for m, bucket in _iter_buckets(d):
        if m == d:
            last = bucket
    yield from sorted(last)


def _padded(bucket: list[Sequence], pad: Sequence) -> Iterator[Sequence]:
    for seq in bucket:
        yield seq + pad


def iter_all(d: int) -> Iterator[Sequence]:
    """All O-sequences of multiplicity d, in lexicographic order.

    Padding a multiplicity-m sequence with d - m trailing 1s preserves both
    the O-sequence property (1 <= any growth bound) and the relative lex
    order within a bucket, so a heap merge of the padded buckets plus the
    all-ones sequence yields the global order.
    """
    if d < 1:
        raise ValueError(f"multiplicity must be positive, got {d}")
    streams: list[Iterator[Sequence]] = [iter([(1,) * d])]
    for m, bucket in _iter_buckets(d):
        streams.append(_padded(sorted(bucket), (1,) * (d - m)))
    yield from heapq.merge(*streams)


def count_table(max_d: int) -> CountTable:
    """O_d and A_d for all d up to max_d via the sliding-window construction."""
    if max_d < 1:
        raise ValueError(f"max_d must be positive, got {max_d}")
    a = [0] * (max_d + 1)
    for d, bucket in _iter_buckets(max_d):
        a[d] = len(bucket)
    # O_1 = 1 seeds the recurrence O_d = O_{d-1} + A_d (A_1 = A_2 = 0)
    o = [0] * (max_d + 1)
    o[1] = 1
    for d in range(2, max_d + 1):
        o[d] = o[d - 1] + a[d]
    return CountTable(max_d=max_d, O=o, A=a)
