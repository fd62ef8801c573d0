"""Recursive counting of O-sequences through lex-segment decompositions.

count_restricted(p, n, k, d) is the number of O-sequences (a_0, ..., a_s)
of multiplicity d realizable by a lex segment in p variables, with socle
degree s <= n, whose maximal-growth prefix has length exactly k, i.e.
a_i = C(p - 1 + i, i) for i <= k and a_i below that ceiling for k < i <= s.
The recursion splits the sous-escalier of such a segment by divisibility
by the dominant variable, which pairs each counted object with a product
of two smaller ones.

The total count of O-sequences of multiplicity d is recovered by summing
over the prefix length in d variables with unbounded socle degree
(n = d - 1 suffices: multiplicity d forces s <= d - 1).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .macaulay import binomial

Key = tuple[int, int, int, int]

_HEADER = "# oseq-memo v1"


class CacheFormatError(Exception):
    """A persisted cache file does not follow the expected format."""


class CacheCorruptionError(Exception):
    """Two sources disagree on the count stored for the same key."""


@dataclass
class CountCache:
    """Memo store mapping (p, n, k, d) to a count, with idempotent insertion.

    ``hits`` counts lookups of keys already stored (top-level queries and
    summand reads during expansion); ``misses`` counts keys that had to be
    expanded and stored.  A warm second run of the same query therefore
    shows zero misses.
    """

    entries: dict[Key, int] = field(default_factory=dict)
    hits: int = 0
    misses: int = 0

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key: Key) -> bool:
        return key in self.entries

    def insert(self, key: Key, count: int) -> None:
        """Store key -> count; re-inserting the same value is a no-op."""
        old = self.entries.get(key)
        if old is None:
            self.entries[key] = count
            self.misses += 1
        elif old != count:
            raise CacheCorruptionError(
                f"key {key} already maps to {old}, refusing to store {count}"
            )

    def read(self, key: Key) -> int:
        self.hits += 1
        return self.entries[key]


def _forced_prefix_mass(p: int, k: int, d: int) -> int:
    """Sum of the forced prefix values C(p-1+i, i) for i = 0..k, saturated at d+1."""
    total = 0
    for i in range(k + 1):
        total += binomial(p - 1 + i, i, cap=d)
        if total > d:
            return d + 1
    return total


def _resolve(p: int, n: int, k: int, d: int) -> int | Key:
    """Settle a query immediately or return its normalized memo key.

    Emptiness guards: no such object when k exceeds the socle bound, when
    the forced prefix alone exceeds the multiplicity, or when any parameter
    leaves its domain.  Normalization (n capped at d - 1; p capped at d
    when k = 0, since at most d - 1 of the p variables can appear) keeps
    the memo small without changing any stored fact.
    """
    if d <= 0 or p < 1 or n < 0 or k < 0:
        return 0
    if k > n:
        return 0
    if _forced_prefix_mass(p, k, d) > d:
        return 0
    n = min(n, d - 1)
    if k == 0 and p > d:
        p = d
    if p == 1:
        # one variable: the sequence is (1, 1, ..., 1), all growth maximal
        return 1 if (k == d - 1 and n >= d - 1) else 0
    return (p, n, k, d)


def _summands(key: Key) -> list[tuple[int | Key, int | Key]]:
    """Factor pairs whose products sum to the count for ``key``.

    For k = 0 the prefix condition only constrains degree 0, and dropping
    the dominant variable leaves a segment in p - 1 variables with any
    prefix length.  For k > 0 the split by dominant-variable divisibility
    yields a multiplicity-(d - j) part in p - 1 variables with prefix
    length i >= k, paired with a multiplicity-j part in p variables with
    socle degree <= i - 1 and prefix length k - 1.
    """
    p, n, k, d = key
    pairs: list[tuple[int | Key, int | Key]] = []
    if k == 0:
        for kk in range(d):
            left = _resolve(p - 1, n, kk, d)
            if left != 0:
                pairs.append((left, 1))
        return pairs
    for j in range(1, d):
        for i in range(k, n + 1):
            left = _resolve(p - 1, n, i, d - j)
            if left == 0:
                continue
            right = _resolve(p, i - 1, k - 1, j)
            if right == 0:
                continue
            pairs.append((left, right))
    return pairs


def _ensure(key: Key, cache: CountCache) -> None:
    """Compute ``key`` into ``cache`` with an explicit work stack.

    Recursion depth grows with p + d, so deep queries are evaluated
    iteratively: a key is expanded only once all its factor keys are
    present.
    """
    stack = [key]
    while stack:
        top = stack[-1]
        if top in cache:
            stack.pop()
            continue
        pairs = _summands(top)
        pending = [
            factor
            for pair in pairs
            for factor in pair
            if isinstance(factor, tuple) and factor not in cache
        ]
        if pending:
            stack.extend(pending)
            continue
        total = 0
        for left, right in pairs:
            lv = cache.read(left) if isinstance(left, tuple) else left
            if lv == 0:
                continue
            rv = cache.read(right) if isinstance(right, tuple) else right
            total += lv * rv
        cache.insert(top, total)
        stack.pop()


def count_restricted(p: int, n: int, k: int, d: int, cache: CountCache | None = None) -> int:
    """Count O-sequences of multiplicity d from lex segments in p variables,
    socle degree <= n, maximal-growth prefix of length exactly k."""
    settled = _resolve(p, n, k, d)
    if not isinstance(settled, tuple):
        return settled
    if cache is None:
        cache = CountCache()
    if settled in cache:
        return cache.read(settled)
    _ensure(settled, cache)
    return cache.entries[settled]


def count_via_formula(d: int, cache: CountCache | None = None) -> int:
    """Total number of O-sequences of multiplicity d, by the recursion alone.

    Every O-sequence with a_1 = p embeds as a lex segment in p variables,
    and p <= d, so summing the prefix split in d variables with the socle
    degree unconstrained covers everything exactly once.
    """
    if d < 1:
        raise ValueError(f"multiplicity must be positive, got {d}")
    if cache is None:
        cache = CountCache()
    return sum(count_restricted(d, d - 1, k, d, cache) for k in range(d))


def two_variable_lex_count(d: int, cache: CountCache | None = None) -> int:
    """Number of multiplicity-d O-sequences realizable by lex segments in
    two variables (a_1 <= 2), summed over prefix lengths."""
    if d < 1:
        raise ValueError(f"multiplicity must be positive, got {d}")
    if cache is None:
        cache = CountCache()
    return sum(count_restricted(2, d - 1, k, d, cache) for k in range(d))


def save_cache(cache: CountCache, path: str) -> None:
    """Write the cache in the line format ``p,n,k,d,count``, keys ascending.

    The header line pins the format version; decimal ASCII, no spaces,
    LF newlines, so files diff cleanly and merge deterministically.
    """
    lines = [_HEADER]
    for key in sorted(cache.entries):
        p, n, k, d = key
        lines.append(f"{p},{n},{k},{d},{cache.entries[key]}")
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_cache(path: str, into: CountCache | None = None) -> CountCache:
    """Read a persisted cache, merging into ``into`` when given.

    A key already present must carry the same count, otherwise the merge
    fails with CacheCorruptionError; malformed lines raise CacheFormatError.
    """
    cache = into if into is not None else CountCache()
    with open(path, "r", encoding="ascii") as fh:
        first = fh.readline().rstrip("\n")
        if first != _HEADER:
            raise CacheFormatError(f"{path}: expected header {_HEADER!r}, got {first!r}")
        for lineno, raw in enumerate(fh, start=2):
            line = raw.rstrip("\n")
            if not line:
                continue
            fields = line.split(",")
            if len(fields) != 5:
                raise CacheFormatError(f"{path}:{lineno}: expected 5 fields, got {len(fields)}")
            try:
                p, n, k, d, count = (int(f) for f in fields)
            except ValueError as exc:
                raise CacheFormatError(f"{path}:{lineno}: non-integer field") from exc
            old = cache.entries.get((p, n, k, d))
            if old is None:
                cache.entries[(p, n, k, d)] = count
            elif old != count:
                raise CacheCorruptionError(
                    f"{path}:{lineno}: key {(p, n, k, d)} maps to {old}, file says {count}"
                )
    return cache
