"""Independent oracles shared by the test modules.

Everything here recomputes results from first principles, avoiding the
package's own code paths wherever the point is to cross-check them: the
growth bound is obtained by extension counting over explicit monomial
sets, never by binomial expansion.
"""
from functools import lru_cache


def degree_terms(t: int, p: int) -> list[tuple[int, ...]]:
    out = []

    def rec(remaining, vars_left, acc):
        if vars_left == 1:
            out.append(acc + (remaining,))
            return
        for e in range(remaining + 1):
            rec(remaining - e, vars_left - 1, acc + (e,))

    rec(t, p, ())
    return out


@lru_cache(maxsize=None)
def extension_bound(a: int, t: int) -> int:
    """Largest next value after a at degree t, by brute extension counting.

    Take the a smallest degree-t monomials (reversed-tuple lex, enough
    variables that the choice is unconstrained), then count degree-(t+1)
    monomials all of whose degree-t divisors were taken.
    """
    p = a + 2
    chosen = set(sorted(degree_terms(t, p), key=lambda m: m[::-1])[:a])
    count = 0
    for m in degree_terms(t + 1, p):
        if all(
            m[:i] + (m[i] - 1,) + m[i + 1 :] in chosen
            for i in range(p)
            if m[i] > 0
        ):
            count += 1
    return count


def is_oseq_by_extension(seq: tuple[int, ...]) -> bool:
    if not seq or seq[0] != 1 or any(v < 1 for v in seq):
        return False
    return all(
        seq[t + 1] <= extension_bound(seq[t], t) for t in range(1, len(seq) - 1)
    )


def compositions(total: int, max_parts: int):
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first, max_parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def brute_sequences(d: int) -> tuple[tuple[int, ...], ...]:
    """All O-sequences of multiplicity d, via composition filtering with the
    extension-oracle bound.  Usable up to d around 14."""
    found = [
        (1,) + tail
        for tail in compositions(d - 1, d - 1)
        if is_oseq_by_extension((1,) + tail)
    ]
    return tuple(sorted(found))


def all_decreasing_top_expansions(a: int, t: int) -> list[list[int]]:
    """Every strictly-decreasing-tops representation of a in base t, found
    exhaustively; used to confirm the greedy expansion is the unique one."""
    from math import comb

    results = []

    def rec(remaining, lower, last_top, acc):
        if remaining == 0:
            results.append(acc)
            return
        if lower < 1:
            return
        for top in range(lower, last_top):
            value = comb(top, lower)
            if 0 < value <= remaining:
                rec(remaining - value, lower - 1, top, acc + [top])

    rec(a, t, a + t + 2, [])
    return results


def fibonacci_upto(limit: int) -> list[int]:
    fib = [0, 1, 1]
    while len(fib) <= limit:
        fib.append(fib[-1] + fib[-2])
    return fib[: limit + 1]


def first_lex_terms(t: int, p: int, count: int) -> list[tuple[int, ...]]:
    ordered = sorted(degree_terms(t, p), key=lambda m: m[::-1])
    return ordered[:count]
