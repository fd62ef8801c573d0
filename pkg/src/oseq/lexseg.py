"""Sous-escaliers of lex-segment ideals: construction, decomposition, classification.

Terms in p variables are exponent tuples (e_1, ..., e_p).  The monomial
order is lexicographic with x_1 < x_2 < ... < x_p and the highest variable
dominant: terms of equal degree compare by their reversed exponent tuples.
The smallest degree-t term is x_1^t.  With this convention the sous-escalier
of a lex-segment ideal (the a_t lex-smallest terms in each degree t) is
closed under division, and splitting it by divisibility by x_p again yields
sous-escaliers; the dominant variable must be the one the order sorts by
last, otherwise that splitting property fails.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import islice
from typing import Iterable, Iterator, NamedTuple

from .macaulay import binomial, is_o_sequence

Term = tuple[int, ...]


class ParameterTooLargeError(Exception):
    """Exhaustive search was asked for a range it cannot cover quickly."""


class Classification(NamedTuple):
    socle_degree: int
    max_prefix: int
    multiplicity: int


def lex_key(term: Term) -> Term:
    """Sort key realizing the order: compare exponents from x_p downwards."""
    return term[::-1]


def lex_compare(t1: Term, t2: Term) -> int:
    """-1, 0 or +1 as t1 precedes, equals or follows t2 in the term order."""
    if len(t1) != len(t2):
        raise ValueError(f"terms live in different rings: {t1!r} vs {t2!r}")
    k1, k2 = lex_key(t1), lex_key(t2)
    return (k1 > k2) - (k1 < k2)


def min_var(term: Term) -> int:
    """1-based index of the smallest variable dividing the term; 0 for the unit."""
    for i, e in enumerate(term):
        if e > 0:
            return i + 1
    return 0


def term_str(term: Term) -> str:
    parts = []
    for i, e in enumerate(term):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def terms_of_degree(t: int, p: int) -> Iterator[Term]:
    """All degree-t terms in p variables, ascending in the term order.

    Recursing on the exponent of the dominant variable from 0 upwards
    yields the order directly, without sorting.
    """
    if p < 1:
        raise ValueError(f"need at least one variable, got p={p}")
    if t < 0:
        return
    if p == 1:
        yield (t,)
        return
    for last in range(t + 1):
        for head in terms_of_degree(t - last, p - 1):
            yield head + (last,)


@dataclass(frozen=True)
class OrderIdeal:
    """A finite set of terms in p variables, closed under division."""

    p: int
    terms: frozenset[Term] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for term in self.terms:
            if len(term) != self.p or any(e < 0 for e in term):
                raise ValueError(f"term {term!r} does not live in {self.p} variables")

    @cached_property
    def degree_counts(self) -> tuple[int, ...]:
        """Number of terms per degree, degree 0 upward, up to the top degree."""
        if not self.terms:
            return ()
        top = max(sum(t) for t in self.terms)
        counts = [0] * (top + 1)
        for term in self.terms:
            counts[sum(term)] += 1
        return tuple(counts)

    @property
    def multiplicity(self) -> int:
        return len(self.terms)

    @property
    def socle_degree(self) -> int:
        return len(self.degree_counts) - 1

    def is_closed(self) -> bool:
        """True iff every term's single-variable quotients are all present."""
        for term in self.terms:
            for i, e in enumerate(term):
                if e > 0:
                    quotient = term[:i] + (e - 1,) + term[i + 1 :]
                    if quotient not in self.terms:
                        return False
        return True

    def sorted_terms(self) -> list[Term]:
        return sorted(self.terms, key=lambda t: (sum(t), lex_key(t)))


def sous_escalier(h: Iterable[int], p: int) -> OrderIdeal:
    """The a_t lex-smallest degree-t terms for each entry a_t of ``h``.

    Requires ``h`` to be an O-sequence with every entry within the count
    of degree-t terms in p variables.
    """
    values = tuple(h)
    if not is_o_sequence(values):
        raise ValueError(f"not an O-sequence: {values!r}")
    terms: set[Term] = set()
    for t, a in enumerate(values):
        if a > binomial(p - 1 + t, t):
            raise ValueError(
                f"h[{t}] = {a} exceeds the {binomial(p - 1 + t, t)} degree-{t} terms "
                f"in {p} variables"
            )
        terms.update(islice(terms_of_degree(t, p), a))
    return OrderIdeal(p=p, terms=frozenset(terms))


def decompose(ideal: OrderIdeal) -> tuple[OrderIdeal, OrderIdeal]:
    """Split by divisibility by the dominant variable x_p.

    Returns (M1, M2): M1 holds the terms with x_p-exponent 0, living in
    p - 1 variables; M2 holds the terms divisible by x_p, divided by it
    once, still in p variables.  Multiplicities add up to the original.
    """
    if ideal.p < 2:
        raise ValueError("decomposition needs at least two variables")
    m1 = frozenset(t[:-1] for t in ideal.terms if t[-1] == 0)
    m2 = frozenset(t[:-1] + (t[-1] - 1,) for t in ideal.terms if t[-1] > 0)
    return OrderIdeal(p=ideal.p - 1, terms=m1), OrderIdeal(p=ideal.p, terms=m2)


def classify(ideal: OrderIdeal) -> Classification:
    """Socle degree, maximal-growth prefix length and multiplicity.

    The prefix length is the largest k with degree counts equal to
    C(p - 1 + i, i) for all i <= k, i.e. the degrees filled completely.
    """
    if not ideal.terms:
        raise ValueError("cannot classify the empty set")
    counts = ideal.degree_counts
    if counts[0] != 1:
        raise ValueError("classification expects the unit term present")
    k = 0
    while k + 1 < len(counts) and counts[k + 1] == binomial(ideal.p + k, k + 1):
        k += 1
    return Classification(
        socle_degree=ideal.socle_degree,
        max_prefix=k,
        multiplicity=ideal.multiplicity,
    )


def exhaustive_count(p: int, n: int, k: int, d: int) -> int:
    """Count by direct enumeration the O-sequences of multiplicity d from
    lex segments in p variables, socle degree <= n, prefix length exactly k.

    Independent of the recursive formula: candidates are generated as
    compositions of d and filtered.  Bounded to small parameters on purpose.
    """
    if p > 4 or n > 8 or d > 12:
        raise ParameterTooLargeError(
            f"exhaustive_count is limited to p <= 4, n <= 8, d <= 12; "
            f"got p={p}, n={n}, d={d}"
        )
    if d < 1 or p < 1 or n < 0 or k < 0:
        return 0
    total = 0
    for seq in _admissible(n, d):
        if _prefix_length(seq, p, d) == k:
            total += 1
    return total


def _prefix_length(seq: tuple[int, ...], p: int, d: int) -> int | None:
    """Exact maximal-growth prefix length of ``seq`` seen in p variables,
    or None when some entry overflows the available terms."""
    k = 0
    while k + 1 < len(seq) and seq[k + 1] == binomial(p + k, k + 1, cap=d):
        k += 1
    for t in range(len(seq)):
        if seq[t] > binomial(p - 1 + t, t, cap=d):
            return None
    return k


def _compositions(total: int, max_parts: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first, max_parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _admissible(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    """All O-sequences of multiplicity d and socle degree <= n."""
    out = []
    for tail in _compositions(d - 1, n):
        seq = (1,) + tail
        if is_o_sequence(seq):
            out.append(seq)
    return tuple(out)
