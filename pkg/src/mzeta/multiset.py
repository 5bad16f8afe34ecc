"""
Multiset words and their classical statistics.

A composition eta = (eta_1, ..., eta_r) of n fixes a multiset alphabet with
eta_k copies of the letter k.  A *word* over eta is any rearrangement of the
sorted ("trivial") word 1^{eta_1} 2^{eta_2} ... r^{eta_r}; words and
permutations are plain tuples of ints.  All positions reported by the
statistics below are 1-based, so that e.g. maj(w) is literally the sum of the
descent positions.

>>> eta = Composition((3, 2, 2, 3))
>>> w = (4, 2, 3, 2, 3, 1, 4, 1, 4, 1)
>>> sorted(descent_set(w)), des(w), maj(w)
([1, 3, 5, 7, 9], 5, 25)
>>> denh(w, eta)
27
"""
from __future__ import annotations

import dataclasses
import itertools
import math
from functools import cached_property
from typing import Iterator, Sequence


@dataclasses.dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive parts (eta_1, ..., eta_r) summing to n."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if not self.parts:
            raise ValueError("a composition needs at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive, got {self.parts}")

    @cached_property
    def n(self) -> int:
        return sum(self.parts)

    @cached_property
    def r(self) -> int:
        return len(self.parts)

    @cached_property
    def descent_set(self) -> frozenset[int]:
        """Partial sums eta_1, eta_1+eta_2, ... strictly below n (r-1 values).

        >>> sorted(Composition((3, 2, 2, 3)).descent_set)
        [3, 5, 7]
        """
        acc = list(itertools.accumulate(self.parts[:-1]))
        return frozenset(acc)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        """offsets[k] = eta_1 + ... + eta_{k-1}, indexed by letter (offsets[0] unused)."""
        return (0, 0) + tuple(itertools.accumulate(self.parts[:-1]))

    @cached_property
    def trivial_word(self) -> tuple[int, ...]:
        """The sorted word 1^{eta_1} ... r^{eta_r}.

        >>> Composition((2, 1)).trivial_word
        (1, 1, 2)
        """
        out: list[int] = []
        for k, p in enumerate(self.parts, start=1):
            out.extend([k] * p)
        return tuple(out)

    def word_count(self) -> int:
        """|S_eta| = n! / (eta_1! ... eta_r!)."""
        count = math.factorial(self.n)
        for p in self.parts:
            count //= math.factorial(p)
        return count

    def is_rectangle(self) -> tuple[int, int] | None:
        """Return (m, r) if all parts equal m, else None."""
        m = self.parts[0]
        if all(p == m for p in self.parts):
            return m, self.r
        return None

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def is_word(w: Sequence[int], eta: Composition) -> bool:
    """True iff w is a rearrangement of eta's trivial word."""
    return tuple(sorted(w)) == eta.trivial_word


def check_word(w: Sequence[int], eta: Composition) -> tuple[int, ...]:
    w = tuple(w)
    if not is_word(w, eta):
        raise ValueError(f"{w} does not rearrange the trivial word of eta={eta}")
    return w


def descent_set(w: Sequence[int]) -> set[int]:
    """Positions i in [n-1] with w_i > w_{i+1} (1-based).

    Works for any integer sequence, including signed windows.

    >>> sorted(descent_set((2, 1, 1)))
    [1]
    """
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def des(w: Sequence[int]) -> int:
    """Number of descents."""
    return sum(1 for i in range(1, len(w)) if w[i - 1] > w[i])


def maj(w: Sequence[int]) -> int:
    """Major index: the sum of the descent positions.

    >>> maj((1, 2, 1))
    2
    """
    return sum(i for i in range(1, len(w)) if w[i - 1] > w[i])


def inv(seq: Sequence[int]) -> int:
    """Number of pairs i < j with seq_i > seq_j.

    Plain O(k^2) scan; the sequences in play are short.

    >>> inv((2, 1, 1, 4, 1))
    4
    """
    total = 0
    k = len(seq)
    for i in range(k):
        a = seq[i]
        for j in range(i + 1, k):
            if a > seq[j]:
                total += 1
    return total


def imv(seq: Sequence[int]) -> int:
    """Number of weak inversions: pairs i < j with seq_i >= seq_j.

    >>> imv((4, 2, 3, 3, 4))
    5
    """
    total = 0
    k = len(seq)
    for i in range(k):
        a = seq[i]
        for j in range(i + 1, k):
            if a >= seq[j]:
                total += 1
    return total


def exc_set(w: Sequence[int], eta: Composition) -> set[int]:
    """Positions where w strictly exceeds the trivial word letterwise.

    >>> sorted(exc_set((4, 2, 3, 2, 3, 1, 4, 1, 4, 1), Composition((3, 2, 2, 3))))
    [1, 2, 3, 5, 7]
    """
    triv = eta.trivial_word
    return {i for i in range(1, len(w) + 1) if w[i - 1] > triv[i - 1]}


def exc(w: Sequence[int], eta: Composition) -> int:
    """Number of excedances."""
    triv = eta.trivial_word
    return sum(1 for a, b in zip(w, triv) if a > b)


def exceeding_subword(w: Sequence[int], eta: Composition) -> tuple[int, ...]:
    """Letters of w at excedance positions, in order.

    >>> exceeding_subword((4, 2, 3, 2, 3, 1, 4, 1, 4, 1), Composition((3, 2, 2, 3)))
    (4, 2, 3, 3, 4)
    """
    triv = eta.trivial_word
    return tuple(a for a, b in zip(w, triv) if a > b)


def nonexceeding_subword(w: Sequence[int], eta: Composition) -> tuple[int, ...]:
    """Letters of w at non-excedance positions, in order.

    >>> nonexceeding_subword((4, 2, 3, 2, 3, 1, 4, 1, 4, 1), Composition((3, 2, 2, 3)))
    (2, 1, 1, 4, 1)
    """
    triv = eta.trivial_word
    return tuple(a for a, b in zip(w, triv) if a <= b)


def denh(w: Sequence[int], eta: Composition) -> int:
    """Denert statistic of a multiset word.

    The sum of the excedance positions, plus the weak inversions of the
    exceeding subword, plus the inversions of the non-exceeding subword.

    >>> denh((4, 2, 3, 2, 3, 1, 4, 1, 4, 1), Composition((3, 2, 2, 3)))
    27
    >>> denh((1, 1, 2), Composition((2, 1)))
    0
    """
    triv = eta.trivial_word
    pos_sum = 0
    exceeding: list[int] = []
    rest: list[int] = []
    for i, (a, b) in enumerate(zip(w, triv), start=1):
        if a > b:
            pos_sum += i
            exceeding.append(a)
        else:
            rest.append(a)
    return pos_sum + imv(exceeding) + inv(rest)


def standardize(w: Sequence[int], eta: Composition) -> tuple[int, ...]:
    """Replace equal letters by consecutive integers, left to right.

    The eta_1 occurrences of 1 become 1..eta_1 in reading order, the eta_2
    occurrences of 2 become eta_1+1..eta_1+eta_2, and so on.  The result is a
    permutation of [n] whose blockwise projection recovers w.

    >>> standardize((2, 1, 1), Composition((2, 1)))
    (3, 1, 2)
    >>> standardize((4, 2, 3, 2, 3, 1, 4, 1, 4, 1), Composition((3, 2, 2, 3)))
    (8, 4, 6, 5, 7, 1, 9, 2, 10, 3)
    """
    offsets = eta.offsets
    seen = [0] * (eta.r + 1)
    out: list[int] = []
    for a in w:
        seen[a] += 1
        out.append(offsets[a] + seen[a])
    return tuple(out)


def words(eta: Composition) -> Iterator[tuple[int, ...]]:
    """Yield every word over eta exactly once, in lexicographic order.

    >>> list(words(Composition((2, 1))))
    [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    """
    if eta.r == eta.n:
        # All letters distinct: itertools already produces lexicographic order.
        yield from itertools.permutations(range(1, eta.n + 1))
        return
    w = list(eta.trivial_word)
    n = len(w)
    while True:
        yield tuple(w)
        i = n - 2
        while i >= 0 and w[i] >= w[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while w[j] <= w[i]:
            j -= 1
        w[i], w[j] = w[j], w[i]
        w[i + 1:] = reversed(w[i + 1:])


def is_permutation(perm: Sequence[int]) -> bool:
    """True iff perm is a bijection on [n] in one-line notation."""
    n = len(perm)
    return sorted(perm) == list(range(1, n + 1))


def check_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(perm)
    if not is_permutation(perm):
        raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
    return perm


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def inverse(perm: Sequence[int]) -> tuple[int, ...]:
    """One-line form of the inverse permutation.

    >>> inverse((3, 1, 2))
    (2, 3, 1)
    """
    out = [0] * len(perm)
    for i, v in enumerate(perm, start=1):
        out[v - 1] = i
    return tuple(out)
