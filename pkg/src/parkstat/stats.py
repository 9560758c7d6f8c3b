"""Word statistics: inversions, descents, ascents, major index, content."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Word, park
from .errors import NotParkingFunction, NotUnitInterval


@dataclass(frozen=True)
class StatRecord:
    """All standard statistics of a word, computed in one pass."""

    inv: int
    inv_pairs: tuple[tuple[int, int], ...]
    des: int
    des_set: frozenset[int]
    asc: int
    asc_set: frozenset[int]
    maj: int
    content: Word  # multiplicity of each value 1..max(word)
    ones: int


def inv_count(word: Sequence[int]) -> int:
    """Number of pairs i < j with w_i > w_j, by merge counting.

    >>> inv_count((6, 4, 1, 1, 6, 2, 4))
    10
    """
    a = list(word)
    total = 0
    width = 1
    n = len(a)
    while width < n:
        out = []
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j = lo, mid
            while i < mid and j < hi:
                if a[i] <= a[j]:
                    out.append(a[i])
                    i += 1
                else:
                    # a[i..mid) all exceed a[j]
                    total += mid - i
                    out.append(a[j])
                    j += 1
            out.extend(a[i:mid])
            out.extend(a[j:hi])
        a = out
        width *= 2
    return total


def inv_pairs(word: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """The inversion set as 1-based index pairs (i, j), i < j, w_i > w_j."""
    n = len(word)
    return tuple(
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if word[i] > word[j]
    )


def descent_set(word: Sequence[int]) -> frozenset[int]:
    """Positions i with w_i > w_{i+1} (1-based)."""
    return frozenset(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def ascent_set(word: Sequence[int]) -> frozenset[int]:
    """Positions i with w_i < w_{i+1} (1-based)."""
    return frozenset(i + 1 for i in range(len(word) - 1) if word[i] < word[i + 1])


def maj(word: Sequence[int]) -> int:
    """Major index: the sum of the descent positions."""
    return sum(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def content_vector(word: Sequence[int]) -> Word:
    """Multiplicities of 1..max(word); empty for the empty word."""
    if not word:
        return ()
    counts = [0] * max(word)
    for x in word:
        counts[x - 1] += 1
    return tuple(counts)


def statistics(word: Sequence[int]) -> StatRecord:
    """Full statistic record; materializes the inversion pair set."""
    pairs = inv_pairs(word)
    des = descent_set(word)
    asc = ascent_set(word)
    return StatRecord(
        inv=len(pairs),
        inv_pairs=pairs,
        des=len(des),
        des_set=des,
        asc=len(asc),
        asc_set=asc,
        maj=sum(des),
        content=content_vector(word),
        ones=sum(1 for x in word if x == 1),
    )


def inv_from_spots(prefs: Sequence[int]) -> int:
    """Inversions of a unit interval parking function via its spot permutation.

    For such words the inversion sets of the word and of its spot
    permutation coincide, so this equals inv_count(prefs).
    """
    out = park(prefs)
    if out is None:
        raise NotParkingFunction(f"{prefs} is not a parking function")
    if out.max_disp > 1:
        raise NotUnitInterval(f"{prefs} has maximum displacement {out.max_disp}")
    return inv_count(out.spot_perm)


def left_run_lengths(word: Sequence[int]) -> list[int]:
    """For each position i, the length of the longest contiguous run ending
    at i whose entries are all <= w_i.

    Computed with a monotonic stack of strictly-greater positions.
    """
    runs = []
    stack: list[int] = []  # indices of strictly decreasing values
    for i, x in enumerate(word):
        while stack and word[stack[-1]] <= x:
            stack.pop()
        start = stack[-1] + 1 if stack else 0
        runs.append(i - start + 1)
        stack.append(i)
    return runs
