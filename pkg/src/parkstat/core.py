"""The parking process on a one-way street with n spots.

A preference word is a tuple (a_1, ..., a_n) of 1-based spot preferences.
Car i drives to spot a_i and takes the first unoccupied spot >= a_i; the
word is a parking function when every car parks.  All public values are
1-based tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]


@dataclass(frozen=True)
class Outcome:
    """Result of a successful parking run.

    spot_perm[i-1] is the spot taken by car i, car_perm[s-1] the car that
    took spot s; the two are mutually inverse permutations.
    """

    spot_perm: Word
    car_perm: Word
    disp: Word
    total_disp: int
    max_disp: int


def _check_word(prefs: Sequence[int]) -> None:
    n = len(prefs)
    for a in prefs:
        if not 1 <= a <= n:
            raise ValueError(f"preference {a} outside [1, {n}]")


def _spot_list(prefs: Sequence[int]) -> list[int] | None:
    """Spots taken by cars 1..n, or None if some car cannot park.

    Uses a path-compressed successor array: nxt[s] points toward the first
    free spot >= s, so a run costs O(n alpha(n)).
    """
    n = len(prefs)
    nxt = list(range(n + 2))
    spots = [0] * n
    for car, a in enumerate(prefs):
        s = a
        while nxt[s] != s:
            s = nxt[s]
        if s > n:
            return None
        # compress the search path
        p = a
        while nxt[p] != s:
            nxt[p], p = s, nxt[p]
        spots[car] = s
        nxt[s] = s + 1
    return spots


def park(prefs: Sequence[int]) -> Outcome | None:
    """Run the parking process; return the Outcome, or None on overflow.

    None (overflow) means some car found no free spot, i.e. prefs is not a
    parking function.  Preferences outside [1, n] raise ValueError.

    >>> park((1, 4, 4, 3, 2, 2)).car_perm
    (1, 5, 4, 2, 3, 6)
    >>> park((2, 2, 2)) is None
    True
    """
    _check_word(prefs)
    spots = _spot_list(prefs)
    if spots is None:
        return None
    n = len(prefs)
    car = [0] * n
    for i, s in enumerate(spots):
        car[s - 1] = i + 1
    disp = tuple(s - a for s, a in zip(spots, prefs))
    return Outcome(
        spot_perm=tuple(spots),
        car_perm=tuple(car),
        disp=disp,
        total_disp=sum(disp),
        max_disp=max(disp) if disp else 0,
    )


def is_parking_function(prefs: Sequence[int]) -> bool:
    """Rearrangement criterion: the sorted word a' satisfies a'_i <= i.

    >>> is_parking_function((1, 1, 2))
    True
    >>> is_parking_function((2, 3, 3))
    False
    """
    _check_word(prefs)
    return all(a <= i for i, a in enumerate(sorted(prefs), start=1))


def sorted_rearrangement(prefs: Sequence[int]) -> Word:
    """The weakly increasing rearrangement of a word."""
    return tuple(sorted(prefs))


def is_permutation(word: Sequence[int]) -> bool:
    """True iff word is a bijection on [1, n] in one-line notation."""
    n = len(word)
    seen = [False] * (n + 1)
    for x in word:
        if not 1 <= x <= n or seen[x]:
            return False
        seen[x] = True
    return True


def invert_permutation(perm: Sequence[int]) -> Word:
    """Inverse of a 1-based permutation in one-line notation."""
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v - 1] = i + 1
    return tuple(inv)


def parse_word(text: str) -> Word:
    """Parse the text form of a word: comma-separated 1-based integers."""
    parts = [p.strip() for p in text.split(",")]
    if parts == [""]:
        raise ValueError("empty word")
    return tuple(int(p) for p in parts)


def format_word(word: Iterable[int]) -> str:
    """Inverse of parse_word, e.g. (1, 4, 4) -> "1,4,4"."""
    return ",".join(str(x) for x in word)
