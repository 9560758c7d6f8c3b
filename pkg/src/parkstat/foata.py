"""The Foata transform on words and its interaction with displacement classes.

The transform rebuilds a word letter by letter: before appending the next
letter x, the word built so far is split by separators (after every letter
<= x when x is at least the current last letter, after every letter > x
otherwise), each segment is cycled by moving its last letter to the front,
and x is appended.  It preserves content and sends the major index to the
inversion number.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .core import Word, park
from .enumeration import gen_parking_functions
from .stats import inv_count, maj


@dataclass(frozen=True)
class FoataStep:
    """One letter-append step of the transform."""

    letter: int
    separators: tuple[int, ...]  # 1-based positions a separator follows
    segments: tuple[Word, ...]
    cycled: Word


@dataclass(frozen=True)
class FoataTrace:
    input: Word
    steps: tuple[FoataStep, ...]
    output: Word


def _cycle_once(prefix: list, x) -> tuple[tuple[int, ...], list[tuple]]:
    """Apply one step to the working list (entries may carry labels).

    Returns (separator positions, segments) and mutates prefix in place to
    the cycled concatenation.  Comparison uses entry[0] when entries are
    tuples, allowing position tracking through the same code path.
    """
    value = lambda e: e[0] if isinstance(e, tuple) else e
    last = value(prefix[-1])
    if x >= last:
        cut = lambda v: x >= v
    else:
        cut = lambda v: x < v
    separators = []
    segments = []
    start = 0
    for i, entry in enumerate(prefix):
        if cut(value(entry)):
            separators.append(i + 1)
            segments.append(tuple(prefix[start : i + 1]))
            start = i + 1
    out = []
    for seg in segments:
        out.append(seg[-1])
        out.extend(seg[:-1])
    prefix[:] = out
    return tuple(separators), segments


def foata(word: Sequence[int]) -> Word:
    """The Foata transform.

    >>> foata((3, 4, 4, 1, 1))
    (1, 3, 4, 4, 1)
    """
    if len(word) <= 1:
        return tuple(word)
    prefix = [word[0]]
    for x in word[1:]:
        _cycle_once(prefix, x)
        prefix.append(x)
    return tuple(prefix)


def foata_trace(word: Sequence[int]) -> FoataTrace:
    """The transform with per-step separators, segments, and cycled words."""
    steps = []
    if not word:
        return FoataTrace(input=(), steps=(), output=())
    prefix = [word[0]]
    for x in word[1:]:
        separators, segments = _cycle_once(prefix, x)
        steps.append(
            FoataStep(
                letter=x,
                separators=separators,
                segments=tuple(tuple(s) for s in segments),
                cycled=tuple(prefix),
            )
        )
        prefix.append(x)
    return FoataTrace(input=tuple(word), steps=tuple(steps), output=tuple(prefix))


def foata_inverse(word: Sequence[int]) -> Word:
    """Inverse transform, by peeling the last letter and un-cycling.

    After a forward step every segment starts with its pre-cycling last
    letter, and the comparison side of that letter against the appended
    letter identifies the separator rule used, so segments can be recovered
    by splitting before each letter on the matching side.
    """
    letters = list(word)
    suffix: list[int] = []
    while len(letters) > 1:
        x = letters.pop()
        suffix.append(x)
        if letters[0] <= x:
            keep = lambda v: v <= x
        else:
            keep = lambda v: v > x
        rebuilt: list[int] = []
        segment_start = 0
        for i in range(1, len(letters) + 1):
            if i == len(letters) or keep(letters[i]):
                seg = letters[segment_start:i]
                rebuilt.extend(seg[1:])
                rebuilt.append(seg[0])
                segment_start = i
        letters = rebuilt
    return tuple(letters + suffix[::-1])


def partial_foata(word: Sequence[int], i: int) -> Word:
    """Transform the first i letters, leaving the tail unchanged."""
    if not 1 <= i <= len(word):
        raise ValueError(f"index {i} outside [1, {len(word)}]")
    return foata(word[:i]) + tuple(word[i:])


def foata_tracked(word: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield, after each partial transform F_i, the original positions of
    the letters in working order (position tracking through cycling)."""
    if not word:
        return
    prefix: list[tuple[int, int]] = [(word[0], 0)]
    yield (0,)
    for step, x in enumerate(word[1:], start=1):
        _cycle_once(prefix, x)
        prefix.append((x, step))
        yield tuple(orig for _, orig in prefix)


# -- displacement classes under the transform ----------------------------------


@dataclass(frozen=True)
class ClassPreservation:
    preserved: bool
    violations: int
    witness: Word | None


@dataclass(frozen=True)
class EquidistReport:
    """Inversion and major-index histograms over a displacement class."""

    n: int
    ell: int
    inv_histogram: dict[int, int]
    maj_histogram: dict[int, int]
    equal: bool
    witness: int | None  # least statistic value where the histograms differ

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ell": self.ell,
            "inv_histogram": {str(k): v for k, v in sorted(self.inv_histogram.items())},
            "maj_histogram": {str(k): v for k, v in sorted(self.maj_histogram.items())},
            "equal": self.equal,
            "witness": self.witness,
        }


@lru_cache(maxsize=None)
def _class_scan(n: int) -> tuple[tuple[dict, dict, int], ...]:
    """Per exact maximum displacement: (inv histogram, maj histogram, count),
    from one pass over all parking functions of length n."""
    data = [[dict(), dict(), 0] for _ in range(n)]
    for prefs in gen_parking_functions(n):
        out = park(prefs)
        entry = data[out.max_disp]
        iv = inv_count(prefs)
        mj = maj(prefs)
        entry[0][iv] = entry[0].get(iv, 0) + 1
        entry[1][mj] = entry[1].get(mj, 0) + 1
        entry[2] += 1
    return tuple((d[0], d[1], d[2]) for d in data)


@lru_cache(maxsize=None)
def _transform_scan(n: int) -> dict[tuple[int, int], tuple[int, Word]]:
    """Count parking functions by (maxdisp before, maxdisp after transform),
    retaining the first witness of each pair."""
    pairs: dict[tuple[int, int], tuple[int, Word]] = {}
    for prefs in gen_parking_functions(n):
        before = park(prefs).max_disp
        after = park(foata(prefs)).max_disp
        key = (before, after)
        if key in pairs:
            count, witness = pairs[key]
            pairs[key] = (count + 1, witness)
        else:
            pairs[key] = (1, prefs)
    return pairs


def foata_preserves_class(n: int, ell: int) -> ClassPreservation:
    """Does the transform map the ell-interval class into itself?

    Returns the first counterexample otherwise.
    """
    if not 0 <= ell <= n - 1:
        raise ValueError(f"ell must lie in [0, {n - 1}]")
    pairs = _transform_scan(n)
    violations = 0
    witness: Word | None = None
    for (before, after), (count, first) in sorted(pairs.items()):
        if before <= ell < after:
            violations += count
            if witness is None:
                witness = first
    return ClassPreservation(preserved=violations == 0, violations=violations, witness=witness)


def equidist_check(n: int, ell: int) -> EquidistReport:
    """Compare inversion and major-index histograms over the ell-interval
    class of length n."""
    if not 0 <= ell <= n - 1:
        raise ValueError(f"ell must lie in [0, {n - 1}]")
    scan = _class_scan(n)
    inv_hist: dict[int, int] = {}
    maj_hist: dict[int, int] = {}
    for inv_part, maj_part, _ in scan[: ell + 1]:
        for k, v in inv_part.items():
            inv_hist[k] = inv_hist.get(k, 0) + v
        for k, v in maj_part.items():
            maj_hist[k] = maj_hist.get(k, 0) + v
    witness = None
    for k in sorted(set(inv_hist) | set(maj_hist)):
        if inv_hist.get(k, 0) != maj_hist.get(k, 0):
            witness = k
            break
    return EquidistReport(
        n=n,
        ell=ell,
        inv_histogram=inv_hist,
        maj_histogram=maj_hist,
        equal=witness is None,
        witness=witness,
    )
