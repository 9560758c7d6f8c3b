"""Displacement classes and the block structure of unit interval parking
functions.

A parking function with every displacement <= l is called l-interval; the
l = 1 words have a rigid structure: the sorted word b satisfies
b_i in {i-1, i}, it splits into blocks before each b_i = i > 1, and the
word is a shuffle of those blocks.  The block index word s (which block
each entry belongs to) is a surjection [n] -> [m] and determines the word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Word, format_word, park, sorted_rearrangement
from .errors import (
    InvolutionFixedPoint,
    NotParkingFunction,
    NotTwoInterval,
    NotUnitInterval,
)


def max_displacement(prefs: Sequence[int]) -> int:
    """Largest single-car displacement; raises NotParkingFunction on overflow."""
    out = park(prefs)
    if out is None:
        raise NotParkingFunction(f"{tuple(prefs)} is not a parking function")
    return out.max_disp


def is_ell_interval(prefs: Sequence[int], ell: int) -> bool:
    """True iff prefs is a parking function with every displacement <= ell."""
    out = park(prefs)
    return out is not None and out.max_disp <= ell


@dataclass(frozen=True)
class BlockStructure:
    """Block decomposition of a unit interval parking function.

    block_word is the sorted word; block_sizes its maximal-run lengths;
    surjection[i-1] is the index of the block containing entry i of the
    original word.
    """

    block_word: Word
    block_sizes: Word
    surjection: Word

    @property
    def m(self) -> int:
        return len(self.block_sizes)

    def block_text(self) -> str:
        """Text form with "|" between blocks, e.g. "1,1,2|4|5,5|7|8"."""
        parts = []
        pos = 0
        for size in self.block_sizes:
            parts.append(format_word(self.block_word[pos : pos + size]))
            pos += size
        return "|".join(parts)


def _block_sizes_of_sorted(sorted_word: Sequence[int]) -> Word | None:
    """Maximal-run sizes if sorted_word is a block word, else None."""
    sizes: list[int] = []
    for i, b in enumerate(sorted_word, start=1):
        if b == i:
            sizes.append(1)
        elif b == i - 1 and sizes:
            sizes[-1] += 1
        else:
            return None
    return tuple(sizes)


def _value_to_block(block_sizes: Sequence[int]) -> dict[int, int]:
    """Map from entry value to 1-based block index.

    The block starting at position p with size L holds values p..p+L-2
    (just p when L = 1).
    """
    lookup: dict[int, int] = {}
    start = 1
    for j, size in enumerate(block_sizes, start=1):
        for v in range(start, start + max(size - 1, 1)):
            lookup[v] = j
        start += size
    return lookup


def is_block_shuffle(word: Sequence[int]) -> bool:
    """True iff word is a shuffle of the blocks of its sorted word.

    Equivalent to membership in the unit interval class: the sorted word
    must be a block word and each block's entries must appear in weakly
    increasing order in the word.
    """
    sorted_word = sorted_rearrangement(word)
    sizes = _block_sizes_of_sorted(sorted_word)
    if sizes is None:
        return False
    lookup = _value_to_block(sizes)
    last_seen = [0] * (len(sizes) + 1)
    for x in word:
        j = lookup[x]
        if x < last_seen[j]:
            return False
        last_seen[j] = x
    return True


def block_structure(prefs: Sequence[int]) -> BlockStructure:
    """Block decomposition of a unit interval parking function.

    Raises NotUnitInterval if some displacement exceeds 1.
    """
    sorted_word = sorted_rearrangement(prefs)
    sizes = _block_sizes_of_sorted(sorted_word)
    if sizes is None or not is_block_shuffle(prefs):
        raise NotUnitInterval(f"{tuple(prefs)} is not a unit interval parking function")
    lookup = _value_to_block(sizes)
    surjection = tuple(lookup[x] for x in prefs)
    return BlockStructure(block_word=sorted_word, block_sizes=sizes, surjection=surjection)


def upf_from_surjection(surjection: Sequence[int]) -> Word:
    """The unique unit interval parking function with the given block index
    word (inverse of block_structure).surjection.

    The word must use every value 1..m at least once.
    """
    n = len(surjection)
    m = max(surjection) if surjection else 0
    sizes = [0] * (m + 1)
    for j in surjection:
        if not 1 <= j <= m:
            raise ValueError(f"block index {j} outside [1, {m}]")
        sizes[j] += 1
    if 0 in sizes[1:]:
        raise ValueError("block index word is not surjective")
    starts = [0] * (m + 1)
    pos = 1
    for j in range(1, m + 1):
        starts[j] = pos
        pos += sizes[j]
    # the c-th entry of a block starting at value p is p + max(c-2, 0)
    seen = [0] * (m + 1)
    word = [0] * n
    for i, j in enumerate(surjection):
        seen[j] += 1
        word[i] = starts[j] + max(seen[j] - 2, 0)
    return tuple(word)


def spots_from_surjection(surjection: Sequence[int]) -> Word:
    """Spot permutation of the unit interval parking function with this block
    index word: the c-th arrival in a block takes its c-th spot."""
    m = max(surjection) if surjection else 0
    sizes = [0] * (m + 1)
    for j in surjection:
        sizes[j] += 1
    starts = [0] * (m + 1)
    pos = 1
    for j in range(1, m + 1):
        starts[j] = pos
        pos += sizes[j]
    seen = [0] * (m + 1)
    spots = [0] * len(surjection)
    for i, j in enumerate(surjection):
        spots[i] = starts[j] + seen[j]
        seen[j] += 1
    return tuple(spots)


@dataclass(frozen=True)
class RSMarkers:
    """Marker positions inside a unit interval parking function.

    r_positions: positions holding the second entry of a block j > 1 that
    occurs after the last entry of block j-1.  s_positions: positions
    holding a third-or-later entry of a block.  The two sets are disjoint.
    """

    word: Word
    r_positions: frozenset[int]
    s_positions: frozenset[int]

    @property
    def r_values(self) -> frozenset[int]:
        """Entry values at the r positions (the value-set view)."""
        return frozenset(self.word[i - 1] for i in self.r_positions)


def marker_sets(prefs: Sequence[int]) -> RSMarkers:
    """Compute the R/S marker positions of a unit interval parking function."""
    structure = block_structure(prefs)
    m = structure.m
    positions: list[list[int]] = [[] for _ in range(m + 1)]
    for i, j in enumerate(structure.surjection, start=1):
        positions[j].append(i)
    r_set = set()
    s_set = set()
    for j in range(1, m + 1):
        block_pos = positions[j]
        if len(block_pos) >= 2 and j > 1 and block_pos[1] > positions[j - 1][-1]:
            r_set.add(block_pos[1])
        s_set.update(block_pos[2:])
    return RSMarkers(
        word=tuple(prefs),
        r_positions=frozenset(r_set),
        s_positions=frozenset(s_set),
    )


def unit_projection(prefs: Sequence[int]) -> Word:
    """Collapse a 2-interval parking function onto the unit interval class
    by raising each twice-displaced preference by one.

    The result has the same spot permutation.  Raises NotTwoInterval if some
    displacement exceeds 2.
    """
    out = park(prefs)
    if out is None or out.max_disp > 2:
        raise NotTwoInterval(f"{tuple(prefs)} is not a 2-interval parking function")
    return tuple(a + 1 if d == 2 else a for a, d in zip(prefs, out.disp))


def fiber_preimage(
    prefs: Sequence[int], r_subset: frozenset[int] | set[int], s_subset: frozenset[int] | set[int]
) -> Word:
    """The member of the unit-projection fiber over a unit interval parking
    function selected by marker subsets: entries at chosen positions drop
    by one.

    Each chosen r position adds 1 to displacement and 1 to the inversion
    count; each chosen s position adds 1 to displacement only.
    """
    markers = marker_sets(prefs)
    r_subset = frozenset(r_subset)
    s_subset = frozenset(s_subset)
    if not r_subset <= markers.r_positions:
        raise ValueError(f"{sorted(r_subset)} is not a subset of the r markers")
    if not s_subset <= markers.s_positions:
        raise ValueError(f"{sorted(s_subset)} is not a subset of the s markers")
    chosen = r_subset | s_subset
    return tuple(a - 1 if i in chosen else a for i, a in enumerate(prefs, start=1))


def upf_involution(prefs: Sequence[int]) -> Word:
    """Fixed-point-free involution on unit interval parking functions other
    than the decreasing permutation.

    Let k be the least block index such that either (i) block k has size
    >= 2, or (ii) block k is a singleton occurring before every entry of
    block k+1.  Under (i) the later of the two occurrences of the block's
    least value j is bumped to j+1 (splitting off a singleton); under (ii)
    the first occurrence of j+1 drops to j (merging two blocks).  Total
    displacement changes by exactly 1 and the inversion count is unchanged.
    """
    structure = block_structure(prefs)
    n = len(prefs)
    if tuple(prefs) == tuple(range(n, 0, -1)):
        raise InvolutionFixedPoint("undefined on the decreasing permutation")
    m = structure.m
    positions: list[list[int]] = [[] for _ in range(m + 1)]
    for i, j in enumerate(structure.surjection, start=1):
        positions[j].append(i)
    starts = [0] * (m + 1)
    pos = 1
    for j in range(1, m + 1):
        starts[j] = pos
        pos += structure.block_sizes[j - 1]
    word = list(prefs)
    for k in range(1, m + 1):
        if structure.block_sizes[k - 1] >= 2:
            # rule (i): bump the second occurrence of the doubled least value
            second = positions[k][1]
            word[second - 1] += 1
            return tuple(word)
        if k < m and positions[k][0] < positions[k + 1][0]:
            # rule (ii): drop the first entry of block k+1 by one
            first_next = positions[k + 1][0]
            word[first_next - 1] -= 1
            return tuple(word)
    raise AssertionError("no applicable block despite word != decreasing permutation")
