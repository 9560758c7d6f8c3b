"""Cipher encodings of unit interval parking functions and Lehmer codes.

A word w over [m] is encoded blockwise: block i collects, for each position
j with w_j = i, the number of strictly smaller letters to the right of j.
Applied to the block index word of a unit interval parking function this
gives its cipher, an ordered list of nonempty multisets whose entry sum is
the inversion number.  Dropping the block separators leaves a Lehmer code,
namely that of the spot permutation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .classify import block_structure, upf_from_surjection
from .core import Word
from .enumeration import gen_lehmer, gen_surjections
from .poly import QTPoly
from .stats import inv_count


@dataclass(frozen=True)
class Cipher:
    """Ordered list of nonempty multisets of nonnegative integers, each
    stored weakly decreasing; entries of block i never exceed the total
    size of the earlier blocks."""

    blocks: tuple[Word, ...]

    def __post_init__(self) -> None:
        before = 0
        for i, block in enumerate(self.blocks, start=1):
            if not block:
                raise ValueError(f"block {i} is empty")
            if any(block[j] < block[j + 1] for j in range(len(block) - 1)):
                raise ValueError(f"block {i} is not weakly decreasing")
            if block[0] > before or block[-1] < 0:
                raise ValueError(f"block {i} entry outside [0, {before}]")
            before += len(block)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def k(self) -> int:
        """Total of all entries (the inversion number of the encoded word)."""
        return sum(sum(b) for b in self.blocks)

    def type(self) -> Word:
        return tuple(len(b) for b in self.blocks)

    def code(self) -> Word:
        """The underlying code: concatenation with the bars removed."""
        return tuple(x for block in self.blocks for x in block)

    def to_text(self) -> str:
        """Text form, e.g. "0 0|1 1 0|3 1 1"."""
        return "|".join(" ".join(str(x) for x in block) for block in self.blocks)

    @classmethod
    def from_text(cls, text: str) -> "Cipher":
        blocks = tuple(
            tuple(int(x) for x in part.split()) for part in text.split("|")
        )
        return cls(blocks=blocks)


def avalos_bly(word: Sequence[int], m: int | None = None) -> tuple[Word, ...]:
    """Blockwise right-inversion encoding of a word over [m].

    Block i is the weakly decreasing multiset of right-inversion counts of
    the positions holding letter i; blocks may be empty when a letter is
    unused, so the result is not necessarily a Cipher.
    """
    if m is None:
        m = max(word) if word else 0
    blocks: list[list[int]] = [[] for _ in range(m)]
    n = len(word)
    for j, letter in enumerate(word):
        if not 1 <= letter <= m:
            raise ValueError(f"letter {letter} outside [1, {m}]")
        smaller_right = sum(1 for x in word[j + 1 : n] if x < letter)
        blocks[letter - 1].append(smaller_right)
    return tuple(tuple(sorted(b, reverse=True)) for b in blocks)


def avalos_bly_inverse(blocks: Sequence[Sequence[int]]) -> Word:
    """Rebuild the word from its blockwise encoding.

    Letters are inserted by increasing value; a letter with count x goes
    immediately left of the last x strictly smaller letters.
    """
    word: list[int] = []
    placed = 0
    for i, block in enumerate(blocks, start=1):
        for x in block:
            if not 0 <= x <= placed:
                raise ValueError(f"entry {x} of block {i} outside [0, {placed}]")
        # insertion gaps are counted in letters of the current word, all of
        # which are strictly smaller than i
        for x in sorted(block, reverse=True):
            word.insert(len(word) - x, i)
        placed += len(block)
    return tuple(word)


def cipher_of(prefs: Sequence[int]) -> Cipher:
    """Cipher of a unit interval parking function: the blockwise encoding of
    its block index word."""
    structure = block_structure(prefs)
    return Cipher(blocks=avalos_bly(structure.surjection, structure.m))


def upf_of_cipher(cipher: Cipher) -> Word:
    """The unit interval parking function a cipher encodes."""
    return upf_from_surjection(avalos_bly_inverse(cipher.blocks))


def lehmer_to_perm(code: Sequence[int]) -> Word:
    """Permutation built by inserting 1, 2, ..., n successively, placing
    each i to the left of code[i-1] letters.

    Requires code[i-1] <= i-1; the entry sum is the inversion number of the
    result.
    """
    word: list[int] = []
    for i, x in enumerate(code, start=1):
        if not 0 <= x <= i - 1:
            raise ValueError(f"entry {x} at position {i} outside [0, {i - 1}]")
        word.insert(len(word) - x, i)
    return tuple(word)


def perm_to_lehmer(perm: Sequence[int]) -> Word:
    """Inverse of lehmer_to_perm: entry i counts the smaller letters to the
    right of i in the permutation."""
    n = len(perm)
    position = [0] * (n + 1)
    for idx, v in enumerate(perm):
        position[v] = idx
    code = [0] * n
    for v in range(1, n + 1):
        p = position[v]
        code[v - 1] = sum(1 for idx in range(p + 1, n) if perm[idx] < v)
    return tuple(code)


def underlying_code(prefs: Sequence[int]) -> Word:
    """Bar-free cipher of a unit interval parking function; equals the
    Lehmer code of its spot permutation."""
    return cipher_of(prefs).code()


# -- inversion counting ---------------------------------------------------------


def _words_with_inversions_upto(n: int, limit: int) -> dict[int, int]:
    """Counts of unit interval parking functions of length n by inversion
    number, for inversion numbers <= limit.

    Works composition by composition: inversions of the word equal those of
    its block index word, so each composition contributes the multiset
    permutations of its sorted index word, explored by breadth-first
    adjacent transpositions that add one inversion at a time.
    """
    counts = {k: 0 for k in range(limit + 1)}
    for sizes in _all_compositions(n):
        sorted_word = tuple(
            j for j, size in enumerate(sizes, start=1) for _ in range(size)
        )
        level = {sorted_word}
        counts[0] += 1
        for k in range(1, limit + 1):
            nxt = set()
            for w in level:
                for i in range(n - 1):
                    if w[i] < w[i + 1]:
                        nxt.add(w[:i] + (w[i + 1], w[i]) + w[i + 2 :])
            counts[k] += len(nxt)
            level = nxt
            if not level:
                break
    return counts


def _all_compositions(n: int) -> Iterator[tuple[int, ...]]:
    for cuts in range(n):
        for positions in itertools.combinations(range(1, n), cuts):
            bounds = (0, *positions, n)
            yield tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))


def upf_inv_count(n: int, k: int, method: str = "auto") -> int:
    """Number of unit interval parking functions of length n with exactly k
    inversions.

    method "closed" uses the stars-and-bars cipher formulas (k in {1,2,3});
    "brute" enumerates; "auto" prefers the closed form where available.
    """
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if method == "auto":
        method = "closed" if k in (1, 2, 3) and n >= k + 1 else "brute"
    if method == "closed":
        if k == 1 and n >= 2:
            return 2 ** (n - 2) * (n - 1)
        if k == 2 and n >= 3:
            return 2 ** (n - 4) * (n - 2) * (n + 5) if n >= 4 else (n - 2) * (n + 5) // 2
        if k == 3 and n >= 3:
            # 2^(n-4) * (n^3/6 + 2n^2 - 25n/6 - 8), an integer for all n >= 3
            numerator = n**3 + 12 * n**2 - 25 * n - 48
            return (2 ** (n - 4) * numerator // 6) if n >= 4 else numerator // 12
        raise ValueError(f"no closed form for k={k}, n={n}")
    if method != "brute":
        raise ValueError(f"unknown method {method!r}")
    if k > n * (n - 1) // 2:
        return 0
    return _words_with_inversions_upto(n, k)[k]


def upf_inv_distribution(n: int) -> dict[int, int]:
    """Full inversion distribution over unit interval parking functions,
    by exhaustive enumeration of block index words."""
    dist: dict[int, int] = {}
    for s_word in gen_surjections(n):
        inv = inv_count(s_word)
        dist[inv] = dist.get(inv, 0) + 1
    return dist


def bar_insertion_count(n: int, k: int) -> int:
    """Count ciphers by choosing a code word with entry sum k and inserting
    bars: mandatory at ascents, optional elsewhere, 2^(n-1-asc) ways."""
    total = 0
    for w in gen_lehmer(n, k):
        asc = sum(1 for i in range(n - 1) if w[i] < w[i + 1])
        total += 2 ** (n - 1 - asc)
    return total


# -- unit Fubini rankings and Boolean intervals ---------------------------------


def sparse_subsets(values: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Subsets of a sorted integer sequence with no two consecutive values."""
    values = tuple(values)

    def descend(idx: int, current: list[int]) -> Iterator[tuple[int, ...]]:
        if idx == len(values):
            yield tuple(current)
            return
        yield from descend(idx + 1, current)
        if not current or values[idx] > current[-1] + 1:
            current.append(values[idx])
            yield from descend(idx + 1, current)
            current.pop()

    return descend(0, [])


def ascending_run_lengths(word: Sequence[int]) -> Word:
    """Lengths of the maximal strictly increasing runs."""
    if not word:
        return ()
    runs = [1]
    for i in range(len(word) - 1):
        if word[i] < word[i + 1]:
            runs[-1] += 1
        else:
            runs.append(1)
    return tuple(runs)


@lru_cache(maxsize=None)
def fib_poly(n: int) -> QTPoly:
    """Sparse-subset generating polynomial of [n-1] by size, in q.

    Satisfies F_n = F_{n-1} + q F_{n-2} with F_0 = F_1 = 1; at q = 1 these
    are the Fibonacci numbers 1, 1, 2, 3, 5, ...
    """
    if n < 0:
        raise ValueError("negative index")
    if n <= 1:
        return QTPoly.const(1)
    return fib_poly(n - 1) + QTPoly.q() * fib_poly(n - 2)


def boolean_rank_poly(sigma: Sequence[int]) -> QTPoly:
    """Generating polynomial, by rank, of the Boolean intervals in right
    weak order with bottom element sigma: sparse subsets of the ascent set
    graded by size."""
    ascents = sorted(
        i + 1 for i in range(len(sigma) - 1) if sigma[i] < sigma[i + 1]
    )
    counts: dict[int, int] = {}
    for subset in sparse_subsets(ascents):
        counts[len(subset)] = counts.get(len(subset), 0) + 1
    return QTPoly({(r, 0): c for r, c in counts.items()})


@dataclass(frozen=True)
class UfrTables:
    """The two (rank, inversions) tables of the unit Fubini correspondence.

    ranking_counts[(r, k)] counts unit Fubini rankings of length n with
    n - r blocks and k inversions; interval_counts[(r, k)] counts rank-r
    Boolean intervals in right weak order whose bottom has k inversions.
    """

    n: int
    ranking_counts: dict[tuple[int, int], int]
    interval_counts: dict[tuple[int, int], int]

    @property
    def equal(self) -> bool:
        return self.ranking_counts == self.interval_counts


def ufr_boolean_tables(n: int) -> UfrTables:
    """Build both tables of the unit Fubini / Boolean interval bijection."""
    rankings: dict[tuple[int, int], int] = {}
    for s_word in gen_surjections(n):
        m = max(s_word)
        sizes = [0] * (m + 1)
        for j in s_word:
            sizes[j] += 1
        if any(size > 2 for size in sizes[1:]):
            continue
        key = (n - m, inv_count(s_word))
        rankings[key] = rankings.get(key, 0) + 1
    intervals: dict[tuple[int, int], int] = {}
    for sigma in itertools.permutations(range(1, n + 1)):
        inv = inv_count(sigma)
        for (r, _), count in boolean_rank_poly(sigma).terms().items():
            key = (r, inv)
            intervals[key] = intervals.get(key, 0) + count
    return UfrTables(n=n, ranking_counts=rankings, interval_counts=intervals)


def growth_ratio_table(n_max: int, k_max: int) -> list[dict]:
    """Report rows for the conjectured growth rate of inversion counts:
    the ratio of the count to 2^(n-2k) * n^k.  Report only, no assertion."""
    rows = []
    for n in range(2, n_max + 1):
        for k in range(1, min(k_max, n * (n - 1) // 2) + 1):
            count = upf_inv_count(n, k, method="auto" if k <= 3 else "brute")
            bound = 2.0 ** (n - 2 * k) * n**k
            rows.append({"n": n, "k": k, "count": count, "ratio": count / bound})
    return rows
