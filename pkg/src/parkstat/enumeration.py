"""Exhaustive generators and counting engines.

Generators yield tuples in deterministic order (lexicographic unless noted)
and are restartable: each call returns a fresh iterator.  Counting by
maximum displacement is available both by brute force (simulate every
parking function) and through car-permutation fibers (a product formula
per permutation), which extends the census to n = 9 quickly.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

from .core import Word, park
from .stats import left_run_lengths

BRUTE_CEILING = 8
FIBER_CEILING = 10


@dataclass(frozen=True)
class CensusRow:
    """Counts of parking functions of length n by exact maximum displacement."""

    n: int
    counts_by_maxdisp: tuple[int, ...]

    def cumulative(self, ell: int) -> int:
        """Number of parking functions with maximum displacement <= ell."""
        return sum(self.counts_by_maxdisp[: ell + 1])

    def peak(self) -> int:
        """Index of the first maximal entry."""
        return max(
            range(len(self.counts_by_maxdisp)), key=lambda i: (self.counts_by_maxdisp[i], -i)
        )

    def is_unimodal(self) -> bool:
        counts = self.counts_by_maxdisp
        c = self.peak()
        rising = all(counts[i] <= counts[i + 1] for i in range(c))
        falling = all(counts[i] >= counts[i + 1] for i in range(c, len(counts) - 1))
        return rising and falling


def gen_parking_functions(n: int) -> Iterator[Word]:
    """All parking functions of length n in lexicographic order.

    Prefix pruning: a partial word with k entries extends to a parking
    function iff #{entries <= v} + (n - k) >= v for every v.
    """
    if n < 1:
        raise ValueError("length must be >= 1")
    return _gen_pf_with_prefix(n, ())


def gen_ipf(n: int, ell: int) -> Iterator[Word]:
    """Parking functions of length n with maximum displacement <= ell,
    in lexicographic order."""
    if not 0 <= ell <= n - 1:
        raise ValueError(f"ell must lie in [0, {n - 1}]")
    for prefs in gen_parking_functions(n):
        out = park(prefs)
        if out is not None and out.max_disp <= ell:
            yield prefs


def gen_upf(n: int) -> Iterator[Word]:
    """Unit interval parking functions of length n, lexicographic order."""
    return gen_ipf(n, min(1, n - 1))


def gen_increasing_pf(n: int) -> Iterator[Word]:
    """Weakly increasing parking functions (a_i <= i), lexicographic order.

    There are Catalan(n) of them.
    """
    if n < 1:
        raise ValueError("length must be >= 1")
    word = [0] * n

    def descend(depth: int, lo: int) -> Iterator[Word]:
        if depth == n:
            yield tuple(word)
            return
        for a in range(lo, depth + 2):
            word[depth] = a
            yield from descend(depth + 1, a)

    return descend(0, 1)


def gen_lehmer(n: int, k: int | None = None) -> Iterator[Word]:
    """Words w of length n with 0 <= w_i <= i-1, optionally with sum k,
    in lexicographic order.  There are n! in total."""
    if n < 1:
        raise ValueError("length must be >= 1")
    ceilings = [i for i in range(n)]
    max_tail = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        max_tail[i] = max_tail[i + 1] + ceilings[i]
    word = [0] * n

    def descend(depth: int, remaining: int | None) -> Iterator[Word]:
        if depth == n:
            if remaining in (None, 0):
                yield tuple(word)
            return
        for w in range(ceilings[depth] + 1):
            if remaining is not None:
                rest = remaining - w
                if rest < 0 or rest > max_tail[depth + 1]:
                    continue
            else:
                rest = None
            word[depth] = w
            yield from descend(depth + 1, rest)

    return descend(0, k)


def gen_surjections(n: int) -> Iterator[Word]:
    """All surjection words [n] -> [m] over every m in [1, n].

    Each word is the block index word of a unique unit interval parking
    function.  Enumeration runs over set partitions in restricted-growth
    form crossed with orderings of their classes; there are Fubini(n) words.
    """
    if n < 1:
        raise ValueError("length must be >= 1")
    for rgs in _restricted_growth_strings(n):
        m = max(rgs) + 1
        for order in itertools.permutations(range(1, m + 1)):
            yield tuple(order[c] for c in rgs)


def _restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Set partitions of [n] encoded as restricted growth strings."""
    rgs = [0] * n

    def descend(depth: int, peak: int) -> Iterator[tuple[int, ...]]:
        if depth == n:
            yield tuple(rgs)
            return
        for c in range(peak + 2):
            rgs[depth] = c
            yield from descend(depth + 1, max(peak, c))

    return descend(0, -1)


def fubini(n: int) -> int:
    """Number of ordered set partitions of [n] (and of unit interval
    parking functions of length n)."""
    row = [1]
    for size in range(1, n + 1):
        row.append(sum(comb(size, k) * row[size - k] for k in range(1, size + 1)))
    return row[n]


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# -- census by maximum displacement -------------------------------------------


def _gen_pf_with_prefix(n: int, prefix: tuple[int, ...]) -> Iterator[Word]:
    """Parking functions of length n extending a fixed prefix (lex order)."""
    word = list(prefix) + [0] * (n - len(prefix))
    counts = [0] * (n + 1)
    for a in prefix:
        counts[a] += 1

    def feasible(depth: int) -> bool:
        seen = 0
        slack = n - depth
        for v in range(1, n + 1):
            seen += counts[v]
            if seen + slack < v:
                return False
        return True

    def descend(depth: int) -> Iterator[Word]:
        if depth == n:
            yield tuple(word)
            return
        for a in range(1, n + 1):
            word[depth] = a
            counts[a] += 1
            if feasible(depth + 1):
                yield from descend(depth + 1)
            counts[a] -= 1

    if not feasible(len(prefix)):
        return iter(())
    return descend(len(prefix))


def _maxdisp_counter_brute(n: int, first: int | None = None) -> Counter:
    """Counter of exact maximum displacement over parking functions,
    optionally restricted to first entry a_1 = first (for sharding)."""
    counter: Counter = Counter()
    words = gen_parking_functions(n) if first is None else _gen_pf_with_prefix(n, (first,))
    for prefs in words:
        out = park(prefs)
        if out is not None:
            counter[out.max_disp] += 1
    return counter


def _brute_shard(args: tuple[int, int]) -> Counter:
    n, first = args
    return _maxdisp_counter_brute(n, first)


def _run_profiles(n: int, first: int | None = None) -> Counter:
    """Multiset of left-run-length profiles over S_n (sorted tuples),
    optionally restricted to permutations starting with `first`."""
    profiles: Counter = Counter()
    values = list(range(1, n + 1))
    if first is None:
        perms = itertools.permutations(values)
    else:
        rest = [v for v in values if v != first]
        perms = ((first, *tail) for tail in itertools.permutations(rest))
    for sigma in perms:
        profiles[tuple(sorted(left_run_lengths(sigma)))] += 1
    return profiles


def _fiber_shard(args: tuple[int, int]) -> Counter:
    n, first = args
    return _run_profiles(n, first)


def _census_from_profiles(n: int, profiles: Counter) -> CensusRow:
    """Turn run-length profiles into exact-maxdisp counts.

    Within the fiber of a car permutation, the number of words with maximum
    displacement <= ell is the product of min(ell + 1, run) over the runs.
    """
    cumulative = [0] * n
    for profile, mult in profiles.items():
        for ell in range(n):
            prod = 1
            for run in profile:
                prod *= run if run <= ell + 1 else ell + 1
            cumulative[ell] += mult * prod
    counts = [cumulative[0]]
    counts.extend(cumulative[ell] - cumulative[ell - 1] for ell in range(1, n))
    return CensusRow(n=n, counts_by_maxdisp=tuple(counts))


def census_by_brute(n: int, jobs: int = 1) -> CensusRow:
    """Census by simulating every parking function of length n."""
    if jobs > 1 and n >= 4:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            shards = pool.map(_brute_shard, [(n, first) for first in range(1, n + 1)])
            counter: Counter = Counter()
            for shard in shards:
                counter.update(shard)
    else:
        counter = _maxdisp_counter_brute(n)
    return CensusRow(
        n=n, counts_by_maxdisp=tuple(counter.get(ell, 0) for ell in range(n))
    )


def census_by_fibers(n: int, jobs: int = 1) -> CensusRow:
    """Census through car-permutation fibers (no word enumeration)."""
    if jobs > 1 and n >= 5:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            shards = pool.map(_fiber_shard, [(n, first) for first in range(1, n + 1)])
            profiles: Counter = Counter()
            for shard in shards:
                profiles.update(shard)
    else:
        profiles = _run_profiles(n)
    return _census_from_profiles(n, profiles)


@lru_cache(maxsize=None)
def _census_cached(n: int, method: str) -> CensusRow:
    if method == "brute":
        return census_by_brute(n)
    return census_by_fibers(n)


def census(n: int, method: str = "auto", jobs: int = 1) -> CensusRow:
    """Counts of length-n parking functions by exact maximum displacement.

    method: "brute", "fibers", or "auto" (brute for n <= 6, fibers above).
    """
    if n < 1:
        raise ValueError("length must be >= 1")
    if method == "auto":
        method = "brute" if n <= 6 else "fibers"
    if method not in ("brute", "fibers"):
        raise ValueError(f"unknown census method {method!r}")
    if jobs > 1:
        builder = census_by_brute if method == "brute" else census_by_fibers
        return builder(n, jobs=jobs)
    return _census_cached(n, method)


def ipf_count_by_fibers(n: int, ell: int) -> int:
    """|IPF_n(ell)| as a sum over car permutations of per-spot window sizes."""
    if not 0 <= ell <= n - 1:
        raise ValueError(f"ell must lie in [0, {n - 1}]")
    total = 0
    for sigma in itertools.permutations(range(1, n + 1)):
        prod = 1
        for run in left_run_lengths(sigma):
            prod *= run if run <= ell + 1 else ell + 1
        total += prod
    return total
