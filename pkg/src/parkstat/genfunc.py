"""Generating polynomials for parking functions graded by displacement.

Two different t-statistics appear: formulas derived through car-permutation
fibers grade by inversions of the car permutation ("car_inv"), while the
unit-interval and 2-interval reductions grade by inversions of the word
itself ("word_inv"), and the major-index variants by "word_maj".  The
t_stat arguments make the choice explicit.

The formula path sums over the symmetric group; class_polynomial is the
independent reference path that enumerates the class itself.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial
from typing import Sequence

from .classify import marker_sets, upf_from_surjection
from .core import park
from .enumeration import gen_parking_functions, gen_surjections
from .poly import ONE, QTPoly, q_int
from .stats import inv_count, left_run_lengths, maj

T_STATS = ("car_inv", "word_inv", "word_maj")


def pref_choices(ell: int, i: int, sigma: Sequence[int]) -> int:
    """Number of admissible preferences for the car parking in spot i.

    Given the car permutation sigma of an ell-interval parking function,
    the car in spot i may have preferred any of the last min(ell + 1, r)
    spots of the maximal run ending at i with entries <= sigma_i.
    """
    if not 1 <= i <= len(sigma):
        raise ValueError(f"spot {i} outside [1, {len(sigma)}]")
    run = left_run_lengths(sigma)[i - 1]
    return min(ell + 1, run)


def fiber_q_polynomial(sigma: Sequence[int], ell: int) -> QTPoly:
    """Displacement enumerator of the car-permutation fiber of sigma inside
    the ell-interval class: the product of [min(ell+1, run_i)]_q."""
    result = ONE
    for run in left_run_lengths(sigma):
        result = result * q_int(min(ell + 1, run))
    return result


@lru_cache(maxsize=None)
def phi(n: int, ell: int) -> QTPoly:
    """Joint enumerator of the ell-interval class by total displacement (q)
    and inversions of the car permutation (t), summed over car fibers.

    The per-permutation factor is the product of window q-integers over all
    n spots (every spot constrains a preference, whatever ell is).
    """
    if n < 1 or not 0 <= ell <= n - 1:
        raise ValueError(f"ell must lie in [0, {n - 1}]")
    total = QTPoly()
    for sigma in itertools.permutations(range(1, n + 1)):
        term = fiber_q_polynomial(sigma, ell)
        total = total + term * QTPoly.monomial(0, inv_count(sigma))
    return total


@lru_cache(maxsize=None)
def phi_upf(n: int) -> QTPoly:
    """Unit-interval enumerator: sum over permutations of
    (1+q)^asc(sigma) * t^inv(sigma).  Equals phi(n, 1)."""
    one_plus_q = QTPoly({(0, 0): 1, (1, 0): 1})
    powers = [one_plus_q**k for k in range(n)]
    terms: dict[tuple[int, int], int] = {}
    for sigma in itertools.permutations(range(1, n + 1)):
        asc = sum(1 for i in range(n - 1) if sigma[i] < sigma[i + 1])
        b = inv_count(sigma)
        for (a, _), c in powers[asc].terms().items():
            key = (a, b)
            terms[key] = terms.get(key, 0) + c
    return QTPoly(terms)


@lru_cache(maxsize=None)
def phi_two(n: int) -> QTPoly:
    """2-interval enumerator by displacement and word inversions, reduced to
    a sum over unit interval parking functions weighted by their marker
    sets: q^disp * t^inv * (1+q)^|S| * (1+qt)^|R|."""
    one_plus_q = QTPoly({(0, 0): 1, (1, 0): 1})
    one_plus_qt = QTPoly({(0, 0): 1, (1, 1): 1})
    total = QTPoly()
    binom_n1 = n * (n + 1) // 2
    for s_word in gen_surjections(n):
        beta = upf_from_surjection(s_word)
        disp = binom_n1 - sum(beta)
        markers = marker_sets(beta)
        weight = (
            one_plus_q ** len(markers.s_positions)
            * one_plus_qt ** len(markers.r_positions)
            * QTPoly.monomial(disp, inv_count(s_word))
        )
        total = total + weight
    return total


@lru_cache(maxsize=None)
def _pf_disp_stat_poly(n: int, t_stat: str, shift_ones: bool = False) -> QTPoly:
    """Sum of q^disp * t^stat over all parking functions of length n;
    with shift_ones, the t-exponent drops by the number of 1 entries."""
    total: dict[tuple[int, int], int] = {}
    for prefs in gen_parking_functions(n):
        out = park(prefs)
        stat = inv_count(prefs) if t_stat == "word_inv" else maj(prefs)
        if shift_ones:
            stat -= sum(1 for a in prefs if a == 1)
        key = (out.total_disp, stat)
        total[key] = total.get(key, 0) + 1
    return QTPoly(total)


def phi_n_minus_two(n: int, t_stat: str = "word_inv") -> QTPoly:
    """(n-2)-interval enumerator by displacement and a word statistic,
    computed as the full parking enumerator minus the contribution of the
    words whose last car is displaced n-1.

    That contribution is (qt)^(n-1) times the length n-1 enumerator with
    the t-exponent reduced by the count of 1 entries.
    """
    if n < 2:
        raise ValueError("needs n >= 2")
    if t_stat not in ("word_inv", "word_maj"):
        raise ValueError(f"unsupported t_stat {t_stat!r}")
    full = _pf_disp_stat_poly(n, t_stat)
    shifted = _pf_disp_stat_poly(n - 1, t_stat, shift_ones=True)
    return full - QTPoly.monomial(n - 1, n - 1) * shifted


def maj_variant(n: int, ell: int) -> QTPoly:
    """Major-index analogues of the displacement enumerators, supported for
    ell in {1, 2, n-2}."""
    if ell == 1:
        one_plus_q = QTPoly({(0, 0): 1, (1, 0): 1})
        powers = [one_plus_q**k for k in range(n)]
        terms: dict[tuple[int, int], int] = {}
        for sigma in itertools.permutations(range(1, n + 1)):
            asc = sum(1 for i in range(n - 1) if sigma[i] < sigma[i + 1])
            inverse = [0] * n
            for i, v in enumerate(sigma):
                inverse[v - 1] = i + 1
            b = maj(inverse)
            for (a, _), c in powers[asc].terms().items():
                key = (a, b)
                terms[key] = terms.get(key, 0) + c
        return QTPoly(terms)
    if ell == 2:
        one_plus_q = QTPoly({(0, 0): 1, (1, 0): 1})
        one_plus_qt = QTPoly({(0, 0): 1, (1, 1): 1})
        total = QTPoly()
        binom_n1 = n * (n + 1) // 2
        for s_word in gen_surjections(n):
            beta = upf_from_surjection(s_word)
            disp = binom_n1 - sum(beta)
            markers = marker_sets(beta)
            weight = (
                one_plus_q ** len(markers.s_positions)
                * one_plus_qt ** len(markers.r_positions)
                * QTPoly.monomial(disp, maj(beta))
            )
            total = total + weight
        return total
    if ell == n - 2:
        return phi_n_minus_two(n, t_stat="word_maj")
    raise ValueError(f"unsupported ell {ell} (need 1, 2, or n-2)")


# -- reference path: enumerate the class itself --------------------------------


@lru_cache(maxsize=None)
def _class_polys_by_maxdisp(n: int, t_stat: str) -> tuple[QTPoly, ...]:
    """Entry ell: sum of q^disp t^stat over parking functions with maximum
    displacement exactly ell.  One enumeration pass serves every class."""
    if t_stat not in T_STATS:
        raise ValueError(f"unknown t_stat {t_stat!r}")
    buckets: list[dict[tuple[int, int], int]] = [dict() for _ in range(n)]
    for prefs in gen_parking_functions(n):
        out = park(prefs)
        if t_stat == "car_inv":
            stat = inv_count(out.spot_perm)
        elif t_stat == "word_inv":
            stat = inv_count(prefs)
        else:
            stat = maj(prefs)
        bucket = buckets[out.max_disp]
        key = (out.total_disp, stat)
        bucket[key] = bucket.get(key, 0) + 1
    return tuple(QTPoly(b) for b in buckets)


def class_polynomial(n: int, ell: int, t_stat: str) -> QTPoly:
    """Brute-force sum of q^disp * t^stat over the ell-interval class.

    t_stat is one of "car_inv" (inversions of the car permutation),
    "word_inv", "word_maj".  Reference oracle for the formula paths.
    """
    if not 0 <= ell <= n - 1:
        raise ValueError(f"ell must lie in [0, {n - 1}]")
    per_class = _class_polys_by_maxdisp(n, t_stat)
    total = QTPoly()
    for piece in per_class[: ell + 1]:
        total = total + piece
    return total


# -- counting identities --------------------------------------------------------


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind by the standard recurrence."""
    if n < 0 or k < 0:
        raise ValueError("negative argument")
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    row = [1]
    for size in range(1, n + 1):
        new = [0] * (size + 1)
        for j in range(1, size + 1):
            low = row[j - 1] if j - 1 < len(row) else 0
            same = row[j] if j < len(row) else 0
            new[j] = low + j * same
        row = new
    return row[k]


def displacement_spectrum(n: int) -> QTPoly:
    """Unit-interval displacement enumerator at t = 1: equals
    sum_k k! * S(n, k) * q^(n-k)."""
    return QTPoly({(n - k, 0): factorial(k) * stirling2(n, k) for k in range(1, n + 1)})


def lah_count(n: int) -> int:
    """Number of unit interval parking functions with total displacement 1,
    read off as the q^1 coefficient of the displacement spectrum."""
    if n < 2:
        return 0
    spectrum = phi_upf(n).subs_t(1)
    return spectrum.coefficient(1, 0)
