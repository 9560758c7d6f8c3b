import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parkstat.classify import marker_sets, upf_from_surjection
from parkstat.core import park
from parkstat.enumeration import gen_parking_functions, gen_surjections
from parkstat.foata import (
    equidist_check,
    foata,
    foata_inverse,
    foata_preserves_class,
    foata_trace,
    foata_tracked,
    partial_foata,
)
from parkstat.stats import ascent_set, inv_count, maj


def test_foata_goldens():
    assert foata((3, 4, 4, 1, 1)) == (1, 3, 4, 4, 1)
    assert foata((1, 1, 1, 1, 4, 3)) == (4, 1, 1, 1, 1, 3)
    assert foata((5,)) == (5,)
    assert foata(()) == ()


def test_foata_inverse_golden():
    assert foata_inverse((1, 3, 4, 4, 1)) == (3, 4, 4, 1, 1)


def test_trace_records_steps():
    trace = foata_trace((3, 4, 4, 1, 1))
    assert trace.output == (1, 3, 4, 4, 1)
    assert len(trace.steps) == 4
    last = trace.steps[-1]
    assert last.letter == 1
    assert last.separators == (4,)
    assert last.segments == ((3, 4, 4, 1),)
    assert last.cycled == (1, 3, 4, 4)


def test_roundtrip_all_small_words():
    for n, alphabet in ((3, 3), (4, 4)):
        for word in itertools.product(range(1, alphabet + 1), repeat=n):
            image = foata(word)
            assert sorted(image) == sorted(word)
            assert inv_count(image) == maj(word)
            assert foata_inverse(image) == word
            assert foata(foata_inverse(word)) == word


def test_sorted_words_are_fixed():
    for n in range(1, 7):
        for word in itertools.combinations_with_replacement(range(1, n + 1), n):
            assert foata(word) == word
            assert foata_inverse(word) == word


@given(st.lists(st.integers(1, 5), min_size=1, max_size=10))
@settings(max_examples=300, deadline=None)
def test_roundtrip_random_words(word):
    word = tuple(word)
    assert foata_inverse(foata(word)) == word
    assert inv_count(foata(word)) == maj(word)


@pytest.mark.parametrize("n", range(1, 6))
def test_statistic_transport_on_parking_functions(n):
    for prefs in gen_parking_functions(n):
        image = foata(prefs)
        assert inv_count(image) == maj(prefs)
        assert sorted(image) == sorted(prefs)
        assert park(image) is not None
        assert park(image).total_disp == park(prefs).total_disp


def test_partial_foata():
    word = (3, 4, 4, 1, 1)
    assert partial_foata(word, 1) == word
    assert partial_foata(word, len(word)) == foata(word)
    assert partial_foata(word, 4) == foata(word[:4]) + (1,)
    with pytest.raises(ValueError):
        partial_foata(word, 0)


def test_partial_foata_chain():
    # the last step of the full transform acts on the partial transform
    for word in itertools.product(range(1, 4), repeat=5):
        partial = partial_foata(word, 4)
        assert foata(word) == foata_trace(word).output
        assert foata(word)[-1] == word[-1]
        assert sorted(partial[:4]) == sorted(word[:4])


@pytest.mark.parametrize("n,ell", [(4, 1), (5, 1), (5, 2), (5, 3), (4, 2)])
def test_preserves_small_classes(n, ell):
    result = foata_preserves_class(n, ell)
    assert result.preserved, result.witness


def test_break_at_n6_ell3():
    result = foata_preserves_class(6, 3)
    assert not result.preserved
    witness = result.witness
    assert park(witness).max_disp <= 3 < park(foata(witness)).max_disp


@pytest.mark.parametrize("n", range(3, 7))
def test_complement_class_closed(n):
    # words with a car displaced n-1: last entry 1, head parks on its own
    for prefs in gen_parking_functions(n):
        displaced = park(prefs).max_disp == n - 1
        head = prefs[:-1]
        characterize = (
            prefs[-1] == 1
            and all(a < n for a in head)
            and park(head) is not None
        )
        assert displaced == characterize
        if displaced:
            image = foata(prefs)
            assert image[-1] == 1 and park(image[:-1]) is not None


@pytest.mark.parametrize("n,ell,equal", [(5, 1, True), (5, 2, True), (5, 3, True), (6, 3, False)])
def test_equidist_small(n, ell, equal):
    report = equidist_check(n, ell)
    assert report.equal == equal
    assert sum(report.inv_histogram.values()) == sum(report.maj_histogram.values())
    if not equal:
        assert report.witness is not None


def test_equidist_histogram_totals():
    report = equidist_check(4, 1)
    assert sum(report.inv_histogram.values()) == 75  # |IPF_4(1)| = 24 + 51


def test_marker_preservation_golden():
    word = (3, 4, 4, 1, 1)
    image = foata(word)
    assert image == (1, 3, 4, 4, 1)
    before, after = marker_sets(word), marker_sets(image)
    assert before.r_positions == frozenset({3})
    assert after.r_positions == frozenset({4})
    assert before.r_values == after.r_values == frozenset({4})


@pytest.mark.parametrize("n", range(1, 7))
def test_marker_counts_preserved(n):
    for s_word in gen_surjections(n):
        word = upf_from_surjection(s_word)
        image = foata(word)
        before, after = marker_sets(word), marker_sets(image)
        assert len(before.r_positions) == len(after.r_positions)
        assert len(before.s_positions) == len(after.s_positions)
        assert before.r_values == after.r_values


@pytest.mark.parametrize("n", range(2, 8))
def test_inverse_ascents_preserved(n):
    for sigma in itertools.permutations(range(1, n + 1)):
        image = foata(sigma)
        inv_sigma = [0] * n
        inv_image = [0] * n
        for i, v in enumerate(sigma):
            inv_sigma[v - 1] = i + 1
        for i, v in enumerate(image):
            inv_image[v - 1] = i + 1
        assert len(ascent_set(inv_sigma)) == len(ascent_set(inv_image))


@given(st.lists(st.integers(1, 6), min_size=2, max_size=8), st.data())
@settings(max_examples=300, deadline=None)
def test_adjacent_invariance(word, data):
    word = tuple(word)
    n = len(word)
    j = data.draw(st.integers(0, n - 1))
    k = data.draw(st.integers(0, n - 1))
    if word[j] > word[k]:
        j, k = k, j
    states = list(foata_tracked(word))
    lo = max(j, k)
    for i in range(lo, n - 1):
        if word[j] <= word[i + 1] <= word[k] - 1:
            continue
        before = states[i]
        after = states[i + 1]
        assert (before.index(j) < before.index(k)) == (
            after.index(j) < after.index(k)
        )
