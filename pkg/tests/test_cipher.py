import itertools
from math import factorial

import pytest

from parkstat.cipher import (
    Cipher,
    ascending_run_lengths,
    avalos_bly,
    avalos_bly_inverse,
    bar_insertion_count,
    boolean_rank_poly,
    cipher_of,
    fib_poly,
    growth_ratio_table,
    lehmer_to_perm,
    perm_to_lehmer,
    sparse_subsets,
    ufr_boolean_tables,
    underlying_code,
    upf_inv_count,
    upf_inv_distribution,
    upf_of_cipher,
)
from parkstat.classify import upf_from_surjection
from parkstat.core import park
from parkstat.enumeration import fubini, gen_lehmer, gen_surjections
from parkstat.errors import NotUnitInterval
from parkstat.poly import QTPoly
from parkstat.stats import content_vector, descent_set, inv_count


def test_cipher_validation():
    Cipher(blocks=((0, 0), (1, 1, 0), (3, 1, 1)))
    with pytest.raises(ValueError):
        Cipher(blocks=((0,), ()))
    with pytest.raises(ValueError):
        Cipher(blocks=((0, 1),))  # not weakly decreasing
    with pytest.raises(ValueError):
        Cipher(blocks=((1,), (0,)))  # first block entry exceeds 0


def test_cipher_text_roundtrip():
    text = "0 0|1 1 0|3 1 1"
    c = Cipher.from_text(text)
    assert c.to_text() == text
    assert c.n == 8 and c.m == 3 and c.k == 7
    assert c.type() == (2, 3, 3)
    assert c.code() == (0, 0, 1, 1, 0, 3, 1, 1)


def test_golden_decodings():
    assert upf_of_cipher(Cipher.from_text("0 0|1 1 0|3 1 1")) == (1, 3, 6, 3, 1, 6, 7, 4)
    assert upf_of_cipher(Cipher.from_text("0 0|1|1 0|3|1 1")) == (1, 3, 6, 4, 1, 7, 7, 4)
    assert cipher_of((1, 3, 6, 3, 1, 6, 7, 4)).to_text() == "0 0|1 1 0|3 1 1"
    assert cipher_of((1, 3, 6, 4, 1, 7, 7, 4)).to_text() == "0 0|1|1 0|3|1 1"


def test_identity_cipher():
    assert cipher_of((1, 2, 3, 4)).to_text() == "0|0|0|0"


def test_avalos_bly_weakly_increasing_words():
    for word in [(1, 1, 2, 3), (1, 2), (2, 2, 2)]:
        blocks = avalos_bly(word)
        assert all(all(x == 0 for x in b) for b in blocks)


def test_avalos_bly_allows_empty_blocks():
    blocks = avalos_bly((2, 2), m=3)
    assert blocks == ((), (0, 0), ())


def test_avalos_bly_roundtrip_all_small_words():
    m, n = 3, 4
    seen = set()
    for word in itertools.product(range(1, m + 1), repeat=n):
        blocks = avalos_bly(word, m)
        assert avalos_bly_inverse(blocks) == word
        assert tuple(len(b) for b in blocks) == tuple(
            word.count(i) for i in range(1, m + 1)
        )
        assert sum(sum(b) for b in blocks) == inv_count(word)
        seen.add(blocks)
    # injectivity onto the full target set
    assert len(seen) == m**n


def test_lehmer_golden():
    perm = lehmer_to_perm((0, 0, 1, 1, 0, 3, 1, 1))
    assert perm == (1, 3, 6, 4, 2, 7, 8, 5)
    inverse = tuple(perm.index(v) + 1 for v in range(1, 9))
    assert inverse == (1, 5, 2, 4, 8, 3, 6, 7)
    assert perm_to_lehmer(perm) == (0, 0, 1, 1, 0, 3, 1, 1)


def test_lehmer_identity():
    assert lehmer_to_perm((0, 0, 0)) == (1, 2, 3)
    with pytest.raises(ValueError):
        lehmer_to_perm((0, 2))


@pytest.mark.parametrize("n", range(1, 6))
def test_lehmer_bijection_statistics(n):
    seen = set()
    for code in gen_lehmer(n):
        perm = lehmer_to_perm(code)
        seen.add(perm)
        assert perm_to_lehmer(perm) == code
        assert sum(code) == inv_count(perm)
        inverse = [0] * n
        for i, v in enumerate(perm):
            inverse[v - 1] = i + 1
        ascents = {i for i in range(1, n) if code[i - 1] < code[i]}
        assert ascents == set(descent_set(inverse))
    assert len(seen) == factorial(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_cipher_roundtrip(n):
    for s_word in gen_surjections(n):
        word = upf_from_surjection(s_word)
        c = cipher_of(word)
        assert upf_of_cipher(c) == word
        assert c.k == inv_count(word)
        assert c.m == max(s_word)


@pytest.mark.parametrize("n", range(1, 7))
def test_underlying_code_is_spot_lehmer(n):
    for s_word in gen_surjections(n):
        word = upf_from_surjection(s_word)
        assert underlying_code(word) == perm_to_lehmer(park(word).spot_perm)


def test_underlying_code_goldens():
    code = (0, 0, 1, 1, 0, 3, 1, 1)
    for word in ((1, 3, 6, 3, 1, 6, 7, 4), (1, 3, 6, 4, 1, 7, 7, 4)):
        assert underlying_code(word) == code
        assert park(word).spot_perm == (1, 3, 6, 4, 2, 7, 8, 5)


def test_underlying_code_rejects():
    with pytest.raises(NotUnitInterval):
        underlying_code((1, 2, 1))


@pytest.mark.parametrize("n", range(2, 8))
def test_closed_forms_match_brute(n):
    dist = upf_inv_distribution(n)
    for k in (1, 2, 3):
        if n >= k + 1:
            assert upf_inv_count(n, k, method="closed") == dist.get(k, 0)
        assert upf_inv_count(n, k, method="brute") == dist.get(k, 0)


def test_closed_form_values():
    assert upf_inv_count(4, 1) == 12
    assert upf_inv_count(5, 2) == 60
    assert upf_inv_count(2, 1) == 1
    assert upf_inv_count(3, 3, method="closed") == 1


def test_inversion_free_count_is_powers_of_two():
    # weakly increasing block words, one per block composition
    for n in range(1, 8):
        assert upf_inv_count(n, 0) == 2 ** (n - 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_distribution_total_is_fubini(n):
    assert sum(upf_inv_distribution(n).values()) == fubini(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_bar_insertion_identity(n):
    dist = upf_inv_distribution(n)
    for k in range(n * (n - 1) // 2 + 1):
        assert bar_insertion_count(n, k) == dist.get(k, 0)


@pytest.mark.parametrize("n", (7, 8))
def test_bar_insertion_identity_large(n):
    # distribution read off the displacement/inversion scan used for sieving
    from parkstat.csp import _upf_inv_and_fixed_scan

    coeffs, _ = _upf_inv_and_fixed_scan(n)
    dist = {}
    for bucket in coeffs.values():
        for inv, count in bucket.items():
            dist[inv] = dist.get(inv, 0) + count
    for k in range(n * (n - 1) // 2 + 1):
        assert bar_insertion_count(n, k) == dist.get(k, 0)


def test_sparse_subsets():
    subsets = set(sparse_subsets((1, 2, 3)))
    assert subsets == {(), (1,), (2,), (3,), (1, 3)}
    assert set(sparse_subsets(())) == {()}


def test_fib_poly_values():
    q = QTPoly.q()
    assert fib_poly(2) == 1 + q
    assert fib_poly(4) == 1 + 3 * q + q * q
    assert [fib_poly(n).evaluate(q=1) for n in range(6)] == [1, 1, 2, 3, 5, 8]


@pytest.mark.parametrize("n", range(8))
def test_fib_poly_counts_sparse_subsets(n):
    expected = {}
    for subset in sparse_subsets(tuple(range(1, n))):
        key = (len(subset), 0)
        expected[key] = expected.get(key, 0) + 1
    assert fib_poly(n) == QTPoly(expected)


def test_ascending_run_lengths():
    assert ascending_run_lengths((1, 3, 2, 4, 5)) == (2, 3)
    assert ascending_run_lengths((3, 2, 1)) == (1, 1, 1)
    assert ascending_run_lengths(()) == ()


@pytest.mark.parametrize("n", range(1, 7))
def test_boolean_rank_poly_factors(n):
    for sigma in itertools.permutations(range(1, n + 1)):
        expected = QTPoly.const(1)
        for run in ascending_run_lengths(sigma):
            expected = expected * fib_poly(run)
        assert boolean_rank_poly(sigma) == expected


def test_ufr_tables_n3():
    tables = ufr_boolean_tables(3)
    assert tables.equal
    assert sum(tables.ranking_counts.values()) == 12
    # rank 0 rows count permutations by inversions
    assert tables.interval_counts[(0, 0)] == 1
    assert tables.interval_counts[(0, 1)] == 2
    assert tables.interval_counts[(0, 3)] == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_ufr_tables_agree(n):
    tables = ufr_boolean_tables(n)
    assert tables.equal
    rank0 = {k: v for (r, k), v in tables.interval_counts.items() if r == 0}
    by_inv = {}
    for sigma in itertools.permutations(range(1, n + 1)):
        by_inv[inv_count(sigma)] = by_inv.get(inv_count(sigma), 0) + 1
    assert rank0 == by_inv


def test_growth_ratio_table_reports():
    rows = growth_ratio_table(6, 3)
    assert all(row["count"] >= 0 and row["ratio"] >= 0 for row in rows)
    lookup = {(r["n"], r["k"]): r["count"] for r in rows}
    assert lookup[(4, 1)] == 12
    assert lookup[(5, 2)] == 60
