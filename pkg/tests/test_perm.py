from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from egstat.perm import (
    coxeter_length,
    enumerate_length_n,
    involutions,
    involutions_bruteforce,
    is_reduced,
    is_totally_commutative,
    is_totally_commutative_direct,
    make_perm,
    multiply,
    normalize,
    perm_from_word,
    reduced_word,
    reduced_words,
    support,
    tits_component,
    tits_neighbors,
    trim,
)

words = st.lists(st.integers(min_value=1, max_value=6), max_size=9).map(tuple)


def swaps_oracle(word):
    """Evaluate a word by literal position swaps on a long enough list."""
    entries = list(range(1, 12))
    for i in word:
        entries[i - 1], entries[i] = entries[i], entries[i - 1]
    return trim(entries)


def inversions_oracle(p):
    return sum(1 for i, j in product(range(len(p)), repeat=2) if i < j and p[i] > p[j])


def red_oracle(p):
    """Brute force: every word of length l(p) over letters 1..m-1."""
    n = inversions_oracle(p)
    letters = range(1, max(len(p), 1))
    return sorted(w for w in product(letters, repeat=n) if swaps_oracle(w) == p)


def canonical_oracle(n):
    """Brute force over S_{2n}: every permutation of length n, normalized."""
    m = 2 * n
    return sorted({normalize(trim(p)) for p in permutations(range(1, m + 1)) if inversions_oracle(p) == n})


@pytest.mark.parametrize(
    "word, expected",
    [((), ()), ((1, 2, 1), (3, 2, 1)), ((1, 3), (2, 1, 4, 3)), ((1, 2), (2, 3, 1))],
)
def test_perm_from_word(word, expected):
    assert perm_from_word(word) == expected


@pytest.mark.parametrize("p, n", [((), 0), ((2, 1), 1), ((3, 2, 1), 3)])
def test_coxeter_length(p, n):
    assert coxeter_length(p) == n


@pytest.mark.parametrize("word, ok", [((), True), ((1, 2, 1), True), ((7, 5, 7), False), ((1, 1), False)])
def test_is_reduced(word, ok):
    assert is_reduced(word) is ok


def test_reduced_words_examples():
    assert reduced_words(()) == [()]
    assert reduced_words((3, 2, 1)) == [(1, 2, 1), (2, 1, 2)]
    assert reduced_words((2, 1, 4, 3)) == [(1, 3), (3, 1)]


@pytest.mark.parametrize("p", [(3, 2, 1), (2, 1, 4, 3), (3, 1, 4, 2), (4, 3, 2, 1), (2, 4, 1, 3), (3, 4, 1, 2), (2, 5, 1, 4, 3)])
def test_reduced_words_match_brute_force(p):
    assert reduced_words(p) == red_oracle(p)


def test_support_examples():
    assert support(()) == frozenset()
    assert support((3, 2, 1)) == {1, 2}
    assert support((2, 1, 4, 3)) == {1, 3}


def test_tits_neighbors_examples():
    assert tits_neighbors((1,)) == []
    assert tits_neighbors((1, 3)) == [(3, 1)]
    assert tits_neighbors((1, 2, 1)) == [(2, 1, 2)]
    with pytest.raises(ValueError):
        tits_neighbors((7, 5, 7))


def test_totally_commutative_examples():
    assert is_totally_commutative(())
    assert is_totally_commutative((2, 1, 4, 3))
    assert not is_totally_commutative((3, 2, 1))


def test_enumerate_length_n_small():
    assert enumerate_length_n(0) == [()]
    assert enumerate_length_n(1) == [(2, 1)]
    expected = sorted({normalize(perm_from_word(w)) for w in [(1, 2), (2, 1), (1, 3)]})
    assert enumerate_length_n(2) == expected
    assert len(expected) == 3


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumerate_length_n_matches_symmetric_group_scan(n):
    assert enumerate_length_n(n) == canonical_oracle(n)


def test_enumerate_length_n_is_canonical():
    for n in range(1, 6):
        for p in enumerate_length_n(n):
            supp = sorted(support(p))
            assert coxeter_length(p) == n
            assert supp[0] == 1 and supp[-1] <= 2 * n - 1
            assert all(b - a <= 2 for a, b in zip(supp, supp[1:]))


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 10), (5, 26), (6, 76), (7, 232), (8, 764)])
def test_involutions(n, count):
    assert involutions(n) == count


def test_involutions_recurrence_matches_enumeration():
    for n in range(0, 9):
        assert involutions(n) == involutions_bruteforce(n)


def test_make_perm_rejects_non_bijection():
    assert make_perm([2, 1, 3]) == (2, 1)
    with pytest.raises(ValueError):
        make_perm([1, 1])
    with pytest.raises(ValueError):
        make_perm([2, 3])


def test_normalize_compresses_gaps():
    assert normalize(perm_from_word((5, 9))) == (2, 1, 4, 3)
    assert normalize(perm_from_word((4, 5, 4, 8))) == perm_from_word((1, 2, 1, 4))


# properties over the canonical sets


@pytest.fixture(scope="module")
def perms_up_to_6():
    return [p for n in range(0, 7) for p in enumerate_length_n(n)]


def test_support_well_defined(perms_up_to_6):
    for p in perms_up_to_6:
        sets = {frozenset(w) for w in reduced_words(p)}
        assert sets == {support(p)}


def test_tits_graph_connected():
    for n in range(0, 6):
        for p in enumerate_length_n(n):
            red = set(reduced_words(p))
            assert tits_component(min(red)) == red


def test_tits_moves_stay_in_red():
    for p in enumerate_length_n(4):
        red = set(reduced_words(p))
        for w in red:
            assert set(tits_neighbors(w)) <= red


def test_order_lemma(perms_up_to_6):
    def before(word, a, b):
        return all(i < j for i, x in enumerate(word) if x == a for j, y in enumerate(word) if y == b)

    for p in perms_up_to_6:
        red = reduced_words(p)
        for a in support(p):
            for b in (a - 1, a + 1):
                if b in support(p):
                    assert len({before(w, a, b) for w in red}) == 1


def test_totally_commutative_shortcut_matches_definition(perms_up_to_6):
    for p in perms_up_to_6:
        assert is_totally_commutative(p) == is_totally_commutative_direct(p)


@given(words)
def test_perm_from_word_matches_swaps(word):
    assert perm_from_word(word) == swaps_oracle(word)


@given(words)
def test_length_bounded_by_word(word):
    n = coxeter_length(perm_from_word(word))
    assert n <= len(word)
    assert (n == len(word)) == is_reduced(word)


@given(words, words)
def test_word_product_is_homomorphism(u, v):
    assert perm_from_word(u + v) == multiply(perm_from_word(u), perm_from_word(v))


@settings(max_examples=60)
@given(words)
def test_reduced_word_round_trip(word):
    p = perm_from_word(word)
    w = reduced_word(p)
    assert perm_from_word(w) == p and is_reduced(w)
    assert w in reduced_words(p)


@settings(max_examples=60)
@given(words)
def test_normalize_preserves_length_and_structure(word):
    p = perm_from_word(word)
    q = normalize(p)
    assert coxeter_length(q) == coxeter_length(p)
    assert len(reduced_words(q)) == len(reduced_words(p))
    assert is_totally_commutative(q) == is_totally_commutative(p)
