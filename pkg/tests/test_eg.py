from itertools import product

import pytest

from egstat.eg import (
    EGTableau,
    eg_coefficients,
    eg_count,
    eg_statistic,
    enumerate_eg,
    is_eg_tableau,
    is_lambda_maximal,
    reading_word,
    staircase_witness,
    syt_to_eg,
)
from egstat.perm import (
    coxeter_length,
    enumerate_length_n,
    involutions,
    is_totally_commutative,
    perm_from_word,
    support,
)
from egstat.tableaux import enumerate_syt, hook_count, partitions_of, standardize, tableau


def _word_perm(word):
    entries = list(range(1, 16))
    for i in word:
        entries[i - 1], entries[i] = entries[i], entries[i - 1]
    while entries and entries[-1] == len(entries):
        entries.pop()
    return tuple(entries)


def _inv(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def eg_oracle(shape, w):
    """Every filling of the shape by support letters, filtered by the definition:
    strict rows and columns, column-wise reading word reduced for w."""
    n = sum(shape)
    if n != _inv(w):
        return []
    letters = sorted(support(w))
    cells = [(x, y) for x, r in enumerate(shape) for y in range(r)]
    ncols = shape[0] if shape else 0
    read = [(x, y) for y in reversed(range(ncols)) for x in range(len(shape)) if shape[x] > y]
    out = []
    for labels in product(letters, repeat=n):
        f = dict(zip(cells, labels))
        if any(f[(x, y)] >= f[(x, y + 1)] for x, y in cells if (x, y + 1) in f):
            continue
        if any(f[(x, y)] >= f[(x + 1, y)] for x, y in cells if (x + 1, y) in f):
            continue
        word = tuple(f[c] for c in read)
        if _word_perm(word) == tuple(w):
            out.append(tuple(tuple(f[(x, y)] for y in range(r)) for x, r in enumerate(shape)))
    return sorted(out)


FIG2_S = tableau((1, 2, 5, 7), (2, 5, 7), (4,), (8,))
FIG2_T = tableau((1, 3, 5, 7), (3, 5, 7), (5,), (8,))


def test_reading_word_examples():
    assert reading_word(FIG2_S) == (7, 5, 7, 2, 5, 1, 2, 4, 8)
    assert reading_word(tableau((1, 3))) == (3, 1)
    assert reading_word(tableau((1,), (3,))) == (1, 3)
    assert reading_word(tableau()) == ()


def test_is_eg_tableau_examples():
    assert is_eg_tableau(tableau((1, 2), (2,)), (3, 2, 1))
    assert is_eg_tableau(tableau((1, 2)), perm_from_word((2, 1)))
    for w in [perm_from_word(reading_word(FIG2_S)), perm_from_word(reading_word(FIG2_T)), (3, 2, 1)]:
        assert not is_eg_tableau(FIG2_S, w)
        assert not is_eg_tableau(FIG2_T, w)
    assert not is_eg_tableau(tableau((1, 2), (2,)), (2, 3, 1))


def test_enumerate_eg_examples():
    assert enumerate_eg((2, 1), (3, 2, 1)) == [EGTableau(((1, 2), (2,)), (3, 2, 1))]
    assert enumerate_eg((3,), (3, 2, 1)) == []
    assert [t.rows for t in enumerate_eg((1,), (2, 1))] == [((1,),)]
    assert enumerate_eg((2,), (3, 2, 1)) == []
    assert [t.rows for t in enumerate_eg((), ())] == [()]


def test_eg_count_examples():
    assert eg_count((2, 1), (3, 2, 1)) == 1
    assert eg_count((1, 1, 1), (3, 2, 1)) == 0
    assert eg_count((2,), (2, 1, 4, 3)) == 1


def test_eg_statistic_examples():
    assert eg_statistic(()) == 1
    assert eg_statistic((3, 2, 1)) == 1
    assert eg_statistic((2, 1, 4, 3)) == 2 == involutions(2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumerate_eg_matches_brute_force(n):
    for w in enumerate_length_n(n):
        for shape in partitions_of(n):
            assert [t.rows for t in enumerate_eg(shape, w)] == eg_oracle(shape, w)


@pytest.mark.parametrize("word", [(5, 9), (2, 3, 2, 6), (4, 3, 5, 4, 3), (1, 3, 2, 4, 3)])
def test_enumerate_eg_non_canonical(word):
    w = perm_from_word(word)
    for shape in partitions_of(len(word)):
        assert [t.rows for t in enumerate_eg(shape, w)] == eg_oracle(shape, w)


def test_every_enumerated_tableau_is_eg():
    for n in range(0, 6):
        for w in enumerate_length_n(n):
            for shape in partitions_of(n):
                tabs = enumerate_eg(shape, w)
                assert len(tabs) == eg_count(shape, w)
                assert len(set(tabs)) == len(tabs)
                for t in tabs:
                    assert is_eg_tableau(t, w)
                    assert t.perm == w


def test_size_mismatch_gives_nothing():
    assert enumerate_eg((2, 1), (2, 1)) == []
    assert eg_count((1,), (3, 2, 1)) == 0


@pytest.mark.parametrize(
    "w, shape, maximal",
    [((2, 1, 4, 3), (2,), True), ((3, 2, 1), (2, 1), False), ((), (), True), ((2, 1), (1, 1), False)],
)
def test_is_lambda_maximal(w, shape, maximal):
    assert is_lambda_maximal(w, shape) is maximal


def test_staircase_witness():
    assert staircase_witness(1) == (2, 1)
    assert staircase_witness(2) == (2, 1, 4, 3)
    assert staircase_witness(3) == (2, 1, 4, 3, 6, 5)
    with pytest.raises(ValueError):
        staircase_witness(0)


def test_syt_to_eg_examples():
    w2 = staircase_witness(2)
    t = syt_to_eg(tableau((1, 2)), 2)
    assert t.rows == ((1, 3),) and is_eg_tableau(t, w2)
    assert syt_to_eg(tableau((1,), (2,)), 2).rows == ((1,), (3,))
    assert syt_to_eg(tableau((1,)), 1).rows == ((1,),)
    with pytest.raises(ValueError):
        syt_to_eg(tableau((1, 2)), 3)


def test_staircase_bijection():
    for n in range(1, 8):
        w = staircase_witness(n)
        for shape in partitions_of(n):
            image = sorted(syt_to_eg(u, n).rows for u in enumerate_syt(shape))
            assert image == [t.rows for t in enumerate_eg(shape, w)]
        assert eg_statistic(w) == involutions(n)


def test_std_injective_on_eg():
    for n in range(1, 6):
        for w in enumerate_length_n(n):
            for shape in partitions_of(n):
                tabs = enumerate_eg(shape, w)
                images = {standardize(t) for t in tabs}
                assert len(images) == len(tabs) <= hook_count(shape)


def test_totally_commutative_is_maximal_everywhere():
    for n in range(1, 7):
        for w in enumerate_length_n(n):
            if is_totally_commutative(w):
                assert all(a == hook_count(s) for s, a in eg_coefficients(w).items())


def test_short_support_never_maximal():
    for n in range(1, 6):
        for w in enumerate_length_n(n):
            if len(support(w)) < coxeter_length(w):
                assert not any(is_lambda_maximal(w, s) for s in partitions_of(n))


def test_eg_tableau_json():
    t = enumerate_eg((2, 1), (3, 2, 1))[0]
    data = t.to_dict()
    assert data == {"shape": [2, 1], "rows": [[1, 2], [2]], "reading_word": [2, 1, 2], "perm": [3, 2, 1]}
    assert EGTableau.from_dict(data) == t
    with pytest.raises(ValueError):
        EGTableau.from_dict({**data, "reading_word": [1, 2, 1]})


def test_fault_mode_admits_figure2_pair():
    tabs = enumerate_eg((4, 3, 1, 1), (), alphabet=range(1, 9), check_word=False)
    rows = {t.rows for t in tabs}
    assert FIG2_S.rows in rows and FIG2_T.rows in rows
    assert len(tabs) == 11102
