"""Permutations of S_infinity and words in the simple transpositions.

Permutations are plain tuples in trimmed one-line form: ``(w(1), ..., w(m))``
with trailing fixed points removed, so the identity is ``()``.  Words are
tuples of letters, letter ``i`` standing for s_i.

Action convention: a word is evaluated left to right, each s_i swapping the
entries in positions i and i+1 of the one-line form built so far.  So
``perm_from_word((1, 2))`` is ``(2, 3, 1)``.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from functools import lru_cache
from itertools import permutations

from ._backend import inversions

Perm = tuple[int, ...]
Word = tuple[int, ...]


def trim(oneline: Iterable[int]) -> Perm:
    """Drop trailing fixed points."""
    entries = list(oneline)
    while entries and entries[-1] == len(entries):
        entries.pop()
    return tuple(entries)


def make_perm(oneline: Iterable[int]) -> Perm:
    """Validate a one-line list and return it in trimmed form.

    Raises:
        ValueError: if the entries are not a bijection of ``{1..m}``.
    """
    entries = tuple(int(v) for v in oneline)
    if sorted(entries) != list(range(1, len(entries) + 1)):
        raise ValueError(f"not a permutation in one-line form: {list(entries)}")
    return trim(entries)


def make_word(letters: Iterable[int]) -> Word:
    word = tuple(int(v) for v in letters)
    if any(v < 1 for v in word):
        raise ValueError(f"letters must be positive: {list(word)}")
    return word


def pad(p: Perm, size: int) -> list[int]:
    """One-line list of ``p`` extended with fixed points to ``size`` entries."""
    return list(p) + list(range(len(p) + 1, size + 1))


def perm_from_word(word: Sequence[int]) -> Perm:
    if not word:
        return ()
    entries = list(range(1, max(word) + 2))
    for i in word:
        entries[i - 1], entries[i] = entries[i], entries[i - 1]
    return trim(entries)


def multiply(p: Perm, q: Perm) -> Perm:
    """Composition ``p q`` as functions (``q`` first); ``perm_from_word``
    is a homomorphism for this product."""
    size = max(len(p), len(q))
    pp, qq = pad(p, size), pad(q, size)
    return trim(pp[qq[i] - 1] for i in range(size))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def coxeter_length(p: Perm) -> int:
    return int(inversions(p))


def is_reduced(word: Sequence[int]) -> bool:
    return len(word) == coxeter_length(perm_from_word(word))


def descents(p: Perm) -> list[int]:
    """Right descents: positions i with p(i) > p(i+1)."""
    return [i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1]]


@lru_cache(maxsize=None)
def _reduced_words(p: Perm) -> frozenset[Word]:
    if not p:
        return frozenset({()})
    out = set()
    for i in descents(p):
        q = list(p)
        q[i - 1], q[i] = q[i], q[i - 1]
        for word in _reduced_words(trim(q)):
            out.add(word + (i,))
    return frozenset(out)


def reduced_words(p: Perm) -> list[Word]:
    """All reduced words of ``p``, sorted lexicographically.

    Built by peeling a final descent: every reduced word ends in some
    letter i with p(i) > p(i+1), and removing it leaves a reduced word of
    p s_i.
    """
    return sorted(_reduced_words(tuple(p)))


def reduced_word(p: Perm) -> Word:
    """One reduced word of ``p``, found by bubble sort rather than enumerating Red(p)."""
    entries = list(p)
    word: list[int] = []
    # bubble sort records s_i on the right; reversing gives a reduced word
    changed = True
    while changed:
        changed = False
        for i in range(len(entries) - 1):
            if entries[i] > entries[i + 1]:
                entries[i], entries[i + 1] = entries[i + 1], entries[i]
                word.append(i + 1)
                changed = True
                break
    return tuple(reversed(word))


def support(p: Perm) -> frozenset[int]:
    """Letters of any reduced word of ``p``.

    Computed directly: i is in the support iff p does not map ``{1..i}``
    onto itself.
    """
    out = set()
    running_max = 0
    for i, v in enumerate(p[:-1], start=1):
        running_max = max(running_max, v)
        if running_max > i:
            out.add(i)
    return frozenset(out)


def tits_neighbors(word: Sequence[int]) -> list[Word]:
    """Words one commutation or braid move away from a reduced ``word``."""
    word = tuple(word)
    if not is_reduced(word):
        raise ValueError(f"not a reduced word: {list(word)}")
    out = set()
    for j in range(len(word) - 1):
        a, b = word[j], word[j + 1]
        if abs(a - b) >= 2:
            out.add(word[:j] + (b, a) + word[j + 2 :])
    for j in range(len(word) - 2):
        a, b, c = word[j : j + 3]
        if a == c and abs(a - b) == 1:
            out.add(word[:j] + (b, a, b) + word[j + 3 :])
    return sorted(out)


def tits_component(word: Sequence[int]) -> set[Word]:
    """All reduced words reachable from ``word`` by Tits moves."""
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    while queue:
        for nxt in tits_neighbors(queue.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def is_totally_commutative(p: Perm) -> bool:
    supp = sorted(support(p))
    if len(supp) != coxeter_length(p):
        return False
    return all(b - a >= 2 for a, b in zip(supp, supp[1:]))


def is_totally_commutative_direct(p: Perm) -> bool:
    """Definition check: some reduced word has all letters pairwise >= 2 apart."""
    return any(
        all(abs(a - b) >= 2 for j, a in enumerate(w) for b in w[j + 1 :])
        for w in reduced_words(p)
    )


def support_blocks(letters: Iterable[int]) -> list[tuple[int, int]]:
    """Maximal runs of consecutive integers, as inclusive ``(lo, hi)`` pairs."""
    blocks: list[tuple[int, int]] = []
    for v in sorted(letters):
        if blocks and v == blocks[-1][1] + 1:
            blocks[-1] = (blocks[-1][0], v)
        else:
            blocks.append((v, v))
    return blocks


def normalize(p: Perm) -> Perm:
    """Canonical representative: support blocks slid together so that the
    least support letter is 1 and consecutive blocks are one letter apart.

    A block of letters ``lo..hi`` moves positions ``lo..hi+1`` only, so
    blocks act on disjoint position ranges and can be translated freely.
    """
    entries: list[int] = []
    start = 1
    for lo, hi in support_blocks(support(p)):
        shift = start - lo
        while len(entries) < start - 1:
            entries.append(len(entries) + 1)
        entries.extend(p[i - 1] + shift for i in range(lo, hi + 2))
        start = hi + shift + 2
    return trim(entries)


def words_bfs(n: int, max_letter: int) -> set[Perm]:
    """All permutations of length ``n`` having a reduced word over letters
    ``1..max_letter``, via level-by-level right multiplication."""
    level = {()}
    for _ in range(n):
        nxt = set()
        for p in level:
            entries = pad(p, max_letter + 1)
            for i in range(1, max_letter + 1):
                if entries[i - 1] < entries[i]:
                    q = entries.copy()
                    q[i - 1], q[i] = q[i], q[i - 1]
                    nxt.add(trim(q))
        level = nxt
    return level


def enumerate_length_n(n: int) -> list[Perm]:
    """Canonical representatives of all permutations of Coxeter length ``n``,
    sorted by one-line form."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n == 0:
        return [()]
    return sorted({normalize(p) for p in words_bfs(n, 2 * n - 1)})


def involutions(n: int) -> int:
    """Number of involutions in S_n, by I(n) = I(n-1) + (n-1) I(n-2)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev, cur = 1, 1
    for m in range(2, n + 1):
        prev, cur = cur, cur + (m - 1) * prev
    return cur


def involutions_bruteforce(n: int) -> int:
    return sum(
        1 for p in permutations(range(n)) if all(p[p[i]] == i for i in range(n))
    )
