"""Pure-Python backtracking kernels for EG tableau enumeration.

A shape is passed pre-flattened in reading order (rightmost column first,
each column top to bottom).  ``right[k]`` and ``up[k]`` give the reading
index of the cell east of / north of cell ``k``, or -1.  Both neighbours
are always read before ``k``, so the strictness constraints only ever
look backwards.

When ``target`` is given (one-line form of w, padded so every alphabet
letter is a valid position), a letter i may be appended to the partial
word u only if u s_i is still below w in right weak order, i.e. u(i) <
u(i+1) and the value u(i+1) precedes u(i) in w.  Every prefix of a reduced
word of w passes this test and nothing else does, so complete fillings
are exactly the EG tableaux.  ``target=None`` drops the word condition.
"""

from __future__ import annotations

from collections.abc import Sequence

BACKEND = "python"


def _setup(alphabet, target):
    if target is None:
        return None, None
    size = len(target)
    pos = [0] * (size + 1)
    for idx, value in enumerate(target):
        pos[value] = idx
    if alphabet and alphabet[-1] >= size:
        raise ValueError("alphabet letter exceeds the target's one-line length")
    return list(range(1, size + 1)), pos


def _walk(right, up, alphabet, target, emit):
    n = len(right)
    labels = [0] * n
    u, pos = _setup(alphabet, target)
    check = u is not None

    def rec(k):
        if k == n:
            emit(labels)
            return
        r = right[k]
        a = up[k]
        hi = labels[r] if r >= 0 else None
        lo = labels[a] if a >= 0 else 0
        for letter in alphabet:
            if letter <= lo:
                continue
            if hi is not None and letter >= hi:
                break
            if check:
                x = u[letter - 1]
                y = u[letter]
                if x > y or pos[y] > pos[x]:
                    continue
                u[letter - 1] = y
                u[letter] = x
            labels[k] = letter
            rec(k + 1)
            if check:
                u[letter - 1] = x
                u[letter] = y

    rec(0)


def eg_fillings(
    right: Sequence[int],
    up: Sequence[int],
    alphabet: Sequence[int],
    target: Sequence[int] | None,
) -> list[tuple[int, ...]]:
    """Return every admissible filling as a tuple of labels in reading order."""
    out: list[tuple[int, ...]] = []
    _walk(list(right), list(up), list(alphabet), target, lambda lab: out.append(tuple(lab)))
    return out


def eg_count(
    right: Sequence[int],
    up: Sequence[int],
    alphabet: Sequence[int],
    target: Sequence[int] | None,
) -> int:
    count = 0

    def bump(_):
        nonlocal count
        count += 1

    _walk(list(right), list(up), list(alphabet), target, bump)
    return count


def inversions(oneline: Sequence[int]) -> int:
    n = len(oneline)
    return sum(1 for i in range(n) for j in range(i + 1, n) if oneline[i] > oneline[j])
