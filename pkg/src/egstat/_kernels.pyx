# cython: language_level=3
"""Compiled backtracking kernels; same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef struct State:
    int n
    int n_alpha
    int check
    int *right
    int *up
    int *alpha
    int *labels
    int *u
    int *pos


cdef long long _count(State *s, int k):
    cdef long long total = 0
    cdef int lo, hi, j, letter, x, y
    if k == s.n:
        return 1
    lo = s.labels[s.up[k]] if s.up[k] >= 0 else 0
    hi = s.labels[s.right[k]] if s.right[k] >= 0 else 0x7fffffff
    for j in range(s.n_alpha):
        letter = s.alpha[j]
        if letter <= lo:
            continue
        if letter >= hi:
            break
        if s.check:
            x = s.u[letter - 1]
            y = s.u[letter]
            if x > y or s.pos[y] > s.pos[x]:
                continue
            s.u[letter - 1] = y
            s.u[letter] = x
        s.labels[k] = letter
        total += _count(s, k + 1)
        if s.check:
            s.u[letter - 1] = x
            s.u[letter] = y
    return total


cdef int _collect(State *s, int k, list out) except -1:
    cdef int lo, hi, j, letter, x, y, i
    if k == s.n:
        out.append(tuple([s.labels[i] for i in range(s.n)]))
        return 0
    lo = s.labels[s.up[k]] if s.up[k] >= 0 else 0
    hi = s.labels[s.right[k]] if s.right[k] >= 0 else 0x7fffffff
    for j in range(s.n_alpha):
        letter = s.alpha[j]
        if letter <= lo:
            continue
        if letter >= hi:
            break
        if s.check:
            x = s.u[letter - 1]
            y = s.u[letter]
            if x > y or s.pos[y] > s.pos[x]:
                continue
            s.u[letter - 1] = y
            s.u[letter] = x
        s.labels[k] = letter
        _collect(s, k + 1, out)
        if s.check:
            s.u[letter - 1] = x
            s.u[letter] = y
    return 0


cdef int *_ints(seq, int extra=0) except NULL:
    cdef int i, m = len(seq)
    cdef int *buf = <int *> malloc((m + extra + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    for i in range(m):
        buf[i] = seq[i]
    return buf


cdef int _init(State *s, right, up, alphabet, target) except -1:
    cdef int i, size
    s.n = len(right)
    s.n_alpha = len(alphabet)
    s.right = _ints(right)
    s.up = _ints(up)
    s.alpha = _ints(alphabet)
    s.labels = _ints([0] * s.n)
    s.check = target is not None
    if s.check:
        size = len(target)
        if s.n_alpha and alphabet[s.n_alpha - 1] >= size:
            raise ValueError("alphabet letter exceeds the target's one-line length")
        s.u = _ints(list(range(1, size + 1)))
        s.pos = _ints([0] * (size + 1))
        for i in range(size):
            s.pos[target[i]] = i
    return 0


cdef void _release(State *s):
    free(s.right)
    free(s.up)
    free(s.alpha)
    free(s.labels)
    free(s.u)
    free(s.pos)


def eg_fillings(right, up, alphabet, target):
    cdef State s
    cdef list out = []
    s.right = s.up = s.alpha = s.labels = s.u = s.pos = NULL
    try:
        _init(&s, right, up, alphabet, target)
        _collect(&s, 0, out)
    finally:
        _release(&s)
    return out


def eg_count(right, up, alphabet, target):
    cdef State s
    cdef long long total
    s.right = s.up = s.alpha = s.labels = s.u = s.pos = NULL
    try:
        _init(&s, right, up, alphabet, target)
        total = _count(&s, 0)
    finally:
        _release(&s)
    return total


def inversions(oneline):
    cdef int n = len(oneline)
    cdef int i, j
    cdef long long total = 0
    cdef int *buf = _ints(oneline)
    try:
        for i in range(n):
            for j in range(i + 1, n):
                if buf[i] > buf[j]:
                    total += 1
    finally:
        free(buf)
    return total
