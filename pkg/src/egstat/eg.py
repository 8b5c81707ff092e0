"""Edelman-Greene tableaux, the coefficients a_{w,shape} and the EG statistic.

An EG tableau of type (shape, w) is a row- and column-strict filling whose
reading word is a reduced word of w.  The reading word goes column by
column from the rightmost column to the leftmost, each column top to
bottom.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from . import _backend
from .perm import (
    Perm,
    Word,
    coxeter_length,
    is_reduced,
    pad,
    perm_from_word,
    support,
)
from .tableaux import (
    Partition,
    Tableau,
    conjugate,
    hook_count,
    is_row_column_strict,
    is_standard,
    make_partition,
    partitions_of,
)


def reading_order(shape: Partition) -> list[tuple[int, int]]:
    cols = conjugate(shape)
    return [(x, y) for y in range(len(cols), 0, -1) for x in range(1, cols[y - 1] + 1)]


def reading_word(t: Tableau) -> Word:
    return tuple(t[cell] for cell in reading_order(t.shape))


@dataclass(frozen=True)
class EGTableau(Tableau):
    perm: Perm = ()

    @property
    def reading_word(self) -> Word:
        return reading_word(self)

    def to_dict(self) -> dict:
        out = super().to_dict()
        out["reading_word"] = list(self.reading_word)
        out["perm"] = list(self.perm)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> EGTableau:
        tab = cls(tuple(tuple(r) for r in data["rows"]), tuple(data.get("perm", ())))
        if "shape" in data and tuple(data["shape"]) != tab.shape:
            raise ValueError("shape does not match rows")
        if "reading_word" in data and tuple(data["reading_word"]) != tab.reading_word:
            raise ValueError("reading_word does not match rows")
        return tab


def is_eg_tableau(t: Tableau, w: Perm) -> bool:
    if not is_row_column_strict(t):
        return False
    word = reading_word(t)
    return is_reduced(word) and perm_from_word(word) == tuple(w)


@lru_cache(maxsize=None)
def _layout(shape: Partition) -> tuple[tuple[int, ...], tuple[int, ...], tuple[tuple[int, int], ...]]:
    order = reading_order(shape)
    index = {cell: k for k, cell in enumerate(order)}
    right = tuple(index.get((x, y + 1), -1) for x, y in order)
    up = tuple(index.get((x - 1, y), -1) for x, y in order)
    return right, up, tuple(order)


def _fill(shape: Partition, labels: Sequence[int], order) -> tuple[tuple[int, ...], ...]:
    rows = [[0] * r for r in shape]
    for (x, y), v in zip(order, labels):
        rows[x - 1][y - 1] = v
    return tuple(tuple(r) for r in rows)


def _kernel_args(shape: Partition, w: Perm, alphabet: Sequence[int] | None, check_word: bool):
    right, up, order = _layout(shape)
    if alphabet is None:
        alphabet = sorted(support(w))
    alphabet = sorted(set(alphabet))
    target = None
    if check_word:
        target = pad(w, max(len(w), (alphabet[-1] + 1) if alphabet else 0))
    return right, up, alphabet, target, order


def enumerate_eg(
    shape: Sequence[int],
    w: Perm,
    *,
    alphabet: Sequence[int] | None = None,
    check_word: bool = True,
) -> list[EGTableau]:
    """All EG tableaux of type (shape, w), sorted by row-major labels.

    Cells are filled in reading order; a partial filling survives only while
    its reading word is a prefix of some reduced word of w.

    ``alphabet`` and ``check_word=False`` exist for fault injection: with the
    word condition off, the result is every row- and column-strict filling
    over ``alphabet`` and the entries are no longer EG tableaux.
    """
    shape = make_partition(shape)
    w = tuple(w)
    if check_word and sum(shape) != coxeter_length(w):
        return []
    right, up, alpha, target, order = _kernel_args(shape, w, alphabet, check_word)
    found = _backend.eg_fillings(right, up, alpha, target)
    rows = sorted(_fill(shape, labels, order) for labels in found)
    return [EGTableau(r, w) for r in rows]


def eg_count(shape: Sequence[int], w: Perm) -> int:
    """a_{w,shape} = number of EG tableaux of type (shape, w)."""
    shape = make_partition(shape)
    w = tuple(w)
    if sum(shape) != coxeter_length(w):
        return 0
    right, up, alpha, target, _ = _kernel_args(shape, w, None, True)
    return int(_backend.eg_count(right, up, alpha, target))


def eg_coefficients(w: Perm) -> dict[Partition, int]:
    """a_{w,shape} for every shape of size l(w), in reverse-lex shape order."""
    return {shape: eg_count(shape, w) for shape in partitions_of(coxeter_length(w))}


def eg_statistic(w: Perm) -> int:
    return sum(eg_coefficients(w).values())


def is_lambda_maximal(w: Perm, shape: Sequence[int]) -> bool:
    shape = make_partition(shape)
    return eg_count(shape, w) == hook_count(shape)


def staircase_witness(n: int) -> Perm:
    """w_n = s_1 s_3 ... s_{2n-1}."""
    if n < 1:
        raise ValueError("n must be positive")
    return perm_from_word(tuple(range(1, 2 * n, 2)))


def syt_to_eg(t: Tableau, n: int) -> EGTableau:
    """Relabel i -> 2i - 1, giving an EG tableau for the staircase witness w_n."""
    if t.size != n:
        raise ValueError(f"tableau has {t.size} cells, expected {n}")
    if not is_standard(t):
        raise ValueError(f"not standard: {t}")
    return EGTableau(t.relabel(lambda v: 2 * v - 1).rows, staircase_witness(n))
