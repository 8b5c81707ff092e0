"""Partitions, Young tableaux, standardization and the sweep map.

Cells use matrix coordinates ``(x, y)``, both 1-based: x is the row counted
from the top, y the column counted from the left.  North means a smaller
row index, east a larger column index.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from math import factorial, prod

Partition = tuple[int, ...]
Cell = tuple[int, int]


def make_partition(parts: Iterable[int]) -> Partition:
    shape = tuple(int(p) for p in parts)
    if any(p <= 0 for p in shape) or any(a < b for a, b in zip(shape, shape[1:])):
        raise ValueError(f"not a partition: {list(shape)}")
    return shape


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""

    def gen(rest: int, cap: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return list(gen(n, n))


def conjugate(shape: Partition) -> Partition:
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > j) for j in range(shape[0]))


def cells(shape: Partition) -> list[Cell]:
    """Cells of the diagram in row-major order."""
    return [(x, y) for x, row in enumerate(shape, 1) for y in range(1, row + 1)]


def hook_count(shape: Partition) -> int:
    """f^shape by the hook-length formula."""
    cols = conjugate(shape)
    hooks = prod(
        (shape[x - 1] - y) + (cols[y - 1] - x) + 1 for x, y in cells(shape)
    )
    return factorial(sum(shape)) // hooks


class Kind(str, Enum):
    STANDARD = "standard"
    SEMISTANDARD = "semistandard"
    NEITHER = "neither"


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram by positive integers, stored row by row."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        make_partition(len(r) for r in rows)
        if any(v < 1 for row in rows for v in row):
            raise ValueError("labels must be positive")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def __getitem__(self, cell: Cell) -> int:
        x, y = cell
        return self.rows[x - 1][y - 1]

    def items(self) -> Iterator[tuple[Cell, int]]:
        for x, row in enumerate(self.rows, 1):
            for y, v in enumerate(row, 1):
                yield (x, y), v

    def relabel(self, fn) -> Tableau:
        return Tableau(tuple(tuple(fn(v) for v in row) for row in self.rows))

    def to_dict(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, data: dict) -> Tableau:
        tab = cls(tuple(tuple(r) for r in data["rows"]))
        if "shape" in data and tuple(data["shape"]) != tab.shape:
            raise ValueError("shape does not match rows")
        return tab

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self) -> str:
        return "/".join("(" + ",".join(map(str, r)) + ")" for r in self.rows)


def tableau(*rows: Sequence[int]) -> Tableau:
    """Shorthand: ``tableau((1, 3), (2,))``."""
    return Tableau(tuple(tuple(r) for r in rows))


def _rows_ok(t: Tableau, strict: bool) -> bool:
    for row in t.rows:
        for a, b in zip(row, row[1:]):
            if a > b or (strict and a == b):
                return False
    return True


def _cols_strict(t: Tableau) -> bool:
    for upper, lower in zip(t.rows, t.rows[1:]):
        if any(a >= b for a, b in zip(upper, lower)):
            return False
    return True


def is_semistandard(t: Tableau) -> bool:
    return _rows_ok(t, strict=False) and _cols_strict(t)


def is_row_column_strict(t: Tableau) -> bool:
    return _rows_ok(t, strict=True) and _cols_strict(t)


def is_standard(t: Tableau) -> bool:
    labels = sorted(v for _, v in t.items())
    return labels == list(range(1, t.size + 1)) and is_row_column_strict(t)


def validate(t: Tableau) -> Kind:
    if is_standard(t):
        return Kind.STANDARD
    if is_semistandard(t):
        return Kind.SEMISTANDARD
    return Kind.NEITHER


def enumerate_syt(shape: Partition) -> list[Tableau]:
    """All standard tableaux of ``shape``.

    Label k is placed at each addable corner in turn, top row first, so the
    output is lexicographic in the sequence of rows holding 1, 2, ..., n.
    """
    shape = make_partition(shape)
    n = sum(shape)
    filled = [0] * len(shape)
    rows: list[list[int]] = [[] for _ in shape]
    out: list[Tableau] = []

    def rec(k: int) -> None:
        if k > n:
            out.append(Tableau(tuple(tuple(r) for r in rows)))
            return
        for x in range(len(shape)):
            if filled[x] < shape[x] and (x == 0 or filled[x - 1] > filled[x]):
                filled[x] += 1
                rows[x].append(k)
                rec(k + 1)
                rows[x].pop()
                filled[x] -= 1

    rec(1)
    return out


def standardize(t: Tableau) -> Tableau:
    """Renumber equal labels left to right, smallest value first.

    Raises:
        ValueError: if ``t`` is not semistandard.
    """
    if not is_semistandard(t):
        raise ValueError(f"not semistandard: {t}")
    order = sorted(t.items(), key=lambda item: (item[1], item[0][1]))
    new = {cell: k for k, (cell, _) in enumerate(order, 1)}
    return Tableau(
        tuple(tuple(new[(x, y)] for y in range(1, len(row) + 1)) for x, row in enumerate(t.rows, 1))
    )


def positions(u: Tableau) -> dict[int, Cell]:
    return {v: cell for cell, v in u.items()}


def descent_set(u: Tableau) -> set[int]:
    """Labels i whose predecessor i-1 sits weakly east of i."""
    pos = positions(u)
    return {i for i in range(2, u.size + 1) if pos[i - 1][1] >= pos[i][1]}


def sweep_map(u: Tableau) -> Tableau:
    """Relabel each cell by 1 + the number of descents not exceeding its label."""
    desc = descent_set(u)
    below = [0] * (u.size + 1)
    for k in range(1, u.size + 1):
        below[k] = below[k - 1] + (k in desc)
    return u.relabel(lambda v: below[v] + 1)


def sweep_block(u: Tableau, i: int) -> set[Cell]:
    return {cell for cell, v in sweep_map(u).items() if v == i}


def semistandard_of_content(shape: Partition, max_value: int) -> list[Tableau]:
    """All semistandard tableaux of ``shape`` with labels in ``1..max_value``."""
    cell_list = cells(shape)
    labels: dict[Cell, int] = {}
    out: list[Tableau] = []

    def rec(k: int) -> None:
        if k == len(cell_list):
            out.append(
                Tableau(tuple(tuple(labels[(x, y)] for y in range(1, r + 1)) for x, r in enumerate(shape, 1)))
            )
            return
        x, y = cell_list[k]
        lo = max(labels.get((x, y - 1), 1), labels.get((x - 1, y), 0) + 1)
        for v in range(lo, max_value + 1):
            labels[(x, y)] = v
            rec(k + 1)
        labels.pop((x, y), None)

    rec(0)
    return out


def content(t: Tableau) -> tuple[int, ...]:
    """Multiplicities of 1, 2, ..., max label."""
    values = [v for _, v in t.items()]
    top = max(values, default=0)
    return tuple(values.count(i) for i in range(1, top + 1))
