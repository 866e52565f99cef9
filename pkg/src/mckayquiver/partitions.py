"""Partitions, Young diagrams and r-tuples of diagrams.

Canonical orders
----------------
Partitions of a fixed size are listed in reverse-lexicographic order, so
``(4), (3,1), (2,2), (2,1,1), (1,1,1,1)``.  Multipartitions are ordered first
by their size composition ``(|l1|, ..., |lr|)`` in reverse-lex order and then
component by component.  ``sort_key`` realizes both orders.

Components are numbered ``1..r`` in text and in :class:`CellRef`, matching
the usual ``l^(1), ..., l^(r)`` notation.  Everywhere a component index meets
a root of unity (colors, characters) it is 0-based; ``color_of_component``
is the single place that converts.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "CellRef",
    "MultiPartition",
    "Partition",
    "addable_cells",
    "block_move_neighbors",
    "color_of_component",
    "count_multipartitions",
    "distinct_parts",
    "enumerate_multipartitions",
    "enumerate_partitions",
    "multipartition_dim",
    "parse_multipartition",
    "partition_count",
    "removable_cells",
    "syt_count",
]


class CellRef(NamedTuple):
    component: int
    row: int
    col: int


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def sort_key(self) -> tuple:
        return tuple(-x for x in self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for x in self if x > j) for j in range(self[0]))

    def remove_row_end(self, row: int) -> "Partition":
        """Delete the last cell of a (1-indexed) row."""
        parts = list(self)
        parts[row - 1] -= 1
        if parts[row - 1] == 0:
            parts.pop(row - 1)
        return Partition(parts)

    def add_to_row(self, row: int) -> "Partition":
        parts = list(self)
        if row == len(parts) + 1:
            parts.append(1)
        else:
            parts[row - 1] += 1
        return Partition(parts)

    def text(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")" if self else "-"


class MultiPartition(tuple):
    """An r-tuple of partitions; empty components are allowed."""

    __slots__ = ()

    def __new__(cls, components: Iterable):
        comps = tuple(c if isinstance(c, Partition) else Partition(c) for c in components)
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        return super().__new__(cls, comps)

    @property
    def r(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(c.size for c in self)

    def sort_key(self) -> tuple:
        return (tuple(-c.size for c in self), tuple(c.sort_key() for c in self))

    def replace(self, k: int, part: Partition) -> "MultiPartition":
        """Copy with the 0-based component ``k`` replaced."""
        comps = list(self)
        comps[k] = part
        return MultiPartition(comps)

    def text(self) -> str:
        return "[" + "|".join(c.text() for c in self) + "]"

    def __repr__(self):
        return f"MultiPartition({[tuple(c) for c in self]})"

    def __str__(self):
        return self.text()


def color_of_component(component: int) -> int:
    """1-based component position to the 0-based color used with roots of unity."""
    return component - 1


def parse_multipartition(text: str) -> MultiPartition:
    """Read the ``[3,1|1|-]`` syntax."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"expected [..|..] syntax, got {text!r}")
    comps = []
    for field in s[1:-1].split("|"):
        field = field.strip()
        if field in ("-", ""):
            comps.append(Partition())
        else:
            try:
                parts = [int(x) for x in field.split(",")]
            except ValueError:
                raise ValueError(f"bad component {field!r} in {text!r}") from None
            comps.append(Partition(parts))
    return MultiPartition(comps)


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    if n < 0:
        raise ValueError(f"cannot partition a negative number: {n}")
    return list(_partitions_cached(n))


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    # table DP, independent of the recursive enumeration above
    table = [1] + [0] * n
    for k in range(1, n + 1):
        for m in range(k, n + 1):
            table[m] += table[m - k]
    return table[n]


def count_multipartitions(r: int, n: int) -> int:
    """Number of r-tuples of partitions of total size n."""
    row = [1] + [0] * n
    p = [partition_count(k) for k in range(n + 1)]
    for _ in range(r):
        row = [sum(row[j] * p[m - j] for j in range(m + 1)) for m in range(n + 1)]
    return row[n]


def distinct_parts(lam: Partition) -> int:
    return len(set(lam))


def removable_cells(lam: Partition, component: int = 1) -> list[CellRef]:
    cells = []
    for i, x in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < x:
            cells.append(CellRef(component, i + 1, x))
    return cells


def addable_cells(lam: Partition, component: int = 1) -> list[CellRef]:
    cells = []
    for i, x in enumerate(lam):
        if i == 0 or lam[i - 1] > x:
            cells.append(CellRef(component, i + 1, x + 1))
    cells.append(CellRef(component, len(lam) + 1, 1))
    return cells


def block_move_neighbors(lam: Partition) -> set[Partition]:
    lam = Partition(lam)
    out = set()
    for cell in removable_cells(lam):
        mid = lam.remove_row_end(cell.row)
        for add in addable_cells(mid):
            tau = mid.add_to_row(add.row)
            if tau != lam:
                out.add(tau)
    return out


def hook_lengths(lam: Partition) -> list[int]:
    conj = Partition(lam).conjugate()
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def syt_count(lam: Partition) -> int:
    prod = 1
    for h in hook_lengths(lam):
        prod *= h
    return factorial(sum(lam)) // prod


def enumerate_multipartitions(r: int, n: int) -> list[MultiPartition]:
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return list(_multipartitions_cached(r, n))


def _compositions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, r - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _multipartitions_cached(r: int, n: int) -> tuple[MultiPartition, ...]:
    out = []
    for comp in _compositions(n, r):
        stack: list[tuple] = [()]
        for size in comp:
            stack = [prefix + (p,) for prefix in stack for p in _partitions_cached(size)]
        out.extend(MultiPartition(c) for c in stack)
    return tuple(out)


def multipartition_dim(lam: MultiPartition) -> int:
    dim = factorial(lam.size)
    for c in lam:
        dim = dim // factorial(c.size) * syt_count(c)
    return dim
