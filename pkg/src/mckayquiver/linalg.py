"""Exact dense linear algebra over any field whose elements support + - * /.

Used with Fraction and Cyclo entries.  Matrices are lists of row lists.
"""

from __future__ import annotations

from typing import Sequence

__all__ = [
    "identity",
    "matmul",
    "mat_inverse",
    "nullspace",
    "rank",
    "rref",
    "transpose",
]


def identity(n, one, zero):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    if not a:
        return []
    bt = list(zip(*b))
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        new = []
        for col in bt:
            acc = None
            for k, x in nz:
                y = col[k]
                if y:
                    acc = x * y if acc is None else acc + x * y
            new.append(acc if acc is not None else row[0] * 0)
        out.append(new)
    return out


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols=None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols: int, one, zero):
    """Basis of {x : A x = 0}, one vector per free column, in column order."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis


def mat_inverse(a, one, zero):
    n = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(n, one, zero))]
    red, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]
