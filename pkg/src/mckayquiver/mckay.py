"""McKay quivers of S_n, G(r,1,n) and G(r,p,n) by moving cells of diagrams.

Arrow convention: ``i -> j`` with multiplicity m when V_j occurs m times in
V_i tensor V, where V is the standard representation (dimension n-1 for S_n,
n otherwise).
"""

from __future__ import annotations

import json
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Hashable, NamedTuple

from .clifford import HIrrep, fundamental_domain, irreps_grpn, orbit_of, shift
from .partitions import (
    MultiPartition,
    Partition,
    addable_cells,
    block_move_neighbors,
    distinct_parts,
    enumerate_multipartitions,
    enumerate_partitions,
    multipartition_dim,
    removable_cells,
    syt_count,
)

__all__ = [
    "Quiver",
    "ResSummand",
    "ind_H_to_G",
    "induce_from_product",
    "mckay_gr1n",
    "mckay_grpn",
    "mckay_sn",
    "res_G_to_H",
    "restrict_to_gr1n_minus_1",
    "restrict_to_product",
    "twist_by_linear_character",
]

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Quiver:
    family: str
    r: int
    p: int
    n: int
    keys: tuple
    dims: tuple[int, ...]
    arrows: tuple[tuple[int, int, int], ...]
    labels: tuple[str, ...] = ()
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {k: i for i, k in enumerate(self.keys)})
        if not self.labels:
            object.__setattr__(self, "labels", tuple(_label(k) for k in self.keys))

    @property
    def std_dim(self) -> int:
        return self.n - 1 if self.family == "S_n" else self.n

    def index(self, key: Hashable) -> int:
        return self._index[key]

    def mult(self, i: int, j: int) -> int:
        return self.arrow_dict().get((i, j), 0)

    def arrow_dict(self) -> dict[tuple[int, int], int]:
        return {(s, t): m for s, t, m in self.arrows}

    def out_arrows(self, i: int) -> list[tuple[int, int]]:
        return [(t, m) for s, t, m in self.arrows if s == i]

    def dimension_defects(self) -> list[tuple[int, int, int]]:
        """Vertices where sum of m*dim(target) differs from std_dim*dim(source)."""
        total = defaultdict(int)
        for s, t, m in self.arrows:
            total[s] += m * self.dims[t]
        return [
            (i, total[i], self.std_dim * d)
            for i, d in enumerate(self.dims)
            if total[i] != self.std_dim * d
        ]

    def is_connected(self) -> bool:
        adj = defaultdict(set)
        for s, t, _ in self.arrows:
            adj[s].add(t)
            adj[t].add(s)
        seen, stack = {0}, [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.keys)

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "family": self.family,
            "r": self.r,
            "p": self.p,
            "n": self.n,
            "vertices": [{"label": l, "dim": d} for l, d in zip(self.labels, self.dims)],
            "arrows": [{"src": s, "dst": t, "mult": m} for s, t, m in self.arrows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def to_dot(self) -> str:
        lines = [f'digraph "{self.family}({self.r},{self.p},{self.n})" {{']
        for i, (l, d) in enumerate(zip(self.labels, self.dims)):
            lines.append(f'  v{i} [label="{l}\\ndim {d}"];')
        for s, t, m in self.arrows:
            for _ in range(m):
                lines.append(f"  v{s} -> v{t};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _label(key) -> str:
    if isinstance(key, Partition):
        return "[" + key.text() + "]"
    return key.text()


def _freeze(counts: dict[tuple[int, int], int]) -> tuple[tuple[int, int, int], ...]:
    return tuple((s, t, m) for (s, t), m in sorted(counts.items()) if m)


def mckay_sn(n: int) -> Quiver:
    if n < 2:
        raise ValueError(f"S_n quiver needs n >= 2, got {n}")
    verts = enumerate_partitions(n)
    idx = {lam: i for i, lam in enumerate(verts)}
    counts = {}
    for i, lam in enumerate(verts):
        for tau in block_move_neighbors(lam):
            counts[(i, idx[tau])] = 1
        loops = distinct_parts(lam) - 1
        if loops:
            counts[(i, i)] = loops
    return Quiver("S_n", 1, 1, n, tuple(verts), tuple(syt_count(l) for l in verts), _freeze(counts))


def mckay_gr1n(r: int, n: int) -> Quiver:
    if r == 1:
        return mckay_sn(n)
    if r < 1 or n < 1:
        raise ValueError(f"need r >= 1 and n >= 1 (r={r}, n={n})")
    verts = enumerate_multipartitions(r, n)
    idx = {lam: i for i, lam in enumerate(verts)}
    counts = defaultdict(int)
    for i, alpha in enumerate(verts):
        for beta in _cyclic_moves(alpha, range(r)):
            counts[(i, idx[beta])] += 1
    dims = tuple(multipartition_dim(l) for l in verts)
    return Quiver("Gr1n", r, 1, n, tuple(verts), dims, _freeze(counts))


def _cyclic_moves(alpha: MultiPartition, components):
    """Yield the diagram for each (delete in k, add in k+1 mod r) move, k 0-based."""
    r = len(alpha)
    for k in components:
        for cell in removable_cells(alpha[k]):
            mid = alpha.replace(k, alpha[k].remove_row_end(cell.row))
            nxt = (k + 1) % r
            for add in addable_cells(mid[nxt]):
                yield mid.replace(nxt, mid[nxt].add_to_row(add.row))


def mckay_grpn(r: int, p: int, n: int) -> Quiver:
    if r % p:
        raise ValueError(f"p must divide r (r={r}, p={p})")
    if p == 1:
        return mckay_gr1n(r, n)
    if (r, p, n) == (2, 2, 2):
        warnings.warn("G(2,2,2) is not irreducible as a reflection group", stacklevel=2)
    verts = irreps_grpn(r, p, n)
    idx = {h: i for i, h in enumerate(verts)}
    counts = defaultdict(int)
    for i, h in enumerate(verts):
        domain = [c - 1 for c in fundamental_domain(h)]
        for mu in _cyclic_moves(h.orbit.rep, domain):
            orb = orbit_of(mu, p)
            for t in range(orb.u):
                counts[(i, idx[HIrrep(orb, t)])] += 1
    return Quiver("Grpn", r, p, n, tuple(verts), tuple(h.dim for h in verts), _freeze(counts))


def restrict_to_gr1n_minus_1(lam: MultiPartition) -> list[MultiPartition]:
    return [s.diagram for s in restrict_to_product(lam)]


class ResSummand(NamedTuple):
    diagram: MultiPartition
    color: int

    def text(self) -> str:
        return f"{self.diagram.text()} x {self.color}"


def restrict_to_product(lam: MultiPartition) -> list[ResSummand]:
    """Summands of the restriction to G(r,1,n-1) x mu_r, one per removable cell."""
    if lam.size < 1:
        raise ValueError("cannot restrict the empty multipartition")
    out = []
    for k, comp in enumerate(lam):
        for cell in removable_cells(comp, k + 1):
            # cell.component is 1-based, so this is the 0-based color
            out.append(ResSummand(lam.replace(k, comp.remove_row_end(cell.row)), cell.component - 1))
    return out


def induce_from_product(s: ResSummand, r: int) -> list[MultiPartition]:
    """Irreducible summands of Ind(beta x color): add a cell to component color+1 (1-based)."""
    beta = s.diagram
    if len(beta) != r:
        raise ValueError(f"diagram has {len(beta)} components, expected {r}")
    k = s.color % r
    return [beta.replace(k, beta[k].add_to_row(a.row)) for a in addable_cells(beta[k])]


def res_G_to_H(lam: MultiPartition, p: int) -> list[HIrrep]:
    orb = orbit_of(lam, p)
    return [HIrrep(orb, t) for t in range(orb.u)]


def ind_H_to_G(h: HIrrep) -> list[MultiPartition]:
    return h.orbit.members()


def twist_by_linear_character(q: Quiver, ell: int) -> list[int]:
    """Vertex permutation lam -> shift(lam, ell); checked to preserve arrows."""
    if q.family != "Gr1n":
        raise ValueError("twisting is defined here for G(r,1,n) quivers")
    if not 0 <= ell < q.r:
        raise ValueError(f"ell must lie in 0..{q.r - 1}")
    perm = [q.index(shift(k, ell)) for k in q.keys]
    arrows = q.arrow_dict()
    moved = {(perm[s], perm[t]): m for (s, t), m in arrows.items()}
    if moved != arrows:
        raise AssertionError(f"shift by {ell} is not a quiver automorphism")
    return perm
