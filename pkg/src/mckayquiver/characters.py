"""Character oracle for G(r,1,n).

Conjugacy classes are r-tuples of cycle-length partitions: a cycle of
length l has color j when the product of its nonzero matrix entries is
zeta_r^j.  Irreducible characters come from the Murnaghan-Nakayama rule for
wreath products,

    chi_lam(c) = sum_k zeta^(j*k) sum_T (-1)^ht(T) chi_{lam - T}(c - cycle),

where T runs over border strips of size l in the 0-based component k.

Internally a value is an integer vector of length r holding its coordinates
on zeta^0..zeta^(r-1) (the redundant basis), which keeps the inner loops in
machine integers.  Public functions return :class:`Cyclo`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial
from typing import Sequence

import numpy as np

from .cyclotomic import Cyclo
from .mckay import Quiver, induce_from_product, mckay_gr1n, mckay_grpn, restrict_to_product, ResSummand
from .partitions import MultiPartition, Partition, enumerate_multipartitions

__all__ = [
    "CharacterTable",
    "OracleBoundError",
    "VerificationReport",
    "WreathClass",
    "character_table",
    "check_orthogonality",
    "enumerate_classes",
    "frobenius_check",
    "inner_product",
    "mn_character_gr1n",
    "mn_character_sn",
    "multiplicity_matrix",
    "tensor_multiplicity",
    "verify_quiver_gr1n",
    "verify_quiver_grpn",
]

DEFAULT_BOUND = 10**5


class OracleBoundError(ValueError):
    """Raised instead of silently skipping a too-large verification."""


# -- border strips ------------------------------------------------------

@lru_cache(maxsize=None)
def _strips(parts: tuple[int, ...], l: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All (partition minus a border strip of size l, sign) pairs."""
    L = len(parts)
    beta = [x + L - 1 - i for i, x in enumerate(parts)]
    bset = set(beta)
    out = []
    for b in beta:
        nb = b - l
        if nb < 0 or nb in bset:
            continue
        between = sum(1 for x in beta if nb < x < b)
        new = sorted((bset - {b}) | {nb}, reverse=True)
        lam = tuple(x - (L - 1 - i) for i, x in enumerate(new))
        out.append((tuple(x for x in lam if x > 0), -1 if between % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=2**18)
def _mn(lam: tuple[tuple[int, ...], ...], cycles: tuple[tuple[int, int], ...], r: int) -> tuple[int, ...]:
    if not cycles:
        return (1,) + (0,) * (r - 1)
    (l, j), rest = cycles[0], cycles[1:]
    acc = [0] * r
    for k, comp in enumerate(lam):
        if sum(comp) < l:
            continue
        rot = (j * k) % r
        for new, sign in _strips(comp, l):
            sub = _mn(lam[:k] + (new,) + lam[k + 1:], rest, r)
            for s, v in enumerate(sub):
                if v:
                    acc[(s + rot) % r] += sign * v
    return tuple(acc)


def _cycle_list(cycle_data: Sequence[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    # largest cycles first keeps the memo small
    return tuple(sorted(((l, j) for j, part in enumerate(cycle_data) for l in part), reverse=True))


def mn_character_sn(lam: Partition, rho: Partition) -> int:
    if sum(lam) != sum(rho):
        raise ValueError(f"size mismatch: {tuple(lam)} vs {tuple(rho)}")
    return _mn((tuple(lam),), tuple((l, 0) for l in sorted(rho, reverse=True)), 1)[0]


# -- classes --------------------------------------------------------------

@dataclass(frozen=True)
class WreathClass:
    cycle_data: MultiPartition
    class_size: int

    @property
    def r(self) -> int:
        return len(self.cycle_data)

    @property
    def total(self) -> int:
        return self.cycle_data.size

    def centralizer(self) -> int:
        return _centralizer(self.cycle_data)

    def text(self) -> str:
        return self.cycle_data.text()


def _centralizer(data: MultiPartition) -> int:
    r = len(data)
    z = 1
    for part in data:
        for l in set(part):
            m = part.count(l)
            z *= (l * r) ** m * factorial(m)
    return z


@lru_cache(maxsize=None)
def _classes_cached(r: int, n: int) -> tuple[WreathClass, ...]:
    order = r**n * factorial(n)
    return tuple(WreathClass(c, order // _centralizer(c)) for c in enumerate_multipartitions(r, n))


def enumerate_classes(r: int, n: int) -> list[WreathClass]:
    if r < 1 or n < 1:
        raise ValueError(f"need r, n >= 1 (r={r}, n={n})")
    return list(_classes_cached(r, n))


def mn_character_gr1n(lam: MultiPartition, c: WreathClass) -> Cyclo:
    if lam.size != c.total or len(lam) != c.r:
        raise ValueError(f"{lam.text()} does not match class {c.text()}")
    raw = _mn(tuple(map(tuple, lam)), _cycle_list(c.cycle_data), c.r)
    return Cyclo.from_exponents(c.r, raw)


def _std_raw(c: WreathClass) -> list[int]:
    """Standard character in the redundant basis, from fixed points by color."""
    r = c.r
    v = [0] * r
    for j, part in enumerate(c.cycle_data):
        v[j] += part.count(1)
    if r == 1:
        v[0] -= 1  # S_n: drop the trivial summand of the permutation module
    return v


# -- tables ----------------------------------------------------------------

@dataclass(frozen=True)
class CharacterTable:
    r: int
    n: int
    classes: tuple[WreathClass, ...]
    irreps: tuple[MultiPartition, ...]
    raw: np.ndarray = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.r**self.n * factorial(self.n)

    @cached_property
    def values(self) -> list[list[Cyclo]]:
        return [[Cyclo.from_exponents(self.r, row[c].tolist()) for c in range(len(self.classes))] for row in self.raw]

    def row(self, lam: MultiPartition) -> list[Cyclo]:
        return self.values[self.irreps.index(lam)]

    def std(self) -> list[Cyclo]:
        return [Cyclo.from_exponents(self.r, _std_raw(c)) for c in self.classes]

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema_version": 1,
                "r": self.r,
                "n": self.n,
                "classes": [{"cycles": c.text(), "size": c.class_size} for c in self.classes],
                "irreps": [l.text() for l in self.irreps],
                "values": [[v.to_json() for v in row] for row in self.values],
            },
            indent=2,
        )


@lru_cache(maxsize=16)
def character_table(r: int, n: int) -> CharacterTable:
    classes = _classes_cached(r, n)
    irreps = enumerate_multipartitions(r, n)
    raw = np.array(
        [[_mn(tuple(map(tuple, lam)), _cycle_list(c.cycle_data), r) for c in classes] for lam in irreps],
        dtype=np.int64,
    ).reshape(len(irreps), len(classes), r)
    return CharacterTable(r, n, classes, tuple(irreps), raw)


def inner_product(chi: Sequence[Cyclo], phi: Sequence[Cyclo], table: CharacterTable) -> Fraction:
    if len(chi) != len(table.classes) or len(phi) != len(table.classes):
        raise ValueError("class functions do not match the class list of the table")
    total = Cyclo.rational(0, table.r)
    for c, x, y in zip(table.classes, chi, phi):
        total = total + x * y.conjugate() * c.class_size
    return (total / table.order).to_rational()


def _pairing(a: np.ndarray, b: np.ndarray, table: CharacterTable) -> np.ndarray:
    """Redundant-basis vectors of sum_c |c| a_i(c) conj(b_j(c)), shape (i, j, r)."""
    r = table.r
    sizes = np.array([c.class_size for c in table.classes], dtype=np.int64)
    idx = (np.arange(r)[:, None] - np.arange(r)[None, :]) % r  # [a, s] -> a - s
    shifted = b[:, :, idx]  # shifted[j, c, a, s] = b[j, c, a - s]
    return np.einsum("ica,jcas->ijs", a * sizes[None, :, None], shifted)


def _redundant_to_rational(v: Sequence[int], r: int, order: int) -> Fraction:
    return (Cyclo.from_exponents(r, [int(x) for x in v]) / order).to_rational()


def _convolve(a: np.ndarray, std: np.ndarray) -> np.ndarray:
    """Pointwise product chi(c)*std(c) in the redundant basis."""
    r = a.shape[-1]
    out = np.zeros_like(a)
    for s in range(r):
        out += np.roll(a, s, axis=-1) * std[None, :, s, None]
    return out


@lru_cache(maxsize=16)
def multiplicity_matrix(r: int, n: int) -> tuple[tuple[int, ...], ...]:
    """m[i][j] = multiplicity of irrep j in irrep i tensor standard."""
    table = character_table(r, n)
    std = np.array([_std_raw(c) for c in table.classes], dtype=np.int64)
    prod = _convolve(table.raw, std)
    pair = _pairing(prod, table.raw, table)
    out = []
    for i in range(len(table.irreps)):
        row = []
        for j in range(len(table.irreps)):
            q = _redundant_to_rational(pair[i, j], r, table.order)
            if q.denominator != 1 or q < 0:
                raise ArithmeticError(f"non-integral multiplicity {q} at ({i}, {j})")
            row.append(int(q))
        out.append(tuple(row))
    return tuple(out)


def tensor_multiplicity(alpha: MultiPartition, mu: MultiPartition) -> int:
    if len(alpha) != len(mu) or alpha.size != mu.size:
        raise ValueError("multipartitions belong to different groups")
    r, n = len(alpha), alpha.size
    irreps = character_table(r, n).irreps
    return multiplicity_matrix(r, n)[irreps.index(alpha)][irreps.index(mu)]


def check_orthogonality(table: CharacterTable) -> bool:
    """Exact row and column orthogonality."""
    r, order = table.r, table.order
    rows = _pairing(table.raw, table.raw, table)
    for i in range(len(table.irreps)):
        for j in range(len(table.irreps)):
            if _redundant_to_rational(rows[i, j], r, order) != (1 if i == j else 0):
                return False
    # columns: sum_lam chi(c) conj chi(c') = delta |C(c)|
    idx = (np.arange(r)[:, None] - np.arange(r)[None, :]) % r
    cols = np.einsum("lax,lbxs->abs", table.raw, table.raw[:, :, idx])
    for a, ca in enumerate(table.classes):
        for b in range(len(table.classes)):
            want = ca.centralizer() if a == b else 0
            if _redundant_to_rational(cols[a, b], r, 1) != want:
                return False
    return True


# -- verification ------------------------------------------------------------

@dataclass
class VerificationReport:
    group: tuple[int, int, int]
    status: str
    checked: int
    mismatches: list[dict]

    @property
    def ok(self) -> bool:
        return self.status == "PASS"

    def to_json(self) -> str:
        r, p, n = self.group
        return json.dumps(
            {"schema_version": 1, "group": {"r": r, "p": p, "n": n}, "status": self.status,
             "checked": self.checked, "mismatches": self.mismatches},
            indent=2,
        )


def _check_bound(r: int, p: int, n: int, bound: int) -> None:
    size = r**n * factorial(n)
    if size > bound:
        raise OracleBoundError(f"|G({r},1,{n})| = {size} exceeds the oracle bound {bound}")


def _gkey(q: Quiver, lam: MultiPartition):
    return lam[0] if q.family == "S_n" else lam


def verify_quiver_gr1n(r: int, n: int, bound: int = DEFAULT_BOUND) -> VerificationReport:
    _check_bound(r, 1, n, bound)
    q = mckay_gr1n(r, n)
    irreps = character_table(r, n).irreps
    mat = multiplicity_matrix(r, n)
    arrows = q.arrow_dict()
    bad = []
    for i, a in enumerate(irreps):
        si = q.index(_gkey(q, a))
        for j, b in enumerate(irreps):
            got = arrows.get((si, q.index(_gkey(q, b))), 0)
            if got != mat[i][j]:
                bad.append({"src": a.text(), "dst": b.text(), "rule": got, "oracle": mat[i][j]})
    return VerificationReport((r, 1, n), "FAIL" if bad else "PASS", len(irreps) ** 2, bad)


def verify_quiver_grpn(r: int, p: int, n: int, bound: int = DEFAULT_BOUND) -> VerificationReport:
    """Compare the G(r,p,n) rule with G(r,1,n) characters via Frobenius reciprocity.

    For a G-irrep alpha and an H-vertex ([beta], t'), the oracle gives the
    total number of arrows from the vertices ([alpha], t) into ([beta], t')
    as sum over the distinct shifts mu of beta of m(alpha, mu).  The rule
    must reproduce the total and split it equally over the u(alpha) labels.
    """
    if r % p:
        raise ValueError(f"p must divide r (r={r}, p={p})")
    if p == 1:
        return verify_quiver_gr1n(r, n, bound)
    _check_bound(r, p, n, bound)
    q = mckay_grpn(r, p, n)
    irreps = character_table(r, n).irreps
    pos = {lam: i for i, lam in enumerate(irreps)}
    mat = multiplicity_matrix(r, n)
    arrows = q.arrow_dict()
    by_orbit: dict = {}
    for i, h in enumerate(q.keys):
        by_orbit.setdefault(h.orbit.rep, []).append(i)
    bad, checked = [], 0
    for rep, sources in by_orbit.items():
        u = len(sources)
        for j, target in enumerate(q.keys):
            expected = sum(mat[pos[rep]][pos[mu]] for mu in target.orbit.members())
            got = [arrows.get((s, j), 0) for s in sources]
            checked += 1
            if sum(got) != expected or expected % u or any(g != expected // u for g in got):
                bad.append({"src_orbit": rep.text(), "dst": target.text(), "rule": got, "oracle_total": expected})
    return VerificationReport((r, p, n), "FAIL" if bad else "PASS", checked, bad)


def frobenius_check(r: int, n: int) -> list[dict]:
    """Reciprocity for H = G(r,1,n-1) x mu_r inside G(r,1,n).

    For every H-irrep beta x i and G-irrep lam, compare four numbers:
    the count of beta x i in the combinatorial restriction of lam, the count
    of lam in the combinatorial induction of beta x i, and the two character
    inner products <phi, Res chi>_H and <Ind phi, chi>_G.  Returns failures.
    """
    if n < 2:
        raise ValueError("the subgroup chain needs n >= 2")
    gt = character_table(r, n)
    ht = character_table(r, n - 1)
    gpos = {c.cycle_data: k for k, c in enumerate(gt.classes)}
    h_order = ht.order * r
    zeta = [Cyclo.zeta(r, k) for k in range(r)]

    # H-classes (c', color) and their fusion into G-classes
    fusion = []
    for c in ht.classes:
        for color in range(r):
            data = list(c.cycle_data)
            data[color] = Partition(sorted(tuple(data[color]) + (1,), reverse=True))
            fusion.append((c, color, gpos[MultiPartition(data)]))

    gvals = gt.values
    failures = []
    for b_idx, beta in enumerate(ht.irreps):
        brow = ht.values[b_idx]
        for i in range(r):
            phi = [brow[k] * zeta[(i * color) % r] for k, _ in enumerate(ht.classes) for color in range(r)]
            # induced class function on G
            ind = [Cyclo.rational(0, r) for _ in gt.classes]
            for (c, color, g), val in zip(fusion, phi):
                ind[g] = ind[g] + val / (c.centralizer() * r)
            ind = [v * gt.classes[g].centralizer() for g, v in enumerate(ind)]
            induced = induce_from_product(ResSummand(beta, i), r)
            for l_idx, lam in enumerate(gt.irreps):
                res_count = restrict_to_product(lam).count(ResSummand(beta, i))
                ind_count = induced.count(lam)
                rhs = inner_product(ind, gvals[l_idx], gt)
                lhs = Cyclo.rational(0, r)
                for (c, color, g), val in zip(fusion, phi):
                    lhs = lhs + val * gvals[l_idx][g].conjugate() * (h_order // (c.centralizer() * r))
                lhs = (lhs / h_order).to_rational()
                if not (res_count == ind_count == lhs == rhs):
                    failures.append({"beta": beta.text(), "color": i, "lam": lam.text(),
                                     "res": res_count, "ind": ind_count, "<phi,Res>": str(lhs), "<Ind,chi>": str(rhs)})
    return failures
