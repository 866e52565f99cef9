"""Finite matrix groups with explicit irreducible representations.

A :class:`GroupModel` holds a faithful defining representation V (the
generators), the full element list obtained by closure, and one
:class:`MatrixRep` per isomorphism class of irreducibles.  All matrices have
entries in a single cyclotomic field Q(zeta_m).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from ..clifford import orbit_of
from ..cyclotomic import Cyclo
from ..linalg import identity, matmul
from ..partitions import Partition, enumerate_multipartitions, enumerate_partitions

__all__ = [
    "GroupModel",
    "MatrixRep",
    "abelian_model",
    "builtin_reps",
    "d4_model",
    "group_closure",
    "grpn_monomial_model",
    "s3_model",
    "sn_model",
]

Matrix = list  # list of rows of Cyclo


def _key(mat) -> tuple:
    return tuple(x.coeffs for row in mat for x in row)


def _cmat(rows, m: int) -> Matrix:
    return [[x if isinstance(x, Cyclo) else Cyclo.rational(x, m) for x in row] for row in rows]


def _eye(n: int, m: int) -> Matrix:
    return identity(n, Cyclo.rational(1, m), Cyclo.rational(0, m))


def _trace(mat) -> Cyclo:
    total = mat[0][0]
    for i in range(1, len(mat)):
        total = total + mat[i][i]
    return total


@dataclass
class MatrixRep:
    name: str
    degree: int
    images: list[Matrix]  # one per generator

    def __post_init__(self):
        for img in self.images:
            if len(img) != self.degree or any(len(row) != self.degree for row in img):
                raise ValueError(f"{self.name}: image has the wrong size")


@dataclass
class GroupModel:
    name: str
    order_m: int
    generators: list[Matrix]
    irreps: list[MatrixRep]
    elements: list[Matrix] = field(default_factory=list)
    irrep_elements: list[list[Matrix]] = field(default_factory=list)  # [irrep][element]

    @property
    def dim(self) -> int:
        return len(self.generators[0])

    @property
    def order(self) -> int:
        return len(self.elements)

    def zero(self) -> Cyclo:
        return Cyclo.rational(0, self.order_m)

    def one(self) -> Cyclo:
        return Cyclo.rational(1, self.order_m)

    def characters(self) -> list[list[Cyclo]]:
        return [[_trace(g) for g in imgs] for imgs in self.irrep_elements]

    def defining_character(self) -> list[Cyclo]:
        return [_trace(g) for g in self.elements]

    def irrep_names(self) -> list[str]:
        return [rep.name for rep in self.irreps]


def group_closure(generators: Sequence[Matrix], bound: int = 10**4, companions: Sequence[Sequence[Matrix]] = ()):
    """Enumerate the group generated by ``generators``.

    ``companions[k]`` lists the images of the generators in a further
    representation; those images are multiplied along and must agree
    whenever the defining matrix repeats, which checks that they define a
    homomorphism.  Returns (elements, [images per companion]).
    """
    gens = [list(map(list, g)) for g in generators]
    n = len(gens[0])
    m = gens[0][0][0].order
    comps = [[list(map(list, img)) for img in c] for c in companions]
    start = (_eye(n, m), [_eye(len(c[0]), m) for c in comps])
    seen = {_key(start[0]): 0}
    elements = [start[0]]
    images = [[img] for img in start[1]]
    queue = deque([start])
    while queue:
        g, imgs = queue.popleft()
        for gi, gen in enumerate(gens):
            h = matmul(gen, g)
            himgs = [matmul(c[gi], img) for c, img in zip(comps, imgs)]
            k = _key(h)
            if k in seen:
                idx = seen[k]
                for c_idx, img in enumerate(himgs):
                    if _key(img) != _key(images[c_idx][idx]):
                        raise ValueError("generator images do not define a representation")
                continue
            if len(elements) >= bound:
                raise ValueError(f"group closure exceeded {bound} elements")
            seen[k] = len(elements)
            elements.append(h)
            for c_idx, img in enumerate(himgs):
                images[c_idx].append(img)
            queue.append((h, himgs))
    return elements, images


def _finish(model: GroupModel, bound: int = 10**4) -> GroupModel:
    elements, images = group_closure(model.generators, bound, [rep.images for rep in model.irreps])
    model.elements = elements
    model.irrep_elements = images
    total = sum(rep.degree**2 for rep in model.irreps)
    if total != len(elements):
        raise ValueError(f"{model.name}: sum of squared degrees {total} != |G| = {len(elements)}")
    chars = model.characters()
    for a, ca in enumerate(chars):
        for b in range(a, len(chars)):
            s = model.zero()
            for x, y in zip(ca, chars[b]):
                s = s + x * y.conjugate()
            if s != (len(elements) if a == b else 0):
                raise ValueError(f"{model.name}: irreps {a} and {b} are not orthonormal")
    return model


# -- named models -----------------------------------------------------------

def d4_model() -> GroupModel:
    m = 4
    i = Cyclo.zeta(4)
    alpha = _cmat([[i, 0], [0, -i]], m)
    beta = _cmat([[0, 1], [1, 0]], m)
    reps = [
        MatrixRep("V0", 1, [_cmat([[1]], m), _cmat([[1]], m)]),
        MatrixRep("V1", 1, [_cmat([[1]], m), _cmat([[-1]], m)]),
        MatrixRep("V2", 1, [_cmat([[-1]], m), _cmat([[1]], m)]),
        MatrixRep("V3", 1, [_cmat([[-1]], m), _cmat([[-1]], m)]),
        MatrixRep("V4", 2, [alpha, beta]),
    ]
    return _finish(GroupModel("d4", m, [alpha, beta], reps))


def s3_model() -> GroupModel:
    m = 3
    w = Cyclo.zeta(3)
    s1 = _cmat([[0, 1], [1, 0]], m)
    s2 = _cmat([[0, w], [w * w, 0]], m)
    reps = [
        MatrixRep("triv", 1, [_cmat([[1]], m), _cmat([[1]], m)]),
        MatrixRep("rho21", 2, [s1, s2]),
        MatrixRep("sgn", 1, [_cmat([[-1]], m), _cmat([[-1]], m)]),
    ]
    return _finish(GroupModel("s3", m, [s1, s2], reps))


# -- seminormal forms ----------------------------------------------------------

def _standard_tableaux(shape: Sequence[Partition], n: int) -> list[tuple]:
    """Standard multitableaux as tuples mapping entry-1 -> (component, row, col)."""
    out = []

    def rec(k, filled, pos):
        if k > n:
            out.append(tuple(pos))
            return
        for c, lam in enumerate(shape):
            rows = filled[c]
            for row in range(len(lam)):
                col = rows[row]
                if col < lam[row] and (row == 0 or rows[row - 1] > col):
                    rows[row] += 1
                    rec(k + 1, filled, pos + [(c, row, col)])
                    rows[row] -= 1

    rec(1, [[0] * len(lam) for lam in shape], [])
    return out


def _seminormal_generators(shape: Sequence[Partition], r: int, m: int, with_color: bool):
    """Images of s_1..s_{n-1} (and of t_1 if with_color) on standard tableaux.

    s_k swaps k and k+1 when they lie in different components, and acts by
    Young's seminormal rule within a component, with a = 1/(c(k+1)-c(k)):
    v_T -> a v_T + v_T' if k sits in an earlier row than k+1 in T,
    v_T -> a v_T + (1 - a^2) v_T' otherwise.
    """
    n = sum(sum(lam) for lam in shape)
    tabs = _standard_tableaux(shape, n)
    index = {t: i for i, t in enumerate(tabs)}
    dim = len(tabs)
    zero, one = Cyclo.rational(0, m), Cyclo.rational(1, m)
    gens = []
    for k in range(1, n):
        mat = [[zero] * dim for _ in range(dim)]
        for col, t in enumerate(tabs):
            p, q = t[k - 1], t[k]
            swapped = list(t)
            swapped[k - 1], swapped[k] = q, p
            swapped = tuple(swapped)
            if p[0] != q[0]:
                mat[index[swapped]][col] = one
                continue
            content = lambda cell: cell[2] - cell[1]
            a = Fraction(1, content(q) - content(p))
            mat[col][col] = Cyclo.rational(a, m)
            if swapped in index:
                coeff = 1 if p[1] < q[1] else 1 - a * a
                mat[index[swapped]][col] = Cyclo.rational(coeff, m)
        gens.append(mat)
    if with_color:
        z = Cyclo.zeta(m, m // r)
        t1 = [[zero] * dim for _ in range(dim)]
        for col, t in enumerate(tabs):
            t1[col][col] = z ** t[0][0]
        gens.append(t1)
    return tabs, gens


def sn_model(n: int, defining: Sequence[int] | None = None) -> GroupModel:
    """S_n with Young's seminormal irreducibles; V is the (n-1,1) irrep."""
    if n < 2:
        raise ValueError("sn model needs n >= 2")
    m = 1
    parts = enumerate_partitions(n)
    reps = []
    for lam in parts:
        _, gens = _seminormal_generators([lam], 1, m, False)
        reps.append(MatrixRep(str(lam), len(gens[0]), gens))
    std = Partition(defining or (n - 1, 1))
    gens = reps[parts.index(std)].images
    return _finish(GroupModel(f"sn({n})", m, [list(map(list, g)) for g in gens], reps))


def abelian_model(m: int, weights: Sequence[Sequence[int]]) -> GroupModel:
    """Diagonal group generated by diag(zeta_m^w) for each weight vector w.

    Irreducibles are all characters; the coordinate characters rho_1..rho_n
    come first, then the remaining ones in order of their generator values.
    """
    weights = [list(w) for w in weights]
    n = len(weights[0])
    if any(len(w) != n for w in weights):
        raise ValueError("all weight vectors need the same length")
    gens = [[[Cyclo.zeta(m, w[i]) if i == j else Cyclo.rational(0, m) for j in range(n)] for i in range(n)] for w in weights]
    elements, _ = group_closure(gens)
    order = len(elements)
    found: dict[tuple, None] = {}
    coord = [tuple(w[l] % m for w in weights) for l in range(n)]
    for c in coord:
        found.setdefault(c)
    for c in product(range(m), repeat=len(weights)):
        if c in found:
            continue
        try:
            group_closure(gens, companions=[[[[Cyclo.zeta(m, e)]] for e in c]])
        except ValueError:
            continue
        found.setdefault(c)
    chars = list(found)
    if len(chars) != order:
        raise ValueError(f"found {len(chars)} characters for a group of order {order}")
    reps = [
        MatrixRep(f"rho{k + 1}", 1, [[[Cyclo.zeta(m, e)]] for e in c])
        for k, c in enumerate(chars)
    ]
    name = "abelian:" + str(m) + ":" + ";".join(",".join(map(str, w)) for w in weights)
    return _finish(GroupModel(name, m, gens, reps))


def _monomial_generators(r: int, p: int, n: int) -> list[Matrix]:
    m = r
    zero, one = Cyclo.rational(0, m), Cyclo.rational(1, m)
    gens = []
    for k in range(n - 1):
        g = _eye(n, m)
        g[k][k], g[k + 1][k + 1] = zero, zero
        g[k][k + 1], g[k + 1][k] = one, one
        gens.append(g)
    if p < r:
        g = _eye(n, m)
        g[0][0] = Cyclo.zeta(r, p)
        gens.append(g)
    if n >= 2 and p > 1:
        g = _eye(n, m)
        g[0][0], g[1][1] = Cyclo.zeta(r, 1), Cyclo.zeta(r, -1)
        gens.append(g)
    return gens


def _word_images(r: int, p: int, n: int, gens_1n: list[Matrix], m: int) -> list[Matrix]:
    """Express the G(r,p,n) generators through s_k and t_1 of G(r,1,n)."""
    s = gens_1n[: n - 1]
    t1 = gens_1n[n - 1]
    out = list(s)
    if p < r:
        out.append(_power(t1, p))
    if n >= 2 and p > 1:
        # diag(z, z^-1) = t1 * s1 t1^-1 s1
        t1inv = _power(t1, r - 1)
        out.append(matmul(t1, matmul(s[0], matmul(t1inv, s[0]))))
    return out


def _power(mat, e):
    out = mat
    for _ in range(e - 1):
        out = matmul(out, mat)
    return out


def grpn_monomial_model(r: int, p: int, n: int) -> GroupModel:
    """G(r,p,n) as monomial matrices with irreducibles from G(r,1,n).

    Each G(r,1,n) irrep is built on standard multitableaux.  When u > 1 the
    permutation J: v_T -> v_{T shifted by b*d} commutes with G(r,p,n), and
    its eigenspaces give the u constituents ([lam], t), t = 0..u-1.
    """
    if r % p or n < 1:
        raise ValueError(f"bad parameters G({r},{p},{n})")
    m = r
    reps = []
    seen = set()
    for lam in enumerate_multipartitions(r, n):
        orb = orbit_of(lam, p)
        if orb.rep in seen:
            continue
        seen.add(orb.rep)
        tabs, g1n = _seminormal_generators(orb.rep, r, m, True)
        images = _word_images(r, p, n, g1n, m)
        if orb.u == 1:
            reps.append(MatrixRep(orb.rep.text(), len(tabs), images))
            continue
        step = orb.b * orb.d
        index = {t: i for i, t in enumerate(tabs)}
        jmap = [index[tuple(((c + step) % r, row, col) for c, row, col in t)] for t in tabs]
        # orbit representatives of J and the power of J reaching each tableau
        base, power = {}, {}
        for i in range(len(tabs)):
            if i in base:
                continue
            cur = i
            for j in range(orb.u):
                base[cur], power[cur] = i, j
                cur = jmap[cur]
        reps_idx = sorted(set(base.values()))
        col_of = {b: c for c, b in enumerate(reps_idx)}
        zeta_u = Cyclo.zeta(r, r // orb.u)
        for k in range(orb.u):
            mats = []
            for img in images:
                small = [[Cyclo.rational(0, m)] * len(reps_idx) for _ in reps_idx]
                for c, b in enumerate(reps_idx):
                    for row in range(len(tabs)):
                        x = img[row][b]
                        if x:
                            small[col_of[base[row]]][c] = small[col_of[base[row]]][c] + x * zeta_u ** (k * power[row] % orb.u)
                mats.append(small)
            reps.append(MatrixRep(f"{orb.rep.text()}@{k}", len(reps_idx), mats))
    gens = _monomial_generators(r, p, n)
    return _finish(GroupModel(f"grpn:{r},{p},{n}", m, gens, reps), bound=10**5)


def builtin_reps(name: str) -> GroupModel:
    """Build a named model: d4, s3, s4, sn(<n>), abelian:<m>:<w;w>, grpn:<r>,<p>,<n>."""
    key = name.strip().lower()
    if key == "d4":
        return d4_model()
    if key == "s3":
        return s3_model()
    if key == "s4":
        return sn_model(4)
    if key.startswith("sn(") and key.endswith(")"):
        return sn_model(int(key[3:-1]))
    if key.startswith("abelian:"):
        try:
            _, m, ws = key.split(":")
            weights = [[int(x) for x in w.split(",")] for w in ws.split(";")]
            return abelian_model(int(m), weights)
        except ValueError as exc:
            raise ValueError(f"bad abelian spec {name!r}: {exc}") from None
    if key.startswith("grpn:"):
        try:
            r, p, n = (int(x) for x in key[5:].split(","))
        except ValueError:
            raise ValueError(f"bad grpn spec {name!r}") from None
        return grpn_monomial_model(r, p, n)
    raise ValueError(f"unsupported group {name!r}")
