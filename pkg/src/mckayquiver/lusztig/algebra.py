"""Degree-1 invariants and quadratic relations of Lusztig algebras.

Conventions
-----------
* g acts on a linear form with coefficient vector c (over x_1..x_n) by
  c -> rho_V(g) c, and on V(x)V coefficient vectors by rho_V(g) (x) rho_V(g).
  The entry of index l1*n + l2 is the coefficient of x_l1 x_l2.
* The block (i, j) of a matrix over T = sum V_i has rows of V_i and columns
  of V_j; it is invariant when M = rho_i(g) g(M) rho_j(g)^-1, and each basis
  element of the invariant block is an arrow j -> i.
* For arrows Y: i -> k and X: k -> j the matrix product X.Y is the path
  i -> k -> j.  Relations are written in that order, so "EA" is E after A.
* Paths from i to j are ordered by (intermediate vertex, index of the first
  arrow, index of the second arrow); relation bases are in reduced row
  echelon form for that order.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from ..cyclotomic import Cyclo
from ..linalg import mat_inverse, nullspace, rref
from ..mckay import Quiver
from .groups import GroupModel

__all__ = [
    "Arrow",
    "Degree1",
    "QuadraticIdeal",
    "Relation",
    "RelationSet",
    "block_hom_dim",
    "invariant_degree1",
    "is_invariant",
    "relation_count_oracle",
    "relation_from_text",
    "relations_degree2",
    "reynolds_project",
    "tensor_power_matrix",
]


# -- helpers --------------------------------------------------------------

def _kron(a, b):
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def tensor_power_matrix(mat, k: int):
    out = [[mat[0][0] * 0 + 1]]
    for _ in range(k):
        out = _kron(out, mat)
    return out


def _apply(mat, vec):
    return [sum((x * v for x, v in zip(row, vec) if x and v), vec[0] * 0) for row in mat]


def _inner(model: GroupModel, a: Sequence[Cyclo], b: Sequence[Cyclo], c: Sequence[Cyclo]) -> Fraction:
    """(1/|G|) sum a(g) b(g) conj(c(g))."""
    total = model.zero()
    for x, y, z in zip(a, b, c):
        total = total + x * y * z.conjugate()
    q = (total / model.order).to_rational()
    if q.denominator != 1 or q < 0:
        raise ArithmeticError(f"non-integral multiplicity {q}")
    return q


def block_hom_dim(model: GroupModel, i: int, j: int) -> int:
    """dim Hom(V_j, V_i (x) V) by trace averaging."""
    chars = model.characters()
    return int(_inner(model, chars[i], model.defining_character(), chars[j]))


# -- degree 1 -----------------------------------------------------------------

@dataclass
class Arrow:
    name: str
    src: int
    dst: int
    block: list  # d_dst x d_src matrix of coefficient vectors of length n

    def entries(self):
        return [v for row in self.block for v in row]


@dataclass
class Degree1:
    model: GroupModel
    arrows: list[Arrow]
    quiver: Quiver

    def arrows_between(self, src: int, dst: int) -> list[Arrow]:
        return [a for a in self.arrows if a.src == src and a.dst == dst]

    def by_name(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)

    def full_matrix(self, coeffs: dict[str, Cyclo] | None = None):
        """The general degree-1 element sum_a coeffs[a] * a over T (coefficient 1 by default)."""
        return assemble(self.model, self.arrows, coeffs)


def _offsets(model: GroupModel) -> list[int]:
    out, acc = [], 0
    for rep in model.irreps:
        out.append(acc)
        acc += rep.degree
    return out + [acc]


def assemble(model: GroupModel, arrows: Iterable[Arrow], coeffs=None, degree: int = 1):
    off = _offsets(model)
    size = off[-1]
    width = model.dim**degree
    zero = model.zero()
    mat = [[[zero] * width for _ in range(size)] for _ in range(size)]
    for a in arrows:
        c = coeffs.get(a.name, zero) if coeffs is not None else model.one()
        if not c:
            continue
        for x, row in enumerate(a.block):
            for y, vec in enumerate(row):
                cell = mat[off[a.dst] + x][off[a.src] + y]
                mat[off[a.dst] + x][off[a.src] + y] = [u + c * v for u, v in zip(cell, vec)]
    return mat


def _block_action(rho_i, rho_j_inv, rho_v):
    """Matrix of M -> rho_i g(M) rho_j^-1 on vec(M), index (a, b, l)."""
    di, dj, n = len(rho_i), len(rho_j_inv), len(rho_v)
    N = di * dj * n
    zero = rho_v[0][0] * 0
    K = [[zero] * N for _ in range(N)]
    for a in range(di):
        for a2 in range(di):
            x = rho_i[a][a2]
            if not x:
                continue
            for b2 in range(dj):
                for b in range(dj):
                    y = rho_j_inv[b2][b]
                    if not y:
                        continue
                    xy = x * y
                    for l in range(n):
                        for l2 in range(n):
                            z = rho_v[l][l2]
                            if z:
                                K[(a * dj + b) * n + l][(a2 * dj + b2) * n + l2] = xy * z
    return K


def _gen_inverses(model: GroupModel):
    one, zero = model.one(), model.zero()
    return [[mat_inverse(img, one, zero) for img in rep.images] for rep in model.irreps]


def invariant_degree1(model: GroupModel, check: bool = True) -> Degree1:
    """Solve the invariance equations on generators for every block."""
    one, zero = model.one(), model.zero()
    n = model.dim
    inverses = _gen_inverses(model)
    names = model.irrep_names()
    arrows: list[Arrow] = []
    counts = {}
    for i, rep_i in enumerate(model.irreps):
        for j, rep_j in enumerate(model.irreps):
            N = rep_i.degree * rep_j.degree * n
            rows = []
            for g, gv in enumerate(model.generators):
                K = _block_action(rep_i.images[g], inverses[j][g], gv)
                for r_idx in range(N):
                    row = list(K[r_idx])
                    row[r_idx] = row[r_idx] - one
                    rows.append(row)
            basis = nullspace(rows, N, one, zero)
            if check and len(basis) != block_hom_dim(model, i, j):
                raise ArithmeticError(f"block ({names[i]}, {names[j]}): solution dimension disagrees with characters")
            for k, vec in enumerate(basis):
                block = [[vec[(a * rep_j.degree + b) * n:(a * rep_j.degree + b + 1) * n] for b in range(rep_j.degree)]
                         for a in range(rep_i.degree)]
                arrows.append(Arrow(f"{names[j]}>{names[i]}#{k}", j, i, block))
            if basis:
                counts[(j, i)] = len(basis)
    quiver = Quiver(
        model.name, 1, 1, n, tuple(names), tuple(r.degree for r in model.irreps),
        tuple((s, t, m) for (s, t), m in sorted(counts.items())), labels=tuple(names),
    )
    return Degree1(model, arrows, quiver)


def is_invariant(model: GroupModel, arrow: Arrow, degree: int = 1) -> bool:
    """Check M = rho_dst(g) g(M) rho_src(g)^-1 on the generators."""
    inverses = _gen_inverses(model)
    for g, gv in enumerate(model.generators):
        act = tensor_power_matrix(gv, degree)
        rho_i = model.irreps[arrow.dst].images[g]
        rho_j_inv = inverses[arrow.src][g]
        moved = [[_apply(act, v) for v in row] for row in arrow.block]
        out = _matvec_product(_matvec_product_left(rho_i, moved), rho_j_inv)
        if any(x != y for r1, r2 in zip(out, arrow.block) for v1, v2 in zip(r1, r2) for x, y in zip(v1, v2)):
            return False
    return True


def _matvec_product_left(scalars, vecmat):
    """scalar matrix times matrix of vectors."""
    zero_vec = [x * 0 for x in vecmat[0][0]]
    out = []
    for row in scalars:
        new = []
        for b in range(len(vecmat[0])):
            acc = list(zero_vec)
            for c, x in enumerate(row):
                if x:
                    acc = [u + x * v for u, v in zip(acc, vecmat[c][b])]
            new.append(acc)
        out.append(new)
    return out


def _matvec_product(vecmat, scalars):
    """matrix of vectors times scalar matrix."""
    zero_vec = [x * 0 for x in vecmat[0][0]]
    out = []
    for row in vecmat:
        new = []
        for b in range(len(scalars[0])):
            acc = list(zero_vec)
            for c, vec in enumerate(row):
                x = scalars[c][b]
                if x:
                    acc = [u + x * v for u, v in zip(acc, vec)]
            new.append(acc)
        out.append(new)
    return out


# -- quadratic ideals ------------------------------------------------------------

@dataclass
class QuadraticIdeal:
    n: int
    basis: list  # vectors of length n*n
    tag: str = "custom"
    _red: list = field(default=None, init=False, repr=False)
    _piv: list = field(default=None, init=False, repr=False)

    def __post_init__(self):
        if any(len(v) != self.n * self.n for v in self.basis):
            raise ValueError("ideal generators must have n^2 coordinates")
        self._red, self._piv = rref(self.basis, self.n * self.n) if self.basis else ([], [])

    @property
    def dim(self) -> int:
        return len(self._piv)

    @classmethod
    def free(cls, n: int, m: int = 1):
        return cls(n, [], "free")

    @classmethod
    def symmetric(cls, n: int, m: int = 1):
        vecs = []
        for i in range(n):
            for j in range(i + 1, n):
                v = [Cyclo.rational(0, m)] * (n * n)
                v[i * n + j] = Cyclo.rational(1, m)
                v[j * n + i] = Cyclo.rational(-1, m)
                vecs.append(v)
        return cls(n, vecs, "symmetric")

    @classmethod
    def exterior(cls, n: int, m: int = 1):
        vecs = []
        for i in range(n):
            for j in range(i, n):
                v = [Cyclo.rational(0, m)] * (n * n)
                v[i * n + j] = Cyclo.rational(1, m)
                v[j * n + i] = Cyclo.rational(1, m)
                vecs.append(v)
        return cls(n, vecs, "exterior")

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[Sequence], m: int = 1, tag: str = "custom"):
        vecs = [[x if isinstance(x, Cyclo) else Cyclo.rational(x, m) for x in row] for row in rows]
        return cls(n, vecs, tag)

    def __add__(self, other: "QuadraticIdeal") -> "QuadraticIdeal":
        return QuadraticIdeal(self.n, self.basis + other.basis, "custom")

    def reduce(self, vec):
        """Coordinates of vec in (V(x)V)/I on the non-pivot positions."""
        v = list(vec)
        for row, p in zip(self._red, self._piv):
            c = v[p]
            if c:
                v = [x - c * y if y else x for x, y in zip(v, row)]
        piv = set(self._piv)
        return [x for k, x in enumerate(v) if k not in piv]

    def character(self, model: GroupModel) -> list[Cyclo]:
        """Trace of each group element on the span of the ideal."""
        out = []
        for g in model.elements:
            act = tensor_power_matrix(g, 2)
            t = model.zero()
            for row, p in zip(self._red, self._piv):
                t = t + _apply(act, row)[p]
            out.append(t)
        return out

    def check_stable(self, model: GroupModel) -> None:
        for g in model.generators:
            act = tensor_power_matrix(g, 2)
            for row in self._red:
                if any(self.reduce(_apply(act, row))):
                    raise ValueError(f"ideal ({self.tag}) is not stable under the group")


# -- relations ----------------------------------------------------------------------

_SIMPLE = re.compile(r"^[A-Za-z]\*?$")


@dataclass
class Relation:
    src: int
    dst: int
    terms: list  # (coefficient, second arrow name, first arrow name)

    def text(self) -> str:
        parts = []
        for c, x, y in self.terms:
            if _SIMPLE.match(x) and _SIMPLE.match(y):
                word = f"{x}^2" if x == y and len(x) == 1 else x + y
            else:
                word = f"{x}.{y}"
            if c == 1:
                coef = "+"
            elif c == -1:
                coef = "-"
            elif c.is_rational():
                q = c.to_rational()
                coef = ("+" if q > 0 else "-") + str(abs(q))
            else:
                coef = f"+({c})"
            parts.append(coef + word)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


@dataclass
class RelationSet:
    paths: dict  # (src, dst) -> list of (second, first) arrow names
    relations: dict  # (src, dst) -> list of coefficient rows (rref)
    ideal_tag: str

    def all(self) -> list[Relation]:
        out = []
        for key in sorted(self.relations):
            for row in self.relations[key]:
                terms = [(c, x, y) for c, (x, y) in zip(row, self.paths[key]) if c]
                out.append(Relation(key[0], key[1], terms))
        return out

    def count(self, src: int, dst: int) -> int:
        return len(self.relations.get((src, dst), []))

    def total(self) -> int:
        return sum(len(v) for v in self.relations.values())

    def span_equals(self, key, rows) -> bool:
        """Whether the given coefficient rows span the computed relation space at key."""
        mine = self.relations.get(key, [])
        if not rows:
            return not mine
        red, piv = rref(rows, len(self.paths[key]))
        return len(red) == len(mine) and all(
            all(a == b for a, b in zip(r1, r2)) for r1, r2 in zip(red, mine)
        )


def _path_product(x: Arrow, y: Arrow, n: int):
    """Block of X.Y with entries in V(x)V: sum_c X[a][c] (x) Y[c][b]."""
    rows = []
    for a in range(len(x.block)):
        row = []
        for b in range(len(y.block[0])):
            acc = None
            for c in range(len(y.block)):
                u, v = x.block[a][c], y.block[c][b]
                t = [p * q for p in u for q in v]
                acc = t if acc is None else [s + w for s, w in zip(acc, t)]
            row.append(acc)
        rows.append(row)
    return rows


def relations_degree2(deg1: Degree1, ideal: QuadraticIdeal, check: bool = True) -> RelationSet:
    model = deg1.model
    n = model.dim
    one, zero = model.one(), model.zero()
    ideal.check_stable(model)
    nv = len(model.irreps)
    paths, rels = {}, {}
    for i in range(nv):
        for j in range(nv):
            cols, names = [], []
            for k in range(nv):
                for y in deg1.arrows_between(i, k):
                    for x in deg1.arrows_between(k, j):
                        prod = _path_product(x, y, n)
                        cols.append([c for row in prod for v in row for c in ideal.reduce(v)])
                        names.append((x.name, y.name))
            if not cols:
                continue
            paths[(i, j)] = names
            mat = [list(r) for r in zip(*cols)]
            kernel = nullspace(mat, len(cols), one, zero)
            red = rref(kernel, len(cols))[0] if kernel else []
            if check and len(red) != relation_count_oracle(model, ideal, i, j):
                raise ArithmeticError(f"relation count at ({i}, {j}) disagrees with characters")
            if red:
                rels[(i, j)] = red
    return RelationSet(paths, rels, ideal.tag)


def relation_count_oracle(model: GroupModel, ideal: QuadraticIdeal, src: int, dst: int) -> int:
    """dim Hom(V_src, V_dst (x) I) by trace averaging."""
    chars = model.characters()
    return int(_inner(model, chars[dst], ideal.character(model), chars[src]))


def relation_from_text(text: str, paths: Sequence[tuple[str, str]], m: int = 1) -> list[Cyclo]:
    """Coefficient row for a relation such as ``AB+DC-2E^2`` or ``3GG*+12CC*``.

    Arrow names are single letters with an optional ``*``.
    """
    row = [Cyclo.rational(0, m)] * len(paths)
    s = text.replace(" ", "")
    if s and s[0] not in "+-":
        s = "+" + s
    for sign, num, word in re.findall(r"([+-])(\d*)([A-Za-z*^0-9]+)", s):
        coef = Fraction(int(num) if num else 1) * (-1 if sign == "-" else 1)
        if word.endswith("^2"):
            x = y = word[:-2]
        else:
            names = re.findall(r"[A-Za-z]\*?", word)
            if len(names) != 2 or "".join(names) != word:
                raise ValueError(f"cannot read path {word!r}")
            x, y = names
        try:
            pos = paths.index((x, y))
        except ValueError:
            raise ValueError(f"{x}{y} is not a path between these vertices") from None
        row[pos] = row[pos] + coef
    return row


# -- Reynolds operator -----------------------------------------------------------------

def reynolds_project(model: GroupModel, mat, degree: int = 1):
    """(1/|G|) sum_g rho_T(g) g(M) rho_T(g)^-1 for M over T with entries in V^(x)degree."""
    off = _offsets(model)
    size = off[-1]
    one, zero = model.one(), model.zero()
    width = model.dim**degree
    acc = [[[zero] * width for _ in range(size)] for _ in range(size)]
    for e, g in enumerate(model.elements):
        act = tensor_power_matrix(g, degree)
        rho = [[zero] * size for _ in range(size)]
        for r_idx, rep in enumerate(model.irreps):
            img = model.irrep_elements[r_idx][e]
            for a in range(rep.degree):
                for b in range(rep.degree):
                    rho[off[r_idx] + a][off[r_idx] + b] = img[a][b]
        rho_inv = mat_inverse(rho, one, zero)
        moved = [[_apply(act, v) for v in row] for row in mat]
        out = _matvec_product(_matvec_product_left(rho, moved), rho_inv)
        acc = [[[u + w for u, w in zip(c1, c2)] for c1, c2 in zip(r1, r2)] for r1, r2 in zip(acc, out)]
    return [[[x / model.order for x in cell] for cell in row] for row in acc]


def to_json(deg1: Degree1, rels: RelationSet | None = None) -> str:
    names = deg1.model.irrep_names()
    data = {
        "schema_version": 1,
        "group": deg1.model.name,
        "order": deg1.model.order,
        "vertices": [{"label": nm, "dim": r.degree} for nm, r in zip(names, deg1.model.irreps)],
        "arrows": [
            {"name": a.name, "src": a.src, "dst": a.dst,
             "matrix": [[[c.to_json() for c in v] for v in row] for row in a.block]}
            for a in deg1.arrows
        ],
    }
    if rels is not None:
        data["ideal"] = rels.ideal_tag
        data["relations"] = [
            {"src": r.src, "dst": r.dst, "text": r.text(),
             "terms": [{"coeff": c.to_json(), "second": x, "first": y} for c, x, y in r.terms]}
            for r in rels.all()
        ]
    return json.dumps(data, indent=2)
