"""Invariant 4x4 matrices over K[x, y] for S3 acting on T = triv + rho21 + sgn.

The closed form checked here: a matrix is invariant exactly when it reads

    [[a00,   a01,   s1 a01,  a03   ],
     [a10,   a+b,   c,       a13   ],
     [s1 a10, s1 c, a-b,     -s1 a13],
     [a30,   a31,   -s1 a31, a33   ]]

with a, a00, a33 invariant, b, a03, a30 sign-invariant, u in {a10, a13}
killed by s1 - w^2 s2 and v in {c, a01, a31} killed by s1 - w s2.
:func:`verify_invariant_shape_s3` compares the span of these matrices with
the invariant subspace computed directly, degree by degree.
"""

from __future__ import annotations

from ..cyclotomic import Cyclo
from ..linalg import mat_inverse, nullspace, rank
from .groups import GroupModel, s3_model

__all__ = [
    "forms_killed_by",
    "invariant_matrices",
    "is_invariant_matrix",
    "shape_matrices",
    "verify_invariant_shape_s3",
]

SIZE = 4


def _poly_action(g, d: int):
    """Matrix of f -> f(g x, g y) on x^(d-k) y^k, k = 0..d.

    g sends the linear form with coefficients c to g c, so x -> g00 x + g10 y.
    """
    zero = g[0][0] * 0
    gx = [g[0][0], g[1][0]]
    gy = [g[0][1], g[1][1]]
    cols = []
    for k in range(d + 1):
        poly = [zero + 1]
        for form in [gx] * (d - k) + [gy] * k:
            nxt = [zero] * (len(poly) + 1)
            for e, c in enumerate(poly):
                nxt[e] = nxt[e] + c * form[0]
                nxt[e + 1] = nxt[e + 1] + c * form[1]
            poly = nxt
        cols.append(poly)
    return [list(r) for r in zip(*cols)]


def _apply(mat, vec):
    zero = vec[0] * 0
    return [sum((x * v for x, v in zip(row, vec)), zero) for row in mat]


def _rho_T(model: GroupModel, gen: int):
    zero, one = model.zero(), model.one()
    out = [[zero] * SIZE for _ in range(SIZE)]
    off = 0
    for rep in model.irreps:
        img = rep.images[gen]
        for a in range(rep.degree):
            for b in range(rep.degree):
                out[off + a][off + b] = img[a][b]
        off += rep.degree
    return out, mat_inverse(out, one, zero)


def _act(model: GroupModel, gen: int, mat, d: int):
    """rho_T(g) g(M) rho_T(g)^-1 for a 4x4 matrix of degree-d coefficient vectors."""
    rho, rho_inv = _rho_T(model, gen)
    P = _poly_action(model.generators[gen], d)
    zero_vec = [model.zero()] * (d + 1)
    moved = [[_apply(P, v) for v in row] for row in mat]
    left = [[_sum([_scale(rho[a][c], moved[c][b]) for c in range(SIZE)], zero_vec) for b in range(SIZE)]
            for a in range(SIZE)]
    return [[_sum([_scale(rho_inv[c][b], left[a][c]) for c in range(SIZE)], zero_vec) for b in range(SIZE)]
            for a in range(SIZE)]


def _scale(x, vec):
    return [x * v for v in vec]


def _sum(vecs, zero_vec):
    out = list(zero_vec)
    for v in vecs:
        out = [a + b for a, b in zip(out, v)]
    return out


def _flatten(mat):
    return [c for row in mat for v in row for c in v]


def _unflatten(vec, d: int):
    w = d + 1
    return [[vec[(a * SIZE + b) * w:(a * SIZE + b + 1) * w] for b in range(SIZE)] for a in range(SIZE)]


def is_invariant_matrix(mat, d: int, model: GroupModel | None = None) -> bool:
    model = model or s3_model()
    return all(_act(model, g, mat, d) == mat for g in range(len(model.generators)))


def invariant_matrices(d: int, model: GroupModel | None = None) -> list:
    """Basis (flattened) of the invariant 4x4 matrices with degree-d entries."""
    model = model or s3_model()
    N = SIZE * SIZE * (d + 1)
    one, zero = model.one(), model.zero()
    rows = []
    for g in range(len(model.generators)):
        for k in range(N):
            e = [zero] * N
            e[k] = one
            img = _flatten(_act(model, g, _unflatten(e, d), d))
            img[k] = img[k] - one
            rows.append(img)
    # rows above are columns of (g - 1); transpose to get the operator
    op = [list(r) for r in zip(*rows[:N])] + [list(r) for r in zip(*rows[N:])]
    return nullspace(op, N, one, zero)


def forms_killed_by(d: int, c1, c2, model: GroupModel | None = None) -> list:
    """Basis of degree-d polynomials f with (c1 s1 + c2 s2) f = 0."""
    model = model or s3_model()
    P1 = _poly_action(model.generators[0], d)
    P2 = _poly_action(model.generators[1], d)
    op = [[c1 * a + c2 * b for a, b in zip(r1, r2)] for r1, r2 in zip(P1, P2)]
    return nullspace(op, d + 1, model.one(), model.zero())


def _isotypic(d: int, sign: int, model: GroupModel):
    """Polynomials f with s f = sign * f for both generators."""
    one, zero = model.one(), model.zero()
    rows = []
    for g in model.generators:
        P = _poly_action(g, d)
        rows += [[x - (sign * one if i == j else zero) for j, x in enumerate(row)] for i, row in enumerate(P)]
    return nullspace(rows, d + 1, one, zero)


def shape_matrices(d: int, model: GroupModel | None = None) -> list:
    """Flattened matrices of the closed form, one per basis element of each parameter space."""
    model = model or s3_model()
    w = Cyclo.zeta(3)
    zero = model.zero()
    s1 = _poly_action(model.generators[0], d)
    zero_vec = [zero] * (d + 1)
    one = model.one()
    inv = _isotypic(d, 1, model)
    anti = _isotypic(d, -1, model)
    U = forms_killed_by(d, one, -w * w, model)
    V = forms_killed_by(d, one, -w, model)
    neg = lambda v: [-x for x in v]  # noqa: E731

    def place(cells):
        mat = [[list(zero_vec) for _ in range(SIZE)] for _ in range(SIZE)]
        for (a, b), vec in cells:
            mat[a][b] = [x + y for x, y in zip(mat[a][b], vec)]
        return _flatten(mat)

    out = []
    for f in inv:
        out.append(place([((1, 1), f), ((2, 2), f)]))  # a
        out.append(place([((0, 0), f)]))
        out.append(place([((3, 3), f)]))
    for f in anti:
        out.append(place([((1, 1), f), ((2, 2), neg(f))]))  # b
        out.append(place([((0, 3), f)]))
        out.append(place([((3, 0), f)]))
    for u in U:
        su = _apply(s1, u)
        out.append(place([((1, 0), u), ((2, 0), su)]))  # a10
        out.append(place([((1, 3), u), ((2, 3), neg(su))]))  # a13
    for v in V:
        sv = _apply(s1, v)
        out.append(place([((1, 2), v), ((2, 1), sv)]))  # c
        out.append(place([((0, 1), v), ((0, 2), sv)]))  # a01
        out.append(place([((3, 1), v), ((3, 2), neg(sv))]))  # a31
    return out


def verify_invariant_shape_s3(max_degree: int = 3) -> bool:
    """The closed form spans exactly the invariants in each degree 0..max_degree."""
    model = s3_model()
    for d in range(max_degree + 1):
        inv = invariant_matrices(d, model)
        shape = shape_matrices(d, model)
        N = SIZE * SIZE * (d + 1)
        if not all(is_invariant_matrix(_unflatten(v, d), d, model) for v in shape):
            return False
        r_inv = rank(inv, N) if inv else 0
        r_shape = rank(shape, N) if shape else 0
        if r_inv != r_shape or rank(inv + shape, N) != r_inv:
            return False
    return True
