"""Hand-written arrow bases with letter names for the small examples.

Each arrow is given as (src, dst, block) where the block has rows of V_dst
and columns of V_src, and every entry is a linear form written as a tuple of
coefficients over x, y.  These bases reproduce the textbook presentations of
the D4 and S3 examples; :func:`lettered_degree1` checks that they are
invariant and span the degree-1 space before anything else uses them.
"""

from __future__ import annotations

from ..cyclotomic import Cyclo
from ..linalg import rank
from ..mckay import Quiver
from .algebra import Arrow, Degree1, block_hom_dim, is_invariant
from .groups import GroupModel, d4_model, s3_model

__all__ = ["D4_LETTERS", "S3_LETTERS", "lettered_degree1", "d4_lettered", "s3_lettered"]

X, Y, MX, MY, O = (1, 0), (0, 1), (-1, 0), (0, -1), (0, 0)

# vertices V0..V3 (one-dimensional) and V4 (defining)
D4_LETTERS = {
    "A": (4, 0, [[X, Y]]),
    "B": (4, 1, [[X, MY]]),
    "C": (4, 2, [[Y, X]]),
    "D": (4, 3, [[Y, MX]]),
    "E": (0, 4, [[Y], [X]]),
    "F": (1, 4, [[Y], [MX]]),
    "G": (2, 4, [[X], [Y]]),
    "H": (3, 4, [[X], [MY]]),
}

# vertices triv, rho21, sgn
S3_LETTERS = {
    "A": (0, 1, [[Y], [X]]),
    "B": (1, 0, [[X, Y]]),
    "C": (1, 2, [[X, MY]]),
    "D": (2, 1, [[Y], [MX]]),
    "E": (1, 1, [[O, X], [Y, O]]),
}


def lettered_degree1(model: GroupModel, letters: dict) -> Degree1:
    """Build a Degree1 from named blocks, checking invariance and that they form a basis."""
    m = model.order_m
    arrows = []
    for name, (src, dst, block) in letters.items():
        cyc = [[[Cyclo.rational(c, m) for c in form] for form in row] for row in block]
        arrow = Arrow(name, src, dst, cyc)
        if not is_invariant(model, arrow):
            raise ValueError(f"arrow {name} is not invariant")
        arrows.append(arrow)
    counts = {}
    for a in arrows:
        counts[(a.src, a.dst)] = counts.get((a.src, a.dst), 0) + 1
    nv = len(model.irreps)
    for j in range(nv):
        for i in range(nv):
            group = [a.entries() for a in arrows if (a.src, a.dst) == (j, i)]
            flat = [[c for v in e for c in v] for e in group]
            need = block_hom_dim(model, i, j)
            if len(group) != need or (group and rank(flat, len(flat[0])) != need):
                raise ValueError(f"arrows {j}->{i} do not form a basis of the invariant block")
    names = model.irrep_names()
    quiver = Quiver(
        model.name, 1, 1, model.dim, tuple(names), tuple(r.degree for r in model.irreps),
        tuple((s, t, k) for (s, t), k in sorted(counts.items())), labels=tuple(names),
    )
    return Degree1(model, arrows, quiver)


def d4_lettered() -> Degree1:
    return lettered_degree1(d4_model(), D4_LETTERS)


def s3_lettered() -> Degree1:
    return lettered_degree1(s3_model(), S3_LETTERS)
