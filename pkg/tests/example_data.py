"""Relation lists and arrow names for the small Lusztig algebra examples."""

from mckayquiver.lusztig import QuadraticIdeal, builtin_reps, invariant_degree1, relations_degree2
from mckayquiver.lusztig.algebra import relation_from_text

# S4 vertices: 0=(4), 1=(3,1), 2=(2,2), 3=(2,1,1), 4=(1,1,1,1)
S4_NAMES = {
    (0, 1): "A", (1, 0): "A*", (1, 3): "G", (3, 1): "G*", (3, 4): "D", (4, 3): "D*",
    (1, 2): "B", (2, 1): "B*", (2, 3): "C", (3, 2): "C*", (1, 1): "F", (3, 3): "E",
}

S4_REFERENCE = [
    "GA", "A*G*", "G*D*", "DG",
    "BG*+3C*E", "-GB*+3EC*", "2FB*+G*C", "-2BF+C*G",
    "2FG*+4B*C*-G*E", "-2GF+4CB+EG",
    "3GG*+12CC*+3E^2+16D*D", "-32AA*+12F^2+4B*B+3G*G",
]

# EC* replaced by the composable EC and the two signs in the three-term pair flipped
S4_CORRECTED = list(S4_REFERENCE)
S4_CORRECTED[5] = "-GB*+3EC"
S4_CORRECTED[8] = "2FG*+4B*C*+G*E"
S4_CORRECTED[9] = "-2GF+4CB-EG"

# the other consistent repair: flip the signs of the two-term pair instead
S4_CORRECTED_ALT = list(S4_REFERENCE)
S4_CORRECTED_ALT[4] = "BG*-3C*E"
S4_CORRECTED_ALT[5] = "-GB*-3EC"

D4_SYM = ["AF", "BE", "CH", "DG", "EA+FB-GC-HD"]
D4_EXT = ["AE", "AG", "AH", "BF", "BG", "BH", "CE", "CF", "CG", "DE", "DF", "DH", "EA+HD", "FB+HD", "GC-HD"]

S3_CASES = {
    1: [],
    2: ["BA", "CD", "AB+DC+2E^2"],
    3: ["BE", "ED", "CE", "EA", "AB-DC"],
    4: ["BD", "CA", "AB+DC-2E^2"],
    5: ["BA", "BE", "EA", "ED", "CE", "CD", "AB+E^2", "DC+E^2"],
    6: ["BA", "BD", "CA", "CD", "AB+DC", "E^2"],
    7: ["BE", "EA", "ED", "CE", "CA", "BD", "AB-E^2", "DC-E^2"],
    8: ["BA", "BE", "BD", "EA", "E^2", "ED", "CA", "CE", "CD", "AB", "DC"],
}


def s3_ideal(case, m=3):
    rows = {
        1: [[0, 1, 1, 0]],  # xy + yx
        2: [[1, 0, 0, 0], [0, 0, 0, 1]],  # x^2, y^2
        3: [[0, 1, -1, 0]],  # xy - yx
    }
    parts = [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)][case - 1]
    if not parts:
        return QuadraticIdeal.free(2, m)
    return QuadraticIdeal.from_rows(2, [row for k in parts for row in rows[k]], m)


def s4_degree1():
    deg1 = invariant_degree1(builtin_reps("s4"))
    for a in deg1.arrows:
        a.name = S4_NAMES[(a.src, a.dst)]
    return deg1


def s4_relations():
    return relations_degree2(s4_degree1(), QuadraticIdeal.symmetric(3))


def locate(rels, text):
    """(key, row) for the vertex pair whose paths can express the relation, else None."""
    for key, paths in rels.paths.items():
        try:
            return key, relation_from_text(text, paths)
        except ValueError:
            continue
    return None


def rescaling_pairs(rels, texts):
    """Pairs (paths, ours, target) for solve_rescaling; None if a relation is not expressible."""
    pairs = []
    for text in texts:
        found = locate(rels, text)
        if found is None:
            return None
        key, row = found
        ours = rels.relations.get(key, [])
        if len(ours) != 1:
            return None
        pairs.append((rels.paths[key], [c.to_rational() for c in ours[0]], [c.to_rational() for c in row]))
    return pairs
