from collections import Counter
from fractions import Fraction
import warnings

import pytest

from mckayquiver.cyclotomic import Cyclo
from mckayquiver.lusztig import (
    QuadraticIdeal,
    builtin_reps,
    group_closure,
    invariant_degree1,
    relation_count_oracle,
    relations_degree2,
    reynolds_project,
)
from mckayquiver.lusztig.algebra import block_hom_dim, is_invariant, relation_from_text, to_json
from mckayquiver.lusztig.groups import grpn_monomial_model
from mckayquiver.lusztig.lettered import d4_lettered, s3_lettered
from mckayquiver.lusztig.rescale import arrow_ratios, solve_rescaling, translate_relation
from mckayquiver.lusztig.s3 import invariant_matrices, is_invariant_matrix, shape_matrices, verify_invariant_shape_s3
from mckayquiver.mckay import mckay_grpn, mckay_sn

from example_data import (
    D4_EXT,
    D4_SYM,
    S3_CASES,
    S4_CORRECTED,
    S4_CORRECTED_ALT,
    S4_NAMES,
    S4_REFERENCE,
    locate,
    rescaling_pairs,
    s3_ideal,
    s4_degree1,
    s4_relations,
)


def expressed(rels, texts):
    """Group reference relations by vertex pair and compare spans with the computed ones."""
    rows = {}
    for t in texts:
        key, row = locate(rels, t)
        rows.setdefault(key, []).append(row)
    keys = set(rows) | set(rels.relations)
    return all(rels.span_equals(k, rows.get(k, [])) for k in keys)


@pytest.fixture(scope="module")
def s4_rels():
    return s4_relations()


# -- groups ---------------------------------------------------------------------------

@pytest.mark.parametrize("name,order", [("d4", 8), ("s3", 6), ("s4", 24), ("sn(5)", 120), ("abelian:3:1,2", 3),
                                        ("abelian:2:1,0;0,1", 4), ("grpn:3,3,2", 6)])
def test_model_orders(name, order):
    model = builtin_reps(name)
    assert model.order == order
    assert sum(rep.degree**2 for rep in model.irreps) == order


def test_closure_of_a_rotation():
    z = Cyclo.zeta(4)
    o = Cyclo.rational(0, 4)
    elements, _ = group_closure([[[z, o], [o, -z]]])
    assert len(elements) == 4


def test_closure_rejects_inconsistent_images():
    one, o = Cyclo.rational(1, 2), Cyclo.rational(0, 2)
    swap = [[o, one], [one, o]]
    with pytest.raises(ValueError):
        group_closure([swap], companions=[[[[Cyclo.zeta(4)]]]])


def test_unknown_model():
    with pytest.raises(ValueError):
        builtin_reps("e8")
    with pytest.raises(ValueError):
        builtin_reps("abelian:3:x")


# -- degree one -------------------------------------------------------------------------

def test_d4_degree1_support():
    deg1 = invariant_degree1(builtin_reps("d4"))
    assert len(deg1.arrows) == 8
    pairs = Counter((a.src, a.dst) for a in deg1.arrows)
    assert pairs == Counter({(4, i): 1 for i in range(4)} | {(i, 4): 1 for i in range(4)})


def test_s3_degree1():
    deg1 = invariant_degree1(builtin_reps("s3"))
    assert len(deg1.arrows) == 5
    assert Counter((a.src, a.dst) for a in deg1.arrows) == Counter({(0, 1): 1, (1, 0): 1, (1, 2): 1, (2, 1): 1, (1, 1): 1})


def test_s4_quiver_is_the_mckay_quiver():
    deg1 = s4_degree1()
    q = mckay_sn(4)
    assert list(deg1.quiver.keys) == [str(lam) for lam in q.keys]
    assert deg1.quiver.arrows == q.arrows
    assert sorted(a.name for a in deg1.arrows) == sorted(S4_NAMES.values())


@pytest.mark.parametrize("r,p,n", [(2, 2, 3), (3, 1, 2), (4, 1, 2), (3, 3, 3), (2, 1, 3)])
def test_monomial_models_give_the_dual_mckay_quiver(r, p, n):
    # entries are linear forms, so arrows run against those of Gamma(G, V)
    deg1 = invariant_degree1(grpn_monomial_model(r, p, n))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        q = mckay_grpn(r, p, n)
    labels = [k.text() for k in q.keys]
    ours = Counter({(deg1.quiver.keys[s], deg1.quiver.keys[t]): m for s, t, m in deg1.quiver.arrows})
    want = Counter({(labels[t], labels[s]): m for s, t, m in q.arrows})
    assert ours == want


def test_arrows_are_invariant_and_counted_by_characters():
    model = builtin_reps("s4")
    deg1 = invariant_degree1(model)
    assert all(is_invariant(model, a) for a in deg1.arrows)
    for i in range(5):
        for j in range(5):
            assert len(deg1.arrows_between(j, i)) == block_hom_dim(model, i, j)


def test_abelian_mu3_arrows_are_monomials():
    model = builtin_reps("abelian:3:1,2")
    deg1 = invariant_degree1(model)
    chars = [imgs[1][0][0] for imgs in model.irrep_elements]  # value on the generator
    gen = model.elements[1]
    weight = [gen[l][l] for l in range(2)]
    assert len(deg1.arrows) == 3 * 2
    for a in deg1.arrows:
        (form,) = a.entries()
        support = [l for l, c in enumerate(form) if c]
        assert len(support) == 1
        (l,) = support
        # rho_src = rho_dst (x) rho_l
        assert chars[a.src] == chars[a.dst] * weight[l]
    for i in range(3):
        assert sorted(next(l for l, c in enumerate(a.entries()[0]) if c) for a in deg1.arrows if a.dst == i) == [0, 1]


@pytest.mark.parametrize("spec,nv", [("abelian:3:1,2", 3), ("abelian:2:1,0;0,1", 4)])
def test_abelian_commuting_squares(spec, nv):
    model = builtin_reps(spec)
    deg1 = invariant_degree1(model)
    rels = relations_degree2(deg1, QuadraticIdeal.symmetric(2, model.order_m))

    def letter(name):
        a = deg1.by_name(name)
        ((form,),) = a.block
        ((l, c),) = [(l, c) for l, c in enumerate(form) if c]
        return l, c

    assert rels.total() == nv
    for rel in rels.all():
        assert len(rel.terms) == 2
        (c1, x1, y1), (c2, x2, y2) = rel.terms
        (lx1, ax1), (ly1, ay1) = letter(x1), letter(y1)
        (lx2, ax2), (ly2, ay2) = letter(x2), letter(y2)
        assert lx1 != ly1 and (lx1, ly1) == (ly2, lx2)
        # M_ik M_kj - M_ik' M_k'j once the arrows are scaled to monomials x_l
        assert c1 * ax1 * ay1 == -(c2 * ax2 * ay2)


# -- relations -------------------------------------------------------------------------------

def test_free_ideal_has_no_relations():
    rels = relations_degree2(invariant_degree1(builtin_reps("s3")), QuadraticIdeal.free(2, 3))
    assert rels.total() == 0


def test_unstable_ideal_is_rejected():
    deg1 = invariant_degree1(builtin_reps("s3"))
    with pytest.raises(ValueError):
        relations_degree2(deg1, QuadraticIdeal.from_rows(2, [[1, 0, 0, 0]], 3))


def test_d4_lettered_relations():
    deg1 = d4_lettered()
    model = deg1.model
    sym = relations_degree2(deg1, QuadraticIdeal.symmetric(2, model.order_m))
    ext = relations_degree2(deg1, QuadraticIdeal.exterior(2, model.order_m))
    assert sorted(r.text() for r in sym.all()) == sorted(D4_SYM)
    assert expressed(sym, D4_SYM) and expressed(ext, D4_EXT)
    assert ext.total() == 15


def test_d4_lettered_matches_the_computed_basis():
    model = builtin_reps("d4")
    auto = invariant_degree1(model)
    lettered = d4_lettered()
    ratios = arrow_ratios(auto, lettered)
    assert len(ratios) == 8
    for ideal in (QuadraticIdeal.symmetric(2, model.order_m), QuadraticIdeal.exterior(2, model.order_m)):
        ours = relations_degree2(auto, ideal)
        theirs = relations_degree2(lettered, ideal)
        for key, rows in theirs.relations.items():
            moved = [translate_relation(row, theirs.paths[key], ratios, ours.paths[key]) for row in rows]
            assert ours.span_equals(key, moved)
        assert ours.total() == theirs.total()


def test_d4_relation_counts_match_characters():
    model = builtin_reps("d4")
    deg1 = invariant_degree1(model)
    for ideal in (QuadraticIdeal.symmetric(2, model.order_m), QuadraticIdeal.exterior(2, model.order_m)):
        rels = relations_degree2(deg1, ideal, check=False)
        for i in range(5):
            for j in range(5):
                assert rels.count(i, j) == relation_count_oracle(model, ideal, i, j)


@pytest.mark.parametrize("case", sorted(S3_CASES))
def test_s3_cases(case):
    deg1 = s3_lettered()
    rels = relations_degree2(deg1, s3_ideal(case))
    assert rels.total() == len(S3_CASES[case])
    assert expressed(rels, S3_CASES[case])


def test_s3_lettered_basis_is_a_rescaling_of_the_computed_one():
    auto = invariant_degree1(builtin_reps("s3"))
    ratios = arrow_ratios(auto, s3_lettered())
    assert sorted(ratios) == list("ABCDE")
    assert all(lam for _, lam in ratios.values())


def test_relation_parser():
    paths = [("A", "B"), ("E", "E"), ("D", "C")]
    row = relation_from_text("AB+DC-2E^2", paths)
    assert row == [1, -2, 1]
    with pytest.raises(ValueError):
        relation_from_text("AC", paths)


def test_s4_relation_count_and_distribution(s4_rels):
    model = builtin_reps("s4")
    ideal = QuadraticIdeal.symmetric(3)
    assert s4_rels.total() == 12
    for i in range(5):
        for j in range(5):
            assert s4_rels.count(i, j) == relation_count_oracle(model, ideal, i, j)
    profile = Counter(len(r.terms) for r in s4_rels.all())
    assert profile == Counter({1: 4, 2: 4, 3: 2, 4: 2})


def test_s4_reference_list_is_not_composable(s4_rels):
    # EC* would run from (2,2) through (2,1,1) back into (2,2) on the wrong side
    assert locate(s4_rels, "-GB*+3EC*") is None
    assert all(locate(s4_rels, t) is not None for t in S4_REFERENCE if t != "-GB*+3EC*")


def test_s4_signs_need_a_correction(s4_rels):
    names = sorted(S4_NAMES.values())
    only_ec = list(S4_REFERENCE)
    only_ec[5] = "-GB*+3EC"
    assert solve_rescaling(names, rescaling_pairs(s4_rels, only_ec)) is None


@pytest.mark.parametrize("texts,e_scale", [(S4_CORRECTED, Fraction(-8, 3)), (S4_CORRECTED_ALT, Fraction(8, 3))])
def test_s4_corrected_relations_match_after_rescaling(s4_rels, texts, e_scale):
    names = sorted(S4_NAMES.values())
    lam = solve_rescaling(names, rescaling_pairs(s4_rels, texts))
    assert lam is not None
    assert lam["E"] == e_scale
    assert lam["G*"] == 6 and lam["B*"] == -3 and lam["D"] == Fraction(-4, 3)


# -- Reynolds operator --------------------------------------------------------------------------

def test_reynolds_projection_is_idempotent_and_invariant():
    model = builtin_reps("s3")
    m = model.order_m
    size = sum(rep.degree for rep in model.irreps)
    mat = [[[Cyclo.rational((a * 7 + b * 3 + k) % 5 - 2, m) for k in range(2)] for b in range(size)] for a in range(size)]
    once = reynolds_project(model, mat)
    twice = reynolds_project(model, once)
    assert once == twice
    assert is_invariant_matrix(once, 1, model)


def test_reynolds_fixes_degree1_elements():
    deg1 = invariant_degree1(builtin_reps("s3"))
    full = deg1.full_matrix()
    assert reynolds_project(deg1.model, full) == full


# -- the S3 closed form -------------------------------------------------------------------------

def test_s3_closed_form_spans_the_invariants():
    assert verify_invariant_shape_s3(3)


@pytest.mark.parametrize("d", range(4))
def test_s3_invariant_dimensions(d):
    # dim (End(T) (x) S^d V)^G = (1/6) sum_g chi_T(g)^2 chi_{S^d V}(g); chi_T = 4, 0, 1
    sym = {0: (1, 1, 1), 1: (2, 0, -1), 2: (3, 1, 0), 3: (4, 0, 1)}[d]
    expected = (16 * sym[0] + 3 * 0 * sym[1] + 2 * 1 * sym[2]) // 6
    assert len(invariant_matrices(d)) == expected
    assert len(shape_matrices(d)) >= expected


def test_s3_off_pattern_entry_is_not_invariant():
    z = Cyclo.rational(0, 3)
    mat = [[[z, z] for _ in range(4)] for _ in range(4)]
    assert is_invariant_matrix(mat, 1)
    mat[1][2] = [Cyclo.rational(1, 3), z]
    assert not is_invariant_matrix(mat, 1)


def test_json_export():
    deg1 = s3_lettered()
    rels = relations_degree2(deg1, s3_ideal(2))
    text = to_json(deg1, rels)
    assert '"schema_version": 1' in text
    assert "AB+DC+2E^2" in text or "AB+2E^2+DC" in text
