from fractions import Fraction

import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import funms, tags
from genkac import funm, virasoro as vir
from genkac.funm import A, B, C, ONE, PHI, Q, DiffOp1, FunM, L_C, L_Q
from genkac.loop import GvElem
from genkac.sl3 import BASIS

small = funms(max_terms=2, lo=-2, hi=2, ab=2)


def test_bracket_examples():
    assert vir.contact_bracket(A, B) == ONE
    assert vir.contact_bracket(C, Q) == FunM()
    assert vir.contact_bracket(C, ONE) == ONE
    # ad(c) kills a; the a-eigenvector pairing is with c - ab
    assert vir.contact_bracket(C, A) == FunM()
    assert vir.contact_bracket(Q, A) == A
    assert oracles.same(oracles.contact_bracket(oracles.c, oracles.a), 0)


@given(small, small)
def test_bracket_matches_sympy(f, g):
    got = oracles.to_sympy(vir.contact_bracket(f, g))
    assert oracles.same(got, oracles.contact_bracket(oracles.to_sympy(f), oracles.to_sympy(g)))


@given(small, small)
def test_antisymmetry(f, g):
    assert vir.contact_bracket(f, g) == -vir.contact_bracket(g, f)


@given(small, small, small)
def test_jacobi(f, g, h):
    br = vir.contact_bracket
    assert not (br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g)))


@given(small, small, small)
def test_operator_identity(f, g, h):
    X, Y = vir.contact_field(f), vir.contact_field(g)
    lhs = X.apply(Y.apply(h)) - Y.apply(X.apply(h))
    assert lhs == vir.contact_field(vir.contact_bracket(f, g)).apply(h)


def test_fields():
    assert vir.contact_field(ONE) == DiffOp1(dc=-ONE)
    assert vir.contact_field(C) == L_C
    assert vir.contact_field(Q) == L_Q


@given(small)
def test_contact_condition(f):
    assert vir.contact_condition(f) == (True, True)


def test_embedding():
    emb = vir.sl3_embedding()
    assert emb["isomorphism_verified"]
    assert emb["simple_roots"] == ["a", "b"]
    assert emb["correspondence"] == {
        "e1": "1 a", "e2": "1 b", "e3": "1", "h1": "2 q + -1 c", "h2": "-1 q + 2 c",
        "f1": "1 b q", "f2": "-1 a c", "f3": "-1 c q"}
    assert emb["weights"]["1"] == ["1", "1"]
    assert emb["weights"]["c(c-ab)"] == ["-1", "-1"]


def test_embedding_structure_constants_by_sympy():
    emb = vir.sl3_embedding()
    img = {t: oracles.to_sympy(h) for t, h in emb["images"].items()}
    for x in oracles.TAGS:
        for y in oracles.TAGS:
            M = oracles.SL3[x] * oracles.SL3[y] - oracles.SL3[y] * oracles.SL3[x]
            want = sum((sp.Rational(v.numerator, v.denominator) * img[t]
                        for t, v in oracles.sl3_coords(M).items()), sp.Integer(0))
            assert oracles.same(oracles.contact_bracket(img[x], img[y]), want), (x, y)


@given(small, small)
def test_vcr_gives_contact_bracket(f, g):
    assert vir.mode_bracket_from_relation(vir.VCR, f, g).get("L", FunM()) == vir.contact_bracket(f, g)


def test_vcr_examples():
    assert vir.mode_bracket_from_relation(vir.VCR, C, A) == {}
    assert vir.mode_bracket_from_relation(vir.VCR, A, A) == {}
    f, g = A * C, B * Q ** -1
    assert vir.mode_bracket_from_relation(vir.CURRENT, f, g) == {"[a,b]": f * g}


def test_vcr_coefficient_three_is_forced():
    f, g = C ** 2, Q
    for kappa in (2, 4):
        rel = vir.vcr_with_coefficient(kappa)
        assert vir.mode_bracket_from_relation(rel, f, g)["L"] != vir.contact_bracket(f, g)


@given(small, small, funms(max_terms=2), tags)
def test_semidirect_representation(f, g, h, tag):
    x = GvElem.tensor(tag, h)
    assert vir.vir_on_loop(f, x) == vir.vir_on_loop_from_relation(f, x)
    lhs = vir.vir_on_loop(f, vir.vir_on_loop(g, x)) - vir.vir_on_loop(g, vir.vir_on_loop(f, x))
    assert lhs == vir.vir_on_loop(vir.contact_bracket(f, g), x)


def test_vir_on_loop_examples():
    assert vir.vir_on_loop(C, GvElem.tensor("e1", C)) == -GvElem.tensor("e1", C)
    assert vir.vir_on_loop(ONE, GvElem.tensor("h2", Q)) == -GvElem.tensor("h2", ONE)
    assert vir.vir_on_loop(C, GvElem.K(1)) == GvElem()


@given(small, small)
def test_gv_field_relation_is_negative_cocycle(f, g):
    from genkac.loop import cocycle
    modes = vir.mode_bracket_from_relation(vir.gv_field_relation(), f, g)
    assert modes.get("[a,b]", FunM()) == f * g
    for i in (1, 2):
        assert funm.residue(modes.get(f"K{i}", FunM())) == -cocycle(i, f, g)


def test_product_table():
    table = vir.product_table()
    assert table["checks"] == {"word_basis_matches_ad": True, "dual_biorthogonal": True}
    values = {e["basis"]: e["value_words"] for e in table["entries"]}
    assert values["L"] == {"d3L": 1}
    assert values["d1L"] == {"d2L": -1}
    assert values["d2L"] == {"d1L": 1}
    assert values["d3L"] == {"L": 3}
    assert values["d1d2L"] == {}
    assert values["d1^2d2L"] == {} and values["d2d3L"] == {} and values["d1d2d3L"] == {}
    acting = {e["basis"]: e["acting_is_dual"] for e in table["entries"]}
    assert [k for k, v in acting.items() if not v] == ["d3L"]


def test_dual_element_gives_minus_l():
    x = vir.DUAL_BASIS["d3L"]
    from genkac.sl3 import bracket_sl3
    assert bracket_sl3(x, BASIS["f3"]) == -BASIS["f3"]


def test_table_reproduces_vcr():
    assert vir.same_relation(vir.relation_from_table(vir.product_table()), vir.VCR)
    rows = vir.table_to_json(vir.product_table())
    assert len(rows) == 8 and rows[0]["label"] == "f3*"
