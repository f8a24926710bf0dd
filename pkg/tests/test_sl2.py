from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import funms, nonzero_rats
from genkac import sl2
from genkac.errors import AxiomViolation, SupportEscape
from genkac.funm import C, FunM
from genkac.loop import cocycle
from genkac.sl2 import AffElem, Laurent, affine_bracket_sl2

laurents = st.dictionaries(st.integers(-8, 8), nonzero_rats, max_size=4).map(Laurent)
small_laurents = st.dictionaries(st.integers(-4, 4), nonzero_rats, max_size=3).map(Laurent)


def to_sympy(f):
    return sum((sp.Rational(v.numerator, v.denominator) * oracles.t ** e for e, v in f.items()), sp.Integer(0))


@st.composite
def aff_elems(draw):
    terms = {tag: draw(small_laurents) for tag in sl2.SL2_TAGS}
    return AffElem.make(terms, draw(st.integers(-3, 3)))


@given(laurents, laurents)
def test_laurent_arithmetic_matches_sympy(f, g):
    assert sp.expand(to_sympy(f * g) - to_sympy(f) * to_sympy(g)) == 0
    assert sp.expand(to_sympy(f.deriv()) - sp.diff(to_sympy(f), oracles.t)) == 0


def test_residue_examples():
    assert sl2.residue_1d(Laurent.mono(-1)) == 1
    assert sl2.residue_1d(Laurent.mono(3)) == 0
    f, g = Laurent.mono(2), Laurent.mono(-2)
    assert sl2.residue_1d(f.deriv() * g) == 2 == -sl2.residue_1d(f * g.deriv())


@given(laurents, laurents)
def test_integration_by_parts(f, g):
    assert sl2.residue_1d(f.deriv() * g) == -sl2.residue_1d(f * g.deriv())


def test_delta_examples():
    assert sl2.delta_1d_pair(Laurent.mono(2), 8) == Laurent.mono(2)
    assert sl2.delta_1d_pair(Laurent.mono(0), 8) == Laurent.mono(0)
    assert sl2.delta_1d_pair(Laurent.mono(-3), 8) == Laurent.mono(-3)
    with pytest.raises(SupportEscape):
        sl2.delta_1d_pair(Laurent.mono(12), 8)


@given(laurents)
def test_delta_reproduces(f):
    assert sl2.delta_1d_pair(f, 8) == f
    plus, minus = sl2.delta_1d_split(f, 8)
    assert plus + minus == f
    assert all(e >= 0 for e in plus.exponents()) and all(e < 0 for e in minus.exponents())


def test_affine_examples():
    T = sl2.T
    x, y = AffElem.tensor("E", T), AffElem.tensor("F", T ** -1)
    assert affine_bracket_sl2(x, y) == AffElem.make({"H": Laurent.mono(0)}, -1)
    for p in range(-3, 4):
        h1, h2 = AffElem.tensor("H", T ** p), AffElem.tensor("H", T ** -p)
        assert affine_bracket_sl2(h1, h2) == AffElem.make({}, -2 * p)


@given(aff_elems(), aff_elems(), aff_elems())
def test_affine_jacobi_and_antisymmetry(x, y, z):
    br = affine_bracket_sl2
    assert br(x, y) == -br(y, x)
    assert br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y)) == AffElem()


def test_rep_relations():
    assert sl2.rep_relations_hold()


@pytest.mark.parametrize("m", range(-6, 7))
def test_witt(m):
    for n in range(-6, 7):
        want = {m + n: Fraction(m - n)} if m != n else {}
        assert sl2.witt_mode_bracket(m, n) == want
        assert sl2.witt_operator_bracket(m, n) == want


def test_witt_examples():
    assert sl2.witt_mode_bracket(1, -1) == {0: 2}
    assert sl2.witt_mode_bracket(0, 3) == {3: -3}


@pytest.mark.parametrize("table", [sl2.cur_sl2_table(), sl2.vir_table(), sl2.semidirect_table()],
                         ids=lambda t: t.name)
def test_conformal_tables_pass(table):
    rep = sl2.conformal_axiom_check(table)
    assert rep["passed"] and rep["violations"] == []


def test_corrupted_vir_table_detected():
    rep = sl2.conformal_axiom_check(sl2.vir_table(l1=3), raise_on_failure=False)
    assert not rep["passed"]
    c4 = [v for v in rep["violations"] if v["axiom"] == "C4" and v["instance"] == ["L", "L", "L", 1, 1]]
    assert c4 and c4[0]["lhs"] == "0" and c4[0]["rhs"] == "3*L"
    assert any(v["axiom"] == "C3" and v["instance"] == ["L", "L", 0] for v in rep["violations"])
    with pytest.raises(AxiomViolation):
        sl2.conformal_axiom_check(sl2.vir_table(l1=3))


def test_vcon_identities():
    v = sl2.vcon_identities()
    assert v["dL"] == {"H": 1}
    assert v["L_(E)L"] == v["dL"]
    assert v["L_(-H)L"] == {"F": 2}
    assert v["L_(H/2)L"] == {"F": -1}


def test_restrict_and_cocycle():
    assert sl2.restrict(FunM.mono(1, 0, 2, 0) + FunM.mono(0, 0, 2, 1)) == Laurent.mono(3)
    for p in range(-6, 7):
        for r in range(-6, 7):
            f, g = sl2.restrict(C ** p), sl2.restrict(C ** r)
            assert cocycle(1, C ** p, C ** r) == sl2.residue_1d(f.deriv() * g) == (p if p + r == 0 else 0)


def test_text():
    assert sl2.to_text(Laurent({-1: 2, 0: 1, 1: Fraction(1, 2)})) == "2 t^-1 + 1 + 1/2 t"
