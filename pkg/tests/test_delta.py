from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import funms, nonzero_rats
from genkac import delta, funm
from genkac.delta import Window, dual_basis, reproduce, split
from genkac.errors import ClosureViolation, SupportEscape
from genkac.funm import A, B, C, ONE, PHI, Q, FunM

WINDOW = Window(3, 3, -5, 3, -5, 3)
REPRO = Window(4, 4, 0, 4, -5, 4)


@pytest.fixture(scope="module")
def duals():
    return dual_basis(WINDOW)


@pytest.fixture(scope="module")
def repro():
    return dual_basis(REPRO)


def test_split_examples():
    assert split(PHI) == (FunM(), FunM(), FunM(), PHI)
    pp, pm, mp, mm = split(A + C ** -1 * Q)
    assert (pp, pm, mp, mm) == (A, C ** -1 * Q, FunM(), FunM())
    assert split(C ** -1)[1] == C ** -1


@given(funms(max_terms=5))
def test_split_is_a_decomposition(f):
    parts = split(f)
    assert sum(parts, FunM()) == f
    assert delta.plus_minus(f)[0] == parts[0] + parts[1]


def test_hand_duals(duals):
    assert duals.dual_of((0, 0, 0, 0)) == PHI
    assert duals.dual_of((1, 0, 0, 0)) == FunM.mono(0, 1, -2, -1)
    assert duals.dual_of((0, 0, 1, 0)) == FunM.mono(0, 0, -2, -1)


def test_hand_duals_against_sympy_pairing():
    # dual(a) pairs to 1 with a and to 0 with every other polynomial of low degree
    dual_a = oracles.to_sympy(FunM.mono(0, 1, -2, -1))
    a, b, c = oracles.a, oracles.b, oracles.c
    for i in range(3):
        for j in range(3):
            for k in range(3):
                want = 1 if (i, j, k) == (1, 0, 0) else 0
                assert oracles.residue(a**i * b**j * c**k * dual_a) == want


def test_biorthogonality(duals):
    assert delta.biorthogonality_defects(duals) == []
    assert len(duals.pairs) == len(WINDOW.positive_monomials())


def test_duals_are_bidegree_selective(duals):
    for e, d in duals.pairs:
        d1, d2 = funm.mono_bidegree(e)
        assert funm.bidegree(d) == (-2 - d1, -2 - d2)


def test_closure_violation():
    with pytest.raises(ClosureViolation):
        dual_basis(Window(1, 1, 0, 2, -2, 3))


def test_block_pairing_is_binomial():
    # pair(x_l, y_l') against a direct residue, for j = |n - m| = 2
    for l in range(3):
        for lp in range(-4, 0):
            x = FunM.mono(2, 0, 1 - l, l)
            y = FunM.mono(0, 2, -5 - lp, lp)
            assert delta.block_pairing(2, l, lp) == funm.pair(x, y)


def test_reproduce_examples(repro):
    f = ONE + A * C * 3
    assert reproduce(f, repro) == f
    g = A * A * B * C
    assert reproduce(g, repro) == g
    with pytest.raises(SupportEscape):
        reproduce(C ** -6, repro)


@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), nonzero_rats),
                min_size=1, max_size=4))
def test_reproduce_polynomials(repro, terms):
    f = FunM()
    for i, j, k, v in terms:
        if i + j + k <= 4:
            f = f + A ** i * B ** j * C ** k * v
    assert reproduce(f, repro) == f


def test_reproduce_dual_side(repro):
    f = FunM.mono(0, 1, -2, -1) * 2 + PHI
    assert reproduce(f, repro) == f


def test_literal_residue_has_cross_terms(repro):
    assert delta.delta_residue(ONE + A, repro) == ONE + A
    # b c q^-1 lies in V- but pairs with dual(b) = a c^-2 q^-1
    f = FunM.mono(0, 1, 1, -1)
    assert oracles.residue(oracles.to_sympy(f * repro.dual_of((0, 1, 0, 0)))) == -1
    assert delta.delta_residue(f, repro) == -B
    with pytest.raises(SupportEscape):
        reproduce(f, repro)


def test_window_parse():
    assert Window.parse("4,4,0,4,-5,4") == REPRO
    with pytest.raises(ValueError):
        Window.parse("1,2,3")


def test_split_identities():
    assert delta.split_is_identity("exact")
    assert delta.split_is_identity("alt")
    assert not delta.split_is_identity("two-term")


def test_w_degree_zero_against_sympy():
    z1, z2, z3, w1, w2, w3 = sp.symbols("z1 z2 z3 w1 w2 w3")
    Qz, Qw = z3 - z1 * z2, w3 - w1 * w2
    two_term = z1 / ((z1 - w1) * (z2 - w2) * (Qz - Qw)) + w2 / ((z2 - w2) * (z3 - w3) * (Qz - Qw))
    exact = (z1 * z2 - w1 * w2) / ((z1 - w1) * (z2 - w2) * (z3 - w3) * (Qz - Qw))
    at0 = {w1: 0, w2: 0, w3: 0}
    assert sp.simplify(two_term.subs(at0) - 1 / (z2 * Qz)) == 0
    assert sp.simplify(exact.subs(at0) - 1 / (z3 * Qz)) == 0

    rep = delta.expand_F_report(0, "d1", "two-term")
    row = rep["w_degree_0"]
    assert (row["lhs"], row["rhs"], row["equal"]) == ("1 z2^-1 Qz^-1", "1 z3^-1 Qz^-1", False)
    assert delta.expand_F_report(0, "d1", "exact")["w_degree_0"]["equal"]


def test_expand_f_terms():
    assert delta.expand_F(0) == {(0, 0, 0, 0): {(0, -1, 0, -1): 1}, (0, 1, 0, 0): {(0, -1, -1, -1): 1}}
    with pytest.raises(ValueError):
        delta.expand_F(-1)
    with pytest.raises(ValueError):
        delta.expand_F(1, region="d3")


def test_expand_f_report_is_deterministic():
    assert delta.expand_F_report(2, "d2", "alt") == delta.expand_F_report(2, "d2", "alt")
