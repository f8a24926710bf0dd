from fractions import Fraction

import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import funms, rats
from genkac import funm
from genkac.funm import SL3_TAGS
from genkac.sl3 import (BASIS, Sl3Elem, bracket_sl3, cartan_involution_sl3, form_sl3,
                        gram_matrix, structure_constants)

sl3_elems = st.lists(rats, min_size=8, max_size=8).map(Sl3Elem)


def test_structure_constants_match_matrices():
    for (x, y), br in structure_constants().items():
        M = oracles.SL3[x] * oracles.SL3[y] - oracles.SL3[y] * oracles.SL3[x]
        assert dict(br.items()) == oracles.sl3_coords(M)


def test_gram_matrix_is_trace_form():
    G = gram_matrix()
    for i, x in enumerate(SL3_TAGS):
        for j, y in enumerate(SL3_TAGS):
            assert G[i][j] == (oracles.SL3[x] * oracles.SL3[y]).trace()


def test_named_brackets():
    assert bracket_sl3(BASIS["e1"], BASIS["e2"]) == BASIS["e3"]
    assert bracket_sl3(BASIS["f2"], BASIS["f1"]) == BASIS["f3"]
    assert bracket_sl3(BASIS["e1"], BASIS["f1"]) == BASIS["h1"]
    assert form_sl3(BASIS["e3"], BASIS["f3"]) == 1
    assert form_sl3(BASIS["h1"], BASIS["h1"]) == 2


@given(sl3_elems, sl3_elems, sl3_elems)
def test_jacobi(x, y, z):
    j = bracket_sl3(x, bracket_sl3(y, z)) + bracket_sl3(y, bracket_sl3(z, x)) + bracket_sl3(z, bracket_sl3(x, y))
    assert not j


@given(sl3_elems, sl3_elems, sl3_elems)
def test_form_invariant(x, y, z):
    assert form_sl3(bracket_sl3(x, y), z) == form_sl3(x, bracket_sl3(y, z))


@given(sl3_elems, sl3_elems)
def test_cartan_involution(x, y):
    w = cartan_involution_sl3
    assert w(w(x)) == x
    assert w(bracket_sl3(x, y)) == bracket_sl3(w(x), w(y))
    assert cartan_involution_sl3(BASIS["e1"]) == -BASIS["f1"]


def _xi(x):
    return funm.xi(dict(x.items()))


def test_action_is_representation_on_all_pairs():
    # the operator commutator is compared with the sympy action of the matrix bracket
    f = funm.A * funm.C ** -1 + funm.B * funm.Q ** 2 + funm.PHI
    E = oracles.to_sympy(f)
    for i, x in enumerate(SL3_TAGS):
        for y in SL3_TAGS[i + 1:]:
            lhs = _xi(BASIS[x]).apply(_xi(BASIS[y]).apply(f)) - _xi(BASIS[y]).apply(_xi(BASIS[x]).apply(f))
            coords = oracles.sl3_coords(oracles.SL3[x] * oracles.SL3[y] - oracles.SL3[y] * oracles.SL3[x])
            rhs = sum((sp.Rational(v.numerator, v.denominator) * oracles.xi(t, E) for t, v in coords.items()),
                      sp.Integer(0))
            assert oracles.same(oracles.to_sympy(lhs), rhs), (x, y)


@given(sl3_elems, sl3_elems)
def test_operator_commutator(x, y):
    assert _xi(x).commutator(_xi(y)) == _xi(bracket_sl3(x, y))


def test_coords_are_fractions():
    x = Sl3Elem([1, 2, 3, 4, 5, 6, 7, Fraction(1, 2)])
    assert all(isinstance(v, Fraction) for v in x.coords)
