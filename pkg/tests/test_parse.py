import random

import pytest
from hypothesis import given

from conftest import funms
from genkac import parse, sampling
from genkac.errors import NegativeExponent, ParseError, SyntaxErrorAt, UnknownSymbol
from genkac.funm import A, B, C, PHI, Q, FunM
from genkac.loop import GvElem
from genkac.sl2 import AffElem, Laurent
from genkac.sl3 import BASIS
from genkac.virasoro import VirElem


def test_examples():
    assert parse.parse("a*b") == FunM({(0, 0, 1, 0): 1, (0, 0, 0, 1): -1})
    assert parse.parse("c^-1 * q^-1") == PHI
    with pytest.raises(NegativeExponent):
        parse.parse("a^-1")


def test_juxtaposition_and_split_identifiers():
    assert parse.parse("3 a c") == parse.parse("3*ac") == A * C * 3
    assert parse.parse("2(a + b)^2") == (A + B) * (A + B) * 2
    assert parse.parse("-a^2") == -(A * A)
    assert parse.parse("a/2") == A * parse.parse("1/2")


def test_kinds():
    assert parse.parse("e1*c") == GvElem.tensor("e1", C)
    assert parse.parse("h1 + 2 e3", "sl3") == BASIS["h1"] + BASIS["e3"] * 2
    assert parse.parse("e1", "gv") == GvElem.tensor("e1", parse.parse("1"))
    assert parse.parse("L(c q)") == VirElem(C * Q)
    assert parse.parse("t^-2 + 1", "laurent") == Laurent({-2: 1, 0: 1})
    assert parse.parse("E*t + K", "aff") == AffElem.make({"E": Laurent.mono(1)}, 1)
    assert parse.parse("0", "gv") == GvElem()


def test_errors():
    with pytest.raises(UnknownSymbol):
        parse.parse("x + 1")
    with pytest.raises(SyntaxErrorAt):
        parse.parse("a +")
    with pytest.raises(SyntaxErrorAt):
        parse.parse("a $ b")
    with pytest.raises(parse.TypeMismatch):
        parse.parse("e1 + a")
    with pytest.raises(parse.TypeMismatch):
        parse.parse("a", "gv")
    with pytest.raises(ParseError):
        parse.parse("(a + b)^-1")


@given(funms(max_terms=4))
def test_funm_roundtrip(f):
    assert parse.parse(parse.to_text(f), "funm") == f


def test_roundtrip_other_kinds():
    rng = random.Random(7)
    for _ in range(50):
        for v in (sampling.rand_gv(rng), sampling.rand_sl3(rng), sampling.rand_laurent(rng),
                  VirElem(sampling.rand_funm(rng))):
            kind = {GvElem: "gv", VirElem: "vir", Laurent: "laurent"}.get(type(v), "sl3")
            assert parse.parse(parse.to_text(v), kind) == v
    x = AffElem.make({"E": Laurent({1: 2}), "H": Laurent({-1: 1})}, 3)
    assert parse.parse(parse.to_text(x), "aff") == x
