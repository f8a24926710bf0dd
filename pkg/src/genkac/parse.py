"""Expression parser and printer for the CLI.

Grammar (Pratt): sums of products of powers; juxtaposition multiplies.
Atoms are a, b, c, q, t, rational literals, sl3 tags e1..f3, K1, K2,
sl2 tags E, H, F, K, and L(expr) for a Virasoro mode.
"""
import re
from dataclasses import dataclass
from fractions import Fraction

from . import funm, loop, sl2
from .errors import NegativeExponent, ParseError, SyntaxErrorAt, UnknownSymbol
from .funm import FunM, SL3_TAGS
from .loop import GvElem
from .sl2 import AffElem, Laurent
from .sl3 import BASIS, Sl3Elem
from .virasoro import VirElem

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class TypeMismatch(ParseError):
    pass


@dataclass(frozen=True)
class Tok:
    kind: str  # num, id, op, end
    text: str
    pos: int


def tokenize(src):
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1):
            out.append(Tok("num", m.group(1), start))
        elif m.group(2):
            out.append(Tok("id", m.group(2), start))
        elif m.group(3):
            if m.group(3) not in "+-*/^()":
                raise SyntaxErrorAt(start, ["operator", "atom"], m.group(3))
            out.append(Tok("op", m.group(3), start))
        pos = m.end()
    out.append(Tok("end", "", len(src)))
    return out


# AST -----------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int


@dataclass(frozen=True)
class Call:
    name: str
    arg: object
    pos: int


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    lhs: object
    rhs: object
    pos: int


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int
    pos: int


_BP = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 40}
_PREFIX_BP = 30
_CALLS = {"L"}


class _Parser:
    def __init__(self, src):
        self.toks = tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text):
        t = self.next()
        if t.text != text:
            raise SyntaxErrorAt(t.pos, [repr(text)], t.text or "end of input")
        return t

    def starts_atom(self, t):
        return t.kind in ("num", "id") or t.text == "("

    def parse(self, rbp=0):
        left = self.nud(self.next())
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in _BP:
                bp = _BP[t.text]
            elif self.starts_atom(t):
                bp = _BP["*"]  # juxtaposition
            else:
                break
            if bp <= rbp:
                break
            if t.kind == "op" and t.text in _BP:
                self.next()
                left = self.led(t, left, bp)
            else:
                left = BinOp("*", left, self.parse(bp), t.pos)
        return left

    def nud(self, t):
        if t.kind == "num":
            return Num(int(t.text))
        if t.kind == "id":
            if t.text in _CALLS and self.peek().text == "(":
                self.next()
                arg = self.parse()
                self.expect(")")
                return Call(t.text, arg, t.pos)
            return Sym(t.text, t.pos)
        if t.text == "(":
            inner = self.parse()
            self.expect(")")
            return inner
        if t.text == "-":
            return Neg(self.parse(_PREFIX_BP))
        raise SyntaxErrorAt(t.pos, ["number", "symbol", "'('", "'-'"], t.text or "end of input")

    def led(self, t, left, bp):
        if t.text == "^":
            sign = 1
            if self.peek().text == "-":
                self.next()
                sign = -1
            e = self.next()
            if e.kind != "num":
                raise SyntaxErrorAt(e.pos, ["integer exponent"], e.text or "end of input")
            return Pow(left, sign * int(e.text), t.pos)
        return BinOp(t.text, left, self.parse(bp), t.pos)


def parse_expr(src):
    p = _Parser(src)
    node = p.parse()
    end = p.peek()
    if end.kind != "end":
        raise SyntaxErrorAt(end.pos, ["operator", "end of input"], end.text)
    return node


# evaluation ----------------------------------------------------------------

_FUNM_ATOMS = {"a": funm.A, "b": funm.B, "c": funm.C, "q": funm.Q}
_SPLITTABLE = set("abcqt")


def _atom(name, pos):
    if name in _FUNM_ATOMS:
        return _FUNM_ATOMS[name]
    if name == "t":
        return sl2.T
    if name in SL3_TAGS:
        return BASIS[name]
    if name in ("K1", "K2"):
        return GvElem.K(int(name[1]))
    if name in sl2.SL2_TAGS:
        return AffElem.tensor(name, Laurent({0: 1}))
    if name == "K":
        return AffElem.make({}, 1)
    if set(name) <= _SPLITTABLE:
        # 'ac' reads as a*c
        out = _atom(name[0], pos)
        for ch in name[1:]:
            out = _mul(out, _atom(ch, pos), pos)
        return out
    raise UnknownSymbol(f"unknown symbol {name!r} at {pos}")


def _kind(v):
    if isinstance(v, Fraction):
        return "scalar"
    for cls, k in ((FunM, "funm"), (Laurent, "laurent"), (Sl3Elem, "sl3"),
                   (GvElem, "gv"), (VirElem, "vir"), (AffElem, "aff")):
        if isinstance(v, cls):
            return k
    raise TypeError(type(v))


def _scale(v, s):
    k = _kind(v)
    if k in ("scalar", "funm", "laurent", "sl3"):
        return v * s
    return v.scale(s)


def _add(x, y, pos):
    kx, ky = _kind(x), _kind(y)
    if kx == "scalar" and ky == "scalar":
        return x + y
    if kx == "scalar":
        x, kx = _promote_scalar(x, ky, pos), ky
    if ky == "scalar":
        y, ky = _promote_scalar(y, kx, pos), kx
    if {kx, ky} == {"sl3", "gv"}:
        x = GvElem.tensor(x, funm.ONE) if kx == "sl3" else x
        y = GvElem.tensor(y, funm.ONE) if ky == "sl3" else y
        kx = ky = "gv"
    if kx != ky:
        raise TypeMismatch(f"cannot add {kx} and {ky} at {pos}")
    return x + y


def _promote_scalar(s, kind, pos):
    if kind == "funm":
        return FunM.const(s)
    if kind == "laurent":
        return Laurent({0: s})
    raise TypeMismatch(f"cannot add a number to a {kind} element at {pos}")


def _mul(x, y, pos):
    kx, ky = _kind(x), _kind(y)
    if kx == "scalar":
        return _scale(y, x)
    if ky == "scalar":
        return _scale(x, y)
    pair = (kx, ky)
    if pair in (("funm", "funm"), ("laurent", "laurent")):
        return x * y
    if pair == ("sl3", "funm"):
        return GvElem.tensor(x, y)
    if pair == ("funm", "sl3"):
        return GvElem.tensor(y, x)
    if pair == ("gv", "funm"):
        return x * y
    if pair == ("funm", "gv"):
        return y * x
    if pair in (("aff", "laurent"), ("laurent", "aff")):
        a, f = (x, y) if kx == "aff" else (y, x)
        if a.central:
            raise TypeMismatch(f"K cannot be multiplied by a function at {pos}")
        return AffElem.make({t: g * f for t, g in a.terms})
    raise TypeMismatch(f"cannot multiply {kx} by {ky} at {pos}")


def _pow(v, e, pos):
    k = _kind(v)
    if k == "scalar":
        if e < 0 and not v:
            raise ZeroDivisionError("0 has no negative powers")
        return v ** e
    if k == "funm":
        if e < 0:
            if any(n or m for n, m, _, _ in v.monomials()):
                raise NegativeExponent(f"a and b cannot take negative exponents (at {pos})")
            if len(v) != 1:
                raise NegativeExponent(f"only c, q monomials can be inverted (at {pos})")
        return v ** e
    if k == "laurent":
        if e < 0 and len(v.exponents()) != 1:
            raise NegativeExponent(f"only t monomials can be inverted (at {pos})")
        return v ** e
    raise TypeMismatch(f"cannot raise a {k} element to a power at {pos}")


def evaluate(node):
    if isinstance(node, Num):
        return Fraction(node.value)
    if isinstance(node, Sym):
        return _atom(node.name, node.pos)
    if isinstance(node, Neg):
        return _scale(evaluate(node.arg), -1)
    if isinstance(node, Pow):
        return _pow(evaluate(node.base), node.exp, node.pos)
    if isinstance(node, Call):
        arg = evaluate(node.arg)
        if _kind(arg) == "scalar":
            arg = FunM.const(arg)
        if _kind(arg) != "funm":
            raise TypeMismatch(f"L(...) takes a function at {node.pos}")
        return VirElem(arg)
    x, y = evaluate(node.lhs), evaluate(node.rhs)
    if node.op == "+":
        return _add(x, y, node.pos)
    if node.op == "-":
        return _add(x, _scale(y, -1), node.pos)
    if node.op == "*":
        return _mul(x, y, node.pos)
    if node.op == "/":
        if _kind(y) != "scalar":
            raise TypeMismatch(f"only division by a number is supported at {node.pos}")
        return _scale(x, 1 / y)
    raise SyntaxErrorAt(node.pos, ["operator"], node.op)


def parse(src, kind=None):
    """Parse and normalize.  Bare numbers become FunM constants unless kind='laurent'."""
    v = evaluate(parse_expr(src))
    zeros = {"gv": GvElem(), "aff": AffElem(), "sl3": Sl3Elem(), "laurent": Laurent()}
    if kind in zeros and not v and isinstance(v, (Fraction, FunM)):
        return zeros[kind]
    if isinstance(v, Fraction):
        v = Laurent({0: v}) if kind == "laurent" else FunM.const(v)
    want = {"funm": FunM, "laurent": Laurent, "gv": GvElem, "vir": VirElem,
            "sl3": Sl3Elem, "aff": AffElem}.get(kind)
    if kind == "gv" and isinstance(v, FunM):
        raise TypeMismatch("expected a loop element such as e1*c")
    if kind == "gv" and isinstance(v, Sl3Elem):
        v = GvElem.tensor(v, funm.ONE)
    if want and not isinstance(v, want):
        raise TypeMismatch(f"expected a {kind} element, got {_kind(v)}")
    return v


def sl3_text(x):
    return " + ".join(f"{funm._fmt_rat(v)}*{t}" for t, v in x.items()) or "0"


def to_text(v):
    """Canonical text; parse(to_text(v)) == v."""
    if isinstance(v, FunM):
        return funm.to_text(v)
    if isinstance(v, Laurent):
        return sl2.to_text(v)
    if isinstance(v, GvElem):
        return loop.to_text(v)
    if isinstance(v, VirElem):
        return f"L({funm.to_text(v.hamiltonian)})"
    if isinstance(v, Sl3Elem):
        return sl3_text(v)
    if isinstance(v, AffElem):
        parts = [f"{t}*({sl2.to_text(f)})" for t, f in v.terms]
        if v.central:
            parts.append(f"{funm._fmt_rat(v.central)}*K")
        return " + ".join(parts) or "0"
    if isinstance(v, Fraction):
        return funm._fmt_rat(v)
    raise TypeError(type(v))
