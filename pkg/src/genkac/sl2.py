"""One-variable baseline: Laurent polynomials, the formal delta function,
affine sl2 and conformal algebras given by n-product tables.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .errors import AxiomViolation, SupportEscape


class Laurent:
    """Finite map exponent -> Fraction in one variable t; immutable."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        self._c = {int(e): Fraction(v) for e, v in (coeffs or {}).items() if v}

    @classmethod
    def mono(cls, e, coef=1):
        return cls({e: coef})

    def items(self):
        return sorted(self._c.items())

    def coeff(self, e):
        return self._c.get(e, Fraction(0))

    def exponents(self):
        return sorted(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Laurent({0: other})
        return isinstance(other, Laurent) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Laurent({0: other})
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Laurent({e: v * other for e, v in self._c.items()})
        if not isinstance(other, Laurent):
            return NotImplemented
        out = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return Laurent(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials are invertible")
            (k, v), = self._c.items()
            return Laurent({k * e: Fraction(v) ** e})
        out = Laurent({0: 1})
        for _ in range(e):
            out = out * self
        return out

    def deriv(self):
        return Laurent({e - 1: e * v for e, v in self._c.items() if e})

    def __repr__(self):
        return f"Laurent({to_text(self)!r})"


T = Laurent.mono(1)


def to_text(f, var="t"):
    from .funm import _fmt_rat
    if not f:
        return "0"
    parts = []
    for e, v in f.items():
        parts.append(_fmt_rat(v) if e == 0 else f"{_fmt_rat(v)} {var}" if e == 1
                     else f"{_fmt_rat(v)} {var}^{e}")
    return " + ".join(parts)


def to_pairs(f):
    return [[e, str(v)] for e, v in f.items()]


def residue_1d(f):
    return f.coeff(-1)


def delta_1d_pair(f, order):
    """Res_z f(z) delta(z - w) with delta truncated to z^n w^(-n-1), -order-1 <= n <= order."""
    out = {}
    for n in range(-order - 1, order + 1):
        c = residue_1d(f * Laurent.mono(n))
        if c:
            out[-n - 1] = c
    got = Laurent(out)
    if got != f:
        raise SupportEscape(f"exponents of f exceed the truncation order {order}")
    return got


def delta_1d_split(f, order):
    """(f+, f-) recovered from delta+ = sum_{n>=0} w^n z^(-n-1) and delta- = sum_{n<0}."""
    plus, minus = {}, {}
    for n in range(-order - 1, order + 1):
        c = residue_1d(f * Laurent.mono(-n - 1))
        if c:
            (plus if n >= 0 else minus)[n] = c
    return Laurent(plus), Laurent(minus)


# affine sl2 ---------------------------------------------------------------

SL2_TAGS = ("E", "H", "F")
_SL2_BRACKET = {
    ("E", "F"): {"H": 1}, ("F", "E"): {"H": -1},
    ("H", "E"): {"E": 2}, ("E", "H"): {"E": -2},
    ("H", "F"): {"F": -2}, ("F", "H"): {"F": 2},
}
SL2_FORM = {("E", "F"): 1, ("F", "E"): 1, ("H", "H"): 2}


@dataclass(frozen=True)
class AffElem:
    terms: tuple = ()
    central: Fraction = Fraction(0)

    @classmethod
    def make(cls, terms, central=0):
        clean = tuple((t, terms[t]) for t in SL2_TAGS if t in terms and terms[t])
        return cls(clean, Fraction(central))

    @classmethod
    def tensor(cls, tag, f):
        return cls.make({tag: f})

    def as_dict(self):
        return dict(self.terms)

    def __add__(self, other):
        d = self.as_dict()
        for t, f in other.terms:
            d[t] = d[t] + f if t in d else f
        return AffElem.make(d, self.central + other.central)

    def scale(self, s):
        return AffElem.make({t: f * s for t, f in self.terms}, self.central * s)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)


def affine_bracket_sl2(x, y):
    """[A f, B g] = [A, B] fg + (A, B) Res(f g') K, taken literally."""
    acc, k = {}, Fraction(0)
    for ta, f in x.terms:
        for tb, g in y.terms:
            for tc, v in _SL2_BRACKET.get((ta, tb), {}).items():
                acc[tc] = acc.get(tc, Laurent()) + f * g * v
            kappa = SL2_FORM.get((ta, tb), 0)
            if kappa:
                k += kappa * residue_1d(f * g.deriv())
    return AffElem.make(acc, k)


def aff_to_text(x):
    parts = [f"{t}*({to_text(f)})" for t, f in x.terms]
    if x.central:
        parts.append(f"{x.central}*K")
    return " + ".join(parts) or "0"


# first-order operators on Laurent -----------------------------------------

@dataclass(frozen=True)
class DiffOp1d:
    """d * d/dt + scalar."""

    d: Laurent = field(default_factory=Laurent)
    scalar: Laurent = field(default_factory=Laurent)

    def apply(self, f):
        return self.d * f.deriv() + self.scalar * f

    def scale(self, s):
        return DiffOp1d(self.d * s, self.scalar * s)

    def __add__(self, other):
        return DiffOp1d(self.d + other.d, self.scalar + other.scalar)

    def commutator(self, other):
        X = lambda f: self.d * f.deriv()
        Y = lambda f: other.d * f.deriv()
        return DiffOp1d(X(other.d) - Y(self.d), X(other.scalar) - Y(self.scalar))


# X = d, H = -2t d - 1, Y = -t^2 d - t; E, H, F act as X, H, Y
REP = {
    "E": DiffOp1d(d=Laurent({0: 1})),
    "H": DiffOp1d(d=Laurent({1: -2}), scalar=Laurent({0: -1})),
    "F": DiffOp1d(d=Laurent({2: -1}), scalar=Laurent({1: -1})),
}


def rep_relations_hold():
    ok = True
    for (x, y), br in _SL2_BRACKET.items():
        want = DiffOp1d()
        for t, v in br.items():
            want = want + REP[t].scale(v)
        ok &= REP[x].commutator(REP[y]) == want
    return ok


def witt_operator(n):
    """L_n = -t^(n+1) d/dt."""
    return DiffOp1d(d=Laurent({n + 1: -1}))


# the Virasoro field relation in modes: [L(z), L(w)] = dL(w) delta + 2 L(w) d_w delta
WITT_RELATION = ((1, 1, 0), (2, 0, 1))


def mode_index_1d(relation, f, g):
    """h with [L_f, L_g] = L_h, from terms (coef, field derivatives, delta derivatives)."""
    out = Laurent()
    for coef, p, d in relation:
        Df = f
        for _ in range(d):
            Df = Df.deriv()
        h = g * Df
        for _ in range(p):
            h = h.deriv()
        out = out + h * (coef * (-1) ** p)
    return out


def witt_mode_bracket(m, n):
    """{index: coef} with [L_m, L_n] = sum coef L_index; L_n is the mode of t^(n+1)."""
    h = mode_index_1d(WITT_RELATION, Laurent.mono(m + 1), Laurent.mono(n + 1))
    return {e - 1: v for e, v in h.items()}


def witt_operator_bracket(m, n):
    br = witt_operator(m).commutator(witt_operator(n))
    return {e - 1: -v for e, v in br.d.items()}


# conformal algebras -------------------------------------------------------
# An element of the free C[d]-module is a dict (generator, k) -> coef for coef d^k gen.

def _add(u, v, s=1):
    out = dict(u)
    for key, c in v.items():
        out[key] = out.get(key, 0) + s * c
    return {k: Fraction(c) for k, c in out.items() if c}


def _d(u, times=1):
    return {(g, k + times): c for (g, k), c in u.items()}


def _scale(u, s):
    return {k: c * s for k, c in u.items() if c * s}


@dataclass
class ConformalTable:
    """products[(a, b, n)] = a_(n) b as a C[d]-combination of generators."""

    name: str
    generators: tuple
    products: dict

    def to_json(self):
        return {
            "name": self.name,
            "generators": list(self.generators),
            "products": [{"a": a, "b": b, "n": n,
                          "value": [[g, k, str(c)] for (g, k), c in sorted(v.items())]}
                         for (a, b, n), v in sorted(self.products.items())],
        }

    def product_gen(self, a, b, n):
        return self.products.get((a, b, n), {})

    def product(self, u, v, n, order="left"):
        """u_(n) v for module elements, extended by the (C2) rules."""
        if n < 0:
            raise ValueError("n-products need n >= 0")
        out = {}
        for (a, i), x in u.items():
            for (b, j), y in v.items():
                out = _add(out, _scale(self._mono(a, i, b, j, n, order), x * y))
        return out

    def _mono(self, a, i, b, j, n, order):
        if n < 0:
            return {}
        if i and (order == "left" or not j):
            # (d a)_(n) b = -n a_(n-1) b
            return _scale(self._mono(a, i - 1, b, j, n - 1, order), -n) if n else {}
        if j:
            # a_(n) d b = d(a_(n) b) + n a_(n-1) b
            inner = _d(self._mono(a, i, b, j - 1, n, order))
            return _add(inner, _scale(self._mono(a, i, b, j - 1, n - 1, order), n)) if n else inner
        return dict(self.product_gen(a, b, n))


def _gen(g):
    return {(g, 0): Fraction(1)}


def cur_sl2_table():
    prods = {}
    for (x, y), br in _SL2_BRACKET.items():
        prods[(x, y, 0)] = {(t, 0): Fraction(v) for t, v in br.items()}
    return ConformalTable("Cur sl2", SL2_TAGS, prods)


def vir_table(l1=2):
    return ConformalTable("Vir", ("L",), {
        ("L", "L", 0): {("L", 1): Fraction(1)},
        ("L", "L", 1): {("L", 0): Fraction(l1)},
    })


def semidirect_table():
    t = cur_sl2_table()
    prods = dict(t.products)
    prods.update(vir_table().products)
    for x in SL2_TAGS:
        prods[("L", x, 0)] = {(x, 1): Fraction(1)}
        prods[("L", x, 1)] = {(x, 0): Fraction(1)}
        prods[(x, "L", 1)] = {(x, 0): Fraction(1)}
    return ConformalTable("Vir + Cur sl2", ("L",) + SL2_TAGS, prods)


def _fmt_elem(u):
    if not u:
        return "0"
    return " + ".join(f"{c}*d^{k}{g}" if k else f"{c}*{g}" for (g, k), c in sorted(u.items()))


def conformal_axiom_check(table, bound=6, raise_on_failure=True):
    """Check (C1)-(C4) on generators with n, m <= bound."""
    gens = table.generators
    violations = []
    counts = {"C1": 0, "C2": 0, "C3": 0, "C4": 0}

    # (C1): a finite table, all n within the bound
    for (a, b, n) in table.products:
        counts["C1"] += 1
        if n > bound:
            violations.append({"axiom": "C1", "instance": [a, b, n], "lhs": "nonzero", "rhs": "0"})

    # (C2): both reduction orders for d a _(n) d b agree
    for a in gens:
        for b in gens:
            for n in range(bound + 1):
                counts["C2"] += 1
                u, v = _d(_gen(a)), _d(_gen(b))
                lhs, rhs = table.product(u, v, n, "left"), table.product(u, v, n, "right")
                if lhs != rhs:
                    violations.append({"axiom": "C2", "instance": [a, b, n],
                                       "lhs": _fmt_elem(lhs), "rhs": _fmt_elem(rhs)})

    # (C3): a_(n) b = -sum_j (-1)^(n+j) d^(j) (b_(n+j) a), d^(j) = d^j / j!
    for a in gens:
        for b in gens:
            for n in range(bound + 1):
                counts["C3"] += 1
                lhs = table.product(_gen(a), _gen(b), n)
                rhs = {}
                for j in range(bound + 1 - n):
                    term = table.product(_gen(b), _gen(a), n + j)
                    rhs = _add(rhs, _scale(_d(term, j), Fraction(-(-1) ** (n + j), factorial(j))))
                if lhs != rhs:
                    violations.append({"axiom": "C3", "instance": [a, b, n],
                                       "lhs": _fmt_elem(lhs), "rhs": _fmt_elem(rhs)})

    # (C4): a_(m)(b_(n)c) - b_(n)(a_(m)c) = sum_j C(m, j) (a_(j)b)_(m+n-j) c
    for a in gens:
        for b in gens:
            for c in gens:
                for m in range(bound + 1):
                    for n in range(bound + 1):
                        counts["C4"] += 1
                        A, B, Cc = _gen(a), _gen(b), _gen(c)
                        lhs = _add(table.product(A, table.product(B, Cc, n), m),
                                   table.product(B, table.product(A, Cc, m), n), -1)
                        rhs = {}
                        for j in range(m + 1):
                            rhs = _add(rhs, _scale(table.product(table.product(A, B, j), Cc, m + n - j),
                                                   comb(m, j)))
                        if lhs != rhs:
                            violations.append({"axiom": "C4", "instance": [a, b, c, m, n],
                                               "lhs": _fmt_elem(lhs), "rhs": _fmt_elem(rhs)})
    report = {"table": table.name, "bound": bound, "checked": counts,
              "passed": not violations, "violations": violations}
    if violations and raise_on_failure:
        raise AxiomViolation(report)
    return report


# the sl2 model of the Virasoro products -------------------------------------

def vcon_identities():
    """Products L_(x) L = [x, L] in sl2 with L = F, d = ad E.

    Word basis L, dL = H, d^2 L = -2E; its dual under the trace form is
    E, H/2, -F/2.  The element acting for L_(1) that yields 2L is -H.
    """
    def br(x, y):
        out = {}
        for tx, cx in x.items():
            for ty, cy in y.items():
                for t, v in _SL2_BRACKET.get((tx, ty), {}).items():
                    out[t] = out.get(t, 0) + cx * cy * v
        return {t: v for t, v in out.items() if v}

    L = {"F": Fraction(1)}
    dL = br({"E": 1}, L)
    d2L = br({"E": 1}, dL)
    return {
        "dL": dL, "d2L": d2L,
        "L_(E)L": br({"E": Fraction(1)}, L),
        "L_(H/2)L": br({"H": Fraction(1, 2)}, L),
        "L_(-H)L": br({"H": Fraction(-1)}, L),
        "L_(-F/2)L": br({"F": Fraction(-1, 2)}, L),
    }


# restriction Fun(M) -> Laurent -----------------------------------------------

def restrict(f):
    """a, b -> 0 and c -> t, so q -> t."""
    out = {}
    for (n, m, k, l), v in f.items():
        if n == 0 and m == 0:
            out[k + l] = out.get(k + l, 0) + v
    return Laurent(out)
