"""The generalized Virasoro algebra on Fun(M).

Modes L_f are indexed by contact Hamiltonians f.  They act as
X_f = -f d3 + (d1 f) d2 - (d2 f) d1 and satisfy [X_f, X_g] = X_{f,g} with
{f, g} = g d3 f - f d3 g + d1 f d2 g - d1 g d2 f.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from . import funm
from .errors import ClosureFailure
from .funm import A, DiffOp1, FunM, nabla
from .loop import GvElem
from .sl3 import BASIS, Sl3Elem, bracket_sl3, form_sl3


def contact_bracket(f, g):
    return (g * nabla(3, f) - f * nabla(3, g)
            + nabla(1, f) * nabla(2, g) - nabla(1, g) * nabla(2, f))


def contact_field(f):
    """X_f in raw partials d/da, d/db, d/dc."""
    d1f = nabla(1, f)
    return DiffOp1(da=-nabla(2, f), db=d1f, dc=A * d1f - f)


@dataclass(frozen=True)
class VirElem:
    hamiltonian: FunM

    def __add__(self, other):
        return VirElem(self.hamiltonian + other.hamiltonian)

    def scale(self, s):
        return VirElem(self.hamiltonian * s)

    def field(self):
        return contact_field(self.hamiltonian)


def bracket_vir(x, y):
    return VirElem(contact_bracket(x.hamiltonian, y.hamiltonian))


# contact structure --------------------------------------------------------

# beta = -dc + a db as (beta_a, beta_b, beta_c); Reeb field -d3, theta = d1 ^ d2
CONTACT_FORM = (FunM(), A, FunM.const(-1))


def contract(form, X):
    return form[0] * X.da + form[1] * X.db + form[2] * X.dc


def lie_derivative_form(X, form):
    comps = (X.da, X.db, X.dc)
    out = []
    for axis in "abc":
        s = X.derivation(form["abc".index(axis)])
        for bi, Xi in zip(form, comps):
            if bi:
                s = s + bi * funm.partial(Xi, axis)
        out.append(s)
    return tuple(out)


def contact_condition(f):
    """(beta(X_f) == f, L_{X_f} beta proportional to beta)."""
    X = contact_field(f)
    lb = lie_derivative_form(X, CONTACT_FORM)
    proportional = (not lb[0]) and lb[1] == -(A * lb[2])
    return contract(CONTACT_FORM, X) == f, proportional


# sl3 inside the contact algebra --------------------------------------------

HAMILTONIANS = (
    ("1", funm.ONE), ("a", A), ("b", funm.B), ("c", funm.C), ("c-ab", funm.Q),
    ("ac", A * funm.C), ("-b(c-ab)", -(funm.B * funm.Q)), ("c(c-ab)", funm.C * funm.Q),
)


def _coords(f, basis):
    """Coordinates of f in a basis of single-monomial Hamiltonians."""
    index = {h.monomials()[0]: (i, h.coeff(h.monomials()[0])) for i, h in enumerate(basis)}
    out = [Fraction(0)] * len(basis)
    for mono, v in f.items():
        if mono not in index:
            raise ClosureFailure(f"{funm.to_text(f)} leaves the span")
        i, lead = index[mono]
        out[i] = v / lead
    return out


def _combo(coords, basis):
    return sum((h * v for h, v in zip(basis, coords) if v), FunM())


def sl3_embedding():
    """Explicit Lie isomorphism sl3 -> span of the eight Hamiltonians.

    Cartan part is {c, c-ab}; root vectors are matched by their ad-eigenvalues,
    the positive system is the one where the eigenvalue pair has positive sum.
    """
    names = [n for n, _ in HAMILTONIANS]
    basis = [h for _, h in HAMILTONIANS]
    table = {}
    for i in range(8):
        for j in range(i + 1, 8):
            br = contact_bracket(basis[i], basis[j])
            _coords(br, basis)
            table[(names[i], names[j])] = br

    cartan = (funm.C, funm.Q)
    weights = {}
    for name, h in HAMILTONIANS:
        vals = []
        for H in cartan:
            br = contact_bracket(H, h)
            lam = br.coeff(h.monomials()[0]) / h.coeff(h.monomials()[0]) if br else Fraction(0)
            if br != h * lam:
                raise ClosureFailure(f"{name} is not an ad-eigenvector")
            vals.append(lam)
        weights[name] = tuple(vals)
    roots = {n: w for n, w in weights.items() if any(w)}
    by_root = {w: n for n, w in roots.items()}
    positive = [n for n in names if n in roots and sum(roots[n]) > 0]
    simple = [n for n in positive
              if not any(tuple(x + y for x, y in zip(roots[p], roots[r])) == roots[n]
                         for p in positive for r in positive)]
    if len(simple) != 2:
        raise ClosureFailure(f"expected two simple roots, found {simple}")
    ham = dict(HAMILTONIANS)

    images = {}
    for idx, sname in enumerate(simple, start=1):
        E = ham[sname]
        neg = by_root[tuple(-x for x in roots[sname])]
        H = contact_bracket(E, ham[neg])
        t = contact_bracket(H, E).coeff(E.monomials()[0]) / E.coeff(E.monomials()[0])
        images[f"e{idx}"] = E
        images[f"f{idx}"] = ham[neg] * (Fraction(2) / t)
        images[f"h{idx}"] = H * (Fraction(2) / t)
    images["e3"] = contact_bracket(images["e1"], images["e2"])
    images["f3"] = -contact_bracket(images["f1"], images["f2"])

    # every structure constant of sl3 must be reproduced
    mismatches = []
    for x, X in images.items():
        for y, Y in images.items():
            want = sum((images[t] * v for t, v in bracket_sl3(BASIS[x], BASIS[y]).items()), FunM())
            if contact_bracket(X, Y) != want:
                mismatches.append((x, y))
    if mismatches:
        raise ClosureFailure(f"structure constants differ on {mismatches[:4]}")
    return {
        "hamiltonians": names,
        "brackets": {f"{{{i},{j}}}": funm.to_text(v) for (i, j), v in table.items()},
        "weights": {n: [str(x) for x in w] for n, w in weights.items()},
        "simple_roots": simple,
        "correspondence": {t: funm.to_text(images[t]) for t in
                           ("e1", "e2", "e3", "h1", "h2", "f1", "f2", "f3")},
        "images": images,
        "isomorphism_verified": True,
    }


# field relations and their mode shadows ------------------------------------

def apply_word(word, f):
    """d1^k1 d2^k2 d3^k3 f (rightmost factor first)."""
    k1, k2, k3 = word
    for i, k in ((3, k3), (2, k2), (1, k1)):
        for _ in range(k):
            f = nabla(i, f)
    return f


def apply_word_reversed(word, f):
    """d3^k3 d2^k2 d1^k1 f, the transpose order used for mode indices."""
    k1, k2, k3 = word
    for i, k in ((1, k1), (2, k2), (3, k3)):
        for _ in range(k):
            f = nabla(i, f)
    return f


@dataclass(frozen=True)
class RelTerm:
    """coeff * (d^field_word X)(w) * D_w delta(z - w).

    D is the derivative word delta_word, or delta_op (a DiffOp1) when given.
    """

    coeff: Fraction
    field: str
    field_word: tuple = (0, 0, 0)
    delta_word: tuple = (0, 0, 0)
    delta_op: DiffOp1 = None

    def label(self):
        w = "".join(f"d{i}^{k}" if k > 1 else f"d{i}" for i, k in zip((1, 2, 3), self.field_word) if k)
        return f"{self.coeff}*{w}{self.field}" if w else f"{self.coeff}*{self.field}"


@dataclass(frozen=True)
class FieldRelation:
    terms: tuple = field(default_factory=tuple)

    def to_json(self):
        return [{"coeff": str(t.coeff), "field": t.field, "field_word": list(t.field_word),
                 "delta_word": list(t.delta_word), "label": t.label()} for t in self.terms]


def mode_bracket_from_relation(rel, f, g):
    """Index h_X with [a_f, b_g] = sum_X X_{h_X}, by pairing the relation with f(z) g(w).

    Res_z f(z) D_w delta = D f(w), and (d^w X)_h = (-1)^|w| X_{w^t h}.
    """
    out = {}
    for t in rel.terms:
        Df = t.delta_op.apply(f) if t.delta_op is not None else apply_word(t.delta_word, f)
        idx = apply_word_reversed(t.field_word, g * Df) * (Fraction(t.coeff) * (-1) ** sum(t.field_word))
        out[t.field] = out.get(t.field, FunM()) + idx
    return {k: v for k, v in out.items() if v}


VCR = FieldRelation((
    RelTerm(Fraction(1), "L", (0, 0, 1), (0, 0, 0)),
    RelTerm(Fraction(-1), "L", (0, 1, 0), (1, 0, 0)),
    RelTerm(Fraction(1), "L", (1, 0, 0), (0, 1, 0)),
    RelTerm(Fraction(3), "L", (0, 0, 0), (0, 0, 1)),
))

SEMIDIRECT = FieldRelation((
    RelTerm(Fraction(1), "a", (0, 0, 1), (0, 0, 0)),
    RelTerm(Fraction(-1), "a", (0, 1, 0), (1, 0, 0)),
    RelTerm(Fraction(1), "a", (1, 0, 0), (0, 1, 0)),
    RelTerm(Fraction(2), "a", (0, 0, 0), (0, 0, 1)),
))

CURRENT = FieldRelation((RelTerm(Fraction(1), "[a,b]"),))


def vcr_with_coefficient(kappa):
    """The VCR relation with the last coefficient replaced."""
    return FieldRelation(VCR.terms[:3] + (RelTerm(Fraction(kappa), "L", (0, 0, 0), (0, 0, 1)),))


def gv_field_relation():
    """[a(z), b(w)] = [a,b](w) delta + sum_i K_i (a,b) L_i^w delta, with L_i as operators."""
    from .loop import GRADING_OPS
    return FieldRelation((
        RelTerm(Fraction(1), "[a,b]"),
        RelTerm(Fraction(1), "K1", delta_op=GRADING_OPS[1].mul_function(funm.PHI)),
        RelTerm(Fraction(1), "K2", delta_op=GRADING_OPS[2].mul_function(funm.PHI)),
    ))


# action on g^V -------------------------------------------------------------

def vir_on_loop(f, x):
    """[L_f, A (x) g] = A (x) X_f(g); central elements are fixed."""
    X = contact_field(f)
    return GvElem({tag: X.apply(g) for tag, g in x.terms.items()})


def vir_on_loop_from_relation(f, x):
    return GvElem({tag: mode_bracket_from_relation(SEMIDIRECT, f, g).get("a", FunM())
                   for tag, g in x.terms.items()})


# the conformal product table ----------------------------------------------

# basis of sl3 as U(n+)-module generated by L = f3, with d_i = ad(e_i)
WORD_BASIS = (
    ("L", (0, 0, 0)), ("d1L", (1, 0, 0)), ("d2L", (0, 1, 0)), ("d1d2L", (1, 1, 0)),
    ("d3L", (0, 0, 1)), ("d1^2d2L", (2, 1, 0)), ("d2d3L", (0, 1, 1)), ("d1d2d3L", (1, 1, 1)),
)
WORD_VALUES = {
    "L": BASIS["f3"], "d1L": -BASIS["f2"], "d2L": BASIS["f1"], "d1d2L": BASIS["h1"],
    "d3L": BASIS["h1"] + BASIS["h2"], "d1^2d2L": BASIS["e1"] * -2,
    "d2d3L": -BASIS["e2"], "d1d2d3L": -BASIS["e3"],
}
_t = Fraction(1, 3)
DUAL_BASIS = {
    "L": BASIS["e3"], "d1L": -BASIS["e2"], "d2L": BASIS["e1"],
    "d1d2L": BASIS["h1"] * _t - BASIS["h2"] * _t,
    "d3L": BASIS["h1"] * _t + BASIS["h2"] * (2 * _t),
    "d1^2d2L": BASIS["f1"] * Fraction(-1, 2), "d2d3L": -BASIS["f2"], "d1d2d3L": -BASIS["f3"],
}
# elements whose adjoint action defines each product; all but one are the dual vectors
ACTING = dict(DUAL_BASIS, d3L=BASIS["h1"] * -2 - BASIS["h2"])


def sl3_word(word, x):
    k1, k2, k3 = word
    for tag, k in (("e3", k3), ("e2", k2), ("e1", k1)):
        for _ in range(k):
            x = bracket_sl3(BASIS[tag], x)
    return x


def word_coordinates(x):
    """Coordinates of x in the basis d^w L, read off with the dual basis."""
    return {name: form_sl3(x, DUAL_BASIS[name]) for name, _ in WORD_BASIS
            if form_sl3(x, DUAL_BASIS[name])}


def product_table():
    L = BASIS["f3"]
    words = dict(WORD_BASIS)
    entries = []
    for name, word in WORD_BASIS:
        value = bracket_sl3(ACTING[name], L)
        entries.append({
            "label": f"({name[:-1] or ''}f3)*" if name != "L" else "f3*",
            "basis": name,
            "word": word,
            "acting": ACTING[name],
            "acting_is_dual": ACTING[name] == DUAL_BASIS[name],
            "value": value,
            "value_words": word_coordinates(value),
        })
    checks = {
        "word_basis_matches_ad": all(sl3_word(words[n], L) == WORD_VALUES[n] for n in words),
        "dual_biorthogonal": all(
            form_sl3(WORD_VALUES[n], DUAL_BASIS[m]) == (1 if n == m else 0)
            for n in words for m in words),
    }
    return {"entries": entries, "checks": checks}


def relation_from_table(table):
    """Turn nonzero products L_(B*)L = sum c_w d^w L into VCR-style terms."""
    words = dict(WORD_BASIS)
    terms = []
    for e in table["entries"]:
        for vname, coef in e["value_words"].items():
            terms.append(RelTerm(Fraction(coef), "L", words[vname], e["word"]))
    return FieldRelation(tuple(terms))


def same_relation(r1, r2):
    key = lambda t: (t.field, t.field_word, t.delta_word, t.coeff)
    return sorted(map(key, r1.terms)) == sorted(map(key, r2.terms))


def table_to_json(table):
    return [{
        "label": e["label"], "basis": e["basis"], "word": list(e["word"]),
        "acting": [str(v) for v in e["acting"].coords], "acting_is_dual": e["acting_is_dual"],
        "value_words": {k: str(v) for k, v in e["value_words"].items()},
    } for e in table["entries"]]
