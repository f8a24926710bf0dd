"""The loop algebra sl3 (x) Fun(M) and its two-dimensional central extension g^V.

[A(x)f, B(x)g] = [A, B](x)fg + sum_i K_i (A, B) Res(f * L_i(g)),
with L_1 = phi * L_c and L_2 = phi * L_{c-ab}.
"""
from fractions import Fraction

from . import funm
from .errors import NonHomogeneous, NotDivergenceFree
from .funm import PHI, SL3_TAGS, FunM
from .sl3 import BASIS, Sl3Elem, bracket_sl3, cartan_involution_sl3, form_sl3

GRADING_OPS = {1: funm.L_C, 2: funm.L_Q}

_TAG_BRACKET = {(x, y): bracket_sl3(BASIS[x], BASIS[y]).items() for x in SL3_TAGS for y in SL3_TAGS}
_TAG_FORM = {(x, y): form_sl3(BASIS[x], BASIS[y]) for x in SL3_TAGS for y in SL3_TAGS}

# L_i written as vector fields sum_j F_j d_j in the n+ derivations d_1, d_2, d_3.
COCYCLE_FIELDS = {
    1: (-(funm.A * PHI), FunM(), -(funm.C * PHI)),
    2: (FunM(), -(funm.B * PHI), -(funm.Q * PHI)),
}


class GvElem:
    """sum_tag tag (x) f_tag + k1 K1 + k2 K2; immutable."""

    __slots__ = ("terms", "central")

    def __init__(self, terms=None, central=(0, 0)):
        clean = {}
        for tag, f in (terms or {}).items():
            if tag not in SL3_TAGS:
                raise ValueError(f"unknown sl3 tag {tag!r}")
            if f:
                clean[tag] = f
        self.terms = {t: clean[t] for t in SL3_TAGS if t in clean}
        self.central = (Fraction(central[0]), Fraction(central[1]))

    @classmethod
    def tensor(cls, x, f):
        """x (x) f for a tag or an Sl3Elem x."""
        if isinstance(x, str):
            x = BASIS[x]
        return cls({tag: f * v for tag, v in x.items()})

    @classmethod
    def K(cls, i, coef=1):
        return cls(central=(coef, 0) if i == 1 else (0, coef))

    def __add__(self, other):
        terms = dict(self.terms)
        for tag, f in other.terms.items():
            terms[tag] = terms[tag] + f if tag in terms else f
        return GvElem(terms, (self.central[0] + other.central[0],
                              self.central[1] + other.central[1]))

    def scale(self, s):
        return GvElem({t: f * s for t, f in self.terms.items()},
                      (self.central[0] * s, self.central[1] * s))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        if isinstance(s, (int, Fraction)):
            return self.scale(s)
        if isinstance(s, FunM):
            # module action of Fun(M) on the loop part
            return GvElem({t: f * s for t, f in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, GvElem) and self.terms == other.terms
                and self.central == other.central)

    def __hash__(self):
        return hash((tuple(self.terms.items()), self.central))

    def __bool__(self):
        return bool(self.terms) or any(self.central)

    def noncentral(self):
        return GvElem(self.terms)

    def __repr__(self):
        return f"GvElem({to_text(self)!r})"


def cocycle(i, f, g):
    """Res(f * L_i(g)) without the (A, B) factor."""
    return funm.pair(f, PHI * GRADING_OPS[i].apply(g))


def divergence(field):
    return sum((funm.nabla(i + 1, fi) for i, fi in enumerate(field)), FunM())


def cocycle_general(field, f, g):
    field = tuple(field)
    if divergence(field):
        raise NotDivergenceFree(f"sum d_i f_i = {divergence(field)}")
    vf = sum((fi * funm.nabla(i + 1, g) for i, fi in enumerate(field) if fi), FunM())
    return funm.pair(f, vf)


def bracket_gv(x, y):
    acc = {}
    k1 = k2 = Fraction(0)
    for ta, f in x.terms.items():
        for tb, g in y.terms.items():
            ab = _TAG_BRACKET[(ta, tb)]
            if ab:
                fg = f * g
                for tag, v in ab:
                    acc[tag] = acc.get(tag, FunM()) + fg * v
            kappa = _TAG_FORM[(ta, tb)]
            if kappa:
                k1 += kappa * cocycle(1, f, g)
                k2 += kappa * cocycle(2, f, g)
    return GvElem(acc, (k1, k2))


def form_gv(x, y):
    total = Fraction(0)
    for ta, f in x.terms.items():
        for tb, g in y.terms.items():
            kappa = _TAG_FORM[(ta, tb)]
            if kappa:
                total += kappa * funm.pair(PHI * f, g)
    return total


def involution_gv(x):
    out = GvElem(central=(-x.central[0], -x.central[1]))
    for tag, f in x.terms.items():
        out = out + GvElem.tensor(cartan_involution_sl3(BASIS[tag]), funm.weyl_substitute(f))
    return out


def grade_gv(x):
    degs = set()
    for f in x.terms.values():
        degs.update(d for _, d in funm.bidegrees(f))
    if any(x.central):
        degs.add((0, 0))
    if len(degs) > 1:
        raise NonHomogeneous(f"mixed grades {sorted(degs)}")
    return degs.pop() if degs else (0, 0)


def w0_orbit(f, steps):
    """[f, w0*(f), w0*^2(f), ...] of length steps + 1."""
    out = [f]
    for _ in range(steps):
        out.append(funm.weyl_substitute(out[-1]))
    return out


def omega_order_report(max_steps=6):
    """How w0* and omega behave under iteration; omega is not asserted to be an involution."""
    gens = {"a": funm.A, "b": funm.B, "c": funm.C, "q": funm.Q}
    rows = {}
    for name, g in gens.items():
        orbit = w0_orbit(g, max_steps)
        period = next((s for s in range(1, max_steps + 1) if orbit[s] == g), None)
        rows[name] = {"orbit": [funm.to_text(h) for h in orbit], "period": period}
    x = GvElem.tensor("e1", funm.A)
    wx = involution_gv(involution_gv(x))
    return {
        "generators": rows,
        "omega_squared_e1_a": to_text(wx),
        "omega_is_involution_on_e1_a": wx == x,
    }


def borcherds_positivity_sweep(window=2):
    """Sign of (g, omega(g)) over g = A (x) monomial with |exponents| <= window."""
    counts = {"positive": 0, "zero": 0, "negative": 0}
    by_grade = {}
    samples = []
    r = range(-window, window + 1)
    monos = [(n, m, k, l) for n in range(window + 1) for m in range(window + 1)
             if min(n, m) == 0 for k in r for l in r]
    for tag in SL3_TAGS:
        for mono in monos:
            g = GvElem.tensor(tag, FunM.mono(*mono))
            v = form_gv(g, involution_gv(g))
            sign = "positive" if v > 0 else "negative" if v < 0 else "zero"
            counts[sign] += 1
            grade = grade_gv(g)
            cell = by_grade.setdefault(grade, {"positive": 0, "zero": 0, "negative": 0})
            cell[sign] += 1
            if len(samples) < 12 and mono in ((1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 0), (0, 1, 0, 0)):
                samples.append({"g": to_text(g), "value": str(v)})
    e1a = GvElem.tensor("e1", funm.A)
    return {
        "window": window,
        "counts": counts,
        "by_grade": {f"{d[0]},{d[1]}": c for d, c in sorted(by_grade.items())},
        "samples": samples,
        "counterexample": {"g": to_text(e1a), "value": str(form_gv(e1a, involution_gv(e1a)))},
    }


# serialization ------------------------------------------------------------

def to_text(x):
    parts = [f"{tag}*({funm.to_text(f)})" for tag, f in x.terms.items()]
    for i, k in enumerate(x.central, start=1):
        if k:
            parts.append(f"{funm._fmt_rat(k)}*K{i}")
    return " + ".join(parts) or "0"


def to_json(x):
    return {
        "terms": [[tag, funm.to_text(f)] for tag, f in x.terms.items()],
        "central": [funm._fmt_rat(k) for k in x.central],
    }
