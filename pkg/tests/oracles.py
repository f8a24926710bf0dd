"""Independent sympy models used to cross-check the exact engine."""
from fractions import Fraction

import sympy as sp

a, b, c, q, t = sp.symbols("a b c q t")


def to_sympy(f):
    """FunM -> rational function of a, b, c with q = c - ab."""
    return sum((sp.Rational(v.numerator, v.denominator) * a**n * b**m * c**k * (c - a * b)**l
                for (n, m, k, l), v in f.items()), sp.Integer(0))


def same(e1, e2):
    return sp.cancel(sp.together(e1 - e2)) == 0


# the modified sl3 action, written out in raw coordinates
def xi(tag, E):
    d = lambda v: sp.diff(E, v)
    ops = {
        "e1": d(a),
        "e2": d(b) + a * d(c),
        "e3": d(c),
        "h1": -2 * a * d(a) + b * d(b) - c * d(c) - E,
        "h2": a * d(a) - 2 * b * d(b) - c * d(c) - E,
        "f1": -a**2 * d(a) - (c - a * b) * d(b) - a * c * d(c) - a * E,
        "f2": c * d(a) - b**2 * d(b) - b * E,
        "f3": -a * c * d(a) - b * (c - a * b) * d(b) - c**2 * d(c) - (2 * c - a * b) * E,
    }
    return ops[tag]


def residue(E):
    """Coefficient of 1/(c q) with no a, b left.

    After b -> (c - q)/a only the a^0 part of a normal monomial with
    min(n, m) = 0 survives, so Res is the a^0 c^-1 q^-1 coefficient.
    """
    expr = sp.expand(sp.cancel(E.subs(b, (c - q) / a)))
    total = sp.Integer(0)
    for term, coef in expr.as_coefficients_dict().items():
        powers = term.as_powers_dict()
        if powers.get(a, 0) == 0 and powers.get(c, 0) == -1 and powers.get(q, 0) == -1:
            if set(powers) <= {a, c, q}:
                total += coef
    return Fraction(int(total.p), int(total.q))


def contact_bracket(F, G):
    d1 = lambda E: sp.diff(E, a)
    d2 = lambda E: sp.diff(E, b) + a * sp.diff(E, c)
    d3 = lambda E: sp.diff(E, c)
    return G * d3(F) - F * d3(G) + d1(F) * d2(G) - d1(G) * d2(F)


# sl3 as 3x3 matrices
def unit(i, j):
    M = sp.zeros(3, 3)
    M[i, j] = 1
    return M


SL3 = {
    "e1": unit(0, 1), "e2": unit(1, 2), "e3": unit(0, 2),
    "h1": unit(0, 0) - unit(1, 1), "h2": unit(1, 1) - unit(2, 2),
    "f1": unit(1, 0), "f2": unit(2, 1), "f3": unit(2, 0),
}
TAGS = tuple(SL3)


def sl3_coords(M):
    """Coordinates of a traceless matrix in the basis above."""
    out = {"e1": M[0, 1], "e2": M[1, 2], "e3": M[0, 2], "f1": M[1, 0], "f2": M[2, 1], "f3": M[2, 0],
           "h1": M[0, 0], "h2": M[0, 0] + M[1, 1]}
    return {k: Fraction(int(sp.Rational(v).p), int(sp.Rational(v).q)) for k, v in out.items() if v}
