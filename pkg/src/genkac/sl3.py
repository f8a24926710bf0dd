"""sl3 over Q in the basis (e1, e2, e3, h1, h2, f1, f2, f3).

e1 = E12, e2 = E23, e3 = E13, h1 = E11 - E22, h2 = E22 - E33,
f1 = E21, f2 = E32, f3 = E31.  Brackets and the invariant form are computed
through the defining 3x3 representation.
"""
from fractions import Fraction

from .funm import SL3_TAGS

_UNITS = {
    "e1": ((0, 1, 1),),
    "e2": ((1, 2, 1),),
    "e3": ((0, 2, 1),),
    "h1": ((0, 0, 1), (1, 1, -1)),
    "h2": ((1, 1, 1), (2, 2, -1)),
    "f1": ((1, 0, 1),),
    "f2": ((2, 1, 1),),
    "f3": ((2, 0, 1),),
}


class Sl3Elem:
    """Eight rational coordinates; immutable."""

    __slots__ = ("coords",)

    def __init__(self, coords=None):
        if coords is None:
            coords = (0,) * 8
        elif isinstance(coords, dict):
            coords = tuple(coords.get(t, 0) for t in SL3_TAGS)
        if len(coords) != 8:
            raise ValueError("sl3 elements have 8 coordinates")
        self.coords = tuple(Fraction(x) for x in coords)

    @classmethod
    def basis(cls, tag):
        return cls({tag: 1})

    def items(self):
        return [(t, v) for t, v in zip(SL3_TAGS, self.coords) if v]

    def __getitem__(self, tag):
        return self.coords[SL3_TAGS.index(tag)]

    def __add__(self, other):
        return Sl3Elem(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Sl3Elem(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return Sl3Elem(tuple(-x for x in self.coords))

    def __mul__(self, s):
        if isinstance(s, (int, Fraction)):
            return Sl3Elem(tuple(x * s for x in self.coords))
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Sl3Elem) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        body = " + ".join(f"{v}*{t}" for t, v in self.items()) or "0"
        return f"Sl3Elem({body})"


BASIS = {t: Sl3Elem.basis(t) for t in SL3_TAGS}


def matrix_rep(x):
    M = [[Fraction(0)] * 3 for _ in range(3)]
    for tag, v in x.items():
        for i, j, s in _UNITS[tag]:
            M[i][j] += s * v
    return M


def _matmul(X, Y):
    return [[sum(X[i][r] * Y[r][j] for r in range(3)) for j in range(3)] for i in range(3)]


def from_matrix(M):
    if sum(M[i][i] for i in range(3)) != 0:
        raise ValueError("matrix is not traceless")
    return Sl3Elem({
        "e1": M[0][1], "e2": M[1][2], "e3": M[0][2],
        "h1": M[0][0], "h2": -M[2][2],
        "f1": M[1][0], "f2": M[2][1], "f3": M[2][0],
    })


def bracket_sl3(x, y):
    X, Y = matrix_rep(x), matrix_rep(y)
    XY, YX = _matmul(X, Y), _matmul(Y, X)
    return from_matrix([[XY[i][j] - YX[i][j] for j in range(3)] for i in range(3)])


def form_sl3(x, y):
    """Trace form of the defining representation; (alpha_max, alpha_max) = 2."""
    P = _matmul(matrix_rep(x), matrix_rep(y))
    return P[0][0] + P[1][1] + P[2][2]


def cartan_involution_sl3(x):
    """x -> -x^T, i.e. e_i -> -f_i, f_i -> -e_i, h -> -h."""
    M = matrix_rep(x)
    return from_matrix([[-M[j][i] for j in range(3)] for i in range(3)])


def structure_constants():
    """{(x, y): [x, y]} over all ordered basis pairs."""
    return {(x, y): bracket_sl3(BASIS[x], BASIS[y]) for x in SL3_TAGS for y in SL3_TAGS}


def gram_matrix():
    return [[form_sl3(BASIS[x], BASIS[y]) for y in SL3_TAGS] for x in SL3_TAGS]


def to_json(x):
    return [str(v) for v in x.coords]


def from_json(row):
    return Sl3Elem([Fraction(v) for v in row])
