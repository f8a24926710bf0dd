"""Exact arithmetic on Fun(M), M = {(a, b, c) : c != 0, c != ab}.

Elements are finite sums of normal-form monomials a^n b^m c^k q^l with
q = c - ab and min(n, m) = 0.  Products are brought back to normal form
through ab = c - q.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import NonHomogeneous, PoleAtPoint

SL3_TAGS = ("e1", "e2", "e3", "h1", "h2", "f1", "f2", "f3")
PHI_MONO = (0, 0, -1, -1)
UNIT_MONO = (0, 0, 0, 0)


def _accumulate(acc, n, m, k, l, coef):
    """Add coef * a^n b^m c^k q^l to acc, reducing mixed a^j b^j."""
    if not coef:
        return
    j = min(n, m)
    if j <= 0:
        key = (n, m, k, l)
        acc[key] = acc.get(key, 0) + coef
        return
    n, m = n - j, m - j
    for i in range(j + 1):
        key = (n, m, k + j - i, l + i)
        acc[key] = acc.get(key, 0) + coef * comb(j, i) * (-1) ** i


def _clean(acc):
    return {key: Fraction(v) for key, v in acc.items() if v}


class FunM:
    """An element of V^{sl3}: a finite map from normal monomials to rationals.

    Instances are treated as immutable.  Arithmetic operators accept ints and
    Fractions on either side.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        acc = {}
        if terms:
            for (n, m, k, l), coef in dict(terms).items():
                if n < 0 or m < 0:
                    raise ValueError("a and b exponents must be non-negative")
                _accumulate(acc, n, m, k, l, Fraction(coef))
        self._terms = _clean(acc)
        self._hash = None

    @classmethod
    def _wrap(cls, acc):
        obj = cls.__new__(cls)
        obj._terms = _clean(acc)
        obj._hash = None
        return obj

    @classmethod
    def mono(cls, n=0, m=0, k=0, l=0, coef=1):
        return cls({(n, m, k, l): coef})

    @classmethod
    def const(cls, value):
        return cls({UNIT_MONO: value})

    # container protocol -------------------------------------------------
    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def monomials(self):
        return sorted(self._terms)

    def coeff(self, mono):
        return self._terms.get(tuple(mono), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FunM.const(other)
        if not isinstance(other, FunM):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # arithmetic ----------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, FunM):
            return other
        if isinstance(other, (int, Fraction)):
            return FunM.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for key, v in other._terms.items():
            acc[key] = acc.get(key, 0) + v
        return FunM._wrap(acc)

    __radd__ = __add__

    def __neg__(self):
        return FunM._wrap({key: -v for key, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s):
        s = Fraction(s)
        if not s:
            return FunM()
        return FunM._wrap({key: v * s for key, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, FunM):
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            # only units (c^k q^l monomials) are invertible
            if len(self._terms) != 1:
                raise ValueError("only c^k q^l monomials can be inverted")
            (n, m, k, l), v = next(iter(self._terms.items()))
            if n or m:
                raise ValueError("a and b are not invertible on M")
            return FunM.mono(0, 0, k * e, l * e, Fraction(v) ** e)
        out = FunM.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __repr__(self):
        return f"FunM({to_text(self)!r})"

    def __str__(self):
        return to_text(self)


def multiply(f, g):
    acc = {}
    for (n1, m1, k1, l1), u in f._terms.items():
        for (n2, m2, k2, l2), v in g._terms.items():
            _accumulate(acc, n1 + n2, m1 + m2, k1 + k2, l1 + l2, u * v)
    return FunM._wrap(acc)


ONE = FunM.const(1)
A = FunM.mono(1, 0, 0, 0)
B = FunM.mono(0, 1, 0, 0)
C = FunM.mono(0, 0, 1, 0)
Q = FunM.mono(0, 0, 0, 1)
PHI = FunM.mono(*PHI_MONO)


def partial(f, axis):
    """Raw partial derivative along 'a', 'b' or 'c' (q = c - ab is not held fixed)."""
    acc = {}
    for (n, m, k, l), v in f._terms.items():
        if axis == "a":
            if n:
                _accumulate(acc, n - 1, m, k, l, v * n)
            if l:
                _accumulate(acc, n, m + 1, k, l - 1, -v * l)
        elif axis == "b":
            if m:
                _accumulate(acc, n, m - 1, k, l, v * m)
            if l:
                _accumulate(acc, n + 1, m, k, l - 1, -v * l)
        elif axis == "c":
            if k:
                _accumulate(acc, n, m, k - 1, l, v * k)
            if l:
                _accumulate(acc, n, m, k, l - 1, v * l)
        else:
            raise ValueError(f"unknown axis {axis!r}")
    return FunM._wrap(acc)


@dataclass(frozen=True)
class DiffOp1:
    """da*d/da + db*d/db + dc*d/dc + scalar, all coefficients in Fun(M)."""

    da: FunM = FunM()
    db: FunM = FunM()
    dc: FunM = FunM()
    scalar: FunM = FunM()

    def __call__(self, f):
        return self.apply(f)

    def apply(self, f):
        out = self.scalar * f
        if self.da:
            out = out + self.da * partial(f, "a")
        if self.db:
            out = out + self.db * partial(f, "b")
        if self.dc:
            out = out + self.dc * partial(f, "c")
        return out

    def derivation(self, f):
        """Apply only the vector-field part."""
        return DiffOp1(self.da, self.db, self.dc).apply(f)

    def __add__(self, other):
        return DiffOp1(self.da + other.da, self.db + other.db,
                       self.dc + other.dc, self.scalar + other.scalar)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return DiffOp1(self.da * s, self.db * s, self.dc * s, self.scalar * s)

    def mul_function(self, g):
        """The operator g * self."""
        return DiffOp1(g * self.da, g * self.db, g * self.dc, g * self.scalar)

    def commutator(self, other):
        # [X + s, Y + t] = [X, Y] + X(t) - Y(s)
        X, Y = self.derivation, other.derivation
        return DiffOp1(
            X(other.da) - Y(self.da),
            X(other.db) - Y(self.db),
            X(other.dc) - Y(self.dc),
            X(other.scalar) - Y(self.scalar),
        )

    def is_zero(self):
        return not (self.da or self.db or self.dc or self.scalar)


# The modified sl3 action with highest weight -rho.
_AB = A * B
XI = {
    "e1": DiffOp1(da=ONE),
    "e2": DiffOp1(db=ONE, dc=A),
    "e3": DiffOp1(dc=ONE),
    "h1": DiffOp1(da=A * -2, db=B, dc=-C, scalar=-ONE),
    "h2": DiffOp1(da=A, db=B * -2, dc=-C, scalar=-ONE),
    "f1": DiffOp1(da=-(A * A), db=-Q, dc=-(A * C), scalar=-A),
    "f2": DiffOp1(da=C, db=-(B * B), scalar=-B),
    "f3": DiffOp1(da=-(A * C), db=-(B * Q), dc=-(C * C), scalar=_AB - C * 2),
}

# d1 = d/da, d2 = d/db + a d/dc, d3 = d/dc
NABLA = {1: XI["e1"], 2: XI["e2"], 3: XI["e3"]}

L_C = DiffOp1(da=-A, dc=-C)
L_Q = DiffOp1(db=-B, dc=-Q - _AB)


def xi(x):
    """DiffOp1 for a basis tag or for a mapping tag -> coefficient."""
    if isinstance(x, str):
        return XI[x]
    out = DiffOp1()
    for tag, v in x.items():
        if v:
            out = out + XI[tag].scale(v)
    return out


def sl3_act(x, f):
    return xi(x).apply(f)


def nabla(i, f):
    return NABLA[i].apply(f)


def residue(f):
    return f.coeff(PHI_MONO)


def pair(f, g):
    # only products landing on phi matter; skip the full product
    total = Fraction(0)
    for (n1, m1, k1, l1), u in f._terms.items():
        for (n2, m2, k2, l2), v in g._terms.items():
            n, m, k, l = n1 + n2, m1 + m2, k1 + k2, l1 + l2
            j = min(n, m)
            if n - j or m - j:
                continue
            # (ab)^j c^k q^l, term i gives c^(k+j-i) q^(l+i)
            i = -1 - l
            if 0 <= i <= j and k + j - i == -1:
                total += u * v * comb(j, i) * (-1) ** i
    return total


def mono_bidegree(mono):
    n, m, k, l = mono
    return (n + k + l, m + k + l)


def bidegrees(f):
    return [(mono, mono_bidegree(mono)) for mono in f.monomials()]


def bidegree(f):
    degs = {mono_bidegree(mono) for mono in f._terms}
    if len(degs) > 1:
        raise NonHomogeneous(f"mixed bidegrees {sorted(degs)}")
    return degs.pop() if degs else (0, 0)


def homogeneous_parts(f):
    parts = {}
    for mono, v in f._terms.items():
        parts.setdefault(mono_bidegree(mono), {})[mono] = v
    return {d: FunM._wrap(t) for d, t in sorted(parts.items())}


def weyl_substitute(f):
    """Pull back along a -> -b/q, b -> a/c, c -> 1/c (so q -> 1/q)."""
    acc = {}
    for (n, m, k, l), v in f._terms.items():
        # (-b/q)^n (a/c)^m c^-k q^-l
        _accumulate(acc, m, n, -m - k, -n - l, v * (-1) ** n)
    return FunM._wrap(acc)


def evaluate(f, point):
    a, b, c = (Fraction(x) for x in point)
    q = c - a * b
    if c == 0 or q == 0:
        raise PoleAtPoint(f"point {(a, b, c)} lies on c=0 or c=ab")
    return sum((v * a ** n * b ** m * c ** k * q ** l
                for (n, m, k, l), v in f._terms.items()), Fraction(0))


# serialization ------------------------------------------------------------

def _fmt_rat(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _fmt_mono(mono, names=("a", "b", "c", "q")):
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return parts


def to_text(f):
    """Canonical text: ' + '-joined terms '<rat> a^n b^m c^k q^l'."""
    if not f:
        return "0"
    return " + ".join(" ".join([_fmt_rat(v)] + _fmt_mono(mono)) for mono, v in f.items())


def to_list(f):
    return [[n, m, k, l, v.numerator, v.denominator] for (n, m, k, l), v in f.items()]


def from_list(rows):
    return FunM({(n, m, k, l): Fraction(num, den) for n, m, k, l, num, den in rows})
