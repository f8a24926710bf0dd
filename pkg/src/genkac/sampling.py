"""Seeded random inputs for the verification suites."""
from fractions import Fraction

from .funm import SL3_TAGS, FunM
from .loop import GvElem
from .sl2 import Laurent
from .sl3 import Sl3Elem


def rand_rat(rng, nonzero=True):
    while True:
        v = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        if v or not nonzero:
            return v


def rand_mono(rng, lo=-4, hi=4, ab_hi=None, l_min=None):
    ab_hi = hi if ab_hi is None else ab_hi
    e = rng.randint(0, max(ab_hi, 0))
    n, m = (e, 0) if rng.random() < 0.5 else (0, e)
    k = rng.randint(lo, hi)
    l = rng.randint(lo if l_min is None else l_min, hi)
    return (n, m, k, l)


def rand_funm(rng, terms=3, lo=-4, hi=4, ab_hi=None, l_min=None):
    out = {}
    for _ in range(rng.randint(1, terms)):
        out[rand_mono(rng, lo, hi, ab_hi, l_min)] = rand_rat(rng)
    return FunM(out)


def rand_plus(rng, terms=3, hi=4):
    """Element of V+ (every monomial has l >= 0)."""
    return rand_funm(rng, terms, -hi, hi, l_min=0)


def rand_polynomial(rng, degree=4, terms=4):
    """Random polynomial in a, b, c of total degree <= degree, in normal form."""
    out = FunM()
    for _ in range(rng.randint(1, terms)):
        i = rng.randint(0, degree)
        j = rng.randint(0, degree - i)
        k = rng.randint(0, degree - i - j)
        out = out + FunM.mono(i, 0, 0, 0) * FunM.mono(0, j, 0, 0) * FunM.mono(0, 0, k, 0) * rand_rat(rng)
    return out


def rand_tag(rng):
    return rng.choice(SL3_TAGS)


def rand_gv(rng, terms=2, lo=-3, hi=3):
    """Monomial-supported loop element with random central part."""
    x = GvElem(central=(rand_rat(rng, False), rand_rat(rng, False)))
    for _ in range(rng.randint(1, terms)):
        x = x + GvElem.tensor(rand_tag(rng), FunM.mono(*rand_mono(rng, lo, hi), coef=rand_rat(rng)))
    return x


def rand_sl3(rng):
    while True:
        x = Sl3Elem([rand_rat(rng, False) for _ in SL3_TAGS])
        if x:
            return x


def rand_laurent(rng, lo=-8, hi=8, terms=4):
    return Laurent({rng.randint(lo, hi): rand_rat(rng) for _ in range(rng.randint(1, terms))})


def rand_point(rng):
    """Rational (a, b, c) off the divisors c = 0 and c = ab."""
    while True:
        a, b, c = (rand_rat(rng, False) for _ in range(3))
        if c and c != a * b:
            return (a, b, c)
