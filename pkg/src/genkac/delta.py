"""Dual bases, truncated delta functions and the F(z, w) expansion diagnostic.

V+ is spanned by monomials with l >= 0, V- by those with l < 0.  Pairing is
bidegree-selective: (d1, d2) pairs only with (-2-d1, -2-d2).  Inside one
block the monomials are x_l = a^n b^m c^(s-l) q^l and the pairing matrix
against the dual block is unit upper triangular, so duals are finite sums.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from . import funm
from .errors import ClosureViolation, SingularBlock, SupportEscape
from .funm import FunM


@dataclass(frozen=True)
class Window:
    N: int
    M: int
    Kmin: int
    Kmax: int
    Lmin: int
    Lmax: int

    @classmethod
    def parse(cls, text):
        vals = [int(x) for x in text.split(",")]
        if len(vals) != 6:
            raise ValueError("window needs N,M,Kmin,Kmax,Lmin,Lmax")
        return cls(*vals)

    def contains(self, mono):
        n, m, k, l = mono
        return (0 <= n <= self.N and 0 <= m <= self.M
                and self.Kmin <= k <= self.Kmax and self.Lmin <= l <= self.Lmax)

    def positive_monomials(self):
        return [(n, m, k, l)
                for n in range(self.N + 1) for m in range(self.M + 1) if min(n, m) == 0
                for k in range(self.Kmin, self.Kmax + 1)
                for l in range(max(self.Lmin, 0), self.Lmax + 1)]

    def closure_check(self):
        """The dual of x_l needs q-exponents down to -1-l; they must fit above Lmin."""
        if self.Lmax >= 0 and -1 - self.Lmax < self.Lmin:
            raise ClosureViolation(
                f"duals need l down to {-1 - self.Lmax}, window stops at {self.Lmin}")


def split(f):
    """(f++, f+-, f-+, f--) by the signs of (l, k)."""
    parts = ({}, {}, {}, {})
    for (n, m, k, l), v in f.items():
        idx = (0 if k >= 0 else 1) if l >= 0 else (2 if k >= 0 else 3)
        parts[idx][(n, m, k, l)] = v
    return tuple(FunM(p) for p in parts)


def plus_minus(f):
    pp, pm, mp, mm = split(f)
    return pp + pm, mp + mm


# per-block exact solve --------------------------------------------------------

def _block(mono):
    n, m, k, l = mono
    return (n, m, k + l)


def _dual_block(n, m, s):
    """(n', m', s') of the block paired with (n, m, s)."""
    j = abs(n - m)
    return m, n, -2 - s - j


def block_pairing(j, l, lp):
    """pair(x_l, y_l') inside a block with |d1 - d2| = j."""
    i = -1 - l - lp
    return Fraction(comb(j, i) * (-1) ** i) if 0 <= i <= j else Fraction(0)


def solve_exact(rows, rhs):
    """Solve rows * x = rhs over Q; raises SingularBlock when the system is not uniquely solvable."""
    A = DomainMatrix([[QQ(int(v.numerator), int(v.denominator)) for v in r] for r in rows],
                     (len(rows), len(rows[0])), QQ)
    if A.rank() < A.shape[1]:
        raise SingularBlock(f"Gram block of size {A.shape} has rank {A.rank()}")
    b = DomainMatrix([[QQ(int(v.numerator), int(v.denominator))] for v in rhs], (len(rhs), 1), QQ)
    sol = A.lu_solve(b) if A.shape[0] == A.shape[1] else (A.transpose() * A).lu_solve(A.transpose() * b)
    if A * sol != b:
        raise SingularBlock("inconsistent Gram system")
    return [Fraction(int(QQ.numer(x)), int(QQ.denom(x))) for x in (r[0] for r in sol.to_list())]


def _block_duals(n, m, s, ls, lmin=None):
    """Duals of x_l (l in ls, all >= 0) inside block (n, m, s), as FunM."""
    j = abs(n - m)
    np_, mp_, sp = _dual_block(n, m, s)
    hi = max(ls)
    cols = list(range(-1 - hi, 0))
    if lmin is not None and cols[0] < lmin:
        raise ClosureViolation(f"dual of l={hi} needs q^{cols[0]}")
    # every V+ row 0..hi constrains the dual, not only those inside the window
    rows = [[block_pairing(j, r, c) for c in cols] for r in range(hi + 1)]
    out = {}
    for l in ls:
        coeffs = solve_exact(rows, [Fraction(int(r == l)) for r in range(hi + 1)])
        out[l] = FunM({(np_, mp_, sp - c, c): v for c, v in zip(cols, coeffs) if v})
    return out


def dual_monomial(mono):
    n, m, k, l = mono
    if l < 0:
        raise ValueError("duals are taken of V+ monomials (l >= 0)")
    return _block_duals(n, m, k + l, [l])[l]


@dataclass(frozen=True)
class DeltaTrunc:
    """Pairs (e, e*) with e a window V+ monomial and e* its dual in V-."""

    window: Window
    pairs: tuple = field(default_factory=tuple)
    orientation: str = "+"

    def dual_of(self, mono):
        for e, d in self.pairs:
            if e == tuple(mono):
                return d
        raise KeyError(mono)

    def monomials(self):
        return [e for e, _ in self.pairs]

    def to_json(self):
        return [[list(e), funm.to_list(d)] for e, d in self.pairs]


def dual_basis(window):
    window.closure_check()
    blocks = {}
    for mono in window.positive_monomials():
        blocks.setdefault(_block(mono), []).append(mono[3])
    pairs = []
    for (n, m, s), ls in sorted(blocks.items()):
        duals = _block_duals(n, m, s, ls, lmin=window.Lmin)
        for l in sorted(ls):
            pairs.append(((n, m, s - l, l), duals[l]))
    return DeltaTrunc(window, tuple(sorted(pairs)))


def biorthogonality_defects(d):
    """All (e, mu, value) with pair(e, mu*) != delta over the truncation; empty when exact."""
    bad = []
    for e, _ in d.pairs:
        for mu, dual in d.pairs:
            v = funm.pair(FunM.mono(*e), dual)
            if v != (1 if e == mu else 0):
                bad.append((e, mu, v))
    return bad


def reproduce(f, d):
    """sum <f+, e*> e + sum <f-, e> e*, the truncated Res_z f(z) delta(z - w).

    Raises SupportEscape if f+ has a monomial outside the window or f- is not
    in the span of the window duals.
    """
    fp, fm = plus_minus(f)
    covered = set(d.monomials())
    stray = [mono for mono in fp.monomials() if mono not in covered]
    if stray:
        raise SupportEscape(f"monomials {stray[:3]} lie outside the window")
    out = FunM()
    for e, dual in d.pairs:
        c_plus = funm.pair(fp, dual)
        if c_plus:
            out = out + FunM.mono(*e, coef=c_plus)
    minus = FunM()
    for e, dual in d.pairs:
        c_minus = funm.pair(fm, FunM.mono(*e))
        if c_minus:
            minus = minus + dual * c_minus
    if minus != fm:
        raise SupportEscape("the V- part is not spanned by the window duals")
    return out + minus


def delta_residue(f, d):
    """Literal sum <f, e*> e + sum <f, e> e* over the truncation.

    Equals f on V+ inputs.  V- is not isotropic, so on V- inputs the first
    sum can pick up cross terms (b c q^-1 gives -b), and V- parts outside
    the span of the duals are replaced by their projection.
    """
    out = FunM()
    for e, dual in d.pairs:
        ce = funm.pair(f, dual)
        cd = funm.pair(f, FunM.mono(*e))
        if ce:
            out = out + FunM.mono(*e, coef=ce)
        if cd:
            out = out + dual * cd
    return out


# the F(z, w) expansion ---------------------------------------------------------

# each split is a list of (coef, z numerator, w numerator, factors); factors name
# 1/(z1-w1), 1/(z2-w2), 1/(z3-w3), 1/(Qz-Qw).  Exponent tuples are (1, 2, 3, Q).
SPLITS = {
    "exact": [(1, (1, 1, 0, 0), (0, 0, 0, 0), "123Q"),
              (-1, (0, 0, 0, 0), (1, 1, 0, 0), "123Q")],
    "two-term": [(1, (1, 0, 0, 0), (0, 0, 0, 0), "12Q"),
              (1, (0, 0, 0, 0), (0, 1, 0, 0), "23Q")],
    "alt": [(1, (0, 1, 0, 0), (0, 0, 0, 0), "23Q"),
            (1, (0, 0, 0, 0), (1, 0, 0, 0), "13Q")],
}
_AXIS = {"1": 0, "2": 1, "3": 2, "Q": 3}


def split_is_identity(name):
    """Does the split recombine to (z1 z2 - w1 w2) over the full denominator?"""
    import sympy as sp
    z1, z2, z3, w1, w2, w3 = sp.symbols("z1 z2 z3 w1 w2 w3")
    den = {"1": z1 - w1, "2": z2 - w2, "3": z3 - w3,
           "Q": (z3 - z1 * z2) - (w3 - w1 * w2)}
    zs, ws = (z1, z2, z3, z3 - z1 * z2), (w1, w2, w3, w3 - w1 * w2)
    total = 0
    for coef, zn, wn, facs in SPLITS[name]:
        num = coef * sp.Mul(*[v ** e for v, e in zip(zs, zn)]) * sp.Mul(*[v ** e for v, e in zip(ws, wn)])
        missing = sp.Mul(*[den[x] for x in "123Q" if x not in facs])
        total += num * missing
    return sp.expand(total - (z1 * z2 - w1 * w2)) == 0


def _geometric(axis, p, region):
    """p-th term of the expansion of one factor: (sign, z exponent, w exponent)."""
    if region == "d2" and axis == "3":
        return -1, p, -p - 1
    return 1, -p - 1, p


def expand_F(order, region="d1", decomposition="two-term"):
    """Terms of F with geometric-index sum <= order, grouped by the w monomial.

    Returns {w mono: {raw z exponent tuple: coef}}.  w parts are brought to
    normal form; z parts only have positive z1 z2 pairs reduced, since z2^-1
    may appear and lies outside Fun(M).
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if region not in ("d1", "d2"):
        raise ValueError("region is d1 or d2")
    out = {}
    for coef, zn, wn, facs in SPLITS[decomposition]:
        for ps in product(range(order + 1), repeat=len(facs)):
            if sum(ps) > order:
                continue
            sign, ze, we = coef, list(zn), list(wn)
            for axis, p in zip(facs, ps):
                s, dz, dw = _geometric(axis, p, region)
                sign *= s
                ze[_AXIS[axis]] += dz
                we[_AXIS[axis]] += dw
            w_acc, z_acc = {}, {}
            funm._accumulate(w_acc, *we, 1)
            funm._accumulate(z_acc, *ze, sign)
            for wmono, wv in w_acc.items():
                cell = out.setdefault(wmono, {})
                for zmono, zv in z_acc.items():
                    cell[zmono] = cell.get(zmono, 0) + wv * zv
    return {w: {z: Fraction(v) for z, v in sorted(c.items()) if v}
            for w, c in sorted(out.items()) if any(c.values())}


def _raw_text(terms, names=("z1", "z2", "z3", "Qz")):
    if not terms:
        return "0"
    return " + ".join(" ".join([funm._fmt_rat(v)] + funm._fmt_mono(mono, names))
                      for mono, v in sorted(terms.items()))


def _w_weight(mono):
    # w1, w2 weigh 1 and w3, Qw weigh 2, which keeps normalization homogeneous
    n, m, k, l = mono
    return n + m + 2 * (k + l)


def expand_F_report(order, region="d1", decomposition="two-term"):
    """Term-by-term diff of the F expansion against the dual-basis delta++."""
    terms = expand_F(order, region, decomposition)
    rows = []
    keys = set(terms)
    if region == "d1":
        keys |= {(n, m, k, l) for n in range(order + 1) for m in range(order + 1)
                 if min(n, m) == 0 for k in range(order + 1) for l in range(order + 1)
                 if _w_weight((n, m, k, l)) <= order}
    for w in sorted(keys):
        lhs = terms.get(w, {})
        if w[2] >= 0 and w[3] >= 0:
            rhs = dict(dual_monomial(w).items())
        else:
            rhs = {}
        rows.append({
            "term": funm.to_text(FunM.mono(*w)).removeprefix("1 ") or "1",
            "w_mono": list(w),
            "lhs": _raw_text(lhs),
            "rhs": _raw_text(rhs),
            "equal": lhs == rhs,
            "complete": region == "d1" and _w_weight(w) <= order,
        })
    zero = next(r for r in rows if r["w_mono"] == [0, 0, 0, 0]) if (0, 0, 0, 0) in keys else None
    return {
        "order": order,
        "region": region,
        "split": decomposition,
        "split_is_identity": split_is_identity(decomposition),
        "w_degree_0": zero,
        "rows": rows,
        "mismatches": sum(1 for r in rows if not r["equal"]),
    }
