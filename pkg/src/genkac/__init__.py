"""Exact algebra on Fun(M) for the sl3 big-cell intersection M.

Covers the loop algebra sl3 (x) Fun(M) with its two central extensions,
the contact-bracket Virasoro algebra, dual bases and truncated delta
functions, and the one-variable sl2 baseline.
"""
from .errors import (AxiomViolation, ClosureFailure, ClosureViolation, GenkacError,
                     NegativeExponent, NonHomogeneous, NotDivergenceFree, ParseError,
                     PoleAtPoint, SingularBlock, SupportEscape, SyntaxErrorAt,
                     UnknownSuite, UnknownSymbol)
from .funm import (A, B, C, ONE, PHI, Q, DiffOp1, FunM, bidegree, evaluate, nabla,
                   pair, partial, residue, sl3_act, weyl_substitute, xi)
from .loop import (GvElem, bracket_gv, cocycle, cocycle_general, form_gv, grade_gv,
                   involution_gv)
from .sl3 import Sl3Elem, bracket_sl3, cartan_involution_sl3, form_sl3, matrix_rep
from .suites import emit_report, run_suite
from .virasoro import (VirElem, contact_bracket, contact_field, mode_bracket_from_relation,
                       product_table, sl3_embedding, vir_on_loop)
from .delta import Window, dual_basis, expand_F, reproduce, split

__version__ = "0.1.0"
