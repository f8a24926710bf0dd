"""Exception types raised by the engine."""


class GenkacError(Exception):
    pass


class NonHomogeneous(GenkacError):
    """A single bidegree was requested for an element mixing bidegrees."""


class PoleAtPoint(GenkacError):
    """Evaluation point lies on the divisor c = 0 or c = ab."""


class NotDivergenceFree(GenkacError):
    pass


class ClosureFailure(GenkacError):
    """A bracket of embedded generators left their span."""


class SingularBlock(GenkacError):
    pass


class ClosureViolation(GenkacError):
    """A dual needs support outside the requested window."""


class SupportEscape(GenkacError):
    pass


class AxiomViolation(GenkacError):
    def __init__(self, report):
        self.report = report
        first = report["violations"][0] if report["violations"] else None
        super().__init__(f"conformal axiom violated: {first}")


class UnknownSuite(GenkacError):
    pass


class ParseError(GenkacError):
    """Base for expression-parser failures."""


class SyntaxErrorAt(ParseError):
    def __init__(self, pos, expected, got=None):
        self.pos = pos
        self.expected = list(expected)
        self.got = got
        super().__init__(f"syntax error at {pos}: expected {', '.join(self.expected)}"
                         + (f", got {got!r}" if got is not None else ""))


class NegativeExponent(ParseError):
    pass


class UnknownSymbol(ParseError):
    pass
