class OneOneError(ValueError):
    """Invalid input.  The CLI maps these to exit code 1."""


class NonPrimitiveOffset(OneOneError):
    pass


class SelfIntersecting(OneOneError):
    pass


class BasepointOnCurve(OneOneError):
    pass


class NotTransverse(OneOneError):
    pass


class NotAnS3Diagram(OneOneError):
    pass


class NormalizationImpossible(OneOneError):
    pass


class OutOfRange(OneOneError):
    pass


class NotAKnot(OneOneError):
    pass


class NotStrict(OneOneError):
    pass


class SlopeZero(OneOneError):
    pass


class InternalInconsistency(RuntimeError):
    """An implementation bug, never a property of valid input (exit code 2)."""
