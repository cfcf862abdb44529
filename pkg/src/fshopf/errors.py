"""Exception hierarchy.

Errors that mean "the input lies outside the split semisimple setting"
(`NonSplitOverField`, `NotSemisimple`) derive from `HypothesisViolation`;
the CLI maps those to exit status 3.
"""


class FsHopfError(Exception):
    pass


class InputError(FsHopfError):
    """Malformed input document or scalar string."""


class DimensionMismatch(FsHopfError, ValueError):
    pass


class SingularMatrix(FsHopfError, ArithmeticError):
    pass


class HypothesisViolation(FsHopfError):
    pass


class NonSplitOverField(HypothesisViolation):
    def __init__(self, message, polynomial=None):
        super().__init__(message)
        self.polynomial = polynomial


class NotSemisimple(HypothesisViolation):
    pass


class NonSquareBlock(HypothesisViolation):
    pass


class DegenerateForm(FsHopfError):
    pass


class NotAssociativeForm(FsHopfError):
    pass


class ZeroNormalizer(FsHopfError):
    pass


class NotAntiautomorphism(FsHopfError):
    pass


class NotInvolution(FsHopfError):
    pass


class IdempotentNotMapped(FsHopfError):
    pass


class NoIntegral(FsHopfError):
    pass


class NotSemisimpleHopf(HypothesisViolation):
    pass


class NotUnimodular(FsHopfError):
    pass


class NormalizationFailure(FsHopfError):
    pass


class NoAdjointForm(FsHopfError):
    pass


class NotRepresentation(FsHopfError):
    pass


class ReducibleRepresentation(FsHopfError):
    """The invariant-form solution space has dimension > 1."""


class InvalidGroupTable(FsHopfError):
    pass
