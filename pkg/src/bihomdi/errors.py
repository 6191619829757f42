"""Exception hierarchy shared by every module."""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all library errors."""


class SingularMatrix(AlgebraError):
    pass


class DimensionMismatch(AlgebraError):
    pass


class FieldMismatch(AlgebraError):
    pass


class MapsDoNotCommute(AlgebraError):
    pass


class NotAMorphism(AlgebraError):
    pass


class NotAnIsomorphism(AlgebraError):
    pass


class NotAnIdeal(AlgebraError):
    pass


class NotRegular(AlgebraError):
    pass


class NegativePowerOnSingularMap(AlgebraError):
    pass


class DoesNotCommuteWithStructureMaps(AlgebraError):
    pass


class NotCentroid(AlgebraError):
    pass


class ImageConditionFails(AlgebraError):
    pass


class ProductsDiffer(AlgebraError):
    pass


class NotABimodule(AlgebraError):
    pass


class NotAModuleMorphism(AlgebraError):
    pass


class NotRotaBaxter(AlgebraError):
    pass


class NotNijenhuis(AlgebraError):
    pass


class NotAveraging(AlgebraError):
    pass


class NotInjective(AlgebraError):
    pass


class NotADerivation(AlgebraError):
    pass


class NotCocycles(AlgebraError):
    pass


class NotExact(AlgebraError):
    pass


class UnknownEntry(AlgebraError):
    pass


class MissingParameter(AlgebraError):
    pass


class ReportedFailure(AlgebraError):
    """An error that carries the CheckReport explaining it."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ConstructionFailed(ReportedFailure):
    """A construction produced an algebra that failed its own axiom check."""


class ActionAxiomFails(ReportedFailure):
    pass


class ParseError(AlgebraError):
    def __init__(self, message, line=None, column=None, source=None):
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
            if column is not None:
                where += f"{column}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line
        self.column = column


class UnknownVerb(AlgebraError):
    pass
