"""Exception hierarchy shared by every cohoc module."""


class CohocError(Exception):
    """Base class for all errors raised by cohoc."""


class PresentationError(CohocError, ValueError):
    pass


class NonPrimeCharacteristic(PresentationError):
    pass


class DuplicateGenerator(PresentationError):
    pass


class InvalidGenerator(PresentationError):
    pass


class InhomogeneousRelation(PresentationError):
    pass


class RelationDegreeTooLow(PresentationError):
    pass


class OddGeneratorAtOddPrime(PresentationError):
    pass


class MonomialOverflow(PresentationError, OverflowError):
    pass


class PresentationMismatch(CohocError, TypeError):
    pass


class UnknownGenerator(CohocError, LookupError):
    def __init__(self, name, position=None):
        self.name = name
        self.position = position
        where = "" if position is None else f" at position {position}"
        super().__init__(f"unknown generator {name!r}{where}")


class ExpressionSyntaxError(CohocError, SyntaxError):
    def __init__(self, message, text, position):
        super().__init__(f"{message} at position {position}")
        self.text = text
        self.position = position
        self.offset = position + 1


class TruncationTooSmall(CohocError, ValueError):
    pass


class DegreeExceedsTruncation(CohocError, ValueError):
    pass


class TruncatedBasis(CohocError, ValueError):
    pass


class InhomogeneousElement(CohocError, ValueError):
    pass


class DimensionMismatch(CohocError, ValueError):
    pass


class SearchSpaceTooLarge(CohocError, RuntimeError):
    pass


class DegreeMismatch(CohocError, ValueError):
    pass


class UnvalidatedMorphism(CohocError, ValueError):
    pass


class DocumentError(CohocError):
    pass


class SchemaError(DocumentError, ValueError):
    def __init__(self, message, location=None):
        self.location = location
        where = "" if location is None else f"{location}: "
        super().__init__(f"{where}{message}")
