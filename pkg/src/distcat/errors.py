class CategoryError(Exception):
    """Base class for every error raised by distcat."""


class MalformedInput(CategoryError):
    pass


class UnknownObject(CategoryError):
    pass


class TypeMismatch(CategoryError):
    pass


class EnumerationBudgetExceeded(CategoryError):
    pass


class MissingStructure(CategoryError):
    pass


class ShapeRestriction(CategoryError):
    pass


class NotALattice(CategoryError):
    pass
