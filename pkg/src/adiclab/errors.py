"""Exception hierarchy.

``AdicError`` subclasses are domain errors (the CLI maps them to exit code 1);
``InvalidSpec`` is raised for malformed sequence descriptions (exit code 2).
"""


class AdicError(Exception):
    """Base class for domain errors."""


class NotInN(AdicError):
    pass


class NotInNStar(AdicError):
    pass


class NotInS(AdicError):
    pass


class NotInLattice(AdicError):
    pass


class NotNested(AdicError):
    pass


class InsufficientPrecision(AdicError):
    pass


class SpecMismatch(AdicError):
    pass


class BadCase(AdicError):
    pass


class TrivialH(AdicError):
    pass


class NoContraction(AdicError):
    """H contains no integer s > 1, so no ideal coset can be contracted."""


class EmptyP(AdicError):
    pass


class OutOfRepresentableClass(AdicError):
    pass


class InvalidSpec(ValueError):
    pass
