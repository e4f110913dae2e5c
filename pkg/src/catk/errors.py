"""Exception hierarchy shared by every catk module."""


class CatkError(Exception):
    """Base class. ``ids`` lists the identifiers the error is about."""

    def __init__(self, message="", *ids):
        super().__init__(message)
        self.ids = tuple(ids)

    @property
    def kind(self):
        return type(self).__name__


# kernel
class UnknownObject(CatkError):
    pass


class DuplicateId(CatkError):
    pass


class MissingComposite(CatkError):
    pass


class IllTypedComposite(CatkError):
    pass


class IdentityConflict(CatkError):
    pass


class NotComposable(CatkError):
    pass


class EndpointMismatch(CatkError):
    pass


class UnknownMorphism(CatkError):
    pass


# quiver
class UnknownNode(CatkError):
    pass


class DuplicateEdgeName(CatkError):
    pass


class NotAssociative(CatkError):
    pass


class UnitLawFails(CatkError):
    pass


class IncompleteTable(CatkError):
    pass


# functor
class SourceTargetMismatch(CatkError):
    pass


class CapExceeded(CatkError):
    pass


class IllTypedEdgeImage(CatkError):
    pass


# universal / monoidal
class IllTypedWitness(CatkError):
    pass


class MissingProduct(CatkError):
    pass


class MissingTerminal(CatkError):
    pass


class InvalidStructure(CatkError):
    pass


# smc_free
class UnknownObjectToken(CatkError):
    pass


class DuplicateGenerator(CatkError):
    pass


class UnknownGenerator(CatkError):
    pass


class WordMismatch(CatkError):
    pass


class InvalidDiagram(CatkError):
    pass


# finset
class ComposeDomainMismatch(CatkError):
    pass


class NotAPath(CatkError):
    pass


# dsl
class DslSyntaxError(CatkError):
    """Positioned syntax error; ``line`` and ``col`` are 1-based."""

    def __init__(self, line, col, expected, found=""):
        where = f"line {line}, col {col}"
        got = f", found {found!r}" if found else ", found end of line"
        super().__init__(f"{where}: expected {expected}{got}")
        self.line, self.col, self.expected, self.found = line, col, expected, found


class ReservedName(CatkError):
    pass


class SemanticError(CatkError):
    """A builder rejected the document; ``spans`` locate the declarations involved."""

    def __init__(self, cause, spans=()):
        self.cause = cause
        self.spans = tuple(spans)
        where = ", ".join(f"line {ln}, col {c}" for ln, c in self.spans)
        msg = f"{type(cause).__name__}: {cause}"
        super().__init__(f"{where}: {msg}" if where else msg, *getattr(cause, "ids", ()))

    @property
    def kind(self):
        return type(self.cause).__name__
