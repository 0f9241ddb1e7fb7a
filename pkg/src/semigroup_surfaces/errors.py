"""Exception types.

Every error carries a stable ``code`` string so the CLI can report it in
machine output without depending on the exception class name.
"""


class SurfaceError(Exception):
    code = "ERROR"

    def __init__(self, message: str = "", *, path: str | None = None) -> None:
        super().__init__(message or self.code)
        self.path = path

    def to_record(self) -> dict:
        record = {"code": self.code, "message": str(self)}
        if self.path is not None:
            record["path"] = self.path
        return record


class InternalInvariantError(SurfaceError):
    """A computed result contradicts a fact the library relies on."""

    code = "INTERNAL_INVARIANT"


# lattice_tori
class NonLatticeLinearError(SurfaceError):
    code = "NON_LATTICE_LINEAR"


# group_actions
class BadTranslationOrderError(SurfaceError):
    code = "BAD_TRANSLATION_ORDER"


class OrderMismatchError(SurfaceError):
    code = "ORDER_MISMATCH"


class ActionInvalidError(SurfaceError):
    code = "ACTION_INVALID"


class NotApplicableError(SurfaceError):
    code = "NOT_APPLICABLE"


# semigroup_laws
class TripleMismatchError(SurfaceError):
    code = "TRIPLE_MISMATCH"


class InvalidSignatureError(SurfaceError):
    code = "INVALID_SIGNATURE"


class SectionViolationError(SurfaceError):
    code = "SECTION_VIOLATION"


class UniverseNotClosedError(SurfaceError):
    code = "UNIVERSE_NOT_CLOSED"


# ruled_numerics
class NagataBoundError(SurfaceError):
    code = "NAGATA_BOUND"


class NoSolutionError(InternalInvariantError):
    code = "NO_SOLUTION"


class NonUniqueError(InternalInvariantError):
    code = "NON_UNIQUE"


class InvalidDError(SurfaceError):
    code = "INVALID_D"


# fibration_numerics
class BadFiberChiError(SurfaceError):
    code = "BAD_FIBER_CHI"


class InvalidFibrationError(SurfaceError):
    code = "INVALID_FIBRATION"


# classifier / cli
class InvalidDescriptorError(SurfaceError):
    code = "INVALID_DESCRIPTOR"


class ParseError(SurfaceError):
    code = "PARSE_ERROR"


class SchemaError(SurfaceError):
    code = "SCHEMA_ERROR"
