"""Exception hierarchy.

Every error raised by the library derives from :class:`GaussForgeError`,
which is a :class:`ValueError`, so callers can catch either.
"""


class GaussForgeError(ValueError):
    """Base class; ``module`` names the component that raised it."""

    module = "gaussforge"


# diagram-core

class DiagramError(GaussForgeError):
    module = "diagram"


class DuplicatePosition(DiagramError):
    pass


class PositionOutOfRange(DiagramError):
    pass


class BadChordRoles(DiagramError):
    pass


class UnknownLabel(DiagramError):
    pass


class SelfLinkQuery(DiagramError):
    pass


class BudgetExceeded(DiagramError):
    pass


class ArcOutOfRange(DiagramError):
    pass


# codec

class CodecError(GaussForgeError):
    """Parse failure; ``token_index`` is 1-based, 0 when not token-specific."""

    module = "codec"

    def __init__(self, message, token_index=0):
        super().__init__(message)
        self.token_index = token_index


class TokenSyntaxError(CodecError):
    pass


class LabelCountError(CodecError):
    pass


class RoleError(CodecError):
    pass


class SignMismatch(CodecError):
    pass


# moves

class InapplicableMove(GaussForgeError):
    module = "moves"


# surface

class InternalParityError(GaussForgeError):
    module = "surface"


# parity

class LabelOutOfRange(GaussForgeError):
    module = "parity"


class CorrespondenceMismatch(GaussForgeError):
    module = "parity"


# invariants

class SizeLimitExceeded(GaussForgeError):
    module = "invariants"
