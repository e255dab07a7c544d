"""Exception hierarchy shared by every dicksonlab module."""


class DicksonLabError(Exception):
    """Base class for all library errors."""


class FieldError(DicksonLabError, ValueError):
    """Bad field parameters: non-prime characteristic, reducible modulus, bad element data."""


class FieldMismatchError(DicksonLabError, TypeError):
    """Elements of two different fields were combined."""


class GuardExceeded(DicksonLabError):
    """The field or problem size is above the configured desk-scale guard."""


class CharacteristicError(DicksonLabError):
    """The operation needs odd characteristic (division by 2 or 4 is involved)."""


class HypothesisViolation(DicksonLabError, ValueError):
    """Arguments fall outside the hypotheses under which an identity is stated."""


class InconsistencyError(DicksonLabError):
    """An internal cross-check failed. Always indicates a bug, never bad input."""
