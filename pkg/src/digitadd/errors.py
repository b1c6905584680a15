"""Exception types shared across the package.

All domain failures derive from :class:`DigitAddError`, which is a
``ValueError`` so plain callers can catch the builtin.
"""


class DigitAddError(ValueError):
    pass


class DimensionMismatch(DigitAddError):
    """Vector base or length does not match the scheme."""


class CapExceeded(DigitAddError):
    """An operation table would exceed the configured element cap."""


class BudgetExceeded(DigitAddError):
    """An enumeration would exceed its size budget."""


class SchemeSyntaxError(DigitAddError):
    pass


class SchemeInvariantError(DigitAddError):
    """Well-formed input that violates a scheme invariant (part sums, coprimality)."""


class TwistedSchemeError(DigitAddError):
    """A group-only operation was requested on a twisted scheme."""


class KeyTooShort(DigitAddError):
    def __init__(self, required: int, got: int):
        super().__init__(f"key too short: need at least {required} bytes, got {got}")
        self.required = required
        self.got = got


class ClassificationError(DigitAddError):
    """Order-profile fingerprints disagree with the partition classes."""


class NotAGroupError(DigitAddError):
    pass
