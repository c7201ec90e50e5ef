"""Exception types shared across the package."""


class EcsumprodError(Exception):
    """Base class for package-specific errors."""


class ZeroInverse(EcsumprodError):
    """Inversion of zero in a prime field."""


class NotAUnit(EcsumprodError):
    """Residue is not invertible modulo the given ring order."""


class NotOnCurve(EcsumprodError):
    """Point fails the curve equation."""


class CapExceeded(EcsumprodError):
    """Requested computation is above a desk-scale cap."""


class OrderNotDividing(EcsumprodError):
    """The claimed group order does not annihilate the point."""


class OrderMismatch(EcsumprodError):
    """Point does not have the exact order claimed for an orbit."""


class IdentityHasNoX(EcsumprodError):
    """An x-coordinate was requested at the group identity."""


class TrivialCharacter(EcsumprodError):
    """Operation needs a nontrivial additive character (lambda != 0 mod p)."""


class DomainError(EcsumprodError):
    """A bound formula was evaluated outside its domain."""


class TooLarge(EcsumprodError):
    """Requested sample size exceeds the available population."""


class EmptyConstruction(EcsumprodError):
    """A constructed set came out empty where members were required."""
