"""Exception types raised across the package."""

from __future__ import annotations


class FFHGError(ValueError):
    """Base class for every error raised by ffhg."""


class NotPrime(FFHGError):
    pass


class OrderNotDividing(FFHGError):
    pass


class ZeroArgument(FFHGError):
    pass


class MissingRoot(FFHGError):
    pass


class ConductorMismatch(FFHGError):
    pass


class ConductorTooLarge(FFHGError):
    pass


class NotCoprime(FFHGError):
    pass


class NotRational(FFHGError):
    """An element expected to be a rational integer is not; signals an arithmetic bug."""


class OddOrder(FFHGError):
    pass


class SingularCurve(FFHGError):
    pass


class BadParams(FFHGError):
    pass


class NoSquareRoot(FFHGError):
    pass


class NotRepresentable(FFHGError):
    pass


class CongruenceViolation(FFHGError):
    pass


class NormalizationMismatch(FFHGError):
    """A Hecke value fails its trace identity against the brute-force count."""
