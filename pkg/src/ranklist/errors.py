"""Exception hierarchy shared by every module.

Each class carries the CLI exit code it maps to.
"""

from __future__ import annotations


class RanklistError(Exception):
    exit_code = 1


class BadParameters(RanklistError, ValueError):
    exit_code = 2


class NonDivisibleDegrees(BadParameters):
    pass


class ContextMismatch(BadParameters):
    pass


class AmbientMismatch(BadParameters):
    pass


class DependentPoints(BadParameters):
    pass


class DegreeTooHigh(BadParameters):
    pass


class LengthMismatch(BadParameters):
    pass


class RadiusTooLarge(BadParameters):
    pass


class DivisionByZero(RanklistError, ZeroDivisionError):
    exit_code = 2


class BudgetExceeded(RanklistError):
    exit_code = 3


class VerificationFailed(RanklistError):
    exit_code = 4
