# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing the exception classes.

.. currentmodule:: smrtools.tools.errors

Every exception also derives from the builtin a caller would naturally
catch, so ``except ValueError`` keeps working.

The following classes are provided

.. autosummary::
   SmrError
   RangeError
   DomainError
   DimensionError
   ContractError
   ValidationError
   EvaluationError
"""
from __future__ import print_function, division, absolute_import

__all__ = [
    "SmrError",
    "RangeError",
    "DomainError",
    "DimensionError",
    "ContractError",
    "ValidationError",
    "EvaluationError",
]


class SmrError(Exception):
    """Base class for all errors raised by SMRTools."""

    #: short machine readable name used in the CLI error report
    kind = "error"

    def as_dict(self):
        """Machine readable form of the error."""
        return {"kind": self.kind, "message": str(self)}


class RangeError(SmrError, IndexError):
    """A grid index is out of range."""

    kind = "range"


class DomainError(SmrError, ValueError):
    """An argument lies outside the mathematical domain."""

    kind = "domain"


class DimensionError(SmrError, ValueError):
    """A grid is too small for the requested operation."""

    kind = "dimension"


class ContractError(SmrError, ValueError):
    """A precondition of an operation is violated."""

    kind = "contract"


class ValidationError(SmrError, ValueError):
    """Input data violates one or more invariants.

    Parameters
    ----------
    violations : :class:`list` of :class:`str` or :class:`str`
        Human readable description of each violation.
    prefix : :class:`str`, optional
        Prepended to the message. Default: ``"smrtools"``
    """

    kind = "validation"

    def __init__(self, violations, prefix="smrtools"):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super(ValidationError, self).__init__(
            "{0}: {1}".format(prefix, "; ".join(self.violations))
        )

    def as_dict(self):
        """Machine readable form of the error."""
        out = super(ValidationError, self).as_dict()
        out["violations"] = self.violations
        return out


class EvaluationError(SmrError, ArithmeticError):
    """A function produced a non-finite value.

    Parameters
    ----------
    message : :class:`str`
        Description of the failure.
    location : :class:`tuple` or :any:`None`, optional
        Point at which the non-finite value occurred.
    """

    kind = "evaluation"

    def __init__(self, message, location=None):
        self.location = None if location is None else tuple(location)
        if self.location is not None:
            message = "{0} at {1}".format(message, self.location)
        super(EvaluationError, self).__init__(message)

    def as_dict(self):
        """Machine readable form of the error."""
        out = super(EvaluationError, self).as_dict()
        out["location"] = (
            None if self.location is None else [float(v) for v in self.location]
        )
        return out
