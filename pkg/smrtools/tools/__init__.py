# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing miscellaneous tools.

.. currentmodule:: smrtools.tools

Subpackages
^^^^^^^^^^^

.. autosummary::
    errors
    export
    metrics
    special

Errors
^^^^^^

.. autosummary::
   SmrError
   RangeError
   DomainError
   DimensionError
   ContractError
   ValidationError
   EvaluationError

Special functions
^^^^^^^^^^^^^^^^^

.. autosummary::
   sphere_moment
   weight_factor

The export and metrics routines depend on the grid containers and are
imported from :any:`smrtools.tools.export` and
:any:`smrtools.tools.metrics`.

----
"""
from __future__ import absolute_import

from smrtools.tools.errors import (
    SmrError,
    RangeError,
    DomainError,
    DimensionError,
    ContractError,
    ValidationError,
    EvaluationError,
)
from smrtools.tools.special import sphere_moment, weight_factor

__all__ = [
    "SmrError",
    "RangeError",
    "DomainError",
    "DimensionError",
    "ContractError",
    "ValidationError",
    "EvaluationError",
    "sphere_moment",
    "weight_factor",
]
