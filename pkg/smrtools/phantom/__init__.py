# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing analytic phantoms.

.. currentmodule:: smrtools.phantom

Subpackages
^^^^^^^^^^^

.. autosummary::
    base
    models

Phantoms
^^^^^^^^

.. autosummary::
   Phantom
   MonomialX2YZ3
   UnitBall

Functions
^^^^^^^^^

.. autosummary::
   eval_phantom
   analytic_mean
   phantom_from_config

----
"""
from __future__ import absolute_import

from smrtools.phantom.base import Phantom, eval_phantom, analytic_mean
from smrtools.phantom.models import (
    MonomialX2YZ3,
    UnitBall,
    PHANTOMS,
    phantom_from_config,
)

__all__ = [
    "Phantom",
    "MonomialX2YZ3",
    "UnitBall",
    "PHANTOMS",
    "eval_phantom",
    "analytic_mean",
    "phantom_from_config",
]
