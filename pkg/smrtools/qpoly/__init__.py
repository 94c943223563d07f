# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing the standard polynomials.

.. currentmodule:: smrtools.qpoly

Subpackages
^^^^^^^^^^^

.. autosummary::
    table
    io

Tables
^^^^^^

.. autosummary::
   QTable
   builtin_n2
   validate_qtable

Evaluation and Moments
^^^^^^^^^^^^^^^^^^^^^^

.. autosummary::
   eval_q
   q_moment
   q_power_moment

Files
^^^^^

.. autosummary::
   load_qtable
   save_qtable
   resolve_qtable

----
"""
from __future__ import absolute_import

from smrtools.qpoly.table import (
    QTable,
    builtin_n2,
    validate_qtable,
    eval_q,
    q_moment,
    q_power_moment,
)
from smrtools.qpoly.io import load_qtable, save_qtable, resolve_qtable

__all__ = [
    "QTable",
    "builtin_n2",
    "validate_qtable",
    "eval_q",
    "q_moment",
    "q_power_moment",
    "load_qtable",
    "save_qtable",
    "resolve_qtable",
]
