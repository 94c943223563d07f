# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing the forward spherical mean transform.

.. currentmodule:: smrtools.forward

Subpackages
^^^^^^^^^^^

.. autosummary::
    quadrature
    transform

Quadrature
^^^^^^^^^^

.. autosummary::
   SphereQuadratureRule

Transform
^^^^^^^^^

.. autosummary::
   spherical_mean
   sample_mean_field
   analytic_mean_field

----
"""
from __future__ import absolute_import

from smrtools.forward.quadrature import SphereQuadratureRule
from smrtools.forward.transform import (
    spherical_mean,
    sample_mean_field,
    analytic_mean_field,
)

__all__ = [
    "SphereQuadratureRule",
    "spherical_mean",
    "sample_mean_field",
    "analytic_mean_field",
]
