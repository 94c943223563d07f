# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing grids, axes and field containers.

.. currentmodule:: smrtools.grid

Subpackages
^^^^^^^^^^^

.. autosummary::
    axis
    base
    field

Axes and Points
^^^^^^^^^^^^^^^

.. autosummary::
   Axis
   Point3
   axis_node
   axis_from_bounds

Fields
^^^^^^

.. autosummary::
   SphericalMeanField
   VolumeField
   field_at

----
"""
from __future__ import absolute_import

from smrtools.grid.axis import Axis, Point3, axis_node, axis_from_bounds
from smrtools.grid.base import Field
from smrtools.grid.field import SphericalMeanField, VolumeField, field_at

__all__ = [
    "Axis",
    "Point3",
    "axis_node",
    "axis_from_bounds",
    "Field",
    "SphericalMeanField",
    "VolumeField",
    "field_at",
]
