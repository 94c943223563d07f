# -*- coding: utf-8 -*-
"""
Purpose
=======

SMRTools is a library for the spherical mean Radon transform in 3D with
sphere centers on the detector plane z=0 and its local inversion,
providing analytic phantoms, sphere quadrature, a grid reconstruction
engine and an exact rational oracle for polynomial data.

The following functionalities are directly provided on module-level.

Subpackages
===========

.. autosummary::
    grid
    phantom
    forward
    qpoly
    inversion
    oracle
    tools

Classes
=======

Grids and Fields
^^^^^^^^^^^^^^^^

.. currentmodule:: smrtools.grid

.. autosummary::
   Axis
   Point3
   SphericalMeanField
   VolumeField

Phantoms
^^^^^^^^

.. currentmodule:: smrtools.phantom

.. autosummary::
   Phantom
   MonomialX2YZ3
   UnitBall

Forward Transform and Inversion
^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^

.. currentmodule:: smrtools

.. autosummary::
   SphereQuadratureRule
   QTable
   Inversion
   ReconstructionConfig
   RationalPolynomial

Functions
=========

Forward Transform
^^^^^^^^^^^^^^^^^

.. autosummary::
   spherical_mean
   sample_mean_field
   analytic_mean_field

Reconstruction
^^^^^^^^^^^^^^

.. autosummary::
   builtin_n2
   reconstruct_point
   reconstruct_volume
   oracle_reconstruct

File Export
^^^^^^^^^^^

.. currentmodule:: smrtools.tools.export

.. autosummary::
   save_field
   load_field
   export_slice
   vtk_export
"""

from __future__ import absolute_import

from smrtools._version import __version__
from smrtools import grid, phantom, forward, qpoly, inversion, oracle, tools
from smrtools.grid import Axis, Point3, SphericalMeanField, VolumeField
from smrtools.phantom import Phantom, MonomialX2YZ3, UnitBall
from smrtools.forward import (
    SphereQuadratureRule,
    spherical_mean,
    sample_mean_field,
    analytic_mean_field,
)
from smrtools.qpoly import QTable, builtin_n2
from smrtools.inversion import (
    Inversion,
    ReconstructionConfig,
    reconstruct_point,
    reconstruct_volume,
)
from smrtools.oracle import RationalPolynomial, oracle_reconstruct
from smrtools.tools.export import (
    save_field,
    load_field,
    export_slice,
    vtk_export,
)

__all__ = ["__version__"]
__all__ += ["grid", "phantom", "forward", "qpoly", "inversion", "oracle"]
__all__ += ["tools"]
__all__ += [
    "Axis",
    "Point3",
    "SphericalMeanField",
    "VolumeField",
    "Phantom",
    "MonomialX2YZ3",
    "UnitBall",
    "SphereQuadratureRule",
    "QTable",
    "Inversion",
    "ReconstructionConfig",
    "RationalPolynomial",
]

__all__ += [
    "spherical_mean",
    "sample_mean_field",
    "analytic_mean_field",
    "builtin_n2",
    "reconstruct_point",
    "reconstruct_volume",
    "oracle_reconstruct",
]

__all__ += ["save_field", "load_field", "export_slice", "vtk_export"]
