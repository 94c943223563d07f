# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing the local inversion of spherical means.

.. currentmodule:: smrtools.inversion

Subpackages
^^^^^^^^^^^

.. autosummary::
    laplacian
    radial
    reconstruct

Laplacians
^^^^^^^^^^

.. autosummary::
   laplacian_xy
   LaplacianStack
   laplacian_stack

Radial Integrals
^^^^^^^^^^^^^^^^

.. autosummary::
   simpson_weights
   radial_kernel
   radial_term

Reconstruction
^^^^^^^^^^^^^^

.. autosummary::
   ReconstructionConfig
   Inversion
   reconstruct_point
   reconstruct_volume

----
"""
from __future__ import absolute_import

from smrtools.inversion.laplacian import (
    laplacian_xy,
    LaplacianStack,
    laplacian_stack,
)
from smrtools.inversion.radial import (
    simpson_weights,
    radial_kernel,
    radial_term,
)
from smrtools.inversion.reconstruct import (
    ReconstructionConfig,
    Inversion,
    reconstruct_point,
    reconstruct_volume,
)

__all__ = [
    "laplacian_xy",
    "LaplacianStack",
    "laplacian_stack",
    "simpson_weights",
    "radial_kernel",
    "radial_term",
    "ReconstructionConfig",
    "Inversion",
    "reconstruct_point",
    "reconstruct_volume",
]
