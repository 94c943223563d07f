# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing the exact symbolic oracle.

.. currentmodule:: smrtools.oracle

Subpackages
^^^^^^^^^^^

.. autosummary::
    polynomial
    parser
    oracle

Polynomials
^^^^^^^^^^^

.. autosummary::
   RationalPolynomial
   parse_polynomial
   poly_eval
   poly_add
   poly_scale
   poly_laplacian_xy

Oracle
^^^^^^

.. autosummary::
   oracle_radial_term
   oracle_reconstruct
   oracle_volume
   oracle_check

----
"""
from __future__ import absolute_import

from smrtools.oracle.polynomial import (
    RationalPolynomial,
    poly_eval,
    poly_add,
    poly_scale,
    poly_laplacian_xy,
)
from smrtools.oracle.parser import parse_polynomial
from smrtools.oracle.oracle import (
    oracle_radial_term,
    oracle_reconstruct,
    oracle_volume,
    oracle_check,
)

__all__ = [
    "RationalPolynomial",
    "parse_polynomial",
    "poly_eval",
    "poly_add",
    "poly_scale",
    "poly_laplacian_xy",
    "oracle_radial_term",
    "oracle_reconstruct",
    "oracle_volume",
    "oracle_check",
]
