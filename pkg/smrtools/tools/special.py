# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing special functions.

.. currentmodule:: smrtools.tools.special

The following functions are provided

.. autosummary::
   sphere_moment
   weight_factor
"""
# pylint: disable=C0103, E1101
from __future__ import print_function, division, absolute_import

import numpy as np
from scipy import special as sps

__all__ = ["sphere_moment", "weight_factor"]


# special functions ###########################################################


def sphere_moment(a, b, c, upper=False):
    r"""Integral of a monomial over the unit sphere.

    Given by: :math:`\int_{S^2} x^a y^b z^c\,{\rm d}\omega`, which equals
    :math:`2\,\Gamma(\alpha)\Gamma(\beta)\Gamma(\gamma)/\Gamma(\alpha+\beta+\gamma)`
    with :math:`\alpha=(a+1)/2` etc. if all exponents are even and 0 else.

    Parameters
    ----------
    a, b, c : :class:`int`
        Nonnegative exponents of x, y and z.
    upper : :class:`bool`, optional
        Only integrate over the upper hemisphere :math:`z \geq 0`.
        Then ``c`` may be odd. Default: False

    Returns
    -------
    :class:`float`
        The moment.
    """
    if min(a, b, c) < 0:
        raise ValueError("sphere_moment: exponents need to be >= 0")
    if a % 2 or b % 2 or (c % 2 and not upper):
        return 0.0
    alpha, beta, gamma = (a + 1) / 2.0, (b + 1) / 2.0, (c + 1) / 2.0
    log_mom = (
        sps.gammaln(alpha)
        + sps.gammaln(beta)
        + sps.gammaln(gamma)
        - sps.gammaln(alpha + beta + gamma)
    )
    return (1.0 if upper else 2.0) * np.exp(log_mom)


def weight_factor(n):
    r"""The weight :math:`2n^2+3n+1 = (n+1)(2n+1)` of the point term.

    Parameters
    ----------
    n : :class:`int`
        Level of the inversion formula (>= 0).

    Returns
    -------
    :class:`int`
    """
    n = int(n)
    if n < 0:
        raise ValueError("weight_factor: n needs to be >= 0, got " + str(n))
    weight = 2 * n * n + 3 * n + 1
    if weight != (n + 1) * (2 * n + 1):  # pragma: no cover
        raise ArithmeticError("weight_factor: factorization check failed")
    return weight
