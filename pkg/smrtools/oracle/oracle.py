# -*- coding: utf-8 -*-
r"""
SMRTools subpackage providing the exact evaluation of the inversion.

.. currentmodule:: smrtools.oracle.oracle

For a polynomial mean field the radial integrals are done monomial by
monomial with the substitution :math:`u = zs`:

.. math::
   \int_0^z z^{2i-1} Q_{n,i}\left(\frac{u}{z}\right) u^c\,{\rm d}u
   = z^{2i+c} \sum_j \frac{d_j(n,i)}{2j+c+1}

The following functions are provided

.. autosummary::
   oracle_radial_term
   oracle_reconstruct
   oracle_volume
   oracle_check
"""
# pylint: disable=C0103
from __future__ import print_function, division, absolute_import

import logging
from fractions import Fraction

import numpy as np
from scipy import integrate

from smrtools.grid.field import VolumeField
from smrtools.oracle.polynomial import RationalPolynomial
from smrtools.qpoly.table import q_power_moment
from smrtools.tools.errors import DomainError

__all__ = [
    "VOLUME_VARIABLES",
    "oracle_radial_term",
    "oracle_reconstruct",
    "oracle_volume",
    "oracle_check",
]

logger = logging.getLogger(__name__)

#: variables of reconstructed polynomials
VOLUME_VARIABLES = ("x", "y", "z")


def oracle_radial_term(p, table, i):
    r"""Exact :math:`\int_0^z z^{2i-1} Q_{n,i}(u/z)\,p(x,y,u)\,{\rm d}u`.

    Parameters
    ----------
    p : :any:`RationalPolynomial`
        Polynomial in ``(x, y, u)``.
    table : :any:`QTable`
        The polynomial table.
    i : :class:`int`
        Polynomial index.

    Returns
    -------
    :any:`RationalPolynomial`
        Polynomial in ``(x, y, z)``.
    """
    table.check_index(i)
    terms = {}
    moments = {}
    for (a, b, c), coeff in p.terms.items():
        if c not in moments:
            moments[c] = q_power_moment(table, i, c)
        key = (a, b, 2 * i + c)
        terms[key] = terms.get(key, Fraction(0)) + coeff * moments[c]
    return RationalPolynomial(terms, VOLUME_VARIABLES)


def oracle_reconstruct(mf, table):
    """Exact approximant of level ``n`` for a polynomial mean field.

    Parameters
    ----------
    mf : :any:`RationalPolynomial`
        The mean field as polynomial in ``(x, y, u)``.
    table : :any:`QTable`
        The polynomial table of level ``n``.

    Returns
    -------
    :any:`RationalPolynomial`
        The approximant as polynomial in ``(x, y, z)``.

    Examples
    --------
    >>> mf = parse_polynomial("1/8 x^2 y u^3 + 1/48 y u^5")
    >>> print(oracle_reconstruct(mf, builtin_n2()))
    65/64 x^2 y z^3 + 3/128 y z^5
    """
    result = mf.renamed(VOLUME_VARIABLES) * table.weight
    layer = mf
    for i in range(table.n + 1):
        result = result + oracle_radial_term(layer, table, i)
        layer = layer.laplacian_xy()
    return result * 2


def oracle_volume(poly, x_axis, y_axis, z_axis):
    """Sample a polynomial in ``(x, y, z)`` onto a volume grid.

    Parameters
    ----------
    poly : :any:`RationalPolynomial`
        E.g. the result of :any:`oracle_reconstruct`.
    x_axis, y_axis, z_axis : :any:`Axis`
        The grid axes.

    Returns
    -------
    :any:`VolumeField`
    """
    x, y, z = np.meshgrid(
        x_axis.nodes(), y_axis.nodes(), z_axis.nodes(), indexing="ij"
    )
    return VolumeField(x_axis, y_axis, z_axis, poly.evaluate(x, y, z))


def oracle_check(mf, table, point, rtol=1e-12):
    """Compare each exact radial integral against adaptive quadrature.

    Parameters
    ----------
    mf : :any:`RationalPolynomial`
        The mean field as polynomial in ``(x, y, u)``.
    table : :any:`QTable`
        The polynomial table.
    point : :class:`tuple`
        ``(x, y, z)`` with ``z > 0``.
    rtol : :class:`float`, optional
        Tolerance relative to ``max(1, |exact|)``. Default: ``1e-12``

    Returns
    -------
    :class:`list` of :class:`dict`
        Per ``i`` the keys ``i``, ``exact``, ``numeric``, ``error`` and
        ``ok``.
    """
    x0, y0, z0 = (Fraction(v) for v in point)
    if not z0 > 0:
        raise DomainError("smrtools.oracle_check: z needs to be > 0")
    zf = float(z0)
    out = []
    layer = mf
    for i in range(table.n + 1):
        exact = oracle_radial_term(layer, table, i)(x0, y0, z0)
        profile = layer
        scale = zf ** (2 * i - 1)

        def integrand(u, profile=profile, i=i):
            return float(table.horner(i, u / zf)) * float(
                profile.evaluate(float(x0), float(y0), u)
            )

        numeric, __ = integrate.quad(
            integrand, 0.0, zf, epsabs=1e-15, epsrel=1e-13, limit=200
        )
        numeric *= scale
        error = abs(numeric - float(exact))
        out.append(
            {
                "i": i,
                "exact": exact,
                "numeric": numeric,
                "error": error,
                "ok": error <= rtol * max(1.0, abs(float(exact))),
            }
        )
        logger.debug(
            "oracle_check i=%d: exact=%s numeric=%.17g", i, exact, numeric
        )
        layer = layer.laplacian_xy()
    return out
