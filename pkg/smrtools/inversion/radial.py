# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing the radial integrals of the inversion.

.. currentmodule:: smrtools.inversion.radial

The following functions are provided

.. autosummary::
   simpson_weights
   radial_kernel
   radial_sums
   radial_term
"""
# pylint: disable=C0103
from __future__ import print_function, division, absolute_import

import numpy as np

from smrtools.tools.errors import ContractError, DomainError

__all__ = ["simpson_weights", "radial_kernel", "radial_sums", "radial_term"]


def simpson_weights(count):
    """Composite Simpson weights for unit node spacing.

    An odd number of panels gets a trailing trapezoid panel.

    Parameters
    ----------
    count : :class:`int`
        Number of nodes (>= 1). A single node spans no interval.

    Returns
    -------
    :class:`numpy.ndarray`
        The weights; multiply by the node spacing.
    """
    if isinstance(count, bool) or int(count) != count or count < 1:
        raise DomainError(
            "smrtools.simpson_weights: count needs to be an integer >= 1"
        )
    count = int(count)
    weights = np.zeros(count, dtype=np.double)
    if count == 1:
        return weights
    panels = count - 1
    simpson = panels - panels % 2
    if simpson:
        weights[0:simpson + 1:2] += 2.0 / 3.0
        weights[1:simpson:2] += 4.0 / 3.0
        weights[0] -= 1.0 / 3.0
        weights[simpson] -= 1.0 / 3.0
    if panels % 2:
        weights[-2:] += 0.5
    return weights


def _z_index(u_axis, z):
    z = float(z)
    if not z > 0.0:
        raise DomainError(
            "smrtools.radial_term: z needs to be > 0, got " + str(z)
        )
    m = u_axis.index_of(z)
    return m


def radial_kernel(table, i, z, u_axis):
    r"""Quadrature weights of :math:`\int_0^z Q_{n,i}(u/z)\,g(u)\,{\rm d}u`.

    The weights act on the samples of ``g`` at the u nodes in ``[0, z]``
    (composite Simpson). If the u axis starts above 0, the interval
    ``[0, start]`` is closed by a trapezoid panel using
    :math:`Q_{n,i}(0) = 0`.

    Parameters
    ----------
    table : :any:`QTable`
        The polynomial table.
    i : :class:`int`
        Polynomial index.
    z : :class:`float`
        Upper bound; a u node > 0.
    u_axis : :any:`Axis`
        The radial axis.

    Returns
    -------
    :class:`numpy.ndarray`
        ``m + 1`` weights for the nodes ``0..m`` with ``u_m = z``.
    """
    m = _z_index(u_axis, z)
    z = u_axis.node(m)
    u = u_axis.nodes()[: m + 1]
    s = np.clip(u / z, 0.0, 1.0)
    weights = simpson_weights(m + 1) * u_axis.step
    if u_axis.start > 0.0:
        weights[0] += 0.5 * u_axis.start
    return weights * table.horner(i, s)


def radial_sums(samples, kernel):
    """Weighted sums along the last axis.

    Each row is reduced on its own, so a value does not depend on the
    number of rows in the block.
    """
    prod = np.ascontiguousarray(samples) * kernel
    return prod.sum(axis=-1)


def radial_term(profile, table, i, z, u_axis):
    r"""One radial integral of the inversion formula.

    Given by:

    .. math::
       z^{2i-1}\int_0^z Q_{n,i}\left(\frac{u}{z}\right) g_i(u)\,{\rm d}u

    with the integral approximated by :any:`radial_kernel`.

    Parameters
    ----------
    profile : :class:`numpy.ndarray`
        Samples of :math:`g_i = \Delta^i Mf` at fixed ``(x, y)`` along the
        u axis (at least up to ``z``).
    table : :any:`QTable`
        The polynomial table.
    i : :class:`int`
        Polynomial index.
    z : :class:`float`
        Reconstruction height; a u node > 0.
    u_axis : :any:`Axis`
        The radial axis of ``profile``.

    Returns
    -------
    :class:`float`
    """
    kernel = radial_kernel(table, i, z, u_axis)
    profile = np.asarray(profile, dtype=np.double)
    if profile.ndim != 1 or profile.size < kernel.size:
        raise ContractError(
            "smrtools.radial_term: need a u-profile of at least {0} "
            "samples".format(kernel.size)
        )
    z = u_axis.node(kernel.size - 1)
    total = radial_sums(profile[None, : kernel.size], kernel)[0]
    return float(total * z ** (2 * i - 1))
