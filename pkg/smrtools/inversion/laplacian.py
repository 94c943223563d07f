# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing discrete Laplacians of mean fields.

.. currentmodule:: smrtools.inversion.laplacian

The following classes and functions are provided

.. autosummary::
   laplacian_xy
   LaplacianStack
   laplacian_stack
"""
# pylint: disable=C0103
from __future__ import print_function, division, absolute_import

import logging

import numpy as np

from smrtools.grid.field import SphericalMeanField
from smrtools.tools.errors import DimensionError, DomainError, RangeError

__all__ = ["laplacian_xy", "LaplacianStack", "laplacian_stack"]

logger = logging.getLogger(__name__)


def laplacian_xy(field):
    r"""The 5-point Laplacian in x and y of a mean field.

    Given by:

    .. math::
       \frac{f_{k+1,l} + f_{k-1,l} - 2f_{k,l}}{h_x^2}
       + \frac{f_{k,l+1} + f_{k,l-1} - 2f_{k,l}}{h_y^2}

    for each radius. Boundary nodes have no stencil, so the x and y axes
    of the result lose one node per side.

    Parameters
    ----------
    field : :any:`SphericalMeanField`
        The input field with at least 3 nodes in x and y.

    Returns
    -------
    :any:`SphericalMeanField`
        The Laplacian on the shrunk grid, same u axis.
    """
    nx, ny = field.shape[:2]
    if nx < 3 or ny < 3:
        raise DimensionError(
            "smrtools.laplacian_xy: need at least 3x3 nodes in x and y, "
            "got {0}x{1}".format(nx, ny)
        )
    v = field.values
    hx2 = field.x_axis.step ** 2
    hy2 = field.y_axis.step ** 2
    mid = v[1:-1, 1:-1]
    lap = (v[2:, 1:-1] + v[:-2, 1:-1] - 2.0 * mid) / hx2 + (
        v[1:-1, 2:] + v[1:-1, :-2] - 2.0 * mid
    ) / hy2
    return SphericalMeanField(
        field.x_axis.shrink(1), field.y_axis.shrink(1), field.u_axis, lap
    )


class LaplacianStack(object):
    """Repeated Laplacians ``Δ^i Mf`` for ``i = 0, ..., n``.

    Layer ``i`` lives on the input grid shrunk by ``i`` nodes per side in
    x and y, so node ``(k, l)`` of the input is node ``(k - i, l - i)``
    of layer ``i``.

    Parameters
    ----------
    layers : :class:`list` of :any:`SphericalMeanField`
        The layers, starting with the input field.
    """

    def __init__(self, layers):
        self._layers = tuple(layers)
        if not self._layers:
            raise DomainError("smrtools.LaplacianStack: need one layer")

    @property
    def layers(self):
        """:class:`tuple` of :any:`SphericalMeanField`: The layers."""
        return self._layers

    @property
    def n(self):
        """:class:`int`: The highest Laplacian power."""
        return len(self._layers) - 1

    @property
    def base(self):
        """:any:`SphericalMeanField`: Layer 0, the input field."""
        return self._layers[0]

    def layer(self, i):
        """The field of ``Δ^i Mf``."""
        return self._layers[i]

    def has_halo(self, k, l):
        """Whether input node ``(k, l)`` lies inside every layer."""
        nx, ny = self.base.shape[:2]
        n = self.n
        return n <= k < nx - n and n <= l < ny - n

    def profile(self, i, k, l):
        """u-profile of layer ``i`` above input node ``(k, l)``.

        Parameters
        ----------
        i : :class:`int`
            Laplacian power.
        k, l : :class:`int`
            Node indices of the input field.

        Returns
        -------
        :class:`numpy.ndarray`
            Read-only samples along the u axis.
        """
        if not self.has_halo(k, l):
            raise RangeError(
                "smrtools.LaplacianStack: node ({0}, {1}) lacks the halo of "
                "{2} nodes".format(k, l, self.n)
            )
        return self._layers[i].values[k - i, l - i]

    def __len__(self):
        return len(self._layers)

    def __repr__(self):
        """Return String representation."""
        return "LaplacianStack(n={0}, base={1!r})".format(self.n, self.base)


def laplacian_stack(field, n):
    """Apply :any:`laplacian_xy` up to ``n`` times.

    Parameters
    ----------
    field : :any:`SphericalMeanField`
        The mean field with at least ``2n+1`` nodes in x and y.
    n : :class:`int`
        The highest Laplacian power (>= 0).

    Returns
    -------
    :any:`LaplacianStack`
    """
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise DomainError(
            "smrtools.laplacian_stack: n needs to be an integer >= 0"
        )
    n = int(n)
    nx, ny = field.shape[:2]
    if min(nx, ny) < 2 * n + 1:
        raise DimensionError(
            "smrtools.laplacian_stack: n={0} needs at least {1}x{1} nodes in "
            "x and y, got {2}x{3}".format(n, 2 * n + 1, nx, ny)
        )
    layers = [field]
    for __ in range(n):
        layers.append(laplacian_xy(layers[-1]))
    logger.debug(
        "laplacian stack: n=%d, layer shapes %s",
        n,
        [lay.shape for lay in layers],
    )
    return LaplacianStack(layers)
