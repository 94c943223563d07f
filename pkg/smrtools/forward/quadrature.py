# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing the quadrature rule on the unit sphere.

.. currentmodule:: smrtools.forward.quadrature

The following classes are provided

.. autosummary::
   SphereQuadratureRule
"""
# pylint: disable=C0103
from __future__ import print_function, division, absolute_import

import numpy as np

from smrtools.tools.errors import DomainError

__all__ = ["SphereQuadratureRule"]


class SphereQuadratureRule(object):
    r"""Product Gauss-Legendre times uniform quadrature on :math:`S^2`.

    The polar direction is integrated in :math:`\cos\theta` with
    Gauss-Legendre nodes on each hemisphere :math:`[-1, 0]` and
    :math:`[0, 1]` separately, the azimuth with the uniform (periodic
    trapezoidal) rule. Splitting at the equator keeps the rule exact for
    integrands that are cut off at the detector plane :math:`z=0`.

    Parameters
    ----------
    polar_order : :class:`int`, optional
        Gauss-Legendre nodes per hemisphere (>= 2), so the rule places
        ``2 * polar_order`` nodes in :math:`\cos\theta \in [-1, 1]`;
        the default of 32 gives 64 polar nodes. Default: ``32``
    azimuth_count : :class:`int` or :any:`None`, optional
        Uniform nodes in :math:`\varphi \in [0, 2\pi)` (>= 4).
        Default: ``2 * polar_order``

    Notes
    -----
    Spherical polynomials :math:`x^a y^b z^c` are integrated exactly for
    :math:`a + b + c \leq` :any:`exact_degree`, also when multiplied
    by the Heaviside function of :math:`z`.
    """

    def __init__(self, polar_order=32, azimuth_count=None):
        if azimuth_count is None:
            azimuth_count = 2 * polar_order
        if int(polar_order) != polar_order or polar_order < 2:
            raise DomainError(
                "smrtools.SphereQuadratureRule: polar_order needs to be an "
                "integer >= 2, got " + str(polar_order)
            )
        if int(azimuth_count) != azimuth_count or azimuth_count < 4:
            raise DomainError(
                "smrtools.SphereQuadratureRule: azimuth_count needs to be an "
                "integer >= 4, got " + str(azimuth_count)
            )
        self._polar_order = int(polar_order)
        self._azimuth_count = int(azimuth_count)
        self._directions, self._weights = self._build()

    def _build(self):
        ref_x, ref_w = np.polynomial.legendre.leggauss(self._polar_order)
        # map [-1, 1] onto the upper half [0, 1] and mirror it
        upper = 0.5 * (ref_x + 1.0)
        cos_t = np.concatenate((-upper[::-1], upper))
        w_t = np.concatenate((0.5 * ref_w[::-1], 0.5 * ref_w))
        sin_t = np.sqrt(np.maximum(0.0, 1.0 - cos_t ** 2))
        phi = 2.0 * np.pi * np.arange(self._azimuth_count) / self._azimuth_count
        w_p = 2.0 * np.pi / self._azimuth_count
        sin_g, phi_g = np.meshgrid(sin_t, phi, indexing="ij")
        cos_g = np.meshgrid(cos_t, phi, indexing="ij")[0]
        directions = np.column_stack(
            (
                (sin_g * np.cos(phi_g)).ravel(),
                (sin_g * np.sin(phi_g)).ravel(),
                cos_g.ravel(),
            )
        )
        weights = np.repeat(w_t * w_p, self._azimuth_count)
        directions.flags.writeable = False
        weights.flags.writeable = False
        return directions, weights

    @property
    def polar_order(self):
        """:class:`int`: Gauss-Legendre nodes per hemisphere."""
        return self._polar_order

    @property
    def azimuth_count(self):
        """:class:`int`: Number of uniform azimuth nodes."""
        return self._azimuth_count

    @property
    def directions(self):
        """:class:`numpy.ndarray`: Unit vectors of the nodes, shape ``(N, 3)``."""
        return self._directions

    @property
    def weights(self):
        """:class:`numpy.ndarray`: Positive weights summing to :math:`4\\pi`."""
        return self._weights

    @property
    def size(self):
        """:class:`int`: Number of nodes."""
        return self._weights.size

    @property
    def exact_degree(self):
        """:class:`int`: Maximal exactly integrated polynomial degree."""
        return min(2 * self._polar_order - 1, self._azimuth_count - 1)

    def integrate(self, values):
        """Integrate node values over the sphere.

        Parameters
        ----------
        values : :class:`numpy.ndarray`
            Function values with the nodes along the last axis.

        Returns
        -------
        :class:`float` or :class:`numpy.ndarray`
            The weighted sum along the last axis.
        """
        values = np.asarray(values, dtype=np.double)
        if values.shape[-1:] != self._weights.shape:
            raise DomainError(
                "smrtools.SphereQuadratureRule: need {0} values along the "
                "last axis, got shape {1}".format(self.size, values.shape)
            )
        return np.sum(values * self._weights, axis=-1)

    def mean(self, values):
        """The average of node values over the sphere."""
        return self.integrate(values) / (4.0 * np.pi)

    def __eq__(self, other):
        if not isinstance(other, SphereQuadratureRule):
            return NotImplemented
        return (self.polar_order, self.azimuth_count) == (
            other.polar_order,
            other.azimuth_count,
        )

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return hash((self.polar_order, self.azimuth_count))

    def __repr__(self):
        """Return String representation."""
        return "SphereQuadratureRule(polar_order={0}, azimuth_count={1})".format(
            self.polar_order, self.azimuth_count
        )
