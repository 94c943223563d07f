# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing the base class for analytic phantoms.

.. currentmodule:: smrtools.phantom.base

The following classes and functions are provided

.. autosummary::
   Phantom
   eval_phantom
   analytic_mean
"""
# pylint: disable=C0103
from __future__ import print_function, division, absolute_import

import numpy as np

from smrtools.tools.errors import DomainError

__all__ = ["Phantom", "eval_phantom", "analytic_mean"]


def _result(value, scalar):
    return float(value) if scalar else value


class Phantom(object):
    r"""Base class for analytic test functions supported in :math:`z>0`.

    A phantom has to provide a vectorized ``evaluate(x, y, z)`` and may
    provide its closed form spherical mean as ``_mean(cx, cy, u)``
    evaluated for :math:`u>0`.

    Notes
    -----
    Phantoms are immutable and their methods are pure, so they can be
    shared between threads.
    Instances are callable on a :any:`Point3`, so every phantom is an
    evaluable function for :any:`spherical_mean`.
    """

    #: name used for the selection in config files and on the CLI
    name = None
    #: whether the phantom is an indicator function (discontinuous)
    indicator = False

    def __init_subclass__(cls, **kwargs):
        super(Phantom, cls).__init_subclass__(**kwargs)
        if not hasattr(cls, "evaluate"):
            raise TypeError(
                "Can't instantiate class '"
                + cls.__name__
                + "', without providing 'evaluate'"
            )

    def __init__(self):
        if not hasattr(self, "evaluate"):
            raise TypeError("Don't instantiate 'Phantom' directly!")

    def __call__(self, pt):
        """Evaluate the phantom at a :any:`Point3`."""
        return float(self.evaluate(pt[0], pt[1], pt[2]))

    @property
    def has_mean(self):
        """:class:`bool`: Whether a closed form spherical mean exists."""
        return hasattr(self, "_mean")

    def mean(self, cx, cy, u):
        """Closed form spherical mean over the sphere ``S((cx, cy, 0), u)``.

        Parameters
        ----------
        cx, cy : :class:`float` or :class:`numpy.ndarray`
            Sphere center on the detector plane.
        u : :class:`float` or :class:`numpy.ndarray`
            Sphere radius (>= 0).

        Returns
        -------
        :class:`float` or :class:`numpy.ndarray`
            The mean; a float for scalar input.
        """
        if not self.has_mean:
            raise NotImplementedError(
                "smrtools.{0}: no closed form mean".format(type(self).__name__)
            )
        scalar = all(np.ndim(v) == 0 for v in (cx, cy, u))
        cx, cy, u = np.broadcast_arrays(
            *(np.asarray(v, dtype=np.double) for v in (cx, cy, u))
        )
        if np.any(u < 0.0) or not np.all(np.isfinite(u)):
            raise DomainError(
                "smrtools.{0}.mean: radius needs to be finite and >= 0".format(
                    type(self).__name__
                )
            )
        res = np.zeros(u.shape, dtype=np.double)
        pos = u > 0.0
        res[pos] = self._mean(cx[pos], cy[pos], u[pos])
        # degenerate sphere is its center
        res[~pos] = self.evaluate(cx[~pos], cy[~pos], np.zeros_like(u[~pos]))
        return _result(res, scalar)

    @property
    def support_bound(self):
        """:class:`float`: Radius of an origin centered ball holding the support."""
        return np.inf

    def intersects(self, cx, cy, u):
        """Whether the sphere ``S((cx, cy, 0), u)`` can meet the support.

        A ``False`` guarantees a vanishing mean.

        Parameters
        ----------
        cx, cy : :class:`float`
            Sphere center on the detector plane.
        u : :class:`float`
            Sphere radius.

        Returns
        -------
        :class:`bool`
        """
        if not u > 0.0:
            # the support is strictly above the plane
            return False
        dist = np.hypot(cx, cy)
        return bool(abs(dist - u) <= self.support_bound)

    def __eq__(self, other):
        if not isinstance(other, Phantom):
            return NotImplemented
        return type(self) is type(other) and repr(self) == repr(other)

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return hash(repr(self))

    def __repr__(self):
        """Return String representation."""
        return "{0}()".format(type(self).__name__)


def eval_phantom(p, pt):
    """Evaluate a phantom at a point.

    Parameters
    ----------
    p : :any:`Phantom`
        The phantom.
    pt : :any:`Point3`
        The point.

    Returns
    -------
    :class:`float`
    """
    return p(pt)


def analytic_mean(p, cx, cy, u):
    """Closed form spherical mean of a phantom.

    See :any:`Phantom.mean`.

    Raises
    ------
    DomainError
        If ``u < 0``.
    """
    return p.mean(cx, cy, u)
