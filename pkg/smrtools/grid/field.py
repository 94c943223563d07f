# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing the spherical mean and volume fields.

.. currentmodule:: smrtools.grid.field

The following classes and functions are provided

.. autosummary::
   SphericalMeanField
   VolumeField
   field_at
"""
# pylint: disable=C0103
from __future__ import division, absolute_import, print_function

from smrtools.grid.base import Field
from smrtools.tools.errors import DomainError

__all__ = ["SphericalMeanField", "VolumeField", "field_at"]


class SphericalMeanField(Field):
    """Samples of the spherical means ``Mf(x, y, u)`` on a tensor grid.

    ``values[k, l, m]`` holds the average of ``f`` over the sphere with
    center ``(x_k, y_l, 0)`` and radius ``u_m``.

    Parameters
    ----------
    x_axis, y_axis : :any:`Axis`
        Axes of the sphere centers on the detector plane.
    u_axis : :any:`Axis`
        Radial axis; radii are nonnegative so ``u_axis.start >= 0``.
    values : :class:`numpy.ndarray` or :any:`None`, optional
        Samples of shape ``(count_x, count_y, count_u)``.
        Default: zeros
    """

    axis_names = ("x", "y", "u")

    def __init__(self, x_axis, y_axis, u_axis, values=None):
        if u_axis.start < 0.0:
            raise DomainError(
                "smrtools.SphericalMeanField: radii need to be >= 0, "
                "got u_axis.start = {0}".format(u_axis.start)
            )
        super(SphericalMeanField, self).__init__(
            (x_axis, y_axis, u_axis), values
        )

    @property
    def x_axis(self):
        """:any:`Axis`: The x axis of the sphere centers."""
        return self.axes[0]

    @property
    def y_axis(self):
        """:any:`Axis`: The y axis of the sphere centers."""
        return self.axes[1]

    @property
    def u_axis(self):
        """:any:`Axis`: The radial axis."""
        return self.axes[2]


class VolumeField(Field):
    """Reconstructed samples ``f(x, y, z)`` above the detector plane.

    Parameters
    ----------
    x_axis, y_axis : :any:`Axis`
        Horizontal axes.
    z_axis : :any:`Axis`
        Vertical axis, restricted to ``z > 0``.
    values : :class:`numpy.ndarray` or :any:`None`, optional
        Samples of shape ``(count_x, count_y, count_z)``.
        Default: zeros
    """

    axis_names = ("x", "y", "z")

    def __init__(self, x_axis, y_axis, z_axis, values=None):
        if not z_axis.start > 0.0:
            raise DomainError(
                "smrtools.VolumeField: the z axis needs to lie in {{z > 0}}, "
                "got z_axis.start = {0}".format(z_axis.start)
            )
        super(VolumeField, self).__init__((x_axis, y_axis, z_axis), values)

    @property
    def x_axis(self):
        """:any:`Axis`: The x axis."""
        return self.axes[0]

    @property
    def y_axis(self):
        """:any:`Axis`: The y axis."""
        return self.axes[1]

    @property
    def z_axis(self):
        """:any:`Axis`: The z axis."""
        return self.axes[2]


def field_at(field, k, l, m):
    """The stored sample of ``field`` at ``(k, l, m)``.

    See :any:`Field.at`.
    """
    return field.at(k, l, m)
