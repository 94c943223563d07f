# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing a base class for gridded fields.

.. currentmodule:: smrtools.grid.base

The following classes are provided

.. autosummary::
   Field
"""
# pylint: disable=C0103
from __future__ import division, absolute_import, print_function

import numpy as np

from smrtools.grid.axis import Axis
from smrtools.tools.errors import DomainError, RangeError

__all__ = ["Field"]


class Field(object):
    """A base class for samples on a tensor grid of three uniform axes.

    The samples are stored in C order with shape
    ``(count_0, count_1, count_2)``, so the last axis runs fastest.
    Fields are values: the sample array is read-only and every
    modification returns a new field.

    Parameters
    ----------
    axes : :class:`tuple` of :any:`Axis`
        The three grid axes.
    values : :class:`numpy.ndarray` or :any:`None`, optional
        Samples with a shape matching the axes. ``None`` gives zeros.
        Default: :any:`None`
    """

    #: names of the three axes, overridden by subclasses
    axis_names = ("x", "y", "z")

    def __init__(self, axes, values=None):
        axes = tuple(axes)
        if len(axes) != 3 or not all(isinstance(ax, Axis) for ax in axes):
            raise TypeError(
                "smrtools.{0}: need three 'Axis' instances".format(
                    type(self).__name__
                )
            )
        self._axes = axes
        shape = tuple(ax.count for ax in axes)
        if values is None:
            values = np.zeros(shape, dtype=np.double)
        else:
            values = np.array(values, dtype=np.double, order="C", copy=True)
        if values.shape != shape:
            raise DomainError(
                "smrtools.{0}: values of shape {1} don't match the axes "
                "{2}".format(type(self).__name__, values.shape, shape)
            )
        values.flags.writeable = False
        self._values = values

    @classmethod
    def zeros(cls, *axes):
        """Create a zero-initialized field on the given axes."""
        return cls(*axes)

    def at(self, k, l, m):
        """The stored sample at the node ``(k, l, m)``; no interpolation.

        Parameters
        ----------
        k, l, m : :class:`int`
            Node indices along the three axes.

        Returns
        -------
        :class:`float`
        """
        for idx, ax, name in zip((k, l, m), self._axes, self.axis_names):
            if not 0 <= idx < ax.count:
                raise RangeError(
                    "smrtools.{0}: {1}-index {2} out of range [0, {3})".format(
                        type(self).__name__, name, idx, ax.count
                    )
                )
        return float(self._values[k, l, m])

    def with_values(self, values):
        """A new field on the same axes holding ``values``."""
        return type(self)(*(self._axes + (values,)))

    def set(self, k, l, m, value):
        """A copy of this field with the sample at ``(k, l, m)`` replaced."""
        self.at(k, l, m)
        values = np.array(self._values)
        values[k, l, m] = value
        return self.with_values(values)

    def window(self, first, count):
        """Restrict the field to a block of consecutive nodes.

        Parameters
        ----------
        first : :class:`tuple` of :class:`int`
            First node index along each axis.
        count : :class:`tuple` of :class:`int`
            Number of nodes along each axis.

        Returns
        -------
        :class:`Field`
            A field of the same type on the sub-axes.
        """
        axes = tuple(
            ax.sub(fst, cnt) for ax, fst, cnt in zip(self._axes, first, count)
        )
        sel = tuple(slice(fst, fst + cnt) for fst, cnt in zip(first, count))
        return type(self)(*(axes + (self._values[sel],)))

    def axis(self, name):
        """The axis with the given name."""
        try:
            return self._axes[self.axis_names.index(name)]
        except ValueError:
            raise ValueError(
                "smrtools.{0}: unknown axis '{1}', use one of {2}".format(
                    type(self).__name__, name, self.axis_names
                )
            )

    @property
    def axes(self):
        """:class:`tuple` of :any:`Axis`: The grid axes."""
        return self._axes

    @property
    def values(self):
        """:class:`numpy.ndarray`: The read-only sample array."""
        return self._values

    @property
    def shape(self):
        """:class:`tuple`: Node counts along the three axes."""
        return self._values.shape

    @property
    def pos(self):
        """:class:`tuple`: The node positions along the three axes."""
        return tuple(ax.nodes() for ax in self._axes)

    def to_pyvista(self, fieldname="field"):  # pragma: no cover
        """Create a PyVista rectilinear grid of the field.

        Parameters
        ----------
        fieldname : :class:`str`, optional
            Name of the point data array. Default: "field"
        """
        from smrtools.tools.export import to_vtk

        return to_vtk(self, fieldname=fieldname)

    def vtk_export(self, filename, fieldname="field"):
        """Export the field to a VTK rectilinear grid file.

        Parameters
        ----------
        filename : :class:`str`
            Filename of the file to be saved, including the path. Note that
            an ending (.vtr) will be added to the name.
        fieldname : :class:`str`, optional
            Name of the field in the VTK file. Default: "field"
        """
        from smrtools.tools.export import vtk_export

        if not isinstance(filename, str):
            raise TypeError("Please use a string filename.")
        return vtk_export(filename, self, fieldname=fieldname)

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return (
            type(self) is type(other)
            and self._axes == other.axes
            and np.array_equal(self._values, other.values)
        )

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    __hash__ = None

    def __repr__(self):
        """Return String representation."""
        return "{0}({1})".format(
            type(self).__name__,
            ", ".join(
                "{0}_axis={1}".format(name, ax)
                for name, ax in zip(self.axis_names, self._axes)
            ),
        )
