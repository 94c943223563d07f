# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing uniform grid axes and points.

.. currentmodule:: smrtools.grid.axis

The following classes and functions are provided

.. autosummary::
   Axis
   Point3
   axis_node
   axis_from_bounds
"""
# pylint: disable=C0103
from __future__ import division, absolute_import, print_function

from collections import namedtuple

import numpy as np

from smrtools.tools.errors import ContractError, DomainError, RangeError

__all__ = ["Axis", "Point3", "axis_node", "axis_from_bounds"]

#: relative tolerance used to decide whether a value is a grid node
NODE_RTOL = 1e-9


class Point3(namedtuple("Point3", ["x", "y", "z"])):
    """A point in 3D space.

    Parameters
    ----------
    x, y, z : :class:`float`
        Cartesian coordinates (finite).
    """

    __slots__ = ()

    def __new__(cls, x, y, z):
        x, y, z = float(x), float(y), float(z)
        if not np.all(np.isfinite((x, y, z))):
            raise DomainError(
                "smrtools.Point3: coordinates must be finite, "
                "got ({0}, {1}, {2})".format(x, y, z)
            )
        return super(Point3, cls).__new__(cls, x, y, z)


class Axis(object):
    """A uniform grid axis.

    Node ``k`` sits at ``start + k * step`` for ``0 <= k < count``.

    Parameters
    ----------
    start : :class:`float`
        Position of the first node.
    step : :class:`float`
        Node spacing (> 0).
    count : :class:`int`
        Number of nodes (>= 1).
    """

    def __init__(self, start, step, count):
        start = float(start)
        step = float(step)
        if int(count) != count:
            raise DomainError(
                "smrtools.Axis: count needs to be an integer, got " + str(count)
            )
        count = int(count)
        if not (np.isfinite(start) and np.isfinite(step)):
            raise DomainError("smrtools.Axis: start and step must be finite")
        if not step > 0.0:
            raise DomainError(
                "smrtools.Axis: step needs to be > 0, got " + str(step)
            )
        if count < 1:
            raise DomainError(
                "smrtools.Axis: count needs to be >= 1, got " + str(count)
            )
        self._start = start
        self._step = step
        self._count = count

    def node(self, k):
        """Position of node ``k``.

        Parameters
        ----------
        k : :class:`int`
            Node index.

        Returns
        -------
        :class:`float`
            ``start + k * step``
        """
        if not 0 <= k < self.count:
            raise RangeError(
                "smrtools.Axis: index {0} out of range [0, {1})".format(
                    k, self.count
                )
            )
        return self.start + k * self.step

    def nodes(self):
        """:class:`numpy.ndarray`: All node positions."""
        return self.start + np.arange(self.count, dtype=np.double) * self.step

    def index_of(self, value):
        """Index of the node located at ``value``.

        Parameters
        ----------
        value : :class:`float`
            A position that needs to coincide with a node.

        Returns
        -------
        :class:`int`
            The node index.

        Raises
        ------
        ContractError
            If ``value`` is not a node of the axis.
        """
        value = float(value)
        k = int(np.rint((value - self.start) / self.step))
        tol = NODE_RTOL * max(1.0, abs(value), self.step)
        if 0 <= k < self.count and abs(self.node(k) - value) <= tol:
            return k
        raise ContractError(
            "smrtools.Axis: {0!r} is not a grid node of {1}".format(value, self)
        )

    def is_node(self, value):
        """:class:`bool`: Whether ``value`` coincides with a node."""
        try:
            self.index_of(value)
        except ContractError:
            return False
        return True

    def shrink(self, cells):
        """Drop ``cells`` nodes on each side.

        Parameters
        ----------
        cells : :class:`int`
            Nodes to remove per side.

        Returns
        -------
        :class:`Axis`
            The trimmed axis.
        """
        if self.count - 2 * cells < 1:
            raise DomainError(
                "smrtools.Axis: can't shrink {0} by {1} cells".format(
                    self, cells
                )
            )
        return Axis(self.node(cells), self.step, self.count - 2 * cells)

    def sub(self, first, count):
        """Axis of ``count`` consecutive nodes starting at node ``first``."""
        if first < 0 or count < 1 or first + count > self.count:
            raise RangeError(
                "smrtools.Axis: sub-axis [{0}, {1}) out of range".format(
                    first, first + count
                )
            )
        return Axis(self.node(first), self.step, count)

    @property
    def start(self):
        """:class:`float`: Position of the first node."""
        return self._start

    @property
    def step(self):
        """:class:`float`: Node spacing."""
        return self._step

    @property
    def count(self):
        """:class:`int`: Number of nodes."""
        return self._count

    @property
    def end(self):
        """:class:`float`: Position of the last node."""
        return self.node(self.count - 1)

    def __len__(self):
        return self.count

    def __eq__(self, other):
        if not isinstance(other, Axis):
            return NotImplemented
        return (self.start, self.step, self.count) == (
            other.start,
            other.step,
            other.count,
        )

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return hash((self.start, self.step, self.count))

    def __repr__(self):
        """Return String representation."""
        return "Axis(start={0!r}, step={1!r}, count={2})".format(
            self.start, self.step, self.count
        )


def axis_node(axis, k):
    """Position of node ``k`` of ``axis``.

    See :any:`Axis.node`.
    """
    return axis.node(k)


def axis_from_bounds(lower, upper, step):
    """Create the axis covering ``[lower, upper]`` with the given spacing.

    Parameters
    ----------
    lower : :class:`float`
        First node.
    upper : :class:`float`
        Last node; ``upper - lower`` needs to be a multiple of ``step``.
    step : :class:`float`
        Node spacing.

    Returns
    -------
    :class:`Axis`
    """
    lower, upper, step = float(lower), float(upper), float(step)
    if not step > 0.0:
        raise DomainError(
            "smrtools.axis_from_bounds: step needs to be > 0, got "
            + str(step)
        )
    cells = (upper - lower) / step
    count = int(np.rint(cells))
    if count < 0 or abs(cells - count) > NODE_RTOL * max(1.0, abs(cells)):
        raise ContractError(
            "smrtools.axis_from_bounds: [{0}, {1}] is not a multiple "
            "of the step {2}".format(lower, upper, step)
        )
    return Axis(lower, step, count + 1)
