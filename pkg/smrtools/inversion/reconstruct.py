# -*- coding: utf-8 -*-
r"""
SMRTools subpackage providing the local reconstruction from spherical means.

.. currentmodule:: smrtools.inversion.reconstruct

The approximant of level :math:`n` is

.. math::
   f_n(x,y,z) = 2\left[(2n^2+3n+1)\,Mf(x,y,z) + \sum_{i=0}^{n}
   \int_0^z z^{2i-1}\,Q_{n,i}\left(\frac{u}{z}\right)
   \Delta^i Mf(x,y,u)\,{\rm d}u\right]

The following classes and functions are provided

.. autosummary::
   ReconstructionConfig
   Inversion
   reconstruct_point
   reconstruct_volume
"""
# pylint: disable=C0103
from __future__ import print_function, division, absolute_import

import logging
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from smrtools.grid.axis import Axis, NODE_RTOL
from smrtools.grid.field import VolumeField
from smrtools.inversion.laplacian import laplacian_stack
from smrtools.inversion.radial import radial_kernel, radial_sums
from smrtools.tools.errors import (
    DimensionError,
    DomainError,
    SmrError,
    ValidationError,
)

__all__ = [
    "ReconstructionConfig",
    "Inversion",
    "reconstruct_point",
    "reconstruct_volume",
]

logger = logging.getLogger(__name__)


def _z_axis(z_nodes, u_axis):
    """Uniform z axis through the given heights."""
    if isinstance(z_nodes, Axis):
        return z_nodes
    z = np.atleast_1d(np.asarray(z_nodes, dtype=np.double))
    if z.ndim != 1 or z.size == 0:
        raise DomainError("need at least one z node")
    if z.size == 1:
        return Axis(z[0], u_axis.step, 1)
    step = z[1] - z[0]
    if not step > 0.0 or np.any(
        np.abs(np.diff(z) - step) > NODE_RTOL * max(1.0, np.max(np.abs(z)))
    ):
        raise DomainError(
            "z nodes need to be increasing and evenly spaced, got "
            + str(list(z))
        )
    return Axis(z[0], step, z.size)


def _bounds_to_range(axis, bounds, halo, name):
    """Node indices ``[first, last]`` of the output region along an axis."""
    if bounds is None:
        first, last = halo, axis.count - 1 - halo
        if first > last:
            raise DimensionError(
                "{0} axis with {1} nodes has no node with a halo of "
                "{2}".format(name, axis.count, halo)
            )
        return first, last
    lo, hi = bounds
    first, last = axis.index_of(lo), axis.index_of(hi)
    if first > last:
        raise DomainError("{0} bounds {1} are decreasing".format(name, bounds))
    if first < halo or last > axis.count - 1 - halo:
        raise DimensionError(
            "{0} range {1} needs {2} extra node(s) per side".format(
                name, tuple(bounds), halo
            )
        )
    return first, last


class ReconstructionConfig(object):
    """Settings of a reconstruction run.

    Parameters
    ----------
    n : :class:`int`
        Level of the approximant; needs to match the Q-table.
    z_nodes : :class:`list` of :class:`float` or :any:`Axis`
        Reconstruction heights; evenly spaced u nodes > 0.
    x_bounds, y_bounds : :class:`tuple` or :any:`None`, optional
        ``(lower, upper)`` grid nodes of the output region. Default: every
        node that has a halo of ``n`` nodes.
    workers : :class:`int`, optional
        Number of threads. Default: 1
    """

    #: the only radial rule
    radial_rule = "simpson"

    def __init__(self, n, z_nodes, x_bounds=None, y_bounds=None, workers=1):
        self.n = n
        self.z_nodes = z_nodes
        self.x_bounds = x_bounds
        self.y_bounds = y_bounds
        self.workers = workers

    @property
    def laplacian_halo(self):
        """:class:`int`: Nodes per side consumed by the Laplacians."""
        return int(self.n)

    def validate(self, field, table=None):
        """Check the settings against a mean field.

        Parameters
        ----------
        field : :any:`SphericalMeanField`
            The input data.
        table : :any:`QTable`, optional
            The Q-table that will be used.

        Returns
        -------
        :class:`list` of :class:`str`
            The violations; empty if the run can start.
        """
        out = []
        n = self.n
        if isinstance(n, bool) or int(n) != n or n < 0:
            return ["n needs to be an integer >= 0, got {0!r}".format(n)]
        if table is not None and table.n != n:
            out.append(
                "n={0} differs from the Q-table level {1}".format(n, table.n)
            )
        if isinstance(self.workers, bool) or int(self.workers) != self.workers \
                or self.workers < 1:
            out.append("workers needs to be >= 1")
        try:
            z_axis = _z_axis(self.z_nodes, field.u_axis)
        except (SmrError, ValueError) as err:
            out.append(str(err))
        else:
            for z in z_axis.nodes():
                if not z > 0.0:
                    out.append("z={0!r} is not > 0".format(z))
                elif not field.u_axis.is_node(z):
                    out.append("z={0!r} is not a u grid node".format(z))
        for name, axis, bounds in (
            ("x", field.x_axis, self.x_bounds),
            ("y", field.y_axis, self.y_bounds),
        ):
            try:
                _bounds_to_range(axis, bounds, int(n), name)
            except SmrError as err:
                out.append(str(err))
        return out

    def __repr__(self):
        """Return String representation."""
        return (
            "ReconstructionConfig(n={0}, z_nodes={1!r}, x_bounds={2}, "
            "y_bounds={3}, workers={4})".format(
                self.n, self.z_nodes, self.x_bounds, self.y_bounds, self.workers
            )
        )


class Inversion(object):
    """Reconstruction of ``f`` from gridded spherical means.

    The Laplacian stack is computed once on construction and shared by all
    evaluations. Every output value is computed by the same arithmetic,
    so results don't depend on the output region or the worker count.

    Parameters
    ----------
    field : :any:`SphericalMeanField`
        Samples of the spherical means.
    table : :any:`QTable`
        The standard polynomials; their level sets ``n``.

    Examples
    --------
    >>> inv = Inversion(field, builtin_n2())
    >>> vol = inv([1.0, 1.5, 2.0], workers=4)
    """

    def __init__(self, field, table):
        self._field = field
        self._table = table
        tic = time.perf_counter()
        self._stack = laplacian_stack(field, table.n)
        logger.debug(
            "Inversion: stack of %s nodes for n=%d in %.3f s",
            field.shape,
            table.n,
            time.perf_counter() - tic,
        )
        self._kernels = {}

    @property
    def field(self):
        """:any:`SphericalMeanField`: The input data."""
        return self._field

    @property
    def table(self):
        """:any:`QTable`: The standard polynomials."""
        return self._table

    @property
    def n(self):
        """:class:`int`: The level of the approximant."""
        return self._table.n

    @property
    def stack(self):
        """:any:`LaplacianStack`: The Laplacians of the data."""
        return self._stack

    def _kernel(self, m):
        """Radial kernels of all ``i`` for the height ``u_m``."""
        # the dict is only filled before threads start
        if m not in self._kernels:
            u_axis = self._field.u_axis
            z = u_axis.node(m)
            self._kernels[m] = [
                radial_kernel(self._table, i, z, u_axis)
                for i in range(self.n + 1)
            ]
        return self._kernels[m]

    def _z_index(self, z):
        z = float(z)
        if not z > 0.0:
            raise DomainError(
                "smrtools.Inversion: z needs to be > 0, got " + str(z)
            )
        return self._field.u_axis.index_of(z)

    def _block(self, ks, ls, m):
        """Approximant on the input nodes ``ks x ls`` at height ``u_m``.

        Parameters
        ----------
        ks, ls : :class:`slice`
            Consecutive node indices of the input field with full halo.
        m : :class:`int`
            Index of the height on the u axis.
        """
        kernels = self._kernel(m)
        z = self._field.u_axis.node(m)
        layers = self._stack.layers
        acc = self._table.weight * layers[0].values[ks, ls, m]
        for i, kernel in enumerate(kernels):
            g = layers[i].values[
                ks.start - i : ks.stop - i, ls.start - i : ls.stop - i, : m + 1
            ]
            acc = acc + radial_sums(g, kernel) * z ** (2 * i - 1)
        return 2.0 * acc

    def point(self, k, l, z):
        """The approximant above the input node ``(k, l)`` at height ``z``.

        Parameters
        ----------
        k, l : :class:`int`
            Node indices of the input field; need a halo of ``n`` nodes.
        z : :class:`float`
            Height; a u node > 0.

        Returns
        -------
        :class:`float`
        """
        if not self._stack.has_halo(k, l):
            raise DimensionError(
                "smrtools.Inversion: node ({0}, {1}) needs {2} node(s) halo "
                "in x and y".format(k, l, self.n)
            )
        m = self._z_index(z)
        return float(self._block(slice(k, k + 1), slice(l, l + 1), m)[0, 0])

    def __call__(self, z_nodes, x_bounds=None, y_bounds=None, workers=1):
        """Reconstruct a volume.

        Parameters
        ----------
        z_nodes : :class:`list` of :class:`float` or :any:`Axis`
            Evenly spaced heights on the u axis.
        x_bounds, y_bounds : :class:`tuple` or :any:`None`, optional
            ``(lower, upper)`` output nodes. Default: every node with halo.
        workers : :class:`int`, optional
            Number of threads sharing the x-rows. Default: 1

        Returns
        -------
        :any:`VolumeField`
        """
        config = ReconstructionConfig(
            self.n, z_nodes, x_bounds, y_bounds, workers
        )
        violations = config.validate(self._field, self._table)
        if violations:
            raise ValidationError(violations, prefix="smrtools.Inversion")
        field = self._field
        z_axis = _z_axis(z_nodes, field.u_axis)
        ms = [field.u_axis.index_of(z) for z in z_axis.nodes()]
        kx = _bounds_to_range(field.x_axis, x_bounds, self.n, "x")
        ky = _bounds_to_range(field.y_axis, y_bounds, self.n, "y")
        ls = slice(ky[0], ky[1] + 1)
        for m in ms:
            self._kernel(m)
        logger.info(
            "reconstructing %d x %d x %d nodes with n=%d, %d worker(s)",
            kx[1] - kx[0] + 1,
            ls.stop - ls.start,
            len(ms),
            self.n,
            workers,
        )
        tic = time.perf_counter()

        def row(k):
            return np.stack(
                [self._block(slice(k, k + 1), ls, m)[0] for m in ms], axis=-1
            )

        rows = range(kx[0], kx[1] + 1)
        if workers == 1:
            values = [row(k) for k in rows]
        else:
            with ThreadPoolExecutor(max_workers=int(workers)) as pool:
                values = list(pool.map(row, rows))
        logger.debug("reconstructed volume in %.3f s", time.perf_counter() - tic)
        return VolumeField(
            field.x_axis.sub(kx[0], kx[1] - kx[0] + 1),
            field.y_axis.sub(ky[0], ky[1] - ky[0] + 1),
            z_axis,
            np.stack(values, axis=0),
        )

    def __repr__(self):
        """Return String representation."""
        return "Inversion(field={0!r}, n={1})".format(self._field, self.n)


def reconstruct_point(field, table, k, l, z):
    """The approximant above node ``(k, l)`` of a mean field at height ``z``.

    Only the data inside the stencil window of ``(k, l)`` with radii up to
    ``z`` is used.

    Parameters
    ----------
    field : :any:`SphericalMeanField`
        Samples of the spherical means.
    table : :any:`QTable`
        The standard polynomials.
    k, l : :class:`int`
        Node indices; need ``n`` nodes halo in x and y.
    z : :class:`float`
        Height; a u node > 0.

    Returns
    -------
    :class:`float`
    """
    n = table.n
    nx, ny = field.shape[:2]
    if not (n <= k < nx - n and n <= l < ny - n):
        raise DimensionError(
            "smrtools.reconstruct_point: node ({0}, {1}) needs {2} node(s) "
            "halo in x and y".format(k, l, n)
        )
    z = float(z)
    if not z > 0.0:
        raise DomainError(
            "smrtools.reconstruct_point: z needs to be > 0, got " + str(z)
        )
    m = field.u_axis.index_of(z)
    local = field.window((k - n, l - n, 0), (2 * n + 1, 2 * n + 1, m + 1))
    return Inversion(local, table).point(n, n, local.u_axis.node(m))


def reconstruct_volume(field, table, config):
    """Reconstruct a volume at the configured output nodes.

    Parameters
    ----------
    field : :any:`SphericalMeanField`
        Samples of the spherical means.
    table : :any:`QTable`
        The standard polynomials.
    config : :any:`ReconstructionConfig`
        The run settings.

    Returns
    -------
    :any:`VolumeField`

    Raises
    ------
    ValidationError
        Listing every mismatch between the config and the field.
    """
    violations = config.validate(field, table)
    if violations:
        raise ValidationError(violations, prefix="smrtools.reconstruct_volume")
    return Inversion(field, table)(
        config.z_nodes,
        x_bounds=config.x_bounds,
        y_bounds=config.y_bounds,
        workers=config.workers,
    )


