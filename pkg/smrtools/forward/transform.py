# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing the spherical mean Radon transform.

.. currentmodule:: smrtools.forward.transform

The following functions are provided

.. autosummary::
   spherical_mean
   sample_mean_field
   analytic_mean_field
"""
# pylint: disable=C0103
from __future__ import print_function, division, absolute_import

import logging
import time
import warnings
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from smrtools.grid.axis import Point3
from smrtools.grid.field import SphericalMeanField
from smrtools.forward.quadrature import SphereQuadratureRule
from smrtools.tools.errors import ContractError, DomainError, EvaluationError

__all__ = ["spherical_mean", "sample_mean_field", "analytic_mean_field"]

logger = logging.getLogger(__name__)

#: polar order below which indicator phantoms trigger a warning
INDICATOR_MIN_ORDER = 256


def _evaluate(f, x, y, z):
    """Evaluate ``f`` on arrays, vectorized for phantoms."""
    if hasattr(f, "evaluate"):
        return np.asarray(f.evaluate(x, y, z), dtype=np.double)
    out = np.empty(np.shape(x), dtype=np.double)
    for idx in np.ndindex(*out.shape):
        out[idx] = f(Point3(x[idx], y[idx], z[idx]))
    return out


def _check_finite(values, x, y, z):
    if np.all(np.isfinite(values)):
        return
    idx = tuple(np.argwhere(~np.isfinite(values))[0])
    raise EvaluationError(
        "smrtools.spherical_mean: non-finite sample",
        (x[idx], y[idx], z[idx]),
    )


def _check_rule(f, rule):
    if getattr(f, "indicator", False) and rule.polar_order < INDICATOR_MIN_ORDER:
        warnings.warn(
            "spherical_mean: {0} is discontinuous, the quadrature with "
            "polar_order={1} converges slowly; consider >= {2}".format(
                f, rule.polar_order, INDICATOR_MIN_ORDER
            )
        )


def _sphere_means(f, cx, cy, radii, rule):
    """Means over all spheres of one center, point evaluation at u = 0."""
    dirs = rule.directions
    out = np.empty(len(radii), dtype=np.double)
    for m, u in enumerate(radii):
        if u == 0.0:
            x, y, z = np.array([cx]), np.array([cy]), np.zeros(1)
            val = _evaluate(f, x, y, z)
            _check_finite(val, x, y, z)
            out[m] = val[0]
            continue
        x = cx + u * dirs[:, 0]
        y = cy + u * dirs[:, 1]
        z = u * dirs[:, 2]
        val = _evaluate(f, x, y, z)
        _check_finite(val, x, y, z)
        out[m] = rule.integrate(val) / (4.0 * np.pi)
    return out


def spherical_mean(f, cx, cy, u, rule=None):
    r"""Average of ``f`` over the sphere with center ``(cx, cy, 0)``.

    Given by:

    .. math::
       Mf(c_x, c_y, u) = \frac{1}{4\pi}\sum_j w_j\,
       f\left((c_x, c_y, 0) + u\,\omega_j\right)

    Parameters
    ----------
    f : :any:`Phantom` or :any:`callable`
        A phantom (evaluated vectorized) or a function of a :any:`Point3`.
    cx, cy : :class:`float`
        Sphere center on the detector plane.
    u : :class:`float`
        Sphere radius (>= 0). ``u = 0`` evaluates ``f`` at the center.
    rule : :any:`SphereQuadratureRule`, optional
        The quadrature rule. Default: ``SphereQuadratureRule()``

    Returns
    -------
    :class:`float`

    Raises
    ------
    EvaluationError
        If ``f`` gives a non-finite value, naming the node.
    """
    u = float(u)
    if not u >= 0.0 or not np.isfinite(u):
        raise DomainError(
            "smrtools.spherical_mean: radius needs to be finite and >= 0, "
            "got " + str(u)
        )
    rule = SphereQuadratureRule() if rule is None else rule
    _check_rule(f, rule)
    return float(_sphere_means(f, float(cx), float(cy), [u], rule)[0])


def sample_mean_field(f, x_axis, y_axis, u_axis, rule=None, workers=1):
    """Sample spherical means of ``f`` on a tensor grid.

    Parameters
    ----------
    f : :any:`Phantom` or :any:`callable`
        The function to be transformed.
    x_axis, y_axis : :any:`Axis`
        Axes of the sphere centers.
    u_axis : :any:`Axis`
        Radial axis; ``u_axis.start`` needs to be >= 0.
    rule : :any:`SphereQuadratureRule`, optional
        The quadrature rule. Default: ``SphereQuadratureRule()``
    workers : :class:`int`, optional
        Number of threads sharing the x-rows. The result does not depend
        on it. Default: 1

    Returns
    -------
    :any:`SphericalMeanField`
    """
    if u_axis.start < 0.0:
        raise ContractError(
            "smrtools.sample_mean_field: radii need to be >= 0, "
            "got u_axis.start = {0}".format(u_axis.start)
        )
    if int(workers) != workers or workers < 1:
        raise DomainError(
            "smrtools.sample_mean_field: workers needs to be >= 1"
        )
    rule = SphereQuadratureRule() if rule is None else rule
    _check_rule(f, rule)
    xs, ys, us = x_axis.nodes(), y_axis.nodes(), u_axis.nodes()
    shape = (len(xs), len(ys), len(us))
    logger.info(
        "sampling mean field of %r on %s nodes, %d quadrature nodes, "
        "%d worker(s)", f, shape, rule.size, workers
    )
    tic = time.perf_counter()

    def row(k):
        return np.stack(
            [_sphere_means(f, xs[k], y, us, rule) for y in ys], axis=0
        )

    if workers == 1:
        rows = [row(k) for k in range(shape[0])]
    else:
        with ThreadPoolExecutor(max_workers=int(workers)) as pool:
            rows = list(pool.map(row, range(shape[0])))
    values = np.stack(rows, axis=0)
    logger.debug("sampled mean field in %.3f s", time.perf_counter() - tic)
    return SphericalMeanField(x_axis, y_axis, u_axis, values)


def analytic_mean_field(phantom, x_axis, y_axis, u_axis):
    """Sample the closed form spherical mean of a phantom on a grid.

    Parameters
    ----------
    phantom : :any:`Phantom`
        A phantom providing a closed form mean.
    x_axis, y_axis, u_axis : :any:`Axis`
        The grid axes.

    Returns
    -------
    :any:`SphericalMeanField`
    """
    if not getattr(phantom, "has_mean", False):
        raise ContractError(
            "smrtools.analytic_mean_field: {0!r} has no closed form "
            "mean".format(phantom)
        )
    if u_axis.start < 0.0:
        raise ContractError(
            "smrtools.analytic_mean_field: radii need to be >= 0, "
            "got u_axis.start = {0}".format(u_axis.start)
        )
    x, y, u = np.meshgrid(
        x_axis.nodes(), y_axis.nodes(), u_axis.nodes(), indexing="ij"
    )
    return SphericalMeanField(
        x_axis, y_axis, u_axis, phantom.mean(x, y, u)
    )
