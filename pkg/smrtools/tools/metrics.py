# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing error metrics for reconstructions.

.. currentmodule:: smrtools.tools.metrics

The following classes and functions are provided

.. autosummary::
   ErrorReport
   compare
   convergence_order
"""
# pylint: disable=C0103
from __future__ import print_function, division, absolute_import

import logging

import numpy as np

from smrtools.grid.axis import Point3
from smrtools.grid.base import Field
from smrtools.tools.errors import ContractError, DomainError, EvaluationError
from smrtools.tools.export import FLOAT_FORMAT

__all__ = ["ErrorReport", "compare", "convergence_order"]

logger = logging.getLogger(__name__)


class ErrorReport(object):
    """Deviation of a reconstruction from a reference.

    Parameters
    ----------
    l2 : :class:`float`
        Root mean squared difference over all nodes.
    linf : :class:`float`
        Maximal absolute difference.
    ref_l2 : :class:`float`
        Root mean square of the reference.
    node_count : :class:`int`
        Number of compared nodes.
    region : :class:`tuple`
        ``(lower, upper)`` bounds per axis.
    """

    def __init__(self, l2, linf, ref_l2, node_count, region):
        self.l2 = float(l2)
        self.linf = float(linf)
        self.ref_l2 = float(ref_l2)
        self.node_count = int(node_count)
        self.region = tuple(region)

    @property
    def rel_defined(self):
        """:class:`bool`: Whether the reference norm is positive."""
        return self.ref_l2 > 0.0

    @property
    def rel_l2(self):
        """:class:`float`: ``l2 / ref_l2``; NaN if the reference vanishes."""
        if not self.rel_defined:
            return float("nan")
        return self.l2 / self.ref_l2

    def as_dict(self):
        """Machine readable form of the report."""
        return {
            "l2": self.l2,
            "linf": self.linf,
            "rel_l2": None if not self.rel_defined else self.rel_l2,
            "rel_defined": self.rel_defined,
            "node_count": self.node_count,
            "region": [list(bounds) for bounds in self.region],
        }

    def lines(self):
        """The report as ``key = value`` lines with 17 significant digits."""
        out = [
            "l2 = " + FLOAT_FORMAT % self.l2,
            "linf = " + FLOAT_FORMAT % self.linf,
            "rel_l2 = " + FLOAT_FORMAT % self.rel_l2,
            "rel_defined = " + str(self.rel_defined).lower(),
            "node_count = " + str(self.node_count),
        ]
        for name, (lo, hi) in zip(("x", "y", "z"), self.region):
            out.append(
                "{0}_range = {1},{2}".format(
                    name, FLOAT_FORMAT % lo, FLOAT_FORMAT % hi
                )
            )
        return out

    def __repr__(self):
        """Return String representation."""
        return (
            "ErrorReport(l2={0:.6g}, linf={1:.6g}, rel_l2={2:.6g}, "
            "node_count={3})".format(
                self.l2, self.linf, self.rel_l2, self.node_count
            )
        )


def _reference_values(volume, reference):
    if isinstance(reference, Field):
        if reference.axes != volume.axes:
            raise ContractError(
                "smrtools.compare: reference field lives on other axes"
            )
        return np.asarray(reference.values)
    x, y, z = np.meshgrid(*volume.pos, indexing="ij")
    if hasattr(reference, "evaluate"):
        return np.asarray(reference.evaluate(x, y, z), dtype=np.double)
    ref = np.empty(volume.shape, dtype=np.double)
    for idx in np.ndindex(*volume.shape):
        ref[idx] = reference(Point3(x[idx], y[idx], z[idx]))
    return ref


def compare(volume, reference):
    """Compare a reconstructed volume with a reference.

    Parameters
    ----------
    volume : :any:`VolumeField`
        The reconstruction.
    reference : :any:`Phantom` or :any:`VolumeField` or :any:`callable`
        A phantom (evaluated vectorized), a field on the same axes or a
        function taking a :any:`Point3`.

    Returns
    -------
    :any:`ErrorReport`
    """
    if volume.values.size == 0:
        raise DomainError("smrtools.compare: empty volume")
    ref = _reference_values(volume, reference)
    if not np.all(np.isfinite(ref)):
        bad = np.argwhere(~np.isfinite(ref))[0]
        raise EvaluationError(
            "smrtools.compare: non-finite reference value",
            tuple(ax.node(i) for ax, i in zip(volume.axes, bad)),
        )
    diff = volume.values - ref
    report = ErrorReport(
        l2=np.sqrt(np.mean(diff ** 2)),
        linf=np.max(np.abs(diff)),
        ref_l2=np.sqrt(np.mean(ref ** 2)),
        node_count=diff.size,
        region=[(ax.start, ax.end) for ax in volume.axes],
    )
    logger.debug("compare: %r", report)
    return report


def convergence_order(errors, steps=None):
    """Observed orders of a refinement study.

    Parameters
    ----------
    errors : :class:`list` of :class:`float`
        Errors for successively refined grids.
    steps : :class:`list` of :class:`float`, optional
        The corresponding grid steps. Default: halving, so the orders are
        ``log2(e_k / e_{k+1})``.

    Returns
    -------
    :class:`numpy.ndarray`
        One order per refinement.
    """
    errors = np.asarray(errors, dtype=np.double)
    if errors.ndim != 1 or errors.size < 2:
        raise ContractError(
            "smrtools.convergence_order: need at least two errors"
        )
    if np.any(errors <= 0.0):
        raise DomainError("smrtools.convergence_order: errors need to be > 0")
    if steps is None:
        ratios = np.full(errors.size - 1, 2.0)
    else:
        steps = np.asarray(steps, dtype=np.double)
        if steps.shape != errors.shape:
            raise ContractError(
                "smrtools.convergence_order: need one step per error"
            )
        ratios = steps[:-1] / steps[1:]
    return np.log(errors[:-1] / errors[1:]) / np.log(ratios)
