# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing file export and import routines.

.. currentmodule:: smrtools.tools.export

The following functions are provided

.. autosummary::
   save_field
   load_field
   export_slice
   write_pgm
   to_vtk
   vtk_export
"""
# pylint: disable=C0103, E1101
from __future__ import print_function, division, absolute_import

import io
import logging
import re

import numpy as np
from pyevtk.hl import gridToVTK

from smrtools.grid.axis import Axis
from smrtools.grid.field import SphericalMeanField, VolumeField
from smrtools.tools.errors import ContractError, ValidationError

__all__ = [
    "FLOAT_FORMAT",
    "save_field",
    "load_field",
    "export_slice",
    "write_pgm",
    "to_vtk",
    "vtk_export",
]

logger = logging.getLogger(__name__)

#: printf format of all real numbers written by SMRTools
FLOAT_FORMAT = "%.17g"

_AXIS_RE = re.compile(r"([a-z])\(\s*([^,\s]+)\s*,\s*([^,\s]+)\s*,\s*(\d+)\s*\)")
FIELD_TYPES = {"u": SphericalMeanField, "z": VolumeField}


def _fmt(value):
    return FLOAT_FORMAT % value


def _axis_header(name, axis):
    return "{0}({1},{2},{3})".format(
        name, _fmt(axis.start), _fmt(axis.step), axis.count
    )


# field files #################################################################


def save_field(field, path):
    """Save a field to the SMRTools CSV format.

    The first line reads ``# axes: x(start,step,count) y(...) u(...)``
    (``z(...)`` for volumes), followed by one ``k,l,m,value`` row per
    sample with the last index running fastest.

    Parameters
    ----------
    field : :any:`SphericalMeanField` or :any:`VolumeField`
        The field to be saved.
    path : :class:`str`
        The output file.
    """
    header = "axes: " + " ".join(
        _axis_header(name, ax) for name, ax in zip(field.axis_names, field.axes)
    )
    idx = np.indices(field.shape).reshape(3, -1).T
    table = np.column_stack((idx, field.values.reshape(-1)))
    with io.open(path, "w", encoding="utf-8", newline="\n") as fout:
        fout.write("# " + header + "\n")
        np.savetxt(
            fout, table, fmt=["%d", "%d", "%d", FLOAT_FORMAT], delimiter=","
        )
    logger.debug("saved %s with shape %s to %s", type(field).__name__,
                 field.shape, path)


def _parse_header(line, path):
    if not line.startswith("#") or "axes:" not in line:
        raise ValidationError(
            "line 1: missing '# axes:' header", prefix="smrtools.load_field"
        )
    found = _AXIS_RE.findall(line)
    names = tuple(item[0] for item in found)
    if len(found) != 3 or names[:2] != ("x", "y") or names[2] not in "uz":
        raise ValidationError(
            "line 1: expected axes x, y and u or z, got {0}".format(names),
            prefix="smrtools.load_field",
        )
    try:
        axes = tuple(Axis(float(s), float(h), int(c)) for _, s, h, c in found)
    except ValueError as err:
        raise ValidationError(
            "line 1: invalid axis ({0})".format(err),
            prefix="smrtools.load_field",
        )
    return FIELD_TYPES[names[2]], axes


def load_field(path):
    """Load a field written by :any:`save_field`.

    Parameters
    ----------
    path : :class:`str`
        The input file.

    Returns
    -------
    :any:`SphericalMeanField` or :any:`VolumeField`
        Depending on the name of the third axis.

    Raises
    ------
    ValidationError
        If the header or a row is malformed, a sample is given twice or
        a sample is missing.
    """
    with io.open(path, "r", encoding="utf-8") as fin:
        lines = fin.read().splitlines()
    if not lines:
        raise ValidationError("empty file", prefix="smrtools.load_field")
    field_type, axes = _parse_header(lines[0], path)
    shape = tuple(ax.count for ax in axes)
    values = np.full(shape, np.nan)
    seen = np.zeros(shape, dtype=bool)
    errors = []
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(",")
        try:
            if len(parts) != 4:
                raise ValueError("need 4 columns")
            k, l, m = (int(p) for p in parts[:3])
            val = float(parts[3])
        except ValueError:
            errors.append("row {0}: malformed '{1}'".format(lineno, line))
            continue
        if not all(0 <= i < n for i, n in zip((k, l, m), shape)):
            errors.append("row {0}: index out of range".format(lineno))
            continue
        if seen[k, l, m]:
            errors.append("row {0}: duplicate sample {1}".format(
                lineno, (k, l, m)))
            continue
        seen[k, l, m] = True
        values[k, l, m] = val
    if not errors and not seen.all():
        missing = tuple(int(i) for i in np.argwhere(~seen)[0])
        errors.append(
            "{0} samples missing, first at {1}".format(
                int((~seen).sum()), missing
            )
        )
    if errors:
        raise ValidationError(errors, prefix="smrtools.load_field")
    return field_type(*(axes + (values,)))


# slices ######################################################################


def _slice_matrix(field, axis, value):
    """Fix ``axis`` at the node ``value`` and return the remaining matrix."""
    ax_id = field.axis_names.index(axis)
    idx = field.axes[ax_id].index_of(value)
    rest = [i for i in range(3) if i != ax_id]
    matrix = np.take(field.values, idx, axis=ax_id)
    return idx, rest, matrix


def export_slice(field, axis, value, path, pgm=None):
    """Export a plane of a field as a CSV heightmap.

    The first line is a ``# slice:`` comment, the second holds the
    column axis nodes, each further row starts with its row axis node.

    Parameters
    ----------
    field : :any:`SphericalMeanField` or :any:`VolumeField`
        The field to be sliced.
    axis : :class:`str`
        Name of the axis that is fixed ("x", "y", "u" or "z").
    value : :class:`float`
        Position of the plane; needs to be a grid node.
    path : :class:`str`
        The output CSV file.
    pgm : :class:`str` or :any:`None`, optional
        If given, additionally write a grayscale PGM image to this path.
        Default: :any:`None`

    Returns
    -------
    :class:`numpy.ndarray`
        The exported matrix (rows along the first remaining axis).
    """
    if axis not in field.axis_names:
        raise ContractError(
            "smrtools.export_slice: unknown axis '{0}' for {1}".format(
                axis, type(field).__name__
            )
        )
    idx, rest, matrix = _slice_matrix(field, axis, value)
    row_name, col_name = (field.axis_names[i] for i in rest)
    row_nodes, col_nodes = (field.axes[i].nodes() for i in rest)
    with io.open(path, "w", encoding="utf-8", newline="\n") as fout:
        fout.write(
            "# slice: {0} = {1} (index {2})\n".format(
                axis, _fmt(field.axes[field.axis_names.index(axis)].node(idx)),
                idx,
            )
        )
        fout.write(
            row_name + "\\" + col_name + ","
            + ",".join(_fmt(c) for c in col_nodes) + "\n"
        )
        for r_val, row in zip(row_nodes, matrix):
            fout.write(
                _fmt(r_val) + "," + ",".join(_fmt(v) for v in row) + "\n"
            )
    if pgm is not None:
        write_pgm(matrix, pgm)
    return matrix


def write_pgm(matrix, path):
    """Write a matrix as binary grayscale PGM, mapped linearly onto [0, 255].

    Parameters
    ----------
    matrix : :class:`numpy.ndarray`
        2D data; the first axis becomes the image rows.
    path : :class:`str`
        The output file.
    """
    matrix = np.asarray(matrix, dtype=np.double)
    if matrix.ndim != 2:
        raise ContractError("smrtools.write_pgm: need a 2D matrix")
    lo, hi = np.min(matrix), np.max(matrix)
    if hi > lo:
        scaled = (matrix - lo) / (hi - lo) * 255.0
    else:
        scaled = np.zeros_like(matrix)
    img = np.rint(scaled).astype(np.uint8)
    with io.open(path, "wb") as fout:
        fout.write(
            "P5\n{0} {1}\n255\n".format(img.shape[1], img.shape[0]).encode(
                "ascii"
            )
        )
        fout.write(img.tobytes())


# VTK routines ################################################################


def _vtk_structured_helper(field, fieldname):
    """An internal helper to extract what is needed for the vtk grid."""
    x, y, z = field.pos
    # need fortran order in VTK
    data = {fieldname: np.ascontiguousarray(field.values.reshape(-1, order="F"))}
    return x, y, z, data


def to_vtk(field, fieldname="field"):  # pragma: no cover
    """Create a PyVista rectilinear grid from a field.

    Parameters
    ----------
    field : :any:`Field`
        The gridded field.
    fieldname : :class:`str`, optional
        Name of the point data array. Default: "field"

    Returns
    -------
    :class:`pyvista.RectilinearGrid`
        Data arrays live on the point data of this PyVista dataset.
    """
    x, y, z, data = _vtk_structured_helper(field, fieldname)
    try:
        import pyvista as pv
    except ImportError:
        raise ImportError("Please install PyVista to create VTK datasets.")
    grid = pv.RectilinearGrid(x, y, z)
    grid.point_data.update(data)
    return grid


def vtk_export(filename, field, fieldname="field"):
    """Export a field to a vtk rectilinear grid file.

    Parameters
    ----------
    filename : :class:`str`
        Filename of the file to be saved, including the path. Note that an
        ending (.vtr) will be added to the name.
    field : :any:`Field`
        The gridded field.
    fieldname : :class:`str`, optional
        Name of the field in the VTK file. Default: "field"
    """
    x, y, z, data = _vtk_structured_helper(field, fieldname)
    return gridToVTK(filename, x, y, z, pointData=data)
