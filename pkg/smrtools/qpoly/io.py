# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing reading and writing of Q-table files.

.. currentmodule:: smrtools.qpoly.io

A Q-table file holds one coefficient per line as
``n i j numerator denominator``; ``#`` starts a comment and the order of
the lines is arbitrary.

The following functions are provided

.. autosummary::
   load_qtable
   save_qtable
   resolve_qtable
"""
# pylint: disable=C0103
from __future__ import print_function, division, absolute_import

import io
import logging
from fractions import Fraction

from smrtools.qpoly.table import QTable, builtin_n2, validate_qtable
from smrtools.tools.errors import ValidationError

__all__ = ["load_qtable", "save_qtable", "resolve_qtable", "BUILTIN_TABLES"]

logger = logging.getLogger(__name__)

#: tables selectable as ``builtin:<name>``
BUILTIN_TABLES = {"n2": builtin_n2}


def _parse_rows(lines):
    """Parse the lines into ``(n, coeffs)`` and the row errors."""
    errors = []
    level = None
    coeffs = {}
    origin = {}
    for lineno, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if len(parts) != 5:
                raise ValueError
            n, i, j, num, den = (int(p) for p in parts)
        except ValueError:
            errors.append(
                "row {0}: malformed, expected 'n i j numerator "
                "denominator'".format(lineno)
            )
            continue
        if den == 0:
            errors.append("row {0}: zero denominator".format(lineno))
            continue
        if level is None:
            level = n
        elif n != level:
            errors.append(
                "row {0}: level n={1} differs from n={2}".format(
                    lineno, n, level
                )
            )
            continue
        if n < 0:
            errors.append("row {0}: level n={1} < 0".format(lineno, n))
            continue
        if not 0 <= i <= n:
            errors.append(
                "row {0}: i={1} outside [0, {2}]".format(lineno, i, n)
            )
        elif j == 0:
            errors.append(
                "row {0}: constant term forbidden (i={1}, j=0)".format(
                    lineno, i
                )
            )
        elif j < 0 or j > n + i:
            errors.append(
                "row {0}: j={1} outside [1, n+i={2}]".format(lineno, j, n + i)
            )
        elif (i, j) in coeffs:
            errors.append(
                "row {0}: duplicate (i, j)=({1}, {2}), first in row "
                "{3}".format(lineno, i, j, origin[(i, j)])
            )
        else:
            coeffs[(i, j)] = Fraction(num, den)
            origin[(i, j)] = lineno
    return level, coeffs, errors


def load_qtable(path):
    """Load a Q-table file.

    Parameters
    ----------
    path : :class:`str`
        The input file.

    Returns
    -------
    :any:`QTable`

    Raises
    ------
    ValidationError
        Listing every malformed or invalid row and every polynomial
        lacking its leading coefficient ("degree deficit").
    """
    with io.open(path, "r", encoding="utf-8") as fin:
        lines = fin.read().splitlines()
    level, coeffs, errors = _parse_rows(lines)
    if level is None and not errors:
        errors.append("no coefficient rows")
    if level is not None and level >= 0:
        # row level problems are reported above
        errors.extend(
            v for v in validate_qtable((level, coeffs)) if "deficit" in v
        )
    if errors:
        raise ValidationError(errors, prefix="smrtools.load_qtable")
    table = QTable(level, coeffs)
    logger.debug("loaded %r from %s", table, path)
    return table


def save_qtable(table, path):
    """Save a table in the Q-table file format.

    Parameters
    ----------
    table : :any:`QTable`
        The table.
    path : :class:`str`
        The output file.
    """
    with io.open(path, "w", encoding="utf-8", newline="\n") as fout:
        fout.write("# Q-table n={0}: n i j numerator denominator\n".format(
            table.n))
        for i, j, d in table.rows():
            fout.write(
                "{0} {1} {2} {3} {4}\n".format(
                    table.n, i, j, d.numerator, d.denominator
                )
            )


def resolve_qtable(source):
    """Get a table from ``builtin:<name>`` or a file path.

    Parameters
    ----------
    source : :class:`str` or :any:`QTable`
        ``"builtin:n2"`` or the path of a Q-table file.

    Returns
    -------
    :any:`QTable`
    """
    if isinstance(source, QTable):
        return source
    source = str(source).strip()
    if source.startswith("builtin:"):
        name = source[len("builtin:"):]
        if name not in BUILTIN_TABLES:
            raise ValidationError(
                "unknown builtin table {0!r}, use one of {1}".format(
                    name, sorted(BUILTIN_TABLES)
                ),
                prefix="smrtools.resolve_qtable",
            )
        return BUILTIN_TABLES[name]()
    return load_qtable(source)
