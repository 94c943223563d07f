# -*- coding: utf-8 -*-
r"""
SMRTools subpackage providing tables of the standard polynomials.

.. currentmodule:: smrtools.qpoly.table

The standard polynomials of level :math:`n` are

.. math::
   Q_{n,i}(t) = \sum_{j=1}^{n+i} d_j(n,i)\,t^{2j},\quad 0 \leq i \leq n

with exact rational coefficients.

The following classes and functions are provided

.. autosummary::
   QTable
   validate_qtable
   builtin_n2
   eval_q
   q_moment
   q_power_moment
"""
# pylint: disable=C0103
from __future__ import print_function, division, absolute_import

from fractions import Fraction

import numpy as np
from numpy.polynomial import Polynomial

from smrtools.tools.errors import DomainError, ValidationError
from smrtools.tools.special import weight_factor

__all__ = [
    "QTable",
    "validate_qtable",
    "builtin_n2",
    "eval_q",
    "q_moment",
    "q_power_moment",
]


def _violations(n, coeffs):
    """Check the raw table data against all invariants."""
    out = []
    if isinstance(n, bool) or int(n) != n or n < 0:
        return ["level n needs to be an integer >= 0, got {0!r}".format(n)]
    for (i, j), val in sorted(coeffs.items()):
        if not 0 <= i <= n:
            out.append("i={0} outside [0, {1}]".format(i, n))
        elif j == 0:
            out.append("constant term forbidden (i={0}, j=0)".format(i))
        elif j < 0:
            out.append("negative j={0} (i={1})".format(j, i))
        elif j > n + i:
            out.append(
                "j={0} exceeds n+i={1} (i={2})".format(j, n + i, i)
            )
    for i in range(n + 1):
        if coeffs.get((i, n + i), 0) == 0:
            out.append(
                "degree deficit: Q_{{{0},{1}}} lacks the leading "
                "coefficient d_{2}".format(n, i, n + i)
            )
    return out


def validate_qtable(table):
    """Check a table against the invariants of the standard polynomials.

    Parameters
    ----------
    table : :any:`QTable` or :class:`tuple`
        A table or a raw ``(n, {(i, j): d})`` pair.

    Returns
    -------
    :class:`list` of :class:`str`
        The violations; empty for a valid table.
    """
    if isinstance(table, QTable):
        n, coeffs = table.n, table.coeffs
    else:
        n, coeffs = table
    return _violations(n, dict(coeffs))


class QTable(object):
    """Coefficients of the standard polynomials of one level ``n``.

    Parameters
    ----------
    n : :class:`int`
        The level (>= 0).
    coeffs : :class:`dict`
        Map ``(i, j) -> d_j(n, i)`` with values convertible to
        :class:`fractions.Fraction`. Missing entries are zero.

    Raises
    ------
    ValidationError
        If any invariant is violated.
    """

    def __init__(self, n, coeffs):
        try:
            exact = {
                (int(i), int(j)): Fraction(val)
                for (i, j), val in dict(coeffs).items()
            }
        except (TypeError, ValueError, ZeroDivisionError) as err:
            raise ValidationError(
                "non rational coefficient ({0})".format(err),
                prefix="smrtools.QTable",
            )
        violations = _violations(n, exact)
        if violations:
            raise ValidationError(violations, prefix="smrtools.QTable")
        self._n = int(n)
        self._coeffs = {key: val for key, val in exact.items() if val != 0}
        self._float = [
            np.array([float(d) for d in self.coeffs_of(i)], dtype=np.double)
            for i in range(self._n + 1)
        ]

    @property
    def n(self):
        """:class:`int`: The level."""
        return self._n

    @property
    def coeffs(self):
        """:class:`dict`: Copy of the nonzero coefficients ``(i, j) -> d``."""
        return dict(self._coeffs)

    @property
    def weight(self):
        """:class:`int`: The point weight :math:`2n^2+3n+1`."""
        return weight_factor(self._n)

    def check_index(self, i):
        """Raise a :any:`DomainError` if ``i`` is no polynomial index."""
        if isinstance(i, bool) or int(i) != i or not 0 <= i <= self._n:
            raise DomainError(
                "smrtools.QTable: i={0!r} outside [0, {1}]".format(i, self._n)
            )
        return int(i)

    def coeffs_of(self, i):
        """Exact coefficients ``[d_1, ..., d_{n+i}]`` of :math:`Q_{n,i}`."""
        i = self.check_index(i)
        return [
            self._coeffs.get((i, j), Fraction(0))
            for j in range(1, self._n + i + 1)
        ]

    def degree(self, i):
        """:class:`int`: Degree ``2 (n + i)`` of :math:`Q_{n,i}`."""
        return 2 * (self._n + self.check_index(i))

    def horner(self, i, s):
        """Horner evaluation in ``s**2`` without domain checks.

        Parameters
        ----------
        i : :class:`int`
            Polynomial index.
        s : :class:`float` or :class:`numpy.ndarray`
            Arguments.

        Returns
        -------
        :class:`float` or :class:`numpy.ndarray`
        """
        s = np.asarray(s, dtype=np.double)
        s2 = s * s
        res = np.zeros_like(s2)
        for d in self._float[self.check_index(i)][::-1]:
            res = (res + d) * s2
        return res

    def exact_value(self, i, t):
        """Exact value of :math:`Q_{n,i}(t)` at a rational ``t``."""
        t2 = Fraction(t) ** 2
        res = Fraction(0)
        for d in reversed(self.coeffs_of(i)):
            res = (res + d) * t2
        return res

    def poly(self, i):
        """:class:`numpy.polynomial.Polynomial` of :math:`Q_{n,i}` in ``t``."""
        coef = np.zeros(self.degree(i) + 1, dtype=np.double)
        coef[2::2] = [float(d) for d in self.coeffs_of(i)]
        return Polynomial(coef, domain=[0, 1], window=[0, 1])

    def rows(self):
        """Sorted ``(i, j, d)`` triples of the nonzero coefficients."""
        return [(i, j, d) for (i, j), d in sorted(self._coeffs.items())]

    def __eq__(self, other):
        if not isinstance(other, QTable):
            return NotImplemented
        return self._n == other.n and self._coeffs == other.coeffs

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return hash((self._n, tuple(sorted(self._coeffs.items()))))

    def __repr__(self):
        """Return String representation."""
        return "QTable(n={0}, terms={1})".format(self._n, len(self._coeffs))

    def __str__(self):
        lines = []
        for i in range(self._n + 1):
            terms = " ".join(
                "{0} {1} t^{2}".format(
                    "-" if d < 0 else "+", abs(d), 2 * j
                )
                for j, d in enumerate(self.coeffs_of(i), start=1)
                if d != 0
            )
            lines.append(
                "Q_{0},{1}(t) = {2}".format(self._n, i, terms.lstrip("+ "))
            )
        return "\n".join(lines)


def builtin_n2():
    r"""The exact table of level :math:`n=2`.

    Given by:

    .. math::
       Q_{2,0}(t) &= \frac{105}{2}\left(t^2 - 3t^4\right) \\
       Q_{2,1}(t) &= \frac{105}{2}\left(\frac{1}{4}t^2 - t^4
       + \frac{3}{4}t^6\right) \\
       Q_{2,2}(t) &= \frac{315}{64}\left(\frac{1}{6}t^2 - \frac{1}{2}t^4
       + \frac{1}{2}t^6 - \frac{1}{6}t^8\right)

    Returns
    -------
    :any:`QTable`
    """
    c0 = Fraction(105, 2)
    c2 = Fraction(315, 64)
    return QTable(
        2,
        {
            (0, 1): c0,
            (0, 2): -3 * c0,
            (1, 1): c0 / 4,
            (1, 2): -c0,
            (1, 3): c0 * Fraction(3, 4),
            (2, 1): c2 / 6,
            (2, 2): -c2 / 2,
            (2, 3): c2 / 2,
            (2, 4): -c2 / 6,
        },
    )


def eval_q(table, i, t):
    """Evaluate :math:`Q_{n,i}(t)` in floating point.

    Parameters
    ----------
    table : :any:`QTable`
        The polynomial table.
    i : :class:`int`
        Polynomial index in ``[0, n]``.
    t : :class:`float` or :class:`numpy.ndarray`
        Arguments in ``[0, 1]``.

    Returns
    -------
    :class:`float` or :class:`numpy.ndarray`
    """
    scalar = np.ndim(t) == 0
    t_arr = np.asarray(t, dtype=np.double)
    if not np.all((t_arr >= 0.0) & (t_arr <= 1.0)):
        raise DomainError(
            "smrtools.eval_q: t needs to lie in [0, 1], got {0!r}".format(t)
        )
    res = table.horner(i, t_arr)
    return float(res) if scalar else res


def q_power_moment(table, i, c):
    r"""Exact moment :math:`\int_0^1 Q_{n,i}(s)\,s^c\,{\rm d}s`.

    Given by :math:`\sum_j d_j(n,i) / (2j + c + 1)`.

    Parameters
    ----------
    table : :any:`QTable`
        The polynomial table.
    i : :class:`int`
        Polynomial index.
    c : :class:`int`
        Nonnegative power of ``s``.

    Returns
    -------
    :class:`fractions.Fraction`
    """
    if isinstance(c, bool) or int(c) != c or c < 0:
        raise DomainError(
            "smrtools.q_power_moment: c needs to be an integer >= 0"
        )
    return sum(
        (d / (2 * j + int(c) + 1) for j, d in enumerate(table.coeffs_of(i), 1)),
        Fraction(0),
    )


def q_moment(table, i, m):
    r"""Exact odd moment :math:`\int_0^1 Q_{n,i}(s)\,s^{2m+1}\,{\rm d}s`.

    Parameters
    ----------
    table : :any:`QTable`
        The polynomial table.
    i : :class:`int`
        Polynomial index.
    m : :class:`int`
        Moment index (>= 0).

    Returns
    -------
    :class:`fractions.Fraction`
        :math:`\sum_j d_j(n,i) / (2j + 2m + 2)`
    """
    if isinstance(m, bool) or int(m) != m or m < 0:
        raise DomainError("smrtools.q_moment: m needs to be an integer >= 0")
    return q_power_moment(table, i, 2 * int(m) + 1)
