# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing polynomials with exact rational coefficients.

.. currentmodule:: smrtools.oracle.polynomial

The following classes and functions are provided

.. autosummary::
   RationalPolynomial
   poly_eval
   poly_add
   poly_scale
   poly_laplacian_xy
"""
# pylint: disable=C0103
from __future__ import print_function, division, absolute_import

from fractions import Fraction
from numbers import Rational

import numpy as np

from smrtools.tools.errors import DomainError

__all__ = [
    "RationalPolynomial",
    "poly_eval",
    "poly_add",
    "poly_scale",
    "poly_laplacian_xy",
]


class RationalPolynomial(object):
    """Polynomial in three variables with exact rational coefficients.

    Parameters
    ----------
    terms : :class:`dict`, optional
        Map ``(a, b, c) -> coefficient`` of the monomials
        ``x^a y^b u^c``. Zero coefficients are dropped. Default: zero
    variables : :class:`tuple` of :class:`str`, optional
        Names of the three variables. Default: ``("x", "y", "u")``
    """

    def __init__(self, terms=None, variables=("x", "y", "u")):
        self._variables = tuple(variables)
        if len(self._variables) != 3:
            raise DomainError(
                "smrtools.RationalPolynomial: need three variable names"
            )
        collected = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != 3 or min(exps) < 0:
                raise DomainError(
                    "smrtools.RationalPolynomial: invalid exponents "
                    + str(exps)
                )
            collected[exps] = collected.get(exps, Fraction(0)) + Fraction(
                coeff
            )
        self._terms = {e: c for e, c in collected.items() if c != 0}

    @classmethod
    def monomial(cls, coeff, a, b, c, variables=("x", "y", "u")):
        """The single term ``coeff * x^a y^b u^c``."""
        return cls({(a, b, c): coeff}, variables)

    @property
    def terms(self):
        """:class:`dict`: Copy of the nonzero terms."""
        return dict(self._terms)

    @property
    def variables(self):
        """:class:`tuple` of :class:`str`: The variable names."""
        return self._variables

    @property
    def degree(self):
        """:class:`int`: Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_zero(self):
        """:class:`bool`: Whether all coefficients vanish."""
        return not self._terms

    def renamed(self, variables):
        """The same polynomial in other variable names."""
        return RationalPolynomial(self._terms, variables)

    def coeff(self, a, b, c):
        """The coefficient of ``x^a y^b u^c``."""
        return self._terms.get((a, b, c), Fraction(0))

    def __call__(self, x, y, u):
        """Exact evaluation at rational arguments."""
        args = [Fraction(v) for v in (x, y, u)]
        res = Fraction(0)
        for (a, b, c), coeff in self._terms.items():
            res += coeff * args[0] ** a * args[1] ** b * args[2] ** c
        return res

    def evaluate(self, x, y, u):
        """Floating point evaluation, vectorized over numpy arrays."""
        x, y, u = (np.asarray(v, dtype=np.double) for v in (x, y, u))
        res = np.zeros(np.broadcast(x, y, u).shape, dtype=np.double)
        for (a, b, c), coeff in sorted(self._terms.items()):
            res = res + float(coeff) * x ** a * y ** b * u ** c
        return res

    def _check(self, other):
        if other.variables != self._variables:
            raise DomainError(
                "smrtools.RationalPolynomial: variables {0} and {1} "
                "differ".format(self._variables, other.variables)
            )

    def __add__(self, other):
        if isinstance(other, Rational):
            other = RationalPolynomial({(0, 0, 0): other}, self._variables)
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        self._check(other)
        terms = dict(self._terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return RationalPolynomial(terms, self._variables)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return RationalPolynomial(
                {e: c * other for e, c in self._terms.items()}, self._variables
            )
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        self._check(other)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(i + j for i, j in zip(e1, e2))
                terms[exps] = terms.get(exps, Fraction(0)) + c1 * c2
        return RationalPolynomial(terms, self._variables)

    __rmul__ = __mul__

    def derivative(self, var, order=1):
        """Exact partial derivative with respect to variable index ``var``."""
        terms = {}
        for exps, coeff in self._terms.items():
            if exps[var] < order:
                continue
            fac = 1
            for k in range(order):
                fac *= exps[var] - k
            new = list(exps)
            new[var] -= order
            terms[tuple(new)] = coeff * fac
        return RationalPolynomial(terms, self._variables)

    def laplacian_xy(self):
        """Exact Laplacian in the first two variables."""
        return self.derivative(0, 2) + self.derivative(1, 2)

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = RationalPolynomial({(0, 0, 0): other}, self._variables)
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return (
            self._variables == other.variables and self._terms == other.terms
        )

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return hash((self._variables, tuple(sorted(self._terms.items()))))

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for exps, coeff in sorted(self._terms.items(), reverse=True):
            factors = [
                name if e == 1 else "{0}^{1}".format(name, e)
                for name, e in zip(self._variables, exps)
                if e
            ]
            mag = abs(coeff)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            sign = "-" if coeff < 0 else "+"
            if not out:
                out.append(("-" if coeff < 0 else "") + " ".join(factors))
            else:
                out.append(sign + " " + " ".join(factors))
        return " ".join(out)

    def __repr__(self):
        """Return String representation."""
        return "RationalPolynomial('{0}', variables={1})".format(
            self, self._variables
        )


def poly_eval(p, x, y, u):
    """Exact value of ``p`` at rational ``(x, y, u)``."""
    return p(x, y, u)


def poly_add(p, q):
    """Exact sum of two polynomials."""
    return p + q


def poly_scale(p, factor):
    """Exact product of a polynomial with a rational number."""
    return p * Fraction(factor)


def poly_laplacian_xy(p):
    """Exact ``∂²/∂x² + ∂²/∂y²`` of a polynomial."""
    return p.laplacian_xy()
