# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing a parser for polynomial expressions.

.. currentmodule:: smrtools.oracle.parser

Expressions are sums of monomials with rational coefficients such as
``1/8 x^2 y u^3 + 1/48 y u^5``. Factors may be separated by blanks or
``*``; coefficients are integers, fractions ``p/q`` or decimals.

The following functions are provided

.. autosummary::
   parse_polynomial
"""
# pylint: disable=C0103
from __future__ import print_function, division, absolute_import

import re
from fractions import Fraction

from smrtools.oracle.polynomial import RationalPolynomial
from smrtools.tools.errors import ValidationError

__all__ = ["parse_polynomial"]

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?(?:\s*/\s*\d+)?)|(?P<var>[A-Za-z_]\w*)"
    r"|(?P<op>[-+*^]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            raise ValidationError(
                "unexpected character {0!r} at position {1}".format(
                    text[pos:].lstrip()[:1], pos
                ),
                prefix="smrtools.parse_polynomial",
            )
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


class _Parser(object):
    """Recursive descent over the token list."""

    def __init__(self, text, variables):
        self.tokens = _tokenize(text)
        self.variables = tuple(variables)
        self.pos = 0

    def error(self, msg):
        where = (
            self.tokens[self.pos][2] if self.pos < len(self.tokens) else "end"
        )
        raise ValidationError(
            "{0} at position {1}".format(msg, where),
            prefix="smrtools.parse_polynomial",
        )

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return (None, None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self):
        if not self.tokens:
            self.error("empty expression")
        terms = {}
        sign = 1
        kind, text, _ = self.peek()
        if kind == "op" and text in "+-":
            sign = -1 if text == "-" else 1
            self.take()
        while True:
            exps, coeff = self.term()
            terms[exps] = terms.get(exps, Fraction(0)) + sign * coeff
            kind, text, _ = self.peek()
            if kind is None:
                break
            if kind == "op" and text in "+-":
                sign = -1 if text == "-" else 1
                self.take()
                continue
            self.error("expected '+' or '-'")
        return RationalPolynomial(terms, self.variables)

    def term(self):
        coeff = Fraction(1)
        exps = [0, 0, 0]
        seen = False
        while True:
            kind, text, _ = self.peek()
            if kind == "num":
                if seen:
                    self.error("coefficient has to lead the term")
                coeff = Fraction(re.sub(r"\s+", "", text))
                self.take()
            elif kind == "var":
                if text not in self.variables:
                    self.error(
                        "unknown variable {0!r}, use {1}".format(
                            text, self.variables
                        )
                    )
                self.take()
                power = 1
                if self.peek()[0] == "op" and self.peek()[1] == "^":
                    self.take()
                    kind, text_exp, _ = self.take()
                    if kind != "num" or not text_exp.isdigit():
                        self.pos -= 1
                        self.error("expected an integer exponent")
                    power = int(text_exp)
                exps[self.variables.index(text)] += power
            else:
                if not seen:
                    self.error("expected a term")
                return tuple(exps), coeff
            seen = True
            if self.peek()[0] == "op" and self.peek()[1] == "*":
                self.take()
                if self.peek()[0] not in ("num", "var"):
                    self.error("expected a factor after '*'")


def parse_polynomial(text, variables=("x", "y", "u")):
    """Parse a polynomial expression.

    Parameters
    ----------
    text : :class:`str`
        The expression, e.g. ``"1/8 x^2 y u^3 + 1/48 y u^5"``.
    variables : :class:`tuple` of :class:`str`, optional
        Names of the three variables. Default: ``("x", "y", "u")``

    Returns
    -------
    :any:`RationalPolynomial`

    Raises
    ------
    ValidationError
        On a syntax error or an unknown variable, naming the position.
    """
    return _Parser(text, variables).parse()
