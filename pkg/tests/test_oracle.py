# -*- coding: utf-8 -*-
"""
This is the unittest of the exact polynomial oracle.
"""
from __future__ import division, absolute_import, print_function

import time
import unittest
from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st

from smrtools import Axis, RationalPolynomial, builtin_n2, oracle_reconstruct
from smrtools.oracle import (
    parse_polynomial,
    poly_eval,
    poly_add,
    poly_scale,
    poly_laplacian_xy,
    oracle_radial_term,
    oracle_volume,
    oracle_check,
)
from smrtools.tools import DomainError, ValidationError, weight_factor

MF = "1/8 x^2 y u^3 + 1/48 y u^5"

coeffs = st.fractions(min_value=-10, max_value=10, max_denominator=50)
polys = st.dictionaries(
    st.tuples(*(st.integers(0, 4),) * 3), coeffs, max_size=6
).map(RationalPolynomial)


class TestPolynomial(unittest.TestCase):
    def setUp(self):
        self.mf = parse_polynomial(MF)

    def test_parse(self):
        self.assertEqual(self.mf.coeff(2, 1, 3), Fraction(1, 8))
        self.assertEqual(self.mf.coeff(0, 1, 5), Fraction(1, 48))
        self.assertEqual(len(self.mf.terms), 2)
        self.assertEqual(self.mf.degree, 6)
        self.assertEqual(str(self.mf), MF)
        self.assertEqual(parse_polynomial(str(self.mf)), self.mf)
        poly = parse_polynomial("-x*y + 2 x y - 0.5 u^2 + 3")
        self.assertEqual(str(poly), "x y - 1/2 u^2 + 3")
        self.assertEqual(parse_polynomial("x - x"), RationalPolynomial())
        self.assertEqual(str(RationalPolynomial()), "0")

    def test_parse_errors(self):
        for text in ("", "x +", "2 x ^", "x^y", "x 2", "w^2", "x $ y", "* x"):
            with self.assertRaises(ValidationError) as ctx:
                parse_polynomial(text)
            self.assertIn("parse_polynomial", str(ctx.exception))
        with self.assertRaises(ValidationError) as ctx:
            parse_polynomial("x + q")
        self.assertIn("position 4", str(ctx.exception))

    def test_eval(self):
        self.assertEqual(poly_eval(self.mf, 1, 3, 2), 5)
        self.assertEqual(poly_eval(RationalPolynomial(), 7, -1, 2), 0)
        self.assertEqual(
            self.mf(Fraction(1, 2), 1, 1), Fraction(1, 32) + Fraction(1, 48)
        )
        x, y, u = np.meshgrid([0.0, 1.0], [3.0], [1.0, 2.0], indexing="ij")
        np.testing.assert_allclose(
            self.mf.evaluate(x, y, u)[1, 0], [3 / 8 + 3 / 48, 5.0]
        )

    def test_ring(self):
        zero = poly_add(self.mf, poly_scale(self.mf, -1))
        self.assertTrue(zero.is_zero())
        self.assertEqual(zero.degree, -1)
        self.assertEqual(self.mf - self.mf, zero)
        self.assertEqual(2 * self.mf, self.mf + self.mf)
        self.assertEqual(1 + self.mf - 1, self.mf)
        square = self.mf * self.mf
        self.assertEqual(square(1, 3, 2), 25)
        self.assertRaises(
            DomainError, poly_add, self.mf, self.mf.renamed(("x", "y", "z"))
        )
        self.assertRaises(DomainError, RationalPolynomial, {(1, -1, 0): 1})

    def test_laplacian(self):
        x2y = RationalPolynomial.monomial(1, 2, 1, 0)
        self.assertEqual(
            poly_laplacian_xy(x2y), RationalPolynomial.monomial(2, 0, 1, 0)
        )
        lap = self.mf.laplacian_xy()
        self.assertEqual(lap, parse_polynomial("1/4 y u^3"))
        self.assertTrue(lap.laplacian_xy().is_zero())
        self.assertEqual(
            self.mf.derivative(2, 3),
            parse_polynomial("3/4 x^2 y + 5/4 y u^2"),
        )

    @settings(max_examples=50, deadline=None)
    @given(polys, polys, st.fractions(-3, 3, max_denominator=10))
    def test_ring_axioms(self, p, q, c):
        self.assertEqual(p + q, q + p)
        self.assertTrue((p - p).is_zero())
        self.assertEqual(poly_scale(p + q, c), c * p + c * q)
        self.assertEqual(
            (p + q).laplacian_xy(), p.laplacian_xy() + q.laplacian_xy()
        )
        pt = (Fraction(1, 3), Fraction(-2), Fraction(5, 7))
        self.assertEqual((p * q)(*pt), p(*pt) * q(*pt))


class TestOracle(unittest.TestCase):
    def setUp(self):
        self.table = builtin_n2()
        self.mf = parse_polynomial(MF)

    def test_weight(self):
        self.assertEqual(self.table.weight, 15)
        for n in range(10):
            self.assertEqual(weight_factor(n), (n + 1) * (2 * n + 1))

    def test_radial_term(self):
        cube = RationalPolynomial.monomial(1, 0, 0, 3)
        res = oracle_radial_term(cube, self.table, 0)
        self.assertEqual(res.variables, ("x", "y", "z"))
        self.assertEqual(res.terms, {(0, 0, 3): Fraction(-175, 16)})
        fifth = RationalPolynomial.monomial(1, 0, 0, 5)
        self.assertEqual(
            oracle_radial_term(fifth, self.table, 0).coeff(0, 0, 5),
            Fraction(-147, 16),
        )
        self.assertTrue(
            oracle_radial_term(RationalPolynomial(), self.table, 1).is_zero()
        )
        self.assertRaises(DomainError, oracle_radial_term, cube, self.table, 3)

    def test_reconstruct(self):
        tic = time.perf_counter()
        res = oracle_reconstruct(self.mf, self.table)
        expected = parse_polynomial(
            "65/64 x^2 y z^3 + 3/128 y z^5", ("x", "y", "z")
        )
        self.assertEqual(res, expected)
        self.assertEqual(str(res), "65/64 x^2 y z^3 + 3/128 y z^5")
        self.assertTrue(
            oracle_reconstruct(RationalPolynomial(), self.table).is_zero()
        )
        checks = oracle_check(self.mf, self.table, (1, 3, 1))
        self.assertEqual([c["i"] for c in checks], [0, 1, 2])
        self.assertTrue(all(c["ok"] for c in checks))
        for point in [(0.5, -1, 2), (2, 1, 0.25)]:
            self.assertTrue(
                all(c["ok"] for c in oracle_check(self.mf, self.table, point))
            )
        self.assertLess(time.perf_counter() - tic, 1.0)
        self.assertRaises(
            DomainError, oracle_check, self.mf, self.table, (0, 0, 0)
        )

    def test_volume(self):
        res = oracle_reconstruct(self.mf, self.table)
        vol = oracle_volume(res, Axis(0, 1, 2), Axis(3, 1, 1), Axis(1, 1, 2))
        self.assertEqual(vol.shape, (2, 1, 2))
        self.assertAlmostEqual(vol.at(1, 0, 0), 3.1171875)
        self.assertAlmostEqual(vol.at(1, 0, 1), 26.625)
        self.assertEqual(vol.at(0, 0, 0), 3 * 3 / 128)


if __name__ == "__main__":
    unittest.main()
