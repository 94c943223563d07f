# -*- coding: utf-8 -*-
"""
This is the unittest of the phantoms.
"""
from __future__ import division, absolute_import, print_function

import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from smrtools import Point3, Phantom, MonomialX2YZ3, UnitBall
from smrtools.phantom import (
    PHANTOMS,
    eval_phantom,
    analytic_mean,
    phantom_from_config,
)
from smrtools.tools import DomainError, ValidationError


class TestPhantom(unittest.TestCase):
    def setUp(self):
        self.mono = MonomialX2YZ3()
        self.ball = UnitBall()

    def test_base(self):
        self.assertRaises(TypeError, Phantom)
        with self.assertRaises(TypeError):

            class NoEval(Phantom):
                pass

    def test_eval(self):
        self.assertEqual(eval_phantom(self.mono, Point3(1, 3, 2)), 24.0)
        self.assertEqual(self.mono(Point3(2, 1, -1)), 0.0)
        self.assertEqual(eval_phantom(self.ball, Point3(0, 0, 2)), 1.0)
        self.assertEqual(self.ball(Point3(0, 0, 3)), 1.0)
        self.assertEqual(self.ball(Point3(0, 0, 3.01)), 0.0)
        self.assertEqual(self.ball(Point3(0.8, 0.8, 2)), 0.0)
        np.testing.assert_array_equal(
            self.mono.evaluate([1, 2], [1, 1], [1, 1]), [1.0, 4.0]
        )

    def test_monomial_mean(self):
        self.assertAlmostEqual(analytic_mean(self.mono, 1, 3, 2), 5.0)
        self.assertEqual(self.mono.mean(1, 3, 0), 0.0)
        self.assertEqual(self.mono.mean(0, 0, 1), 0.0)
        self.assertTrue(np.isinf(self.mono.support_bound))
        self.assertTrue(self.mono.intersects(5, 5, 0.1))
        self.assertFalse(self.mono.intersects(0, 0, 0))
        res = self.mono.mean(np.array([1.0, 1.0]), 3.0, np.array([1.0, 2.0]))
        np.testing.assert_allclose(res, [3 / 8 + 3 / 48, 5.0])

    def test_ball_mean(self):
        self.assertAlmostEqual(analytic_mean(self.ball, 0, 0, 2), 0.0625)
        self.assertEqual(self.ball.mean(0, 0, 0.5), 0.0)
        self.assertEqual(self.ball.mean(0, 0, 3.5), 0.0)
        self.assertEqual(self.ball.mean(0, 0, 0), 0.0)
        # tangent radii
        self.assertEqual(self.ball.mean(0, 0, 1), 0.0)
        self.assertEqual(self.ball.mean(0, 0, 3), 0.0)
        self.assertAlmostEqual(self.ball.support_bound, 3.0)
        self.assertTrue(self.ball.intersects(0, 0, 2))
        self.assertFalse(self.ball.intersects(0, 0, 0.9))
        self.assertFalse(self.ball.intersects(0, 0, 3.1))
        value = UnitBall(value=2.5).mean(0, 0, 2)
        self.assertAlmostEqual(value, 2.5 * 0.0625)
        # tiny radii far from the ball stay free of floating point errors
        with np.errstate(all="raise"):
            self.assertEqual(self.ball.mean(0.5, 0, 5e-324), 0.0)
            vals = self.ball.mean(0, 0, np.array([1e-310, 1e-300, 2.0]))
        np.testing.assert_allclose(vals, [0.0, 0.0, 0.0625])

    def test_negative_radius(self):
        self.assertRaises(DomainError, self.ball.mean, 0, 0, -0.1)
        self.assertRaises(DomainError, analytic_mean, self.mono, 0, 0, -1)
        self.assertRaises(
            DomainError, self.mono.mean, [0, 0], [0, 0], [1, np.nan]
        )

    def test_ball_invalid(self):
        self.assertRaises(DomainError, UnitBall, radius=0)
        self.assertRaises(DomainError, UnitBall, center=(0, 0, 1))
        self.assertRaises(DomainError, UnitBall, value=np.inf)

    def test_eq_repr(self):
        self.assertEqual(
            repr(self.ball),
            "UnitBall(center=(0.0, 0.0, 2.0), radius=1.0, value=1.0)",
        )
        self.assertEqual(repr(self.mono), "MonomialX2YZ3()")
        self.assertEqual(self.ball, UnitBall(center=(0, 0, 2)))
        self.assertNotEqual(self.ball, UnitBall(radius=0.5))
        self.assertNotEqual(self.ball, self.mono)
        self.assertEqual(len({self.ball, UnitBall(), self.mono}), 2)

    def test_config(self):
        self.assertEqual(sorted(PHANTOMS), ["ball", "monomial"])
        self.assertEqual(
            phantom_from_config({"phantom": "monomial"}), self.mono
        )
        ball = phantom_from_config(
            {"phantom": "Ball", "center": "0.5, 0, 3", "radius": "1.5"}
        )
        self.assertEqual(ball.center, Point3(0.5, 0.0, 3.0))
        self.assertEqual(ball.radius, 1.5)
        self.assertRaises(
            ValidationError, phantom_from_config, {"phantom": "cube"}
        )
        self.assertRaises(
            ValidationError,
            phantom_from_config,
            {"phantom": "ball", "center": "0,2"},
        )
        self.assertRaises(
            ValidationError,
            phantom_from_config,
            {"phantom": "ball", "radius": "wide"},
        )

    @settings(max_examples=100, deadline=None)
    @given(
        st.floats(-3, 3),
        st.floats(-3, 3),
        st.floats(0, 6),
    )
    def test_ball_mean_range(self, cx, cy, u):
        value = self.ball.mean(cx, cy, u)
        self.assertGreaterEqual(value, 0.0)
        self.assertLessEqual(value, 1.0)
        if not self.ball.intersects(cx, cy, u):
            self.assertLess(value, 1e-12)


if __name__ == "__main__":
    unittest.main()
