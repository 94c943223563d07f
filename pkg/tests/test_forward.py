# -*- coding: utf-8 -*-
"""
This is the unittest of the forward spherical mean transform.
"""
from __future__ import division, absolute_import, print_function

import unittest
import warnings

import numpy as np

from smrtools import (
    Axis,
    MonomialX2YZ3,
    UnitBall,
    SphereQuadratureRule,
    spherical_mean,
    sample_mean_field,
    analytic_mean_field,
)
from smrtools.tools import (
    ContractError,
    DomainError,
    EvaluationError,
    sphere_moment,
)


class TestQuadrature(unittest.TestCase):
    def setUp(self):
        self.rule = SphereQuadratureRule(polar_order=8)

    def test_layout(self):
        self.assertEqual(self.rule.azimuth_count, 16)
        self.assertEqual(self.rule.size, 2 * 8 * 16)
        self.assertEqual(self.rule.directions.shape, (256, 3))
        self.assertEqual(self.rule.exact_degree, 15)
        # polar_order nodes per hemisphere
        cos_theta = np.unique(self.rule.directions[:, 2])
        self.assertEqual(cos_theta.size, 2 * 8)
        self.assertEqual(np.sum(cos_theta > 0), 8)
        self.assertAlmostEqual(np.sum(self.rule.weights), 4 * np.pi)
        self.assertTrue(np.all(self.rule.weights > 0))
        np.testing.assert_allclose(
            np.linalg.norm(self.rule.directions, axis=1), 1.0
        )
        with self.assertRaises(ValueError):
            self.rule.weights[0] = 1.0
        self.assertEqual(
            repr(self.rule),
            "SphereQuadratureRule(polar_order=8, azimuth_count=16)",
        )
        self.assertEqual(self.rule, SphereQuadratureRule(8, 16))
        self.assertNotEqual(self.rule, SphereQuadratureRule(8, 17))

    def test_invalid(self):
        self.assertRaises(DomainError, SphereQuadratureRule, 1)
        self.assertRaises(DomainError, SphereQuadratureRule, 4, 3)
        self.assertRaises(DomainError, SphereQuadratureRule, 2.5)
        self.assertRaises(DomainError, self.rule.integrate, np.ones(10))

    def test_exactness(self):
        x, y, z = self.rule.directions.T
        upper = z >= 0
        for a, b, c in [(0, 0, 0), (2, 0, 0), (2, 2, 4), (4, 6, 2), (1, 2, 3)]:
            vals = x ** a * y ** b * z ** c
            self.assertAlmostEqual(
                self.rule.integrate(vals), sphere_moment(a, b, c), places=12
            )
        # the Heaviside cut at z = 0 is integrated exactly as well
        for a, b, c in [(2, 1, 3), (2, 0, 3), (0, 2, 5), (4, 0, 1)]:
            vals = np.where(upper, x ** a * y ** b * z ** c, 0.0)
            self.assertAlmostEqual(
                self.rule.integrate(vals),
                sphere_moment(a, b, c, upper=True),
                places=12,
            )

    def test_spectral_convergence(self):
        # mean of exp(a.P) over S(c, u) is exp(a.c) sinh(|a|u) / (|a|u)
        vec = np.array([0.5, 0.5, 0.5])
        norm = np.linalg.norm(vec)

        def func(pt):
            return np.exp(np.dot(vec, pt))

        exact = np.exp(0.5 * 0.3 - 0.5 * 0.2) * np.sinh(norm) / norm
        errors = [
            abs(
                spherical_mean(
                    func, 0.3, -0.2, 1.0, SphereQuadratureRule(order)
                )
                - exact
            )
            for order in (2, 4)
        ]
        self.assertLess(errors[1], 1e-5)
        if errors[1] > 1e-14:
            self.assertGreaterEqual(errors[0] / errors[1], 10.0)


class TestSphericalMean(unittest.TestCase):
    def setUp(self):
        self.mono = MonomialX2YZ3()
        self.ball = UnitBall()
        self.rng = np.random.RandomState(20170519)

    def test_constant(self):
        value = spherical_mean(lambda pt: 1.0, 0.3, 0.7, 2.0)
        self.assertAlmostEqual(value, 1.0)

    def test_sphere_points(self):
        # every evaluation point has distance u to the center
        seen = []

        def func(pt):
            seen.append(pt)
            return 0.0

        rule = SphereQuadratureRule(3)
        spherical_mean(func, 1.0, -2.0, 0.75, rule)
        self.assertEqual(len(seen), rule.size)
        pts = np.array(seen)
        dist = np.linalg.norm(pts - [1.0, -2.0, 0.0], axis=1)
        np.testing.assert_allclose(dist, 0.75)

    def test_squared_distance(self):
        # |P - c|^2 is u^2 on the whole sphere
        rule = SphereQuadratureRule(4)
        for cx, cy, u in [(0.3, -0.4, 1.7), (0.0, 0.0, 1.0), (-2.5, 1.2, 0.3)]:

            def func(pt):
                return (pt.x - cx) ** 2 + (pt.y - cy) ** 2 + pt.z ** 2

            value = spherical_mean(func, cx, cy, u, rule)
            self.assertAlmostEqual(value, u ** 2, delta=1e-12 * max(1, u ** 2))

    def test_center(self):
        self.assertEqual(spherical_mean(self.mono, 1.0, 3.0, 0.0), 0.0)
        value = spherical_mean(lambda pt: pt.x + 2.0, 1.0, 3.0, 0.0)
        self.assertEqual(value, 3.0)
        self.assertRaises(DomainError, spherical_mean, self.mono, 0, 0, -1.0)

    def test_monomial(self):
        self.assertAlmostEqual(spherical_mean(self.mono, 1.0, 3.0, 2.0), 5.0)
        rule = SphereQuadratureRule(32)
        for __ in range(20):
            cx = self.rng.uniform(-2.0, 2.0)
            cy = self.rng.uniform(0.5, 3.0)
            u = self.rng.uniform(0.5, 3.0)
            num = spherical_mean(self.mono, cx, cy, u, rule)
            ref = self.mono.mean(cx, cy, u)
            self.assertLessEqual(abs(num - ref), 1e-9 * abs(ref))

    def test_ball(self):
        rule = SphereQuadratureRule(512)
        self.assertAlmostEqual(
            spherical_mean(self.ball, 0.0, 0.0, 2.0, rule), 0.0625, delta=1e-3
        )
        self.assertEqual(spherical_mean(self.ball, 0.0, 0.0, 0.5, rule), 0.0)
        for __ in range(20):
            cx, cy = self.rng.uniform(-1.0, 1.0, size=2)
            dist = self.ball.center_distance(cx, cy)
            u = self.rng.uniform(dist - 0.95, dist + 0.95)
            num = spherical_mean(self.ball, cx, cy, u, rule)
            self.assertAlmostEqual(num, self.ball.mean(cx, cy, u), delta=1e-3)

    def test_indicator_warning(self):
        with self.assertWarns(UserWarning):
            spherical_mean(self.ball, 0.0, 0.0, 2.0, SphereQuadratureRule(8))
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            spherical_mean(self.mono, 0.0, 0.0, 2.0, SphereQuadratureRule(8))

    def test_non_finite(self):
        def func(pt):
            return np.nan if pt.z > 0.5 else 0.0

        with self.assertRaises(EvaluationError) as ctx:
            spherical_mean(func, 0.0, 0.0, 1.0, SphereQuadratureRule(4))
        self.assertGreater(ctx.exception.location[2], 0.5)


class TestSampling(unittest.TestCase):
    def setUp(self):
        self.mono = MonomialX2YZ3()
        self.x_axis = Axis(-1.0, 1.0, 3)
        self.y_axis = Axis(1.0, 1.0, 3)
        self.u_axis = Axis(0.0, 0.5, 4)

    def test_monomial_field(self):
        rule = SphereQuadratureRule(16)
        field = sample_mean_field(
            self.mono, self.x_axis, self.y_axis, self.u_axis, rule
        )
        ref = analytic_mean_field(
            self.mono, self.x_axis, self.y_axis, self.u_axis
        )
        self.assertEqual(field.shape, (3, 3, 4))
        self.assertEqual(field.axes, ref.axes)
        np.testing.assert_allclose(
            field.values, ref.values, rtol=1e-9, atol=1e-12
        )
        value = 3 * 3.375 / 8 + 3 * 1.5 ** 5 / 48
        self.assertAlmostEqual(ref.at(2, 2, 3), value)

    def test_zero(self):
        field = sample_mean_field(
            lambda pt: 0.0,
            self.x_axis,
            self.y_axis,
            self.u_axis,
            SphereQuadratureRule(2),
        )
        self.assertEqual(np.count_nonzero(field.values), 0)

    def test_workers(self):
        rule = SphereQuadratureRule(8)
        single = sample_mean_field(
            self.mono, self.x_axis, self.y_axis, self.u_axis, rule
        )
        multi = sample_mean_field(
            self.mono, self.x_axis, self.y_axis, self.u_axis, rule, workers=3
        )
        self.assertEqual(single, multi)
        self.assertRaises(
            DomainError,
            sample_mean_field,
            self.mono,
            self.x_axis,
            self.y_axis,
            self.u_axis,
            rule,
            0,
        )

    def test_negative_radii(self):
        neg_axis = Axis(-0.5, 0.5, 4)
        self.assertRaises(
            ContractError,
            sample_mean_field,
            self.mono,
            self.x_axis,
            self.y_axis,
            neg_axis,
        )
        self.assertRaises(
            ContractError,
            analytic_mean_field,
            self.mono,
            self.x_axis,
            self.y_axis,
            neg_axis,
        )

    def test_no_closed_form(self):
        self.assertRaises(
            ContractError,
            analytic_mean_field,
            lambda pt: 1.0,
            self.x_axis,
            self.y_axis,
            self.u_axis,
        )


if __name__ == "__main__":
    unittest.main()
