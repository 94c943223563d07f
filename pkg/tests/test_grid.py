# -*- coding: utf-8 -*-
"""
This is the unittest of the grid axes and fields.
"""
from __future__ import division, absolute_import, print_function

import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from smrtools import Axis, Point3, SphericalMeanField, VolumeField
from smrtools.grid import axis_node, axis_from_bounds, field_at
from smrtools.tools import ContractError, DomainError, RangeError


class TestAxis(unittest.TestCase):
    def setUp(self):
        self.axis = Axis(-1.0, 0.5, 5)

    def test_node(self):
        self.assertEqual(axis_node(self.axis, 3), 0.5)
        self.assertEqual(self.axis.node(0), -1.0)
        self.assertEqual(self.axis.end, 1.0)
        self.assertEqual(len(self.axis), 5)
        np.testing.assert_array_equal(
            self.axis.nodes(), [-1.0, -0.5, 0.0, 0.5, 1.0]
        )
        self.assertRaises(RangeError, self.axis.node, 5)
        self.assertRaises(RangeError, self.axis.node, -1)

    def test_invalid(self):
        self.assertRaises(DomainError, Axis, 0.0, 0.0, 3)
        self.assertRaises(DomainError, Axis, 0.0, -0.1, 3)
        self.assertRaises(DomainError, Axis, 0.0, 0.1, 0)
        self.assertRaises(DomainError, Axis, np.nan, 0.1, 3)
        self.assertRaises(DomainError, Axis, 0.0, 0.1, 2.5)

    def test_index_of(self):
        self.assertEqual(self.axis.index_of(0.5), 3)
        self.assertEqual(self.axis.index_of(0.5 + 1e-12), 3)
        self.assertTrue(self.axis.is_node(-1.0))
        self.assertFalse(self.axis.is_node(0.25))
        self.assertFalse(self.axis.is_node(1.5))
        self.assertRaises(ContractError, self.axis.index_of, 0.25)

    def test_shrink_sub(self):
        inner = self.axis.shrink(1)
        self.assertEqual(inner, Axis(-0.5, 0.5, 3))
        self.assertRaises(DomainError, self.axis.shrink, 3)
        self.assertEqual(self.axis.sub(2, 2), Axis(0.0, 0.5, 2))
        self.assertRaises(RangeError, self.axis.sub, 4, 2)

    def test_from_bounds(self):
        axis = axis_from_bounds(0.0, 1.0, 0.1)
        self.assertEqual(axis.count, 11)
        self.assertAlmostEqual(axis.end, 1.0)
        self.assertRaises(ContractError, axis_from_bounds, 0.0, 1.0, 0.3)
        self.assertRaises(DomainError, axis_from_bounds, 0.0, 1.0, 0.0)

    def test_eq_repr(self):
        self.assertEqual(self.axis, Axis(-1, 0.5, 5))
        self.assertNotEqual(self.axis, Axis(-1, 0.5, 6))
        self.assertEqual(hash(self.axis), hash(Axis(-1, 0.5, 5)))
        self.assertEqual(
            repr(self.axis), "Axis(start=-1.0, step=0.5, count=5)"
        )

    @settings(max_examples=50, deadline=None)
    @given(
        st.floats(-100, 100),
        st.floats(1e-3, 10),
        st.integers(1, 500),
    )
    def test_nodes_increasing(self, start, step, count):
        axis = Axis(start, step, count)
        nodes = axis.nodes()
        self.assertEqual(nodes.size, count)
        self.assertTrue(np.all(np.diff(nodes) > 0))
        self.assertEqual(axis.index_of(axis.node(count - 1)), count - 1)


class TestPoint3(unittest.TestCase):
    def test_point(self):
        p = Point3(1, 2, 3)
        self.assertEqual(p, (1.0, 2.0, 3.0))
        self.assertEqual(p.z, 3.0)
        self.assertRaises(DomainError, Point3, 0.0, np.inf, 1.0)
        self.assertRaises(DomainError, Point3, np.nan, 0.0, 1.0)


class TestField(unittest.TestCase):
    def setUp(self):
        self.x_axis = Axis(0.0, 1.0, 3)
        self.y_axis = Axis(0.0, 1.0, 2)
        self.u_axis = Axis(0.0, 0.5, 4)
        values = np.arange(24, dtype=float).reshape(3, 2, 4)
        self.field = SphericalMeanField(
            self.x_axis, self.y_axis, self.u_axis, values
        )

    def test_at(self):
        self.assertEqual(field_at(self.field, 1, 0, 2), 10.0)
        self.assertEqual(self.field.at(2, 1, 3), 23.0)
        self.assertRaises(RangeError, self.field.at, 3, 0, 0)
        self.assertRaises(RangeError, self.field.at, 0, 0, -1)

    def test_zeros(self):
        zero = SphericalMeanField.zeros(self.x_axis, self.y_axis, self.u_axis)
        self.assertEqual(zero.shape, (3, 2, 4))
        self.assertEqual(np.count_nonzero(zero.values), 0)

    def test_values_immutable(self):
        with self.assertRaises(ValueError):
            self.field.values[0, 0, 0] = 1.0
        other = self.field.set(0, 0, 0, 7.0)
        self.assertEqual(other.at(0, 0, 0), 7.0)
        self.assertEqual(self.field.at(0, 0, 0), 0.0)
        self.assertNotEqual(other, self.field)
        self.assertEqual(other.set(0, 0, 0, 0.0), self.field)

    def test_shape_mismatch(self):
        self.assertRaises(
            DomainError,
            SphericalMeanField,
            self.x_axis,
            self.y_axis,
            self.u_axis,
            np.zeros((3, 2, 3)),
        )
        self.assertRaises(
            DomainError,
            SphericalMeanField,
            self.x_axis,
            self.y_axis,
            Axis(-0.5, 0.5, 4),
        )
        self.assertRaises(
            DomainError, VolumeField, self.x_axis, self.y_axis, self.u_axis
        )

    def test_window(self):
        win = self.field.window((1, 0, 1), (2, 2, 2))
        self.assertEqual(win.x_axis, Axis(1.0, 1.0, 2))
        self.assertEqual(win.u_axis, Axis(0.5, 0.5, 2))
        self.assertEqual(win.at(0, 1, 1), self.field.at(1, 1, 2))
        self.assertIsInstance(win, SphericalMeanField)
        self.assertRaises(RangeError, self.field.window, (2, 0, 0), (2, 2, 2))

    def test_axis(self):
        self.assertIs(self.field.axis("u"), self.u_axis)
        self.assertRaises(ValueError, self.field.axis, "z")
        pos = self.field.pos
        np.testing.assert_array_equal(pos[2], [0.0, 0.5, 1.0, 1.5])


if __name__ == "__main__":
    unittest.main()
