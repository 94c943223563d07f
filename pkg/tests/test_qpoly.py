# -*- coding: utf-8 -*-
"""
This is the unittest of the standard polynomial tables.
"""
from __future__ import division, absolute_import, print_function

import os
import shutil
import tempfile
import unittest
from fractions import Fraction

import numpy as np
from scipy import integrate

from smrtools import QTable, builtin_n2
from smrtools.qpoly import (
    validate_qtable,
    eval_q,
    q_moment,
    q_power_moment,
    load_qtable,
    save_qtable,
    resolve_qtable,
)
from smrtools.tools import DomainError, ValidationError, weight_factor


class TestQTable(unittest.TestCase):
    def setUp(self):
        self.table = builtin_n2()

    def test_builtin(self):
        self.assertEqual(self.table.n, 2)
        self.assertEqual(self.table.weight, 15)
        self.assertEqual(validate_qtable(self.table), [])
        self.assertEqual(
            self.table.coeffs_of(0), [Fraction(105, 2), Fraction(-315, 2)]
        )
        self.assertEqual(len(self.table.rows()), 9)
        self.assertEqual(repr(self.table), "QTable(n=2, terms=9)")
        self.assertEqual(
            str(self.table).splitlines()[0],
            "Q_2,0(t) = 105/2 t^2 - 315/2 t^4",
        )

    def test_invariants(self):
        for i in range(3):
            self.assertEqual(self.table.exact_value(i, 0), 0)
            self.assertEqual(self.table.degree(i), 2 * (2 + i))
            self.assertNotEqual(self.table.coeffs_of(i)[-1], 0)
            self.assertEqual(self.table.poly(i).degree(), 2 * (2 + i))
        self.assertEqual(self.table.exact_value(1, 1), 0)
        self.assertEqual(self.table.exact_value(2, 1), 0)
        self.assertEqual(q_moment(self.table, 0, 1), Fraction(-175, 16))
        self.assertEqual(q_moment(self.table, 1, 1), Fraction(-7, 16))
        self.assertEqual(q_moment(self.table, 0, 2), Fraction(-147, 16))
        self.assertEqual(
            q_power_moment(self.table, 0, 3), q_moment(self.table, 0, 1)
        )

    def test_eval(self):
        self.assertEqual(eval_q(self.table, 0, 0.0), 0.0)
        self.assertEqual(eval_q(self.table, 1, 1.0), 0.0)
        self.assertAlmostEqual(eval_q(self.table, 0, 1 / np.sqrt(3)), 0.0)
        vals = eval_q(self.table, 2, np.linspace(0, 1, 5))
        self.assertEqual(vals.shape, (5,))
        self.assertRaises(DomainError, eval_q, self.table, 0, 1.5)
        self.assertRaises(DomainError, eval_q, self.table, 0, -0.1)
        self.assertRaises(DomainError, eval_q, self.table, 3, 0.5)
        self.assertRaises(DomainError, eval_q, self.table, -1, 0.5)

    def test_eval_rounding(self):
        eps = np.finfo(np.double).eps
        for i in range(3):
            coeffs = self.table.coeffs_of(i)
            for t in (Fraction(1, 2), Fraction(1, 4), Fraction(3, 4)):
                exact = self.table.exact_value(i, t)
                scale = sum(
                    abs(d) * t ** (2 * j) for j, d in enumerate(coeffs, 1)
                )
                err = abs(Fraction(eval_q(self.table, i, float(t))) - exact)
                self.assertLessEqual(err, 4 * eps * scale)

    def test_moment_quadrature(self):
        for i in range(3):
            for m in range(4):
                num, __ = integrate.quad(
                    lambda s: eval_q(self.table, i, s) * s ** (2 * m + 1),
                    0.0,
                    1.0,
                    epsabs=1e-14,
                    epsrel=1e-13,
                )
                self.assertAlmostEqual(
                    num, float(q_moment(self.table, i, m)), delta=1e-12
                )
        self.assertRaises(DomainError, q_moment, self.table, 0, -1)
        self.assertRaises(DomainError, q_power_moment, self.table, 0, 1.5)

    def test_invalid(self):
        with self.assertRaises(ValidationError) as ctx:
            QTable(1, {(0, 0): 1, (0, 1): 2, (1, 2): 1})
        self.assertIn("constant term forbidden", str(ctx.exception))
        with self.assertRaises(ValidationError) as ctx:
            QTable(1, {(0, 1): 2, (1, 1): 1})
        self.assertIn("degree deficit", str(ctx.exception))
        self.assertRaises(ValidationError, QTable, 1, {(0, 1): 1, (2, 1): 1})
        self.assertRaises(ValidationError, QTable, 0, {(0, 1): "a/b"})
        self.assertRaises(ValidationError, QTable, -1, {})
        table = QTable(1, {(0, 1): 3, (1, 2): 1})
        self.assertEqual(table.weight, weight_factor(1))
        self.assertEqual(
            validate_qtable((1, {(0, 1): 1})),
            ["degree deficit: Q_{1,1} lacks the leading coefficient d_2"],
        )

    def test_eq(self):
        self.assertEqual(self.table, builtin_n2())
        self.assertEqual(hash(self.table), hash(builtin_n2()))
        other = QTable(2, dict(((i, j), d) for i, j, d in self.table.rows()))
        self.assertEqual(other, self.table)
        self.assertNotEqual(QTable(1, {(0, 1): 3, (1, 2): 1}), self.table)


class TestQTableFiles(unittest.TestCase):
    def setUp(self):
        self.test_dir = tempfile.mkdtemp()
        self.table = builtin_n2()

    def tearDown(self):
        shutil.rmtree(self.test_dir)

    def _write(self, text):
        path = os.path.join(self.test_dir, "table.q")
        with open(path, "w") as fout:
            fout.write(text)
        return path

    def test_round_trip(self):
        path = os.path.join(self.test_dir, "n2.q")
        save_qtable(self.table, path)
        with open(path) as fin:
            lines = fin.read().splitlines()
        self.assertTrue(lines[0].startswith("#"))
        self.assertEqual(lines[1], "2 0 1 105 2")
        self.assertEqual(load_qtable(path), self.table)
        self.assertEqual(resolve_qtable(path), self.table)

    def test_resolve(self):
        self.assertEqual(resolve_qtable("builtin:n2"), self.table)
        self.assertIs(resolve_qtable(self.table), self.table)
        self.assertRaises(ValidationError, resolve_qtable, "builtin:n7")

    def test_load_errors(self):
        path = self._write("1 0 0 1 1\n1 0 1 1 1\n1 1 2 1 1\n")
        with self.assertRaises(ValidationError) as ctx:
            load_qtable(path)
        self.assertEqual(
            ctx.exception.violations,
            ["row 1: constant term forbidden (i=0, j=0)"],
        )
        path = self._write("1 0 1 1 1 # comment\n1 1 1 1 1\n")
        with self.assertRaises(ValidationError) as ctx:
            load_qtable(path)
        self.assertIn("degree deficit", ctx.exception.violations[0])
        path = self._write(
            "1 0 1 1 1\n1 0 1 2 1\n1 1 2 1 0\n2 1 2 1 1\n1 0 x 1 1\n"
        )
        with self.assertRaises(ValidationError) as ctx:
            load_qtable(path)
        rows = [v.split(":")[0] for v in ctx.exception.violations]
        self.assertEqual(rows[:4], ["row 2", "row 3", "row 4", "row 5"])
        path = self._write("# nothing\n")
        self.assertRaises(ValidationError, load_qtable, path)
        path = self._write("1 0 1 3 1\n1 1 2 1 1\n")
        self.assertEqual(
            load_qtable(path), QTable(1, {(0, 1): 3, (1, 2): 1})
        )


if __name__ == "__main__":
    unittest.main()
