# -*- coding: utf-8 -*-
#
#    PadLift - Hensel lifting for continuous p-adic functions
#    Unit Tests for function oracles and modulus of continuity estimates
#    © 2026 October - PadLift developers
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU Affero General Public License as
#    published by the Free Software Foundation, either version 3 of the
#    License, or (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU Affero General Public License for more details.
#
#    You should have received a copy of the GNU Affero General Public License
#    along with this program.  If not, see <http://www.gnu.org/licenses/>.
#

import random
import unittest
from parameterized import parameterized

from padlift.funcspace import *


class TestFunctionOracle(unittest.TestCase):

    def test_function_custom(self):
        f = FunctionOracle(5, lambda m, K: m * m + 1, name='square_plus_one')
        self.assertEqual(f.evaluate(3, 2), PAdicApprox([0, 2], 5))
        self.assertEqual(f(3, 2), PAdicApprox([0, 2], 5))
        self.assertEqual(f.residue(7, 1), 0)
        self.assertIsNone(f.scale)
        self.assertIsNone(f.spec_key)

    def test_function_custom_negative_result(self):
        f = FunctionOracle(3, lambda m, K: -1)
        self.assertEqual(f.residue(0, 3), 26)

    def test_function_no_evaluator(self):
        self.assertRaisesRegex(FunctionError, "no evaluation function", FunctionOracle(3).residue, 1, 1)

    @parameterized.expand([
        ('negative_input', -1, 2),
        ('float_input', 1.0, 2),
        ('bool_input', True, 2),
        ('zero_precision', 1, 0),
    ])
    def test_function_invalid_arguments(self, _, m, K):
        self.assertRaises(FunctionError, digit_linear(3, 1).residue, m, K)

    def test_function_as_dict(self):
        self.assertDictEqual(digit_linear(3, 1).as_dict(), {
            'name': 'digit_linear',
            'p': 3,
            'params': {'a': '1'},
            'scale': {'table': [1], 'tail_slope': 2},
        })
        self.assertDictEqual(polynomial(7, [-2, 0, 1]).as_dict()['params'], {'coeffs': ['-2', '0', '1']})
        self.assertDictEqual(polynomial(7, [-2, 0, 1]).as_dict()['scale'], {'id': True})


class TestFunctionFamilies(unittest.TestCase):

    @parameterized.expand([
        ('digit_linear', digit_linear(3, 1), 9, 3, 4),
        ('digit_linear_182', digit_linear(3, 1), 182, 3, 0),
        ('digit_linear_452', digit_linear(3, 1), 452, 3, 0),
        ('digit_cube', digit_cube(1), 4, 2, 15),
        ('digit_cube_root', digit_cube(2), 1302, 3, 0),
        ('digit_square_p7', digit_square(7, 8), 1, 2, 42),
        ('digit_square_p7_50', digit_square(7, 8), 50, 2, 7),
        ('digit_square_p2_root', digit_square(2, 17), 65, 6, 0),
        ('polynomial', polynomial(7, [-2, 0, 1]), 3, 2, 7),
        ('polynomial_root', polynomial(7, [-2, 0, 1]), 108, 3, 0),
        ('constant', constant(3, 5), 100, 2, 5),
    ])
    def test_function_residue(self, _, f, m, K, expected):
        self.assertEqual(f.residue(m, K), expected)

    def test_function_names(self):
        self.assertEqual(digit_linear(3, 1).name, 'digit_linear')
        self.assertEqual(digit_cube(2).name, 'digit_cube')
        self.assertEqual(digit_power(7, 1, 5).name, 'digit_power')
        self.assertDictEqual(digit_power(7, 1, 5).params, {'a': 1, 'exponent': 5})
        self.assertEqual(digit_square(2, 17).scale, ScaleFn([1], 2))

    def test_function_digit_power(self):
        f = digit_power(7, 0, 5)
        # even digits 3 and 2 at positions 0 and 2
        m = 3 + 2 * 49
        self.assertEqual(f.residue(m, 2), (3 ** 5 + 2 ** 5 * 7) % 49)

    @parameterized.expand([
        ('not_bijective', lambda: digit_power(3, 1, 2)),
        ('exponent_zero', lambda: digit_power(3, 1, 0)),
        ('cube_wrong_prime', lambda: digit_cube(1, 7)),
        ('square_p2_not_1_mod_8', lambda: digit_square(2, 5)),
        ('square_odd_not_1_mod_p', lambda: digit_square(7, 2)),
        ('polynomial_constant', lambda: polynomial(3, [5, 0])),
        ('parameter_string', lambda: digit_linear(3, 'one')),
        ('parameter_float', lambda: digit_linear(3, 1.5)),
        ('parameter_prime_mismatch', lambda: digit_linear(3, PAdicApprox([1], 5))),
    ])
    def test_function_invalid(self, _, create):
        self.assertRaises(FunctionError, create)

    def test_function_padic_parameter(self):
        f = digit_linear(3, PAdicApprox([1, 0], 3))
        self.assertEqual(f.residue(9, 2), 4)
        self.assertRaisesRegex(FunctionError, "exceeds precision", f.residue, 9, 3)
        self.assertDictEqual(f.as_dict()['params'], {'a': {'p': 3, 'digits': [1, 0]}})

    def test_function_large_parameter_string(self):
        f = digit_linear(5, str(5 ** 40 + 2))
        self.assertEqual(f.residue(0, 3), 2)

    def test_function_precision_coherence(self):
        rng = random.Random(99)
        functions = [digit_linear(3, 1), digit_cube(2), digit_square(7, 8), digit_square(2, 17),
                     polynomial(5, [3, -1, 0, 2]), constant(2, -3)]
        for _ in range(500):
            f = rng.choice(functions)
            m = rng.randint(0, 10 ** 8)
            K = rng.randint(2, 10)
            k = rng.randint(1, K)
            self.assertEqual(f.residue(m, K) % f.p ** k, f.residue(m, k))
            self.assertEqual(f.residue(m, K), f.residue(m, K))

    def test_function_polynomial_derivative(self):
        q = polynomial(7, [-2, 0, 1])
        self.assertEqual(q.degree, 2)
        d = q.derivative()
        self.assertIsInstance(d, Polynomial)
        self.assertEqual(d.residue(3, 2), 6)
        d2 = d.derivative()
        self.assertIsInstance(d2, ConstantFunction)
        self.assertEqual(d2.residue(100, 1), 2)
        self.assertEqual(polynomial(3, [1, 4]).derivative().residue(0, 2), 4)


class TestFunctionSpec(unittest.TestCase):

    @parameterized.expand([
        ('digit_linear', {'family': 'digit_linear', 'p': 3, 'a': '1'}, 'digit_linear', 3),
        ('digit_cube', {'family': 'digit_cube', 'a': '2'}, 'digit_cube', 5),
        ('digit_power', {'family': 'digit_power', 'p': 7, 'a': '1', 'exponent': 5}, 'digit_power', 7),
        ('digit_square', {'family': 'digit_square', 'p': 2, 'a': '17'}, 'digit_square', 2),
        ('polynomial', {'family': 'polynomial', 'p': 7, 'coeffs': ['-2', '0', '1']}, 'polynomial', 7),
        ('constant', {'family': 'constant', 'p': 3, 'c': '5'}, 'constant', 3),
    ])
    def test_function_from_spec(self, _, spec, name, p):
        f = function_from_spec(spec)
        self.assertEqual(f.name, name)
        self.assertEqual(f.p, p)
        self.assertEqual(f.spec_key, json.dumps(spec, sort_keys=True))

    def test_function_from_json_string(self):
        f = function_from_spec('{"family": "digit_linear", "p": 3, "a": "1"}')
        self.assertEqual(f.residue(9, 3), 4)
        self.assertIs(function_from_spec(f), f)

    @parameterized.expand([
        ('bad_json', '{"family": '),
        ('no_family', {'p': 3}),
        ('unknown_family', {'family': 'sine', 'p': 3}),
        ('missing_key', {'family': 'digit_linear', 'p': 3}),
        ('list', ['digit_linear']),
    ])
    def test_function_from_spec_invalid(self, _, spec):
        self.assertRaises(FunctionError, function_from_spec, spec)


class TestModulusOfContinuity(unittest.TestCase):

    def test_function_estimate_psi(self):
        self.assertEqual(estimate_psi(polynomial(3, [0, 1]), 2, 4), 2)
        f = digit_linear(3, 1)
        self.assertEqual(estimate_psi(f, 1, 4), 1)
        self.assertEqual(estimate_psi(f, 2, 4), 3)
        self.assertEqual(estimate_psi(constant(5, 7), 3, 2), 0)

    def test_function_estimate_psi_too_rough(self):
        self.assertRaisesRegex(FunctionError, "too rough", estimate_psi, digit_linear(3, 1), 2, 3)

    def test_function_estimate_psi_limits(self):
        self.assertRaises(FunctionError, estimate_psi, digit_linear(3, 1), 0, 3)
        self.assertRaisesRegex(FunctionError, "search space", estimate_psi, digit_linear(3, 1), 1, 60)

    def test_function_modulus_table(self):
        table = modulus_table(digit_linear(3, 1), 2, 4)
        self.assertEqual(table[1], 1)
        self.assertEqual(table[2], 3)
        self.assertEqual(len(table), 2)
        self.assertDictEqual(table.as_dict(), {
            'function': 'digit_linear',
            'psi': {'1': 1, '2': 3},
            'window_certified': True,
            'search_depth': 4,
        })

    @parameterized.expand([
        ('empty', {}),
        ('gap', {1: 1, 3: 2}),
        ('decreasing', {1: 3, 2: 1}),
    ])
    def test_function_modulus_table_invalid(self, _, entries):
        self.assertRaises(FunctionError, ModulusTable, entries)

    def test_function_phi_from_psi(self):
        self.assertEqual(phi_from_psi(ModulusTable({1: 2, 2: 4, 3: 6, 4: 8})), ScaleFn([1], 2))
        self.assertEqual(phi_from_psi({1: 1, 2: 3}), ScaleFn([0], 2))
        self.assertEqual(phi_from_psi({1: 0, 2: 0, 3: 0}), ScaleFn([0, 1, 2], 1))
        self.assertEqual(phi_from_psi({1: 5}), ScaleFn([4], 1))


if __name__ == '__main__':
    unittest.main()
