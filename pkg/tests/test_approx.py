# -*- coding: utf-8 -*-
#
#    PadLift - Hensel lifting for continuous p-adic functions
#    Unit Tests for approximability certificates and lifts of approximable functions
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

import unittest
from parameterized import parameterized

from padlift.approx import *
from padlift.oracle import brute_roots, RootQuery
from tests.test_custom import CustomAssertions


PHI_2N1 = ScaleFn([1], 2)


def quadratic_digit(p=3):
    # 3 * (second digit)^2: consistent at u'=1, not for u'=2
    return FunctionOracle(p, lambda m, K: p * ((m // p) % p) ** 2, name='quadratic_digit')


class TestSlopeEstimate(unittest.TestCase):

    @parameterized.expand([
        ('digit_square_p7', digit_square(7, 8), PHI_2N1, 1, 1, 0, 2),
        ('digit_square_p7_level2', digit_square(7, 8), PHI_2N1, 1, 2, 0, 2),
        ('digit_square_p2_level1', digit_square(2, 17), PHI_2N1, 1, 1, 1, 0),
        ('digit_square_p2_level2', digit_square(2, 17), PHI_2N1, 1, 2, 1, 1),
        ('digit_square_p2_level4', digit_square(2, 17), PHI_2N1, 1, 4, 1, 1),
        ('digit_linear', digit_linear(3, 1), PHI_2N1, 2, 1, 0, 1),
        ('polynomial', polynomial(7, [-2, 0, 1]), identity_scale(), 3, 1, 0, 6),
        ('polynomial_level3', polynomial(7, [-2, 0, 1]), identity_scale(), 3, 3, 0, 6),
    ])
    def test_approx_estimate_delta(self, _, f, phi, u, n, h, expected):
        self.assertEqual(estimate_delta(f, phi, u, n, h), expected)

    def test_approx_estimate_delta_not_divisible(self):
        rough = FunctionOracle(3, lambda m, K: (m // 3) % 3, name='second_digit')
        delta = estimate_delta(rough, identity_scale(), 0, 1, 0)
        self.assertIsInstance(delta, Inconsistent)
        self.assertFalse(delta)
        self.assertEqual(delta.u_prime, 1)
        self.assertEqual(delta.n, 1)

    def test_approx_estimate_delta_perturbation(self):
        delta = estimate_delta(quadratic_digit(), identity_scale(), 0, 1, 0)
        self.assertIsInstance(delta, Inconsistent)
        self.assertEqual(delta.u_prime, 2)
        self.assertDictEqual(delta.as_dict(), {'u_prime': '2', 'n': 1, 'reason': delta.reason})

    def test_approx_estimate_delta_level_zero(self):
        self.assertRaises(ApproxError, estimate_delta, digit_square(7, 8), PHI_2N1, 1, 0, 0)

    def test_approx_find_l(self):
        self.assertEqual(find_l(digit_square(2, 17), PHI_2N1, 1, 1, 3), 2)
        self.assertEqual(find_l(digit_square(2, 17), PHI_2N1, 1, 1, 3, require_unit=False), 1)
        self.assertEqual(find_l(digit_square(7, 8), PHI_2N1, 1, 0, 3), 1)
        self.assertEqual(find_l(digit_square(2, 17), PHI_2N1, 1, 1, 3, n0=1, depth=2), 2)

    def test_approx_find_l_fails(self):
        self.assertRaisesRegex(ApproxError, "No l", find_l, polynomial(3, [0, 0, 1]), identity_scale(), 0, 0, 2)
        self.assertRaises(ApproxError, find_l, digit_square(2, 17), PHI_2N1, 1, 1, 3, l_max=1)


class TestUniformApproximability(unittest.TestCase, CustomAssertions):

    def test_approx_verify_uniform(self):
        report = verify_uniform_approx(digit_square(2, 17), PHI_2N1, 1, 1, 1, 2, 3, 2)
        self.assertTrue(report)
        self.assertDictEqual(report.details, {'delta': {2: 1, 3: 1}})
        self.assertDictEqualExt(report.window, {'n_range': [2, 3], 'points': 4, 'point_max': 64})

    def test_approx_verify_uniform_not_unit(self):
        report = verify_uniform_approx(polynomial(3, [0, 0, 1]), identity_scale(), 0, 0, 0, 1, 2, 1)
        self.assertFalse(report)
        self.assertDictEqual(report.counterexample, {'u_prime': 0, 'n': 1})
        self.assertIn("not a unit", report.reason)

    def test_approx_verify_uniform_not_a_root(self):
        report = verify_uniform_approx(digit_square(7, 8), PHI_2N1, 1, 0, 1, 1, 2, 1)
        self.assertFalse(report)
        self.assertDictEqual(report.counterexample, {'u_prime': 1})

    def test_approx_verify_uniform_inconsistent(self):
        report = verify_uniform_approx(quadratic_digit(), identity_scale(), 0, 0, 0, 1, 1, 1)
        self.assertFalse(report)
        self.assertDictEqual(report.counterexample, {'u_prime': 0, 'n': 1, 'perturbation': 2})

    def test_approx_verify_uniform_window(self):
        self.assertRaises(ApproxError, verify_uniform_approx, digit_square(7, 8), PHI_2N1, 1, 1, 0, 1, 2, 0)

    def test_approx_certificate(self):
        cert = approx_certificate(digit_square(7, 8), PHI_2N1, 1, 0, 0, 3)
        self.assertEqual(cert.l, 1)
        self.assertTrue(cert.unit_flag)
        self.assertDictEqual(cert.delta, {1: 2, 2: 2, 3: 2})
        self.assertDictEqualExt(cert.as_dict(), {'u': '1', 'h': 0, 'l': 1, 'unit_flag': True,
                                                 'delta_by_n': {'1': 2, '2': 2, '3': 2}})
        self.assertEqual(json.loads(cert.as_json())['l'], 1)

    def test_approx_certificate_p2(self):
        cert = approx_certificate(digit_square(2, 17), PHI_2N1, 1, 1, 1, 4)
        self.assertEqual(cert.l, 2)
        self.assertDictEqual(cert.delta, {2: 1, 3: 1, 4: 1})

    def test_approx_certificate_fails(self):
        self.assertRaises(ApproxError, approx_certificate, polynomial(3, [0, 0, 1]), identity_scale(), 0, 0, 0, 2)

    def test_approx_certificate_unit_flag(self):
        self.assertFalse(ApproxCertificate(1, 0, 1, {1: 0, 2: 1}).unit_flag)
        self.assertTrue(ApproxCertificate(1, 0, 1, {1: 3}).unit_flag)


class TestApproximableLift(unittest.TestCase):

    def test_approx_corollary_lift_polynomial(self):
        trace = corollary_lift(polynomial(7, [-2, 0, 1]), identity_scale(), 3, 0, 0, 1, 2)
        self.assertEqual(trace.root, 108)
        self.assertEqual(trace.problem.s_strategy, 'full')

    def test_approx_corollary_lift_digit_square(self):
        f = digit_square(7, 8)
        trace = corollary_lift(f, PHI_2N1, 1, 0, 0, 1, 3)
        self.assertTrue(trace)
        self.assertEqual(trace.certification_level, 4)
        self.assertEqual(f.residue(trace.root, 4), 0)
        digits = digits_of(trace.root, 7, 8)
        s = sum(d * 7 ** j for j, d in enumerate(digits[::2]))
        self.assertEqual(s * s % 7 ** 4, 8)
        self.assertIn(trace.root, brute_roots(RootQuery.from_trace(trace)))
        self.assertTrue(all(rho(trace.root, n, PHI_2N1, 7) < 7 for n in range(1, 4)))

    def test_approx_corollary_lift_p2(self):
        f = digit_square(2, 17)
        trace = corollary_lift(f, PHI_2N1, 1, 1, 1, 2, 4)
        self.assertTrue(trace)
        self.assertEqual(trace.root, 65)
        self.assertEqual(trace.certification_level, 6)

    @parameterized.expand([
        ('n_max_3', 3, 9),
        ('n_max_4', 4, 9),
        ('n_max_5', 5, 41),
    ])
    def test_approx_corollary_lift_x2_minus_17(self, _, n_max, root):
        trace = corollary_lift(polynomial(2, [-17, 0, 1]), identity_scale(), 1, 1, 1, 2, n_max)
        self.assertEqual(trace.root, root)
        self.assertEqual(polynomial(2, [-17, 0, 1]).residue(root, 2 + n_max), 0)

    def test_approx_corollary_lift_invalid(self):
        self.assertRaisesRegex(ApproxError, "n0 \\+ 1 >= l", corollary_lift, digit_square(2, 17), PHI_2N1, 1, 0,
                               1, 2, 3)
        self.assertRaises(ApproxError, corollary_lift, polynomial(3, [0, 0, 1]), identity_scale(), 0, 0, 0, 1, 2)


class TestDerivativeBridge(unittest.TestCase):

    def test_approx_from_derivative(self):
        cert = from_derivative_mod_ps(polynomial(7, [-2, 0, 1]), 1, 3)
        self.assertEqual(cert.h, 0)
        self.assertEqual(cert.l, 1)
        self.assertDictEqual(cert.delta, {1: 6, 2: 6})
        self.assertDictEqual(cert.details, {'s': 1, 'derivative': 6, 'delta': 6})

    def test_approx_from_derivative_oracle(self):
        q = polynomial(7, [-2, 0, 1])
        cert = from_derivative_mod_ps(q, 1, 3, derivative=q.derivative(), n_hi=3)
        self.assertDictEqual(cert.delta, {1: 6, 2: 6, 3: 6})

    def test_approx_from_derivative_p2(self):
        cert = from_derivative_mod_ps(polynomial(2, [-17, 0, 1]), 2, 1)
        self.assertEqual(cert.h, 1)
        self.assertEqual(cert.l, 2)
        self.assertDictEqual(cert.delta, {2: 1, 3: 1})
        self.assertEqual(cert.details['derivative'], 2)

    @parameterized.expand([
        ('zero_derivative', polynomial(3, [0, 0, 1]), 1, 0),
        ('exponent_zero', polynomial(7, [-2, 0, 1]), 0, 3),
        ('valuation_too_high', polynomial(2, [-17, 0, 1]), 1, 1),
    ])
    def test_approx_from_derivative_invalid(self, _, f, s, u):
        self.assertRaises(ApproxError, from_derivative_mod_ps, f, s, u)


if __name__ == '__main__':
    unittest.main()
