# -*- coding: utf-8 -*-
#
#    PadLift - Hensel lifting for continuous p-adic functions
#    Unit Tests for the generalized Hensel lift
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

from padlift.hensel import *
from tests.test_custom import CustomAssertions


PHI_2N1 = ScaleFn([1], 2)


class TestCorrectionSets(unittest.TestCase):

    def test_hensel_s_set(self):
        s = SSet(0, [5, 4], 3, PHI_2N1)
        self.assertListEqual(s.members, [4, 5])
        self.assertEqual(len(s), 2)
        self.assertIn(4, s)
        self.assertNotIn(0, s)
        self.assertEqual(s, [5, 4])
        self.assertEqual(s, SSet(0, [4, 5], 3, PHI_2N1))
        self.assertNotEqual(s, SSet(1, [4, 5], 3, PHI_2N1))
        self.assertEqual(repr(s), 'SSet(n=0, [4, 5])')

    @parameterized.expand([
        ('duplicates', [1, 1]),
        ('too_small', [1]),
        ('too_large', [1, 2, 3]),
        ('zero_member', [0, 1]),
        ('out_of_block', [1, 9]),
    ])
    def test_hensel_s_set_invalid(self, _, members):
        self.assertRaises(HenselError, SSet, 0, members, 3, PHI_2N1)

    def test_hensel_full_s_set(self):
        self.assertListEqual(full_s_set(2, 7, identity_scale()).members, [1, 2, 3, 4, 5, 6])
        self.assertListEqual(full_s_set(0, 2, identity_scale()).members, [1])

    @parameterized.expand([
        ('s12', [1, 2], True),
        ('s36', [3, 6], False),
        ('s45', [4, 5], True),
        ('s47', [4, 7], False),
    ])
    def test_hensel_check_s_condition(self, _, S, expected):
        self.assertEqual(check_s_condition(digit_linear(3, 1), PHI_2N1, 0, 0, 2, S), expected)

    def test_hensel_check_s_condition_range(self):
        self.assertRaisesRegex(HenselError, "must be smaller", check_s_condition, digit_linear(3, 1), PHI_2N1, 0,
                               0, 9, [1, 2])

    def test_hensel_discover_S(self):
        f = digit_linear(3, 1)
        self.assertEqual(discover_S(f, PHI_2N1, 0, 0, 2, 0), [1, 2])
        self.assertEqual(discover_S(f, PHI_2N1, 0, 1, 2, 0, m=20), [1, 2])
        self.assertEqual(discover_S(f, PHI_2N1, 0, 1, 2, 0, mode='exhaustive'), [1, 2])
        self.assertEqual(discover_S(digit_cube(2), PHI_2N1, 0, 0, 2, 0), [1, 2, 3, 4])

    def test_hensel_discover_S_impossible(self):
        try:
            discover_S(constant(3, 0), PHI_2N1, 0, 0, 0, 0)
        except NoSSet as e:
            self.assertEqual(e.n, 0)
            self.assertEqual(e.missing_class, 1)
            self.assertEqual(e.m, 0)
        else:
            self.fail("NoSSet not raised")

    def test_hensel_discover_S_backtracking(self):
        # b(m + 27i) mod 3 at the points m = 0, 9, 18: i=1 -> (1, 1, 1), i=2 -> (1, 2, 2), i=3 -> (2, 1, 1)
        table = {27: 1, 54: 1, 81: 2, 36: 1, 63: 2, 90: 1, 45: 1, 72: 2, 99: 1}
        f = FunctionOracle(3, lambda m, K: 9 * table.get(m, 0), name='block_table')
        phi = ScaleFn([1, 2, 4], 1)
        self.assertEqual(discover_S(f, phi, 0, 1, 0, 0), [1, 3])
        s = discover_S(f, phi, 0, 1, 0, 0, mode='exhaustive')
        self.assertEqual(s, [2, 3])
        for m in [0, 9, 18]:
            self.assertTrue(check_s_condition(f, phi, 0, 1, m, s))

    def test_hensel_discover_S_no_common_choice(self):
        # every class is attained at each point, but no pair of block values fits both points
        table = {27: 1, 54: 2, 81: 1, 36: 1, 63: 1, 90: 2, 45: 2, 72: 1, 99: 1}
        f = FunctionOracle(3, lambda m, K: 9 * table.get(m, 0), name='block_table')
        phi = ScaleFn([1, 2, 4], 1)
        self.assertRaisesRegex(NoSSet, "no choice of block values", discover_S, f, phi, 0, 1, 0, 0, 'exhaustive')

    def test_hensel_discover_S_unknown_mode(self):
        self.assertRaises(HenselError, discover_S, digit_linear(3, 1), PHI_2N1, 0, 0, 2, 0, 'random')

    def test_hensel_admissible_m(self):
        self.assertListEqual(list(admissible_m(PHI_2N1, 3, 2, 0, 1)), list(range(2, 81, 9)))
        self.assertListEqual(list(admissible_m(PHI_2N1, 3, 2, 0, 0)), [2])


class TestLiftProblem(unittest.TestCase):

    def test_hensel_problem_s_sets(self):
        f = digit_linear(3, 1)
        lp = LiftProblem(f, PHI_2N1, 0, 0, 2, 2, s_strategy='explicit', s_sets=[1, 2])
        self.assertEqual(lp.s_set(1), SSet(1, [1, 2], 3, PHI_2N1))
        self.assertRaisesRegex(HenselError, "No S set given", lp.s_set, 2)
        lp = LiftProblem(f, PHI_2N1, 0, 0, 2, 2, s_strategy='explicit', s_sets={'0': [4, 5], '1': [1, 2]})
        self.assertEqual(lp.s_set(0), [4, 5])
        self.assertIsNone(LiftProblem(f, PHI_2N1, 0, 0, 2, 2).s_set(0))
        self.assertEqual(LiftProblem(f, PHI_2N1, 0, 0, 2, 2, s_strategy='full').s_set(1), [1, 2])

    @parameterized.expand([
        ('u_not_a_root', dict(u=1), "not 0 modulo"),
        ('u_too_large', dict(u=11), "must be smaller"),
        ('n_max_below_n0', dict(n0=1, u=2, n_max=0), "smaller than n0"),
        ('negative_h', dict(h=-1), "nonnegative"),
        ('bool_u', dict(u=True), "nonnegative"),
        ('unknown_strategy', dict(s_strategy='greedy'), "Unknown S strategy"),
        ('unknown_mode', dict(mode='random'), "Unknown mode"),
        ('explicit_without_sets', dict(s_strategy='explicit'), "needs S sets"),
    ])
    def test_hensel_problem_invalid(self, _, changes, message):
        kwargs = dict(f=digit_linear(3, 1), phi=PHI_2N1, h=0, n0=0, u=2, n_max=2)
        kwargs.update(changes)
        self.assertRaisesRegex(HenselError, message, LiftProblem, **kwargs)

    def test_hensel_problem_invalid_explicit_set(self):
        self.assertRaises(HenselError, LiftProblem, digit_linear(3, 1), PHI_2N1, 0, 0, 2, 2, 'explicit', [1, 9])


class TestLiftStep(unittest.TestCase):

    def test_hensel_lift_step(self):
        f = digit_linear(3, 1)
        self.assertTupleEqual(lift_step(f, PHI_2N1, 0, 0, 2, [1, 2]), (20, 2))
        self.assertTupleEqual(lift_step(f, PHI_2N1, 0, 0, 2, [4, 5]), (47, 5))
        self.assertTupleEqual(lift_step(f, PHI_2N1, 0, 1, 20, [1, 2]), (182, 2))
        self.assertTupleEqual(lift_step(polynomial(7, [-2, 0, 1]), identity_scale(), 0, 0, 3, range(1, 7)),
                              (10, 1))

    def test_hensel_lift_step_no_digit(self):
        try:
            lift_step(digit_linear(3, 1), PHI_2N1, 0, 0, 2, [3, 6])
        except NoLiftDigit as e:
            self.assertEqual(e.l, 0)
            self.assertEqual(e.u_l, 2)
            self.assertListEqual(e.members, [3, 6])
        else:
            self.fail("NoLiftDigit not raised")

    def test_hensel_lift_step_multiple_digits(self):
        f = digit_linear(3, 1)
        self.assertTupleEqual(lift_step(f, PHI_2N1, 0, 0, 2, [2, 5]), (20, 2))
        try:
            lift_step(f, PHI_2N1, 0, 0, 2, [2, 5], strict=True)
        except MultipleLiftDigits as e:
            self.assertListEqual(e.digits, [2, 5])
        else:
            self.fail("MultipleLiftDigits not raised")

    @parameterized.expand([
        ('iterate_too_large', 9, [1, 2], "must be smaller"),
        ('iterate_not_a_root', 1, [1, 2], "is not 0 modulo"),
        ('block_value_too_large', 2, [1, 9], "does not fit block"),
    ])
    def test_hensel_lift_step_invalid(self, _, u_l, S, message):
        self.assertRaisesRegex(HenselError, message, lift_step, digit_linear(3, 1), PHI_2N1, 0, 0, u_l, S)

    def test_hensel_lift_step_inconsistent_oracle(self):
        # output changes with every call
        calls = []

        def unstable(m, K):
            calls.append(m)
            return 3 * len(calls) if m else 0

        f = FunctionOracle(3, unstable, name='unstable')
        self.assertRaises(HenselError, lift_step, f, identity_scale(), 0, 0, 0, [1, 2], K=3)


class TestLift(unittest.TestCase, CustomAssertions):

    @parameterized.expand([
        ('digit_linear_s12', digit_linear(3, 1), PHI_2N1, 0, 0, 2, 2, 'explicit', [1, 2], 'trajectory',
         [2, 20, 182], [2, 2]),
        ('digit_linear_s45', digit_linear(3, 1), PHI_2N1, 0, 0, 2, 2, 'explicit', [4, 5], 'trajectory',
         [2, 47, 452], [5, 5]),
        ('digit_linear_per_level', digit_linear(3, 1), PHI_2N1, 0, 0, 2, 2, 'explicit', {0: [4, 5], 1: [1, 2]},
         'trajectory', [2, 47, 209], [5, 2]),
        ('digit_linear_auto', digit_linear(3, 1), PHI_2N1, 0, 0, 2, 2, 'auto', None, 'trajectory',
         [2, 20, 182], [2, 2]),
        ('digit_linear_exhaustive', digit_linear(3, 1), PHI_2N1, 0, 0, 2, 2, 'auto', None, 'exhaustive',
         [2, 20, 182], [2, 2]),
        ('digit_cube', digit_cube(2), PHI_2N1, 0, 0, 2, 2, 'auto', None, 'trajectory', [2, 52, 1302], [2, 2]),
        ('polynomial_p7', polynomial(7, [-2, 0, 1]), identity_scale(), 0, 0, 3, 2, 'full', None, 'trajectory',
         [3, 10, 108], [1, 2]),
        ('digit_square_p2', digit_square(2, 17), PHI_2N1, 1, 1, 1, 4, 'full', None, 'trajectory',
         [1, 1, 65, 65], [0, 1, 0]),
    ])
    def test_hensel_lift(self, _, f, phi, h, n0, u, n_max, strategy, s_sets, mode, iterates, chosen):
        trace = lift(LiftProblem(f, phi, h, n0, u, n_max, s_strategy=strategy, s_sets=s_sets, mode=mode))
        self.assertTrue(trace)
        self.assertListEqual(trace.iterates, iterates)
        self.assertListEqual(trace.chosen, chosen)
        self.assertEqual(trace.level, n_max)
        self.assertEqual(f.residue(trace.root, trace.certification_level), 0)
        self.assertTrue(all(r == 0 for r in trace.certification))
        self.assertTrue(verify_trace(trace))

    def test_hensel_lift_trace_dict(self):
        trace = lift(LiftProblem(digit_linear(3, 1), PHI_2N1, 0, 0, 2, 2, s_strategy='explicit', s_sets=[1, 2]))
        self.assertDictEqualExt(trace.as_dict(), {
            'function': {'name': 'digit_linear', 'p': '3', 'params': {'a': '1'}},
            'scale': {'table': [1], 'tail_slope': 2},
            'p': 3, 'h': 0, 'n0': 0, 'u': '2', 'n_max': 2,
            's_strategy': 'explicit', 'mode': 'trajectory',
            'iterates': ['2', '20', '182'],
            'chosen_i': ['2', '2'],
            's_sets': {'0': ['1', '2'], '1': ['1', '2']},
            'certification': ['0', '0', '0'],
            'root': '182', 'root_digits': [2, 0, 2, 0, 2, 0],
            'certification_level': 3,
            'status': 'success', 'failure': None,
        })
        self.assertEqual(json.loads(trace.as_json())['root'], '182')
        self.assertEqual(trace.root_precision, 6)

    def test_hensel_lift_failure(self):
        trace = lift(LiftProblem(digit_linear(3, 1), PHI_2N1, 0, 0, 2, 2, s_strategy='explicit', s_sets=[3, 6]))
        self.assertFalse(trace)
        self.assertIsInstance(trace.status, StepFailure)
        self.assertEqual(trace.status.n, 0)
        self.assertEqual(trace.root, 2)
        self.assertEqual(trace.level, 0)
        d = trace.as_dict()
        self.assertEqual(d['status'], 'failure')
        self.assertEqual(d['failure']['n'], 0)
        self.assertIn('correction condition', d['failure']['reason'])

    def test_hensel_lift_failure_no_s_set(self):
        trace = lift(LiftProblem(constant(3, 0), PHI_2N1, 0, 0, 0, 2))
        self.assertFalse(trace.success)
        self.assertIn('No S(0) set found', trace.status.reason)

    def test_hensel_lift_zero_steps(self):
        trace = lift(LiftProblem(digit_linear(3, 1), PHI_2N1, 0, 1, 20, 1))
        self.assertTrue(trace)
        self.assertListEqual(trace.iterates, [20])
        self.assertEqual(trace.certification_level, 2)

    def test_hensel_classic_lift(self):
        trace = classic_lift(polynomial(7, [-2, 0, 1]), 3, 1, 2)
        self.assertEqual(trace.root, 108)
        self.assertEqual(trace.root_precision, 3)
        self.assertEqual(classic_lift(polynomial(7, [-2, 0, 1]), 4, 1, 2).root, 235)
        self.assertRaises(HenselError, classic_lift, polynomial(7, [-2, 0, 1]), 3, 0, 2)

    def test_hensel_lift_random_digit_functions(self):
        rng = random.Random(31)
        for _ in range(20):
            p = rng.choice([2, 3, 5, 7])
            a = rng.randint(0, 10 ** 6)
            f = digit_linear(p, a)
            u = (-a) % p + p * rng.randrange(p)
            trace = lift(LiftProblem(f, PHI_2N1, 0, 0, u, 3))
            self.assertTrue(trace, trace.status)
            self.assertEqual(f.residue(trace.root, 4), 0)
            self.assertEqual(trace.root % p ** 2, u)
            self.assertTrue(verify_trace(trace))


class TestLiftVerification(unittest.TestCase):

    def setUp(self):
        self.trace = lift(LiftProblem(digit_linear(3, 1), PHI_2N1, 0, 0, 2, 2, s_strategy='explicit',
                                      s_sets=[1, 2]))

    def test_hensel_verify_trace_tampered_root(self):
        self.trace.iterates[2] = 183
        report = verify_trace(self.trace)
        self.assertFalse(report)
        self.assertDictEqual(report.counterexample, {'level': 2})

    def test_hensel_verify_trace_tampered_set(self):
        self.trace.s_sets[0] = [1, 4]
        report = verify_trace(self.trace)
        self.assertFalse(report)
        self.assertIn("not in S(0)", report.reason)

    def test_hensel_verify_trace_tampered_start(self):
        self.trace.iterates[0] = 5
        self.assertFalse(verify_trace(self.trace))

    def test_hensel_uniqueness_trivial(self):
        report = verify_uniqueness_condition(digit_linear(3, 1), PHI_2N1, 0, 2, 0, 2)
        self.assertTrue(report)
        self.assertDictEqual(report.details, {'trivial': True})

    def test_hensel_uniqueness_pass(self):
        self.assertTrue(verify_uniqueness_condition(digit_square(2, 17), PHI_2N1, 1, 1, 1, 3))

    def test_hensel_uniqueness_fail(self):
        report = verify_uniqueness_condition(digit_linear(3, 1), PHI_2N1, 1, 0, 0, 2)
        self.assertFalse(report)
        self.assertDictEqual(report.counterexample, {'m': 9, 'b': 1})

    def test_hensel_find_start_points(self):
        self.assertListEqual(find_start_points(polynomial(7, [-2, 0, 1]), identity_scale(), 0, 0), [3, 4])
        self.assertListEqual(find_start_points(digit_linear(3, 1), PHI_2N1, 0, 0), [2, 5, 8])
        self.assertListEqual(find_start_points(digit_square(2, 17), PHI_2N1, 1, 1), list(range(1, 16, 2)))


if __name__ == '__main__':
    unittest.main()
