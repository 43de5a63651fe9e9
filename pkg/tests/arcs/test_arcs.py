#!/usr/bin/env python
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.

from gentle_thick import arcs
from gentle_thick import complexes
from gentle_thick import errors
from gentle_thick import parser
from gentle_thick import stabilization
from gentle_thick import strings
from tests import base
from tests.base import mock


class TestArcs(base.BaseTestCase):

    def setUp(self):
        super(TestArcs, self).setUp()
        self.alg = base.load_algebra('exm1')
        self.A, self.B, self.C, self.D = [
            arcs.Arc(self.alg, parser.parse_string(self.alg, literal))
            for literal in ('e@2', 'd c^-', 'e@4', 'b a^-')]

    def test_kinds(self):
        for arc in (self.A, self.B, self.C, self.D):
            self.assertEqual(arcs.EXCEPTIONAL, arc.kind)
            self.assertEqual(1, arc.total)
            self.assertFalse(arc.closed)
        self.assertEqual(('a', 'b'), self.A.ends)

    def test_kind_from_hom(self):
        self.assertEqual(arcs.EXCEPTIONAL, arcs.kind_from_hom(1))
        self.assertEqual(arcs.SPHERELIKE, arcs.kind_from_hom(2))
        self.assertEqual(arcs.CROSSING, arcs.kind_from_hom(5))

    def test_shared_endpoints_checked(self):
        found = arcs.intersections(self.alg, self.A, self.B, check=True)
        self.assertEqual(0, found.interior)
        self.assertEqual([(0, 0), (1, 1)], found.shared_endpoints)

    def test_interior_checked(self):
        found = arcs.intersections(self.alg, self.A, self.D, check=True)
        self.assertEqual(1, found.interior)
        self.assertEqual([], found.shared_endpoints)

    def test_self_intersections(self):
        found = arcs.intersections(self.alg, self.B, self.B, check=True)
        self.assertEqual((0, []), tuple(found))

    def test_collections(self):
        self.assertTrue(arcs.is_arc_collection(self.alg, [self.A, self.B]))
        self.assertFalse(arcs.is_arc_collection(self.alg, [self.A, self.D]))
        self.assertTrue(arcs.is_arc_collection(self.alg, [self.A, self.C]))

    def test_connected(self):
        self.assertTrue(arcs.is_connected(self.alg, [self.A, self.B]))
        self.assertFalse(arcs.is_connected(self.alg, [self.A, self.C]))
        self.assertTrue(arcs.is_connected(self.alg, []))

    def test_decompose_self_crossing(self):
        s = parser.parse_string(self.alg, 'a b^- c d^- a b^- c')
        arc = arcs.Arc(self.alg, s)
        self.assertEqual(arcs.CROSSING, arc.kind)
        self.assertEqual(1, arc.self_crossings)
        parts = arcs.decompose_string(self.alg, s)
        self.assertEqual([['a', 'b^-', 'c'], ['a', 'b^-', 'c']],
                         [[str(l) for l in part.letters] for part in parts])

    def test_reduce_crossing_pair(self):
        reduction = arcs.reduce_to_collection(
            self.alg, [self.A.string, self.D.string])
        self.assertEqual(1, reduction.measures[0])
        self.assertEqual(0, reduction.measures[-1])
        found = [arcs.Arc(self.alg, s) for s in reduction.strings]
        self.assertTrue(arcs.is_arc_collection(self.alg, found))


class TestGlue(base.BaseTestCase):

    def setUp(self):
        super(TestGlue, self).setUp()
        self.alg = base.load_algebra('a2')
        self.e1 = parser.parse_string(self.alg, 'e@1')
        self.e2 = parser.parse_string(self.alg, 'e@2')

    def test_glue(self):
        results = arcs.glue(self.alg, self.e1, arcs.LEFT, self.e2, arcs.LEFT)
        self.assertEqual(1, len(results))
        self.assertEqual('a', str(results[0].string))
        self.assertEqual(1, results[0].shift)
        self.assertIsNone(results[0].certificate)

    def test_glue_certified(self):
        results = arcs.glue(self.alg, self.e1, arcs.LEFT, self.e2, arcs.LEFT,
                            certify=True)
        self.assertEqual(arcs.Certificate('t->s', 0, 0),
                         results[0].certificate)

    def test_different_marked_points(self):
        self.assertEqual([], arcs.glue(self.alg, self.e1, arcs.RIGHT,
                                       self.e2, arcs.LEFT))

    def test_glue_with_inverse_cancels(self):
        results = arcs.glue(self.alg, self.e1, arcs.LEFT, self.e1,
                            arcs.LEFT)
        self.assertIsNone(results[0].string)

    def test_classify(self):
        a = parser.parse_string(self.alg, 'a')
        self.assertEqual(arcs.EXCEPTIONAL, arcs.classify_arc(self.alg, a))
        self.assertEqual([a], arcs.decompose_string(self.alg, a))

    def test_reduce_collection_unchanged(self):
        a = parser.parse_string(self.alg, 'a')
        reduction = arcs.reduce_to_collection(self.alg, [a, self.e1])
        self.assertEqual(['a', 'e@1'], [str(s) for s in reduction.strings])
        self.assertEqual([0], reduction.measures)

    def test_power_needs_spherelike(self):
        a = parser.parse_string(self.alg, 'a')
        self.assertRaises(errors.PreconditionError, arcs.power_string,
                          self.alg, a)
        self.assertEqual(a, arcs.power(self.alg, a, 1))
        self.assertRaises(errors.PreconditionError, arcs.power,
                          self.alg, a, 0)


class TestStabilization(base.BaseTestCase):

    def test_increasing(self):
        self.assertEqual((stabilization.INCREASING, 2, 2),
                         stabilization.classify_sequence([1, 2, 4, 6, 8]))

    def test_constant(self):
        self.assertEqual((stabilization.CONSTANT, 0, 1),
                         stabilization.classify_sequence([3, 3, 3]))
        self.assertEqual((stabilization.CONSTANT, 0, 1),
                         stabilization.classify_sequence([5]))

    def test_irregular(self):
        self.assertEqual((stabilization.IRREGULAR, -2, 1),
                         stabilization.classify_sequence([4, 2]))

    def test_slope_outside_dichotomy(self):
        self.assertEqual((stabilization.IRREGULAR, 3, 1),
                         stabilization.classify_sequence([1, 4, 7]))
        self.assertEqual((stabilization.INCREASING, 1, 3),
                         stabilization.classify_sequence([2, 2, 2, 3, 4]))


class TestPowers(base.BaseTestCase):

    def setUp(self):
        super(TestPowers, self).setUp()
        self.alg = base.load_algebra('exm2')
        self.s = parser.parse_string(self.alg, 'c.a b')

    def test_spherelike_at_trivial_point(self):
        arc = arcs.Arc(self.alg, self.s)
        self.assertEqual(arcs.SPHERELIKE, arc.kind)
        self.assertEqual(('(3)', '(3)'), arc.ends)

    def test_power_string(self):
        prefix, loop, suffix, _ = arcs.power_string(self.alg, self.s)
        self.assertEqual(['c.a'], [str(l) for l in prefix])
        self.assertEqual(['b.c.a'], [str(l) for l in loop])
        self.assertEqual(['b'], [str(l) for l in suffix])
        self.assertEqual('c.a b.c.a b.c.a b',
                         str(arcs.power(self.alg, self.s, 3)))

    def test_stabilization_wiring(self):
        P = complexes.stalk_complex(self.alg, '1', 0, 2)
        decomposition = arcs.power_string(self.alg, self.s)
        with mock.patch.object(stabilization, 'power_string',
                               return_value=decomposition), \
                mock.patch.object(stabilization.oracle, 'hom_total',
                                  side_effect=[0, 1, 3, 5, 7, 9]) as hom:
            report = stabilization.stabilization_check(self.alg, self.s, P)
        self.assertEqual(stabilization.StabilizationReport(
            [0, 1, 3, 5, 7, 9], stabilization.INCREASING, 2, 2), report)
        self.assertEqual(6, hom.call_count)
        self.assertIs(P, hom.call_args[0][1])

    def test_dichotomy_on_short_strings(self):
        tests = sorted(strings.enumerate_strings(self.alg, 2), key=str)[:10]
        self.assertEqual(10, len(tests))
        for t in tests:
            P = complexes.string_to_complex(self.alg, t, 2)
            report = stabilization.stabilization_check(self.alg, self.s, P)
            self.assertEqual(6, len(report.values))
            self.assertIn(report.verdict, (stabilization.CONSTANT,
                                           stabilization.INCREASING),
                          "{0}: {1}".format(t, report.values))
