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

from gentle_thick import errors
from gentle_thick.parallel import concurrent
from gentle_thick import parser
from gentle_thick import strings
from gentle_thick import surface
from tests import base


class TestSurfaceModel(base.BaseTestCase):

    def test_marked_points(self):
        model = surface.surface_model(base.load_algebra('exm2'))
        self.assertEqual(['b.c.a', '(3)', 'e.f.d', '(5)'],
                         model.marked_points())
        self.assertEqual(5, len(model.thread_named('b.c.a')))

    def test_marked_points_a2(self):
        model = surface.surface_model(base.load_algebra('a2'))
        self.assertEqual(['a', '(1)', '(2)'], model.marked_points())

    def test_isolated_vertex(self):
        model = surface.surface_model(base.load_algebra('one-vertex'))
        self.assertEqual(['(1)', "(1)'"], model.marked_points())

    def test_unknown_marked_point(self):
        model = surface.surface_model(base.load_algebra('a2'))
        self.assertRaises(errors.PreconditionError, model.thread_named, 'x')

    def test_cached(self):
        alg = base.load_algebra('a2')
        self.assertIs(surface.surface_model(alg),
                      surface.surface_model(alg))

    def test_cached_across_workers(self):
        alg = base.load_algebra('a3')

        @concurrent
        def model_of(alg, n):
            return surface.surface_model(alg)

        models = model_of(alg=alg, concurrent=[{'n': n} for n in range(8)],
                          n_workers=4)
        self.assertEqual(8, len(models))
        self.assertEqual(1, len(set(id(m) for m in models)))

    def test_string_ends(self):
        alg = base.load_algebra('exm1')
        model = surface.surface_model(alg)
        ends = dict((literal, model.string_curve(
            parser.parse_string(alg, literal)).ends)
            for literal in ('e@2', 'd c^-', 'e@4', 'b a^-'))
        self.assertEqual(('a', 'b'), ends['e@2'])
        self.assertEqual(('a', 'b'), ends['d c^-'])
        self.assertEqual(('c', 'd'), ends['e@4'])
        self.assertEqual(('c', 'd'), ends['b a^-'])

    def test_curves_give_back_strings(self):
        alg = base.load_algebra('exm2')
        model = surface.surface_model(alg)
        for s in strings.enumerate_strings(alg, 3):
            for graded in (s, s.shift(2)):
                self.assertEqual(graded,
                                 model.string_curve(graded).to_string())

    def test_reversed_curve_is_inverse(self):
        alg = base.load_algebra('exm2')
        model = surface.surface_model(alg)
        s = parser.parse_string(alg, 'c d e@1')
        curve = model.string_curve(s).reversed()
        self.assertEqual(s.inverse(), curve.to_string())


class TestCrossings(base.BaseTestCase):

    def setUp(self):
        super(TestCrossings, self).setUp()
        self.alg = base.load_algebra('exm1')
        self.model = surface.surface_model(self.alg)

    def curve(self, literal):
        return self.model.string_curve(parser.parse_string(self.alg,
                                                           literal))

    def test_shared_endpoints(self):
        x, y = self.curve('e@2'), self.curve('d c^-')
        self.assertEqual([], surface.interior_crossings(x, y))
        self.assertEqual([(0, 0), (1, 1)], surface.shared_endpoints(x, y))

    def test_interior_crossing(self):
        x, y = self.curve('e@2'), self.curve('b a^-')
        self.assertEqual([surface.Crossing(0, 2)],
                         surface.interior_crossings(x, y))
        self.assertEqual([], surface.shared_endpoints(x, y))

    def test_no_self_crossings(self):
        self.assertEqual(0, surface.self_crossing_count(self.curve('d c^-')))

    def test_concatenate_mismatch(self):
        self.assertIsNone(surface.concatenate(self.curve('e@2'),
                                              self.curve('e@4')))

    def test_concatenate_cancels(self):
        x = self.curve('e@2')
        self.assertTrue(surface.concatenate(x, x.reversed()).is_zero)

    def test_resolve_crossing(self):
        x, y = self.curve('e@2'), self.curve('b a^-')
        crossing = surface.interior_crossings(x, y)[0]
        forward, back = surface.resolve_crossing(x, y, crossing)
        self.assertEqual(('a', 'd'), forward.ends)
        self.assertEqual(('a', 'c'), back.ends)
