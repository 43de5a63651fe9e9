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
from gentle_thick import errors
from gentle_thick import parser
from gentle_thick import pointed
from gentle_thick import strings
from tests import base


class TestPointed(base.BaseTestCase):

    def setUp(self):
        super(TestPointed, self).setUp()
        self.alg = base.load_algebra('a2')
        self.collection = [parser.parse_string(self.alg, 'e@1'),
                           parser.parse_string(self.alg, 'e@2')]

    def test_already_pointed(self):
        result = pointed.to_pointed(self.alg, self.collection, 'a')
        self.assertTrue(result.is_pointed())
        self.assertEqual([], result.steps)
        self.assertEqual([pointed.HalfEdge(0, arcs.LEFT),
                          pointed.HalfEdge(1, arcs.LEFT)],
                         sorted(result.half_edges()))

    def test_rewrite(self):
        result = pointed.to_pointed(self.alg, self.collection, '(1)')
        self.assertEqual(['e@1', 'a'], [str(s) for s in result.strings])
        self.assertEqual([pointed.Rewrite('a', 1, 0)], result.steps)
        self.assertTrue(result.is_pointed())

    def test_unknown_basepoint(self):
        self.assertRaises(errors.PreconditionError, pointed.to_pointed,
                          self.alg, self.collection, '(3)')

    def test_regions_all_terminal(self):
        result = pointed.to_pointed(self.alg, self.collection, 'a')
        report = result.regions_and_tau()
        self.assertEqual({0: pointed.TERMINAL, 1: pointed.TERMINAL,
                          2: pointed.TERMINAL}, report.kinds)
        self.assertEqual({}, report.tau)
        self.assertEqual(arcs.EXCEPTIONAL, result.arc_kind(0))

    def test_psi_needs_cyclic_region(self):
        result = pointed.to_pointed(self.alg, self.collection, 'a')
        self.assertRaises(errors.PreconditionError, pointed.psi_path,
                          result, 0)
        self.assertRaises(errors.PreconditionError, pointed.psi_path,
                          result, 7)

    def test_collection_graph(self):
        alg = base.load_algebra('exm1')
        model_curves = [arcs.curve_of(alg, parser.parse_string(alg, s))
                        for s in ('e@2', 'e@4')]
        graph = pointed.collection_graph(model_curves)
        self.assertEqual(set(['a', 'b', 'c', 'd']), set(graph.nodes()))
        self.assertEqual(2, graph.number_of_edges())

    def test_rerouted_duplicate_dropped(self):
        collection = self.collection + [parser.parse_string(self.alg, 'a')]
        result = pointed.to_pointed(self.alg, collection, '(1)')
        self.assertEqual(['e@1', 'a'], [str(s) for s in result.strings])
        self.assertEqual([pointed.Rewrite('(2)', 1, 2, True)], result.steps)
        self.assertTrue(result.is_pointed())


class TestRegions(base.BaseTestCase):

    def pointed_at(self, name, literal, basepoint):
        alg = base.load_algebra(name)
        s = parser.parse_string(alg, literal)
        return alg, pointed.to_pointed(alg, [s], basepoint)

    def test_spherelike_loop(self):
        alg, result = self.pointed_at('exm1', 'a b^- c', 'd')
        self.assertEqual([], result.steps)
        self.assertEqual(arcs.SPHERELIKE, result.arc_kind(0))
        self.assertEqual([pointed.HalfEdge(0, arcs.LEFT),
                          pointed.HalfEdge(0, arcs.RIGHT)],
                         result.half_edges())
        report = result.regions_and_tau()
        self.assertEqual({0: pointed.TERMINATING, 1: pointed.CYCLIC,
                          2: pointed.TERMINAL}, report.kinds)
        self.assertEqual({0: 2, 1: 1}, report.tau)
        self.assertEqual({0: [0, 2], 1: [1, 1]}, report.orbits)

    def test_psi_string_and_band(self):
        alg, result = self.pointed_at('exm1', 'a b^- c', 'd')
        psi = pointed.psi_path(result, 0)
        self.assertEqual(pointed.STRING, psi.tag)
        self.assertEqual('a b^- c', str(psi.string))
        self.assertIsNone(psi.loop)

        psi = pointed.psi_path(result, 1)
        self.assertEqual(pointed.BAND, psi.tag)
        self.assertEqual([1, 1], psi.orbit)
        self.assertTrue(strings.band_equiv(
            strings.grade_band(psi.loop),
            parser.parse_band(alg, '[a b^- c d^-]')))

    def test_psi_ungraded_loop(self):
        _, result = self.pointed_at('related-cycle', 'x y', 'z')
        self.assertEqual([pointed.HalfEdge(0, arcs.RIGHT),
                          pointed.HalfEdge(0, arcs.LEFT)],
                         result.half_edges())
        self.assertEqual(pointed.CYCLIC, result.regions_and_tau().kinds[1])
        self.assertEqual('x y', str(pointed.psi_path(result, 0).string))
        psi = pointed.psi_path(result, 1)
        self.assertEqual(pointed.UNGRADED_LOOP, psi.tag)
        self.assertEqual(3, strings.band_degree(psi.loop))
