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

import random

from testtools import matchers

from gentle_thick import arcs
from gentle_thick import complexes
from gentle_thick import errors
from gentle_thick import formatter
from gentle_thick import parser
from gentle_thick import pointed
from gentle_thick import strings
from gentle_thick import surface
from gentle_thick import thick
from tests import base


class TestMembership(base.BaseTestCase):

    def setUp(self):
        super(TestMembership, self).setUp()
        self.alg = base.load_algebra('a2')
        self.e1, self.e2, self.a = [
            parser.parse_string(self.alg, literal)
            for literal in ('e@1', 'e@2', 'a')]

    def test_concatenation(self):
        result = thick.is_generated(self.alg, self.a, [self.e1, self.e2])
        self.assertEqual(thick.GENERATED, result.status)
        self.assertThat(result.factorization, matchers.HasLength(2))
        self.assertTrue(result.factorization.verify(self.alg,
                                                    [self.e1, self.e2]))
        self.assertEqual("1- 0+", str(result.factorization))

    def test_member_of_collection(self):
        result = thick.is_generated(self.alg, self.e1, [self.e1, self.a])
        self.assertEqual(thick.GENERATED, result.status)
        self.assertThat(result.factorization, matchers.HasLength(1))

    def test_missing_marked_point(self):
        result = thick.is_generated(self.alg, self.e2, [self.e1])
        self.assertEqual(thick.NOT_GENERATED, result.status)
        self.assertEqual("an end is not a marked point of the collection",
                         result.reason)

    def test_empty_collection(self):
        result = thick.is_generated(self.alg, self.e2, [])
        self.assertEqual(thick.NOT_GENERATED, result.status)

    def test_crossing_target(self):
        alg = base.load_algebra('exm1')
        target = parser.parse_string(alg, 'b a^-')
        collection = [parser.parse_string(alg, 'e@2'),
                      parser.parse_string(alg, 'e@1'),
                      parser.parse_string(alg, 'e@3')]
        result = thick.is_generated(alg, target, collection)
        self.assertEqual(thick.NOT_GENERATED, result.status)
        self.assertEqual("crosses arc 0", result.reason)

    def test_other_component(self):
        alg = base.load_algebra('exm1')
        collection = [parser.parse_string(alg, 'e@2'),
                      parser.parse_string(alg, 'd c^-')]
        result = thick.is_generated(alg, parser.parse_string(alg, 'e@4'),
                                    collection)
        self.assertEqual(thick.NOT_GENERATED, result.status)

    def test_not_a_lattice(self):
        alg = base.load_algebra('exm1')
        first = [parser.parse_string(alg, literal)
                 for literal in ('e@2', 'd c^-')]
        second = [parser.parse_string(alg, literal)
                  for literal in ('e@4', 'b a^-')]
        self.assertEqual(thick.NOT_GENERATED,
                         thick.leq_gen(alg, first, second).status)
        self.assertEqual(thick.NOT_GENERATED,
                         thick.leq_gen(alg, second, first).status)
        self.assertEqual(thick.NOT_GENERATED,
                         thick.is_generated(alg, second[0], first).status)

    def test_leq_and_equiv(self):
        first = [self.e1, self.e2]
        second = [self.e1, self.a]
        self.assertEqual(thick.GENERATED,
                         thick.leq_gen(self.alg, first, second).status)
        comparison = thick.equiv_gen(self.alg, first, second)
        self.assertEqual(thick.GENERATED, comparison.status)
        self.assertThat(comparison.certificates, matchers.HasLength(4))

    def test_not_leq(self):
        comparison = thick.leq_gen(self.alg, [self.e2], [self.e1])
        self.assertEqual(thick.NOT_GENERATED, comparison.status)
        self.assertEqual(self.e2, comparison.certificates[0][0])

    def test_certificates_yaml(self):
        comparison = thick.leq_gen(self.alg, [self.a], [self.e1, self.e2])
        text = formatter.certificates_to_yaml(
            [('a', 'e@1 | e@2', comparison)])
        self.assertThat(text, matchers.StartsWith('---'))
        self.assertIn('status: generated', text)


class TestBands(base.BaseTestCase):

    def setUp(self):
        super(TestBands, self).setUp()
        self.alg = base.load_algebra('exm1')
        self.band = parser.parse_band(self.alg, '[a b^- c d^-]')

    def test_only_bands(self):
        result = thick.eliminate_bands(self.alg, [self.band])
        self.assertEqual(thick.NO_STRING, result.status)
        self.assertEqual([], result.strings)

    def test_only_strings(self):
        s = parser.parse_string(self.alg, 'e@2')
        result = thick.eliminate_bands(self.alg, [s])
        self.assertEqual((thick.GENERATED, [s], []), tuple(result))

    def test_not_connected(self):
        self.assertRaises(errors.PreconditionError, thick.eliminate_bands,
                          self.alg, [parser.parse_string(self.alg, 'e@2'),
                                     parser.parse_string(self.alg, 'e@4')])

    def test_band_replaced(self):
        e1 = parser.parse_string(self.alg, 'e@1')
        result = thick.eliminate_bands(self.alg, [e1, self.band])
        self.assertEqual(thick.GENERATED, result.status)
        self.assertThat(result.strings, matchers.HasLength(2))
        self.assertEqual(e1, result.strings[0])
        self.assertFalse(any(isinstance(s, strings.GradedBand)
                             for s in result.strings))
        self.assertThat(result.replacements, matchers.HasLength(1))
        replacement = result.replacements[0]
        self.assertTrue(strings.band_equiv(self.band, replacement.band))
        self.assertEqual(e1, replacement.through)
        self.assertEqual(result.strings[1], replacement.string)


class TestPoset(base.BaseTestCase):

    def test_a2(self):
        alg = base.load_algebra('a2')
        poset = thick.poset(alg, max_letters=2, max_arcs=3)
        self.assertEqual(4, len(poset))
        self.assertEqual(['a', 'e@1', 'e@2'], poset.minimal())
        self.assertEqual(['a | e@1'], poset.maximal())
        self.assertEqual(set([('a', 'a | e@1'), ('e@1', 'a | e@1'),
                              ('e@2', 'a | e@1')]),
                         set(poset.graph.edges()))
        self.assertEqual(set(), poset.unknown)

    def test_a2_single_arcs(self):
        alg = base.load_algebra('a2')
        poset = thick.poset(alg, max_letters=2, max_arcs=1)
        self.assertEqual(3, len(poset))
        self.assertEqual([], list(poset.graph.edges()))

    def test_formatting(self):
        alg = base.load_algebra('a2')
        poset = thick.poset(alg, max_letters=2, max_arcs=2)
        dot = formatter.poset_to_dot(poset)
        self.assertThat(dot, matchers.StartsWith('digraph thick {'))
        self.assertIn('"e@1" -> "a | e@1";', dot)
        data = formatter.poset_to_dict(poset)
        self.assertEqual(['a | e@1'], data['maximal'])
        self.assertEqual('a | e@1', data['classes'][1]['name'])
        self.assertEqual(3, data['classes'][1]['collections'])

    def test_representatives_are_pointed(self):
        for name, max_arcs in (('a2', 3), ('exm1', 2)):
            alg = base.load_algebra(name)
            model = surface.surface_model(alg)
            poset = thick.poset(alg, max_letters=2, max_arcs=max_arcs)
            for cls in poset.classes.values():
                self.assertIsNotNone(cls.basepoint, cls.name)
                curves = [model.string_curve(s) for s in cls.representative]
                collection = pointed.PointedCollection(model, curves,
                                                       cls.basepoint)
                self.assertTrue(collection.is_pointed(), cls.name)

    def test_a2_basepoints(self):
        alg = base.load_algebra('a2')
        poset = thick.poset(alg, max_letters=2, max_arcs=3)
        self.assertEqual({'a': '(1)', 'a | e@1': '(1)', 'e@1': '(1)',
                          'e@2': '(2)'},
                         dict((name, cls.basepoint)
                              for name, cls in poset.classes.items()))

    def test_cone_closure(self):
        alg = base.load_algebra('a2')
        found = strings.enumerate_strings(alg, 2)
        candidates = [(s, complexes.string_to_complex(alg, s, 2))
                      for s in found]
        family = [c for _, c in candidates]
        e1, e2 = [parser.parse_string(alg, literal)
                  for literal in ('e@1', 'e@2')]
        self.assertEqual(set(arcs.string_key(s) for s in found),
                         thick.cone_closure(alg, [e1, e2], candidates,
                                            family))
        self.assertEqual(set([arcs.string_key(e1)]),
                         thick.cone_closure(alg, [e1], candidates, family))

    def test_a2_cross_checked(self):
        alg = base.load_algebra('a2')
        poset = thick.poset(alg, max_letters=4, max_arcs=3)
        self.assertEqual(4, len(poset))
        self.assertThat(poset.minimal(), matchers.HasLength(3))
        self.assertThat(poset.maximal(), matchers.HasLength(1))
        self.assertEqual([], thick.cross_check(alg, poset))


class TestRandomCollections(base.BaseTestCase):

    def setUp(self):
        super(TestRandomCollections, self).setUp()
        self.alg = base.load_algebra('exm1')
        self.rng = random.Random(0)

    def test_reduction_round_trip(self):
        crossing = [s for s in strings.enumerate_strings(self.alg, 7)
                    if arcs.Arc(self.alg, s, check=False).kind ==
                    arcs.CROSSING]
        self.assertNotEqual([], crossing)
        sample = self.rng.sample(crossing, min(10, len(crossing)))
        exhausted = 0
        for s in sample:
            reduction = arcs.reduce_to_collection(self.alg, [s])
            measures = reduction.measures
            self.assertEqual(0, measures[-1], str(s))
            self.assertTrue(all(a > b for a, b in zip(measures,
                                                      measures[1:])))
            result = thick.is_generated(self.alg, s, reduction.strings)
            if result.status == thick.EXHAUSTED:
                exhausted += 1
                continue
            self.assertEqual(thick.GENERATED, result.status, str(s))
            self.assertTrue(result.factorization.verify(self.alg,
                                                        reduction.strings))
        self.assertLess(10 * exhausted, len(sample))

    def test_pointed_forms(self):
        candidates = thick.candidate_arcs(self.alg, 3)
        subsets = thick._connected_collections(candidates, 4)
        for subset in self.rng.sample(subsets, min(10, len(subsets))):
            collection = [candidates[i].string for i in subset]
            literal = thick.collection_literal(collection)
            form = thick.pointed_form(self.alg, collection)
            self.assertIsNotNone(form, literal)
            self.assertTrue(form.is_pointed(), literal)
            self.assertEqual(
                thick.GENERATED,
                thick.equiv_gen(self.alg, collection, form.strings).status,
                literal)
            report = form.regions_and_tau()
            for k, orbit in report.orbits.items():
                self.assertEqual(len(orbit) - 1, len(set(orbit[:-1])),
                                 literal)
                if report.kinds[k] == pointed.CYCLIC:
                    self.assertEqual(k, orbit[-1])
                else:
                    self.assertEqual(pointed.TERMINATING, report.kinds[k])
                    self.assertEqual(pointed.TERMINAL,
                                     report.kinds[orbit[-1]])
