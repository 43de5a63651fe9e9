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

import itertools

from gentle_thick import complexes
from gentle_thick import errors
from gentle_thick import parser
from gentle_thick import strings
from tests import base


class TestComplexes(base.BaseTestCase):

    def setUp(self):
        super(TestComplexes, self).setUp()
        self.alg = base.load_algebra('a2')
        self.p = 3
        self.s = parser.parse_string(self.alg, 'a')
        self.X = complexes.string_to_complex(self.alg, self.s, self.p)

    def test_string_complex(self):
        self.assertEqual({0: ('1',), 1: ('2',)}, self.X.terms)
        entry = self.X.d(1)[0][0]
        self.assertEqual(['a'], [str(path) for path in entry])
        self.assertEqual([], self.X.square_violations())
        self.assertTrue(self.X.is_radical())

    def test_empty_string_is_stalk(self):
        s = parser.parse_string(self.alg, 'e@2@3')
        self.assertEqual(complexes.stalk_complex(self.alg, '2', 3, self.p),
                         complexes.string_to_complex(self.alg, s, self.p))

    def test_shift(self):
        Y = complexes.shift(self.X, 1)
        self.assertEqual((1, 2), Y.support())
        self.assertEqual({self.alg.path(['a']): 2}, Y.d(2)[0][0])
        self.assertEqual(self.X, complexes.shift(Y, -1))

    def test_direct_sum(self):
        Y = complexes.direct_sum(self.X, complexes.shift(self.X, 1))
        self.assertEqual([(0, '1'), (1, '1'), (1, '2'), (2, '2')],
                         Y.multiset())
        self.assertEqual([], Y.square_violations())

    def test_identity_cone_is_zero(self):
        f = complexes.identity_map(self.X)
        self.assertTrue(f.is_chain_map())
        self.assertTrue(complexes.mapping_cone(f).is_zero)

    def test_cone_needs_chain_map(self):
        stalk = complexes.stalk_complex(self.alg, '2', 1, self.p)
        e2 = {self.alg.path([], '2'): 1}
        f = complexes.ChainMap(stalk, self.X, {1: [[e2]]})
        self.assertFalse(f.is_chain_map())
        self.assertRaises(errors.ChainMapError, complexes.mapping_cone, f)

    def test_cone_of_path_map(self):
        # the cone of a : P2 -> P1 is the string complex of a
        P1 = complexes.stalk_complex(self.alg, '1', 0, self.p)
        P2 = complexes.stalk_complex(self.alg, '2', 0, self.p)
        f = complexes.ChainMap(P2, P1,
                               {0: [[{self.alg.path(['a']): 1}]]})
        self.assertTrue(f.is_chain_map())
        cone = complexes.mapping_cone(f)
        self.assertEqual(self.X, cone)

    def test_band_dimension(self):
        alg = base.load_algebra('exm1')
        band = parser.parse_band(alg, '[a b^- c d^-];dim=2')
        self.assertRaises(errors.PreconditionError,
                          complexes.band_to_complex, alg, band, self.p)
        tube = complexes.band_tube_complex(alg, band, 2, self.p)
        self.assertEqual(8, len(tube.multiset()))
        self.assertEqual([], tube.square_violations())

    def test_band_complex(self):
        alg = base.load_algebra('exm1')
        band = parser.parse_band(alg, '[a b^- c d^-];lambda=2')
        B = complexes.band_to_complex(alg, band, self.p)
        self.assertEqual({0: ('1', '3'), 1: ('2', '4')}, B.terms)
        self.assertTrue(B.is_radical())

    def test_elem_inverse(self):
        alg = base.load_algebra('exm2')
        x = {alg.path([], '2'): 2, alg.path(['b', 'c', 'a']): 1}
        inv = complexes.elem_inverse(alg, x, '2', 5)
        product = complexes.elem_mul(alg, x, inv, 5)
        self.assertEqual({alg.path([], '2'): 1}, product)

    def test_elem_str(self):
        alg = base.load_algebra('exm2')
        x = {alg.path(['b']): 1, alg.path(['b', 'c']): 4}
        self.assertEqual('b + 4*b.c', complexes.elem_str(x))
        self.assertEqual('0', complexes.elem_str({}))


class TestSquareZero(base.BaseTestCase):

    def test_valid_words(self):
        alg = base.load_algebra('exm1')
        words = strings.enumerate_words(alg, 5)
        self.assertNotEqual([], words)
        for word in words:
            X = complexes.string_to_complex(alg, strings.grade_string(word),
                                            2)
            self.assertEqual([], X.square_violations(),
                             " ".join(str(l) for l in word))

    def test_junctions_outside_relations(self):
        alg = base.load_algebra('exm2')
        letters = strings.all_letters(alg)
        for x, y in itertools.product(letters, repeat=2):
            if x.end != y.start:
                continue
            rule = strings.junction_violation(alg, x, y)
            if rule is not None and 'must lie in I' not in rule:
                continue
            X = complexes.string_to_complex(
                alg, strings.grade_string((x, y)), 2)
            message = "{0} {1}".format(x, y)
            if rule is None:
                self.assertEqual([], X.square_violations(), message)
            else:
                self.assertNotEqual([], X.square_violations(), message)
