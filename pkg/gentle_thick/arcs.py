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

# Arcs of string objects: classification, gluing, intersections and
# surgery.

import collections
import itertools
import logging

from gentle_thick.complexes import mapping_cone
from gentle_thick.complexes import string_to_complex
from gentle_thick.errors import BoundExhausted
from gentle_thick.errors import ModelInconsistency
from gentle_thick.errors import PreconditionError
from gentle_thick import oracle
from gentle_thick.strings import GradedString
from gentle_thick.strings import canonical_string
from gentle_thick import surface

logger = logging.getLogger(__name__)

EXCEPTIONAL = 'exceptional'
SPHERELIKE = 'spherelike'
CROSSING = 'crossing'

LEFT = 'left'
RIGHT = 'right'


def kind_from_hom(total):
    if total == 1:
        return EXCEPTIONAL
    if total == 2:
        return SPHERELIKE
    return CROSSING


def curve_key(curve):
    """Identity of the string class carried by an open curve."""
    return canonical_string(curve.to_string()).word_key()


def string_key(s):
    return canonical_string(s).word_key()


def curve_of(alg, s):
    return surface.surface_model(alg).string_curve(s)


class Arc(object):
    """A string object seen as a curve on the surface.

    ``total`` is the dimension of its endomorphisms up to shift and
    decides ``kind``; ``self_crossings`` is counted on the curve.
    """

    def __init__(self, alg, string, p=2, check=True):
        self.alg = alg
        self.string = string
        self.curve = curve_of(alg, string)
        self.p = p
        self.self_crossings = surface.self_crossing_count(self.curve)
        left, right = self.curve.ends
        self.ends = (left, right)
        self.closed = left == right
        self._total = None
        if check:
            expected = 2 * self.self_crossings + (2 if self.closed else 1)
            if self.total != expected:
                raise ModelInconsistency(
                    "{0}: endomorphisms up to shift {1}, curve predicts "
                    "{2}".format(string, self.total, expected))

    @property
    def total(self):
        if self._total is None:
            X = string_to_complex(self.alg, self.string, self.p)
            self._total = oracle.hom_total(X, X)
        return self._total

    @property
    def kind(self):
        if self._total is not None:
            return kind_from_hom(self._total)
        if self.self_crossings:
            return CROSSING
        return SPHERELIKE if self.closed else EXCEPTIONAL

    def key(self):
        return string_key(self.string)

    def complex(self):
        return string_to_complex(self.alg, self.string, self.p)

    def __repr__(self):
        return "<Arc {0} {1} {2}-{3}>".format(self.string, self.kind,
                                               *self.ends)


def classify_arc(alg, s, p=2):
    X = string_to_complex(alg, s, p)
    return kind_from_hom(oracle.hom_total(X, X))


def _oriented(curve, end, want_right):
    if (end == RIGHT) != want_right:
        return curve.reversed()
    return curve


GlueResult = collections.namedtuple('GlueResult',
                                    'string shift certificate')


def _grade_result(result, x, y):
    xg, yg = x.grading(), y.grading()
    first = result.tags[0]
    if first[0] == 's':
        base = xg[first[1]]
    else:
        base = yg[first[1]]
    graded = surface.Curve(result.model, result.occurrences, base,
                           tags=result.tags)
    grades = graded.grading()
    shift = None
    for index, tag in enumerate(graded.tags):
        if tag[0] == 't':
            shift = grades[index] - yg[tag[1]]
            break
    return graded.to_string(), shift


def glue_curves(x, y):
    """Tagged concatenation of ``x`` then ``y``; None when the ends do
    not share a marked point."""
    return surface.concatenate(x.tagged('s'), y.tagged('t'))


def glue(alg, s, s_end, t, t_end, p=2, certify=False, test_family=None,
         morphism_limit=16):
    """Join ``s`` at ``s_end`` to ``t`` at ``t_end``.

    Returns an empty list when those ends lie on different marked points,
    otherwise one :class:`GlueResult`; its string is None when the two
    arcs cancel completely.
    """
    model = surface.surface_model(alg)
    x = _oriented(model.string_curve(s), s_end, True)
    y = _oriented(model.string_curve(t), t_end, False)
    joined = glue_curves(x, y)
    if joined is None:
        return []
    if joined.is_zero:
        result, shift = None, None
    else:
        result, shift = _grade_result(joined, x, y)
    certificate = None
    if certify:
        certificate = certify_glue(alg, s, t, result, p, test_family,
                                   morphism_limit)
    return [GlueResult(result, shift, certificate)]


Certificate = collections.namedtuple('Certificate',
                                     'direction shift offset')


def _morphisms(space, limit):
    basis = space.basis_vectors()
    d = len(basis)
    if not d:
        return
    if space.p ** d <= limit:
        for coeffs in itertools.product(range(space.p), repeat=d):
            if any(coeffs):
                vector = sum(c * v for c, v in zip(coeffs, basis)) % space.p
                yield space.vector_to_map(vector)
    else:
        for vector in basis:
            yield space.vector_to_map(vector)


def certify_glue(alg, s, t, result, p=2, test_family=None, limit=16):
    """Find a morphism between ``s`` and a shift of ``t`` (either way)
    whose cone looks like ``result``."""
    if test_family is None:
        test_family = oracle.default_test_family(alg, p)
    A = string_to_complex(alg, s, p)
    B = string_to_complex(alg, t, p)
    target = string_to_complex(alg, result, p) if result is not None \
        else None
    for direction, (X, Y) in (('s->t', (A, B)), ('t->s', (B, A))):
        for k in oracle.hom_window(X, Y):
            space = oracle.hom_space(X, Y, k)
            for f in _morphisms(space, limit):
                cone = mapping_cone(f)
                if target is None:
                    if cone.is_zero:
                        return Certificate(direction, k, 0)
                    continue
                offset = oracle.looks_isomorphic(target, cone, test_family)
                if offset is not None:
                    return Certificate(direction, k, offset)
    raise ModelInconsistency("no cone between {0} and {1} matches the "
                             "glued string {2}".format(s, t, result))


Intersections = collections.namedtuple('Intersections',
                                       'interior shared_endpoints')


def intersections(alg, a, b, p=2, check=False):
    """Interior crossings and shared endpoints of two arcs.

    With ``check`` the counts are compared with the morphisms up to shift
    in both directions.
    """
    x, y = a.curve, b.curve
    same = a.key() == b.key()
    if same:
        interior = surface.self_crossing_count(x)
        shared = [(0, 1)] if a.closed else []
    else:
        interior = len(surface.interior_crossings(x, y))
        shared = surface.shared_endpoints(x, y)
    if check:
        A, B = a.complex(), b.complex()
        if same:
            expected = 2 * interior + (2 if a.closed else 1)
            total = oracle.hom_total(A, A)
        else:
            expected = 2 * interior + len(shared)
            total = oracle.hom_total(A, B) + oracle.hom_total(B, A)
        if total != expected:
            raise ModelInconsistency(
                "{0} and {1}: {2} morphisms up to shift, the curves "
                "predict {3}".format(a.string, b.string, total, expected))
    return Intersections(interior, shared)


def is_arc_collection(alg, arcs):
    for arc in arcs:
        if arc.kind not in (EXCEPTIONAL, SPHERELIKE):
            return False
    for a, b in itertools.combinations(arcs, 2):
        if surface.interior_crossings(a.curve, b.curve):
            return False
    return True


def is_connected(alg, arcs):
    if not arcs:
        return True
    return len(oracle.ext_components([a.complex() for a in arcs])) == 1


# decomposition and reduction

def _decompose(curve, depth, max_depth):
    crossings = surface.self_crossings(curve)
    if not crossings:
        return [curve]
    if depth >= max_depth:
        raise BoundExhausted("decomposition depth", max_depth)
    k, l = min(crossings, key=lambda c: (c.y_index, c.x_index))
    loop, shortcut = surface.split_self_crossing(curve, (k, l))
    rejoined = surface.concatenate(loop, shortcut)
    if rejoined is None or rejoined.occurrences != curve.occurrences:
        raise ModelInconsistency("surgery at {0} does not rejoin to the "
                                 "original curve".format((k, l)))
    before = len(crossings)
    after = surface.self_crossing_count(shortcut)
    if after >= before:
        raise ModelInconsistency("surgery did not remove a "
                                 "self-intersection")
    logger.debug("split %r at %s into %r and %r", curve, (k, l), loop,
                 shortcut)
    return (_decompose(loop, depth + 1, max_depth) +
            _decompose(shortcut, depth + 1, max_depth))


def decompose_string(alg, s, max_depth=8):
    """Split ``s`` at first self-intersections until every part is
    exceptional or spherelike."""
    parts = _decompose(curve_of(alg, s), 0, max_depth)
    return [canonical_string(c.to_string()) for c in parts]


def _total_interior(curves):
    return sum(len(surface.interior_crossings(x, y))
               for x, y in itertools.combinations(curves, 2))


def _add_unique(curves, keys, curve):
    if curve.is_zero:
        return
    key = curve_key(curve)
    if key not in keys:
        keys.add(key)
        curves.append(curve)


Reduction = collections.namedtuple('Reduction', 'strings measures')


def reduce_to_collection(alg, generators, max_rounds=64, max_depth=8):
    """Replace generators by non-crossing exceptional and spherelike
    strings generating the same thick subcategory.

    ``measures`` records the total number of interior crossings before
    each round.
    """
    model = surface.surface_model(alg)
    curves, keys = [], set()
    for s in generators:
        for part in _decompose(model.string_curve(s), 0, max_depth):
            _add_unique(curves, keys, part)
    measures = []
    for _ in range(max_rounds):
        total = _total_interior(curves)
        if measures and total >= measures[-1]:
            raise ModelInconsistency("crossing surgery did not reduce the "
                                     "number of intersections")
        measures.append(total)
        if not total:
            strings = [canonical_string(c.to_string()) for c in curves]
            return Reduction(strings, measures)
        best = None
        for i, x in enumerate(curves):
            for j, y in enumerate(curves):
                if i == j:
                    continue
                for c in surface.interior_crossings(x, y):
                    candidate = (c.x_index, i, j, c)
                    if best is None or candidate[:3] < best[:3]:
                        best = candidate
        _, i, j, crossing = best
        forward, back = surface.resolve_crossing(curves[i], curves[j],
                                                 crossing)
        logger.debug("resolving %r against %r", curves[j], curves[i])
        removed = curves.pop(j)
        keys.discard(curve_key(removed))
        for new in (forward, back):
            if new.is_zero:
                continue
            for part in _decompose(new, 0, max_depth):
                _add_unique(curves, keys, part)
    raise BoundExhausted("reduction rounds", max_rounds)


# powers of spherelike strings

PowerDecomposition = collections.namedtuple('PowerDecomposition',
                                            'prefix loop suffix base')


def _self_glue(curve, times):
    result = curve
    for _ in range(times - 1):
        result = surface.concatenate(result, curve)
        if result is None or result.is_zero:
            raise PreconditionError("the string does not glue to itself")
    return result


def power_string(alg, s, p=2):
    """``(prefix, loop, suffix)`` with power(s, i) equal to
    prefix loop^(i-1) suffix."""
    if classify_arc(alg, s, p) != SPHERELIKE:
        raise PreconditionError("{0} is not spherelike".format(s))
    curve = curve_of(alg, s)
    w1 = s.letters
    w2 = _self_glue(curve, 2).letters()
    w3 = _self_glue(curve, 3).letters()
    period = len(w2) - len(w1)
    if period <= 0 or len(w3) - len(w2) != period:
        raise ModelInconsistency("powers of {0} do not grow "
                                 "linearly".format(s))
    for m in range(len(w1) + 1):
        loop = w2[m:m + period]
        if (w2[:m] == w1[:m] and w2[m + period:] == w1[m:] and
                w3 == w1[:m] + loop + loop + w1[m:]):
            return PowerDecomposition(w1[:m], loop, w1[m:], s.base)
    raise ModelInconsistency("no periodic decomposition of the powers of "
                             "{0}".format(s))


def power(alg, s, i, decomposition=None, p=2):
    if i < 1:
        raise PreconditionError("powers start at 1")
    if i == 1:
        return s
    if decomposition is None:
        decomposition = power_string(alg, s, p)
    prefix, loop, suffix, base = decomposition
    return GradedString(prefix + loop * (i - 1) + suffix, base)
