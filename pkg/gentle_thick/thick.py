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

# Membership of string objects in thick subcategories generated by arc
# collections, and the poset of those subcategories.

import collections
import itertools
import logging

import networkx as nx

from gentle_thick.arcs import Arc
from gentle_thick.arcs import EXCEPTIONAL
from gentle_thick.arcs import SPHERELIKE
from gentle_thick.arcs import curve_key
from gentle_thick.arcs import string_key
from gentle_thick.complexes import band_to_complex
from gentle_thick.complexes import mapping_cone
from gentle_thick.complexes import string_to_complex
from gentle_thick.errors import BoundExhausted
from gentle_thick.errors import GentleThickException
from gentle_thick.errors import ModelInconsistency
from gentle_thick.errors import PreconditionError
from gentle_thick import oracle
from gentle_thick.parallel import concurrent
from gentle_thick.pointed import collection_graph
from gentle_thick.pointed import to_pointed
from gentle_thick.strings import GradedBand
from gentle_thick.strings import enumerate_strings
from gentle_thick.strings import normalize_band
from gentle_thick import surface

logger = logging.getLogger(__name__)

GENERATED = 'generated'
NOT_GENERATED = 'not-generated'
EXHAUSTED = 'bound-exhausted'


class Factorization(object):
    """Oriented collection arcs whose concatenation is the target."""

    def __init__(self, steps, target):
        self.steps = tuple(steps)
        self.target = target

    def replay(self, curves):
        result = None
        for index, orientation in self.steps:
            piece = curves[index] if orientation > 0 else \
                curves[index].reversed()
            result = piece if result is None else \
                surface.concatenate(result, piece)
            if result is None or result.is_zero:
                return None
        return result

    def verify(self, alg, strings):
        model = surface.surface_model(alg)
        curves = [model.string_curve(s) for s in strings]
        result = self.replay(curves)
        return result is not None and \
            curve_key(result) == string_key(self.target)

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return " ".join("{0}{1}".format(i, "+" if o > 0 else "-")
                        for i, o in self.steps)


Membership = collections.namedtuple('Membership',
                                    'status factorization reason explored')


def _components(curves):
    graph = collection_graph(curves)
    return list(nx.connected_components(graph))


def default_bounds(target, collection_size, factor_slack=2):
    letters = len(target)
    factors = factor_slack * (letters + collection_size) + 2
    return factors, 4 * letters + 8


def is_generated(alg, target, strings, max_factors=None, max_letters=None,
                 factor_slack=2):
    """Decide whether ``target`` is a concatenation of arcs of the
    collection ``strings``."""
    model = surface.surface_model(alg)
    curves = [model.string_curve(s) for s in strings]
    if not curves:
        return Membership(NOT_GENERATED, None, "empty collection", 0)
    default_factors, default_letters = default_bounds(
        target, len(curves), factor_slack)
    max_factors = max_factors or default_factors
    max_letters = max_letters or default_letters

    goal = model.string_curve(target)
    ends = set(goal.ends)
    if not any(ends <= component for component in _components(curves)):
        return Membership(NOT_GENERATED, None,
                          "an end is not a marked point of the collection",
                          0)
    for index, curve in enumerate(curves):
        if surface.interior_crossings(goal, curve):
            return Membership(NOT_GENERATED, None,
                              "crosses arc {0}".format(index), 0)

    goal_key = string_key(target)
    pieces = []
    for index, curve in enumerate(curves):
        pieces.append(((index, 1), curve))
        pieces.append(((index, -1), curve.reversed()))

    seen = {}
    frontier = []
    for step, curve in pieces:
        key = curve_key(curve)
        if key not in seen:
            seen[key] = (step,)
            frontier.append((curve, (step,)))
            if key == goal_key:
                return Membership(GENERATED, Factorization((step,), target),
                                  None, len(seen))
    pruned = False
    while frontier:
        following = []
        for curve, steps in frontier:
            if len(steps) >= max_factors:
                pruned = True
                continue
            for step, piece in pieces:
                for new, new_steps in (
                        (surface.concatenate(curve, piece),
                         steps + (step,)),
                        (surface.concatenate(piece, curve),
                         (step,) + steps)):
                    if new is None or new.is_zero:
                        continue
                    if len(new.letters()) > max_letters:
                        pruned = True
                        continue
                    key = curve_key(new)
                    if key in seen:
                        continue
                    seen[key] = new_steps
                    if key == goal_key:
                        factorization = Factorization(new_steps, target)
                        if not factorization.verify(alg, strings):
                            raise ModelInconsistency(
                                "factorization {0} does not replay to "
                                "{1}".format(factorization, target))
                        return Membership(GENERATED, factorization, None,
                                          len(seen))
                    following.append((new, new_steps))
        frontier = following
        logger.debug("membership of %s: %d classes explored", target,
                     len(seen))
    if pruned:
        logger.warning("membership of %s undecided within %d factors and "
                       "%d letters", target, max_factors, max_letters)
        return Membership(EXHAUSTED, None, "search bound", len(seen))
    return Membership(NOT_GENERATED, None, "search exhausted", len(seen))


Comparison = collections.namedtuple('Comparison', 'status certificates')


def leq_gen(alg, a, b, **bounds):
    """Whether every arc of ``a`` is generated over ``b``."""
    certificates = []
    exhausted = False
    for s in a:
        result = is_generated(alg, s, b, **bounds)
        if result.status == NOT_GENERATED:
            return Comparison(NOT_GENERATED, [(s, result)])
        if result.status == EXHAUSTED:
            exhausted = True
        certificates.append((s, result))
    return Comparison(EXHAUSTED if exhausted else GENERATED, certificates)


def equiv_gen(alg, a, b, **bounds):
    forward = leq_gen(alg, a, b, **bounds)
    backward = leq_gen(alg, b, a, **bounds)
    statuses = (forward.status, backward.status)
    if NOT_GENERATED in statuses:
        status = NOT_GENERATED
    elif EXHAUSTED in statuses:
        status = EXHAUSTED
    else:
        status = GENERATED
    return Comparison(status, forward.certificates + backward.certificates)


# bands

NO_STRING = 'no-string-present'

Replacement = collections.namedtuple(
    'Replacement', 'band through shift direction string')
Elimination = collections.namedtuple('Elimination',
                                     'status strings replacements')


def _string_like(cone, candidates, family):
    for s, complex_ in candidates:
        if oracle.multiset_offset(complex_, cone) is None:
            continue
        if oracle.looks_isomorphic(complex_, cone, family) is not None:
            return s
    return None


def cone_closure(alg, strings, candidates, family, depth=8, p=2):
    """Keys of the candidate strings reached from ``strings`` by cones of
    basis morphisms between objects already reached."""
    reached = collections.OrderedDict(
        (string_key(s), string_to_complex(alg, s, p)) for s in strings)
    for round_ in range(depth):
        found = collections.OrderedDict()
        objects = list(reached.values())
        for X, Y in itertools.product(objects, repeat=2):
            for k in oracle.hom_window(X, Y):
                for f in oracle.hom_space(X, Y, k).basis():
                    s = _string_like(mapping_cone(f), candidates, family)
                    if s is None:
                        continue
                    key = string_key(s)
                    if key not in reached and key not in found:
                        found[key] = string_to_complex(alg, s, p)
        if not found:
            break
        logger.debug("cone closure round %d: %d new strings", round_,
                     len(found))
        reached.update(found)
    return set(reached)


def eliminate_bands(alg, generators, p=2, max_letters=6, n_workers=1,
                    family_letters=2):
    """Replace every band generator by string objects of the same thick
    subcategory.

    Cones are recognised as strings of at most ``max_letters`` letters by
    fingerprints against the strings of at most ``family_letters``
    letters.
    """
    strings = [g for g in generators if not isinstance(g, GradedBand)]
    bands = [normalize_band(g) for g in generators
             if isinstance(g, GradedBand)]
    complexes = [string_to_complex(alg, s, p) for s in strings] + \
        [band_to_complex(alg, b, p) for b in bands]
    if len(oracle.ext_components(complexes)) > 1:
        raise PreconditionError("the generators are not Ext-connected")
    if not bands:
        return Elimination(GENERATED, list(strings), [])
    if not strings:
        return Elimination(NO_STRING, [], [])

    family = oracle.default_test_family(alg, p, family_letters)
    candidates = [(s, string_to_complex(alg, s, p))
                  for s in enumerate_strings(alg, max_letters, n_workers)]
    result = list(strings)
    replacements = []
    pending = list(bands)
    while pending:
        progress = False
        for band in list(pending):
            B = band_to_complex(alg, band, p)
            found = _replace_band(alg, band, B, result, candidates, family,
                                  p)
            if found is None:
                continue
            replacements.append(found)
            if string_key(found.string) not in \
                    set(string_key(s) for s in result):
                result.append(found.string)
            pending.remove(band)
            progress = True
        if not progress:
            raise BoundExhausted("band replacement search", max_letters)
    return Elimination(GENERATED, result, replacements)


def _replace_band(alg, band, B, strings, candidates, family, p):
    for y in strings:
        Y = string_to_complex(alg, y, p)
        for direction, (X, Z) in (('string->band', (Y, B)),
                                  ('band->string', (B, Y))):
            for k in oracle.hom_window(X, Z):
                space = oracle.hom_space(X, Z, k)
                for f in space.basis():
                    cone = mapping_cone(f)
                    s = _string_like(cone, candidates, family)
                    if s is not None:
                        logger.info("band %s replaced through %s by %s",
                                    band, y, s)
                        return Replacement(band, y, k, direction, s)
    return None


# the poset

def candidate_arcs(alg, max_letters, p=2, n_workers=1):
    """Exceptional and spherelike strings with at most ``max_letters``
    letters."""
    arcs = []
    for s in enumerate_strings(alg, max_letters, n_workers):
        arc = Arc(alg, s, p, check=False)
        if arc.kind in (EXCEPTIONAL, SPHERELIKE):
            arcs.append(arc)
    return arcs


def _connected_collections(arcs, max_arcs):
    crossing = set()
    for i, j in itertools.combinations(range(len(arcs)), 2):
        if surface.interior_crossings(arcs[i].curve, arcs[j].curve):
            crossing.add((i, j))
    found = []
    for size in range(1, max_arcs + 1):
        for subset in itertools.combinations(range(len(arcs)), size):
            if any(pair in crossing
                   for pair in itertools.combinations(subset, 2)):
                continue
            graph = collection_graph([arcs[i].curve for i in subset])
            if nx.is_connected(graph):
                found.append(subset)
    return found


@concurrent
def _generated_set(alg, arcs, subset, bounds):
    strings = [arcs[i].string for i in subset]
    members = set()
    unknown = set()
    for index, arc in enumerate(arcs):
        if index in subset:
            members.add(index)
            continue
        result = is_generated(alg, arc.string, strings, **bounds)
        if result.status == GENERATED:
            members.add(index)
        elif result.status == EXHAUSTED:
            unknown.add(index)
    return frozenset(members), frozenset(unknown)


def collection_literal(strings):
    return " | ".join(sorted(str(s) for s in strings))


def pointed_form(alg, strings):
    """``strings`` pointed at their lexicographically least marked point,
    or None when the rewriting fails."""
    model = surface.surface_model(alg)
    points = set()
    for s in strings:
        points.update(model.string_curve(s).ends)
    basepoint = min(points)
    try:
        return to_pointed(alg, strings, basepoint)
    except GentleThickException as e:
        logger.debug("%s not pointed at %s: %s",
                     collection_literal(strings), basepoint, e)
        return None


ThickClass = collections.namedtuple(
    'ThickClass', 'name representative basepoint members generated')


def _thick_class(alg, subsets, generated, taken):
    """The class of ``subsets``, named after the least pointed form of
    its collections."""
    best = None
    for strings in subsets:
        form = pointed_form(alg, strings)
        if form is None:
            continue
        literal = collection_literal(form.strings)
        if best is None or literal < best[0]:
            best = (literal, form)
    if best is not None and best[0] not in taken:
        literal, form = best
        return ThickClass(literal, sorted(form.strings, key=str),
                          form.basepoint, subsets, generated)
    strings = min(subsets, key=collection_literal)
    literal = collection_literal(strings)
    logger.warning("class %s is named after an unpointed collection",
                   literal)
    return ThickClass(literal, sorted(strings, key=str), None, subsets,
                      generated)


class Poset(object):
    """Hasse diagram of thick subcategories generated by arc
    collections."""

    def __init__(self, classes, graph, unknown, arcs=(), max_letters=None):
        self.classes = classes
        self.graph = graph
        self.unknown = unknown
        self.arcs = list(arcs)
        self.max_letters = max_letters

    def __len__(self):
        return len(self.classes)

    def minimal(self):
        return sorted(n for n in self.graph if not
                      self.graph.in_degree(n))

    def maximal(self):
        return sorted(n for n in self.graph if not
                      self.graph.out_degree(n))


def poset(alg, max_letters=4, max_arcs=3, p=2, n_workers=1, bounds=None):
    """Classes of connected arc collections up to mutual generation,
    ordered by generation."""
    arcs = candidate_arcs(alg, max_letters, p, n_workers)
    subsets = _connected_collections(arcs, max_arcs)
    logger.info("%d candidate arcs, %d connected collections", len(arcs),
                len(subsets))
    results = []
    if subsets:
        results = _generated_set(
            alg=alg, arcs=arcs, bounds=bounds or {},
            concurrent=[{'subset': s} for s in subsets],
            n_workers=n_workers)
    by_closure = collections.OrderedDict()
    unknown = set()
    for subset, (members, undecided) in zip(subsets, results):
        by_closure.setdefault(members, []).append(subset)
        if undecided:
            unknown.add(members)
    classes = {}
    for members, subsets_ in by_closure.items():
        cls = _thick_class(alg, [[arcs[i].string for i in s]
                                 for s in subsets_], members, classes)
        classes[cls.name] = cls
    graph = nx.DiGraph()
    graph.add_nodes_from(sorted(classes))
    for a, b in itertools.permutations(sorted(classes), 2):
        if classes[a].generated < classes[b].generated:
            graph.add_edge(a, b)
    hasse = nx.transitive_reduction(graph)
    hasse.add_nodes_from(graph.nodes())
    unknown_edges = set()
    for u, v in hasse.edges():
        if classes[u].generated in unknown or \
                classes[v].generated in unknown:
            hasse.edges[u, v]['unknown'] = True
            unknown_edges.add((u, v))
    if unknown_edges:
        logger.warning("%d covering relations rest on undecided "
                       "comparisons", len(unknown_edges))
    return Poset(classes, hasse, unknown_edges, arcs, max_letters)


def cross_check(alg, result, depth=8, p=2, family_letters=2):
    """Names of the classes whose cone closure over the strings of at most
    ``result.max_letters`` letters reaches other arcs than generation
    does."""
    candidates = [(s, string_to_complex(alg, s, p))
                  for s in enumerate_strings(alg, result.max_letters)]
    family = oracle.default_test_family(alg, p, family_letters)
    index = dict((string_key(arc.string), i)
                 for i, arc in enumerate(result.arcs))
    disagreements = []
    for name in sorted(result.classes):
        cls = result.classes[name]
        reached = cone_closure(alg, cls.representative, candidates, family,
                               depth, p)
        found = frozenset(index[key] for key in reached if key in index)
        if found != cls.generated:
            logger.warning("class %s: cone closure reaches %d arcs, "
                           "generation %d", name, len(found),
                           len(cls.generated))
            disagreements.append(name)
    return disagreements
