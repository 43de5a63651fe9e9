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

# Pointed arc collections: every arc meets the basepoint, every other
# marked point carries a single arc end.

import collections
import logging

import networkx as nx

from gentle_thick.arcs import EXCEPTIONAL
from gentle_thick.arcs import LEFT
from gentle_thick.arcs import RIGHT
from gentle_thick.arcs import SPHERELIKE
from gentle_thick.arcs import curve_key
from gentle_thick.errors import BoundExhausted
from gentle_thick.errors import ModelInconsistency
from gentle_thick.errors import PreconditionError
from gentle_thick.strings import band_degree
from gentle_thick.strings import canonical_string
from gentle_thick.strings import is_proper_power
from gentle_thick import surface

logger = logging.getLogger(__name__)

TERMINAL = 'terminal'
CYCLIC = 'cyclic'
TERMINATING = 'terminating'

STRING = 'string'
BAND = 'band'
UNGRADED_LOOP = 'ungraded-loop'

HalfEdge = collections.namedtuple('HalfEdge', 'arc end')


def collection_graph(curves):
    """Marked points joined by one edge per arc."""
    graph = nx.MultiGraph()
    for index, curve in enumerate(curves):
        left, right = curve.ends
        graph.add_edge(left, right, key=index)
    return graph


def half_edges_at(curves, point):
    """Half-edges at ``point`` in anticlockwise order."""
    found = []
    for index, curve in enumerate(curves):
        left, right = curve.ends
        if left == point:
            found.append((curve.germ_key(False), HalfEdge(index, LEFT)))
        if right == point:
            found.append((curve.germ_key(True), HalfEdge(index, RIGHT)))
    found.sort()
    return [h for _, h in found]


def _leaving(curve, end):
    """``curve`` oriented to leave through ``end``."""
    return curve.reversed() if end == RIGHT else curve


def _arriving(curve, end):
    return curve.reversed() if end == LEFT else curve


Rewrite = collections.namedtuple('Rewrite',
                                 'pivot replaced through dropped')
Rewrite.__new__.__defaults__ = (False,)


def to_pointed(alg, strings, basepoint, max_steps=64):
    """Rewrite a connected arc collection into one pointed at
    ``basepoint``; every new arc is a concatenation of old ones."""
    model = surface.surface_model(alg)
    curves = [model.string_curve(s) for s in strings]
    graph = collection_graph(curves)
    if basepoint not in graph:
        raise PreconditionError("{0} is not an endpoint of the "
                                "collection".format(basepoint))
    if not nx.is_connected(graph):
        raise PreconditionError("the collection is not connected")
    steps = []
    for _ in range(max_steps):
        graph = collection_graph(curves)
        pivots = sorted(u for u in graph.neighbors(basepoint)
                        if u != basepoint and graph.degree(u) > 1)
        if not pivots:
            break
        u = pivots[0]
        through = min(i for i, c in enumerate(curves)
                      if set(c.ends) == set([basepoint, u]))
        x = curves[through]
        h = HalfEdge(through, RIGHT if x.ends[1] == u else LEFT)
        edges = half_edges_at(curves, u)
        pos = edges.index(h)
        h1 = edges[pos + 1] if pos + 1 < len(edges) else edges[pos - 1]
        joined = surface.concatenate(_arriving(x, h.end),
                                     _leaving(curves[h1.arc], h1.end))
        if joined is None or joined.is_zero:
            raise ModelInconsistency("half-edges at {0} do not "
                                     "concatenate".format(u))
        key = curve_key(joined)
        if any(curve_key(c) == key
               for i, c in enumerate(curves) if i != h1.arc):
            # the rerouted arc is already in the collection
            logger.debug("pointing: arc %d dropped at %s", h1.arc, u)
            del curves[h1.arc]
            steps.append(Rewrite(u, h1.arc, through, True))
            continue
        logger.debug("pointing: arc %d rerouted through arc %d at %s",
                     h1.arc, through, u)
        curves[h1.arc] = joined
        steps.append(Rewrite(u, h1.arc, through))
    else:
        raise BoundExhausted("pointing rewrites", max_steps)
    pointed = PointedCollection(model, curves, basepoint, steps)
    if not pointed.is_pointed():
        raise ModelInconsistency("rewritten collection is not pointed at "
                                 "{0}".format(basepoint))
    return pointed


RegionReport = collections.namedtuple(
    'RegionReport', 'half_edges kinds tau orbits')


class PointedCollection(object):

    def __init__(self, model, curves, basepoint, steps=()):
        self.model = model
        self.curves = list(curves)
        self.basepoint = basepoint
        self.steps = list(steps)

    @property
    def strings(self):
        return [canonical_string(c.to_string()) for c in self.curves]

    def arc_kind(self, index):
        left, right = self.curves[index].ends
        return SPHERELIKE if left == right else EXCEPTIONAL

    def is_pointed(self):
        graph = collection_graph(self.curves)
        for u in graph:
            if u == self.basepoint:
                continue
            if graph.degree(u) != 1 or \
                    not graph.has_edge(self.basepoint, u):
                return False
        return True

    def half_edges(self):
        return half_edges_at(self.curves, self.basepoint)

    def regions_and_tau(self):
        """Regions R_0 .. R_b between consecutive half-edges, the map
        tau on non-terminal regions and the kind of every region."""
        edges = self.half_edges()
        b = len(edges)

        def terminal(k):
            return k == b or self.arc_kind(edges[k].arc) == EXCEPTIONAL

        tau = {}
        for k in range(b):
            if terminal(k):
                continue
            h = edges[k]
            other = HalfEdge(h.arc, RIGHT if h.end == LEFT else LEFT)
            tau[k] = edges.index(other) + 1
        kinds = {}
        orbits = {}
        for k in range(b + 1):
            if terminal(k):
                kinds[k] = TERMINAL
                continue
            orbit = [k]
            while True:
                nxt = tau[orbit[-1]]
                if nxt == k:
                    orbit.append(nxt)
                    kinds[k] = CYCLIC
                    break
                if nxt in orbit:
                    raise ModelInconsistency(
                        "tau revisits region {0} from region {1}".format(
                            nxt, k))
                orbit.append(nxt)
                if terminal(nxt):
                    kinds[k] = TERMINATING
                    break
            orbits[k] = orbit
        return RegionReport(edges, kinds, tau, orbits)


PsiPath = collections.namedtuple('PsiPath', 'tag string loop orbit')


def psi_path(pointed, region):
    """Concatenate the spherelike arcs met along the tau orbit of
    ``region``."""
    report = pointed.regions_and_tau()
    if region not in report.kinds:
        raise PreconditionError("no region {0}".format(region))
    if report.kinds[region] == TERMINAL:
        raise PreconditionError("region {0} is terminal".format(region))
    orbit = report.orbits[region]
    edges = report.half_edges
    path = None
    for a in orbit[:-1]:
        h = edges[a]
        piece = _leaving(pointed.curves[h.arc], h.end)
        path = piece if path is None else surface.concatenate(path, piece)
        if path is None or path.is_zero:
            raise ModelInconsistency("tau orbit of region {0} does not "
                                     "concatenate".format(region))
    if surface.self_crossing_count(path):
        raise ModelInconsistency("path of region {0} crosses "
                                 "itself".format(region))
    for curve in pointed.curves:
        if surface.interior_crossings(path, curve):
            raise ModelInconsistency("path of region {0} crosses the "
                                     "collection".format(region))
    string = canonical_string(path.to_string())
    if report.kinds[region] == TERMINATING:
        return PsiPath(STRING, string, None, orbit)
    loop = path.close()
    letters = loop.letters()
    if letters and band_degree(letters) == 0 and \
            not is_proper_power(letters):
        tag = BAND
    else:
        tag = UNGRADED_LOOP
    return PsiPath(tag, string, letters, orbit)
