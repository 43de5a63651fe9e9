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

# Quivers with length-two relations and the gentle conditions.

import collections
import logging
import re

import networkx as nx

from gentle_thick.errors import NotGentleError

logger = logging.getLogger(__name__)

Arrow = collections.namedtuple('Arrow', 'name source target')

CLAUSE_CONNECTED = "finite connected quiver"
CLAUSE_OUT = "at most two arrows with source v"
CLAUSE_IN = "at most two arrows with target v"
CLAUSE_FORBIDDEN_SUCC = "at most one arrow b such that ab in I"
CLAUSE_PERMITTED_SUCC = "at most one arrow c such that ac not in I"
CLAUSE_FORBIDDEN_PRED = "at most one arrow b such that ba in I"
CLAUSE_PERMITTED_PRED = "at most one arrow c such that ca not in I"
CLAUSE_LENGTH_TWO = "relations are composable paths of length 2"
CLAUSE_ADMISSIBLE = "I is admissible (no permitted cycle)"


def sort_key(name):
    """Order identifiers naturally: 2 before 10, digits before letters."""
    return tuple((0, int(tok), '') if tok.isdigit() else (1, 0, tok)
                 for tok in re.findall(r'\d+|\D+', str(name)))


class Violation(collections.namedtuple('Violation', 'clause witness')):
    __slots__ = ()

    def __str__(self):
        if self.witness is None:
            return self.clause
        return "{0} ({1})".format(self.clause, self.witness)


class Path(collections.namedtuple('Path', 'source target arrows')):
    """A path in the quiver read left to right: ``arrows[0]`` first.

    The trivial path at ``v`` has ``source == target == v`` and no arrows.
    """
    __slots__ = ()

    @property
    def is_trivial(self):
        return not self.arrows

    def __len__(self):
        return len(self.arrows)

    def __str__(self):
        if self.is_trivial:
            return "e{0}".format(self.source)
        return ".".join(self.arrows)

    def sort_key(self):
        return (sort_key(self.source), len(self.arrows),
                tuple(sort_key(a) for a in self.arrows),
                sort_key(self.target))


def trivial_path(vertex):
    return Path(vertex, vertex, ())


class Quiver(object):

    def __init__(self, vertices, arrows):
        self.vertices = tuple(sorted(set(vertices), key=sort_key))
        self.arrows = collections.OrderedDict()
        for arrow in sorted(arrows, key=lambda a: sort_key(a.name)):
            self.arrows[arrow.name] = arrow

    def out_arrows(self, vertex):
        return [a.name for a in self.arrows.values() if a.source == vertex]

    def in_arrows(self, vertex):
        return [a.name for a in self.arrows.values() if a.target == vertex]

    def underlying_graph(self):
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for arrow in self.arrows.values():
            graph.add_edge(arrow.source, arrow.target, key=arrow.name)
        return graph

    def __eq__(self, other):
        return (isinstance(other, Quiver) and
                self.vertices == other.vertices and
                list(self.arrows.values()) == list(other.arrows.values()))

    def __ne__(self, other):
        return not self == other


def _successor_graph(quiver, relations, forbidden):
    graph = nx.DiGraph()
    graph.add_nodes_from(quiver.arrows)
    for a in quiver.arrows.values():
        for b in quiver.out_arrows(a.target):
            if ((a.name, b) in relations) == forbidden:
                graph.add_edge(a.name, b)
    return graph


def _rotate_to_min(cycle):
    pos = min(range(len(cycle)), key=lambda i: sort_key(cycle[i]))
    return tuple(cycle[pos:] + cycle[:pos])


def validate_gentle(quiver, relations):
    """Check every clause of the gentle definition.

    Returns a list of :class:`Violation`; an empty list means gentle.
    """
    relations = set(relations)
    violations = []

    if not quiver.vertices:
        violations.append(Violation(CLAUSE_CONNECTED, "no vertices"))
    elif not nx.is_connected(quiver.underlying_graph()):
        parts = sorted((sorted(c, key=sort_key) for c in
                        nx.connected_components(quiver.underlying_graph())),
                       key=lambda c: sort_key(c[0]))
        violations.append(Violation(
            CLAUSE_CONNECTED, "components " + " | ".join(
                " ".join(c) for c in parts)))

    for v in quiver.vertices:
        if len(quiver.out_arrows(v)) > 2:
            violations.append(Violation(CLAUSE_OUT, "v={0}".format(v)))
        if len(quiver.in_arrows(v)) > 2:
            violations.append(Violation(CLAUSE_IN, "v={0}".format(v)))

    for a, b in sorted(relations, key=lambda r: (sort_key(r[0]),
                                                  sort_key(r[1]))):
        if (a not in quiver.arrows or b not in quiver.arrows or
                quiver.arrows[a].target != quiver.arrows[b].source):
            violations.append(Violation(CLAUSE_LENGTH_TWO,
                                        "{0}{1}".format(a, b)))

    for arrow in quiver.arrows.values():
        a = arrow.name
        after = quiver.out_arrows(arrow.target)
        before = quiver.in_arrows(arrow.source)
        if len([b for b in after if (a, b) in relations]) > 1:
            violations.append(Violation(CLAUSE_FORBIDDEN_SUCC,
                                        "a={0}".format(a)))
        if len([c for c in after if (a, c) not in relations]) > 1:
            violations.append(Violation(CLAUSE_PERMITTED_SUCC,
                                        "a={0}".format(a)))
        if len([b for b in before if (b, a) in relations]) > 1:
            violations.append(Violation(CLAUSE_FORBIDDEN_PRED,
                                        "a={0}".format(a)))
        if len([c for c in before if (c, a) not in relations]) > 1:
            violations.append(Violation(CLAUSE_PERMITTED_PRED,
                                        "a={0}".format(a)))

    try:
        cycle = nx.find_cycle(_successor_graph(quiver, relations, False))
    except nx.NetworkXNoCycle:
        pass
    else:
        violations.append(Violation(
            CLAUSE_ADMISSIBLE,
            " ".join(_rotate_to_min([edge[0] for edge in cycle]))))
    return violations


class GentleAlgebra(object):
    """A gentle bound quiver algebra kQ/I with its composition tables.

    A relation ``(a, b)`` means *a then b*, so ``t(a) == s(b)``.
    """

    def __init__(self, quiver, relations, name=None):
        self.quiver = quiver
        self.relations = frozenset(tuple(r) for r in relations)
        self.name = name
        violations = validate_gentle(quiver, self.relations)
        if violations:
            raise NotGentleError(violations)

        self.permitted_successor = {}
        self.forbidden_successor = {}
        self.permitted_predecessor = {}
        self.forbidden_predecessor = {}
        for arrow in quiver.arrows.values():
            for b in quiver.out_arrows(arrow.target):
                if (arrow.name, b) in self.relations:
                    self.forbidden_successor[arrow.name] = b
                    self.forbidden_predecessor[b] = arrow.name
                else:
                    self.permitted_successor[arrow.name] = b
                    self.permitted_predecessor[b] = arrow.name
        self._paths_from = {}

    @property
    def vertices(self):
        return self.quiver.vertices

    @property
    def arrows(self):
        return self.quiver.arrows

    def source(self, arrow):
        return self.quiver.arrows[arrow].source

    def target(self, arrow):
        return self.quiver.arrows[arrow].target

    def is_relation(self, a, b):
        return (a, b) in self.relations

    def path(self, arrows, vertex=None):
        """Build a :class:`Path` from arrow names, checking composability.

        Returns None when the arrows are not composable or contain a
        relation.
        """
        arrows = tuple(arrows)
        if not arrows:
            return trivial_path(vertex)
        for a in arrows:
            if a not in self.quiver.arrows:
                return None
        for a, b in zip(arrows, arrows[1:]):
            if self.target(a) != self.source(b) or self.is_relation(a, b):
                return None
        return Path(self.source(arrows[0]), self.target(arrows[-1]), arrows)

    def multiply(self, p, q):
        """Product *p then q*; None when it vanishes in the algebra."""
        if p.target != q.source:
            return None
        if p.is_trivial:
            return q
        if q.is_trivial:
            return p
        if self.is_relation(p.arrows[-1], q.arrows[0]):
            return None
        return Path(p.source, q.target, p.arrows + q.arrows)

    def paths_from(self, vertex):
        """All permitted paths starting at ``vertex``, shortest first."""
        if vertex not in self._paths_from:
            found = [trivial_path(vertex)]
            for first in self.quiver.out_arrows(vertex):
                arrows = (first,)
                while True:
                    found.append(Path(vertex, self.target(arrows[-1]),
                                      arrows))
                    nxt = self.permitted_successor.get(arrows[-1])
                    if nxt is None or len(arrows) > len(self.arrows):
                        break
                    arrows = arrows + (nxt,)
            found.sort(key=Path.sort_key)
            self._paths_from[vertex] = tuple(found)
        return self._paths_from[vertex]

    def permitted_paths(self, v, u):
        """Permitted paths from ``v`` to ``u``.

        They index a basis of Hom(P_u, P_v).
        """
        return [p for p in self.paths_from(v) if p.target == u]

    def longest_path_length(self):
        return max(len(p) for v in self.vertices for p in self.paths_from(v))

    def is_homologically_smooth(self):
        """Return ``(smooth, witness)``.

        ``witness`` is an arrow cycle all of whose consecutive compositions
        lie in I, rotated so that the smallest arrow comes first.
        """
        graph = _successor_graph(self.quiver, self.relations, True)
        try:
            cycle = nx.find_cycle(graph)
        except nx.NetworkXNoCycle:
            return True, None
        return False, _rotate_to_min([edge[0] for edge in cycle])

    def __eq__(self, other):
        return (isinstance(other, GentleAlgebra) and
                self.quiver == other.quiver and
                self.relations == other.relations)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.vertices, tuple(self.arrows), self.relations))

    def __repr__(self):
        return "<GentleAlgebra {0}: {1} vertices, {2} arrows>".format(
            self.name or '', len(self.vertices), len(self.arrows))
