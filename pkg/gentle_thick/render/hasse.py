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

# Hasse diagram of a poset of thick subcategories.

import networkx as nx

from gentle_thick.render import base


def levels(graph):
    """Length of the longest chain below every node."""
    level = {}
    for node in nx.topological_sort(graph):
        level[node] = max([level[p] + 1 for p in graph.predecessors(node)]
                          or [0])
    return level


class HasseRenderer(base.Base):

    name = 'hasse'
    column = 90
    row = 80
    margin = 50
    legend_row = 16

    def gen_svg(self, svg_parent, poset):
        level = levels(poset.graph)
        by_level = {}
        for node in sorted(level):
            by_level.setdefault(level[node], []).append(node)
        names = sorted(poset.graph.nodes())
        label = dict((node, str(n)) for n, node in enumerate(names, 1))

        widest = max([len(v) for v in by_level.values()] or [1])
        top = max(by_level or [0])
        width = max(2 * self.margin + self.column * widest, 320)
        diagram = 2 * self.margin + self.row * top
        height = diagram + self.legend_row * (len(names) + 1)
        svg_parent.set('width', str(width))
        svg_parent.set('height', str(height))
        svg_parent.set('viewBox', "0 0 {0} {1}".format(width, height))

        position = {}
        for lvl, nodes in by_level.items():
            span = self.column * (len(nodes) - 1)
            for n, node in enumerate(nodes):
                position[node] = (width / 2.0 - span / 2.0 + self.column * n,
                                  diagram - self.margin - self.row * lvl)

        for u, v in sorted(poset.graph.edges()):
            attrs = {}
            if (u, v) in poset.unknown:
                attrs['stroke-dasharray'] = '4 2'
            base.line(svg_parent, position[u][0], position[u][1],
                      position[v][0], position[v][1], **attrs)
        for node in names:
            x, y = position[node]
            base.circle(svg_parent, x, y, 12, fill='white', stroke='black')
            base.text(svg_parent, x, y + 4, label[node],
                      **{'text-anchor': 'middle'})
        for node in names:
            base.text(svg_parent, 10,
                      diagram + self.legend_row * int(label[node]),
                      "{0}: {1}".format(label[node], node),
                      **{'font-size': '10'})
