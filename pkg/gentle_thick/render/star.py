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

# Star diagram of a pointed collection at its basepoint.

import math

import xml.etree.ElementTree as XML

from gentle_thick.arcs import SPHERELIKE
from gentle_thick.render import base


class StarRenderer(base.Base):
    """Half-edges at the basepoint in anticlockwise order, drawn in the
    upper half plane above the boundary, with the regions between them
    labelled by their kind."""

    name = 'star'
    radius = 140

    def _point(self, angle, radius):
        cx, cy = self.width / 2.0, self.height - 60
        return cx + radius * math.cos(angle), cy - radius * math.sin(angle)

    def gen_svg(self, svg_parent, pointed):
        report = pointed.regions_and_tau()
        edges = report.half_edges
        b = len(edges)
        cx, cy = self._point(0, 0)

        base.line(svg_parent, 20, cy, self.width - 20, cy,
                  **{'stroke-width': '2'})
        base.circle(svg_parent, cx, cy, 4, fill='black')
        base.text(svg_parent, cx, cy + 20, str(pointed.basepoint),
                  **{'text-anchor': 'middle'})

        tips = {}
        for k, h in enumerate(edges):
            angle = math.pi * (k + 1) / (b + 1)
            x, y = self._point(angle, self.radius)
            tips.setdefault(h.arc, []).append((x, y))
            base.line(svg_parent, cx, cy, x, y)
            lx, ly = self._point(angle, self.radius + 14)
            base.text(svg_parent, lx, ly,
                      "{0}{1}".format(h.arc, h.end[0].upper()),
                      **{'text-anchor': 'middle'})

        for index, points in sorted(tips.items()):
            kind = pointed.arc_kind(index)
            if kind == SPHERELIKE and len(points) == 2:
                (x1, y1), (x2, y2) = points
                XML.SubElement(svg_parent, 'path', {
                    'd': "M {0} {1} Q {2} {3} {4} {5}".format(
                        base.fmt(x1), base.fmt(y1),
                        base.fmt((x1 + x2) / 2.0), base.fmt(min(y1, y2) - 40),
                        base.fmt(x2), base.fmt(y2)),
                    'fill': 'none', 'stroke': 'black',
                    'stroke-dasharray': '4 2'})
            else:
                x, y = points[0]
                base.circle(svg_parent, x, y, 3, fill='white',
                            stroke='black')

        for k in range(b + 1):
            angle = math.pi * (k + 0.5) / (b + 1)
            x, y = self._point(angle, self.radius * 0.55)
            base.text(svg_parent, x, y, "R{0} {1}".format(k, report.kinds[k]),
                      **{'text-anchor': 'middle', 'font-size': '10'})
