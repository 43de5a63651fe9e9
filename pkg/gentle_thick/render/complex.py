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

# Unfolded diagram of a complex of projectives.

from gentle_thick.complexes import elem_str
from gentle_thick.render import base


class ComplexRenderer(base.Base):
    """Degrees as columns, indecomposable summands as nodes and the
    nonzero differential components as labelled edges."""

    name = 'complex'
    column = 120
    row = 60
    margin = 60

    def gen_svg(self, svg_parent, complex_):
        degrees = complex_.degrees
        tallest = max([len(complex_.term(i)) for i in degrees] or [1])
        width = 2 * self.margin + self.column * max(len(degrees) - 1, 0)
        height = 2 * self.margin + self.row * max(tallest - 1, 0)
        svg_parent.set('width', str(width))
        svg_parent.set('height', str(height))
        svg_parent.set('viewBox', "0 0 {0} {1}".format(width, height))

        def position(i, slot):
            x = self.margin + self.column * degrees.index(i)
            return x, self.margin + self.row * slot

        for i in degrees:
            if i not in complex_.differentials:
                continue
            for r, row in enumerate(complex_.d(i)):
                for c, entry in enumerate(row):
                    if not entry:
                        continue
                    x1, y1 = position(i, c)
                    x2, y2 = position(i - 1, r)
                    base.line(svg_parent, x1, y1, x2, y2, stroke='gray')
                    base.text(svg_parent, (x1 + x2) / 2.0,
                              (y1 + y2) / 2.0 - 4, elem_str(entry),
                              **{'text-anchor': 'middle', 'font-size': '10'})

        for i in degrees:
            x, _ = position(i, 0)
            base.text(svg_parent, x, self.margin / 2.0, str(i),
                      **{'text-anchor': 'middle', 'font-weight': 'bold'})
            for slot, vertex in enumerate(complex_.term(i)):
                x, y = position(i, slot)
                base.circle(svg_parent, x, y, 14, fill='white',
                            stroke='black')
                base.text(svg_parent, x, y + 4, "P{0}".format(vertex),
                          **{'text-anchor': 'middle'})
