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

from gentle_thick.arcs import Arc
from gentle_thick.arcs import SPHERELIKE
from gentle_thick.arcs import power_string
from gentle_thick.stabilization import stabilization_check
import gentle_thick.cli.subcommand.base as base


class ClassifySubCommand(base.BaseSubCommand):

    def parse_args(self, subparser):
        classify = subparser.add_parser(
            'classify',
            help="exceptional, spherelike or crossing, with the arc ends "
            "and self-intersections")
        self.parse_arg_algebra(classify)
        classify.add_argument('objects', nargs='*', metavar='STRING',
                              help="string literals")
        classify.add_argument('--strings', dest='strings_file',
                              default=None, help="a .str file")
        classify.add_argument('--stabilize', dest='stabilize',
                              action='append', default=[],
                              metavar='STRING',
                              help="for spherelike strings, tabulate "
                              "morphisms up to shift from their powers to "
                              "STRING (repeatable)")
        classify.add_argument('--powers', type=int, default=6,
                              help="highest power tabulated by --stabilize "
                              "(default %(default)s)")

    def stabilization(self, alg, arc, tests, options, p):
        lines = []
        data = []
        decomposition = power_string(alg, arc.string, p)
        lines.append("  powers: {0} ({1})^(i-1) {2}".format(
            " ".join(str(l) for l in decomposition.prefix) or "-",
            " ".join(str(l) for l in decomposition.loop),
            " ".join(str(l) for l in decomposition.suffix) or "-"))
        for t in tests:
            report = stabilization_check(
                alg, arc.string, self.to_complex(alg, t, p),
                options.powers, p)
            line = "  to {0}: {1}, {2}".format(
                t, " ".join(str(v) for v in report.values), report.verdict)
            if report.slope:
                line += " by {0} from power {1}".format(report.slope,
                                                        report.start)
            lines.append(line)
            data.append({'test': str(t), 'values': report.values,
                         'verdict': report.verdict,
                         'slope': report.slope, 'start': report.start})
        return lines, data

    def execute(self, options, config):
        alg = self.load_algebra(options)
        strings = self.load_objects(alg, options, path_attr='strings_file')
        tests = self.load_objects(alg, options, attr='stabilize')
        p = config.field_order
        lines = []
        result = []
        for s in strings:
            arc = Arc(alg, s, p)
            lines.append("{0}: {1}, hom up to shift {2}, ends {3} {4}, "
                         "self-intersections {5}".format(
                             s, arc.kind, arc.total, arc.ends[0],
                             arc.ends[1], arc.self_crossings))
            entry = {'string': str(s), 'kind': arc.kind,
                     'total': arc.total, 'ends': list(arc.ends),
                     'self_crossings': arc.self_crossings}
            if tests and arc.kind == SPHERELIKE:
                more, entry['stabilization'] = self.stabilization(
                    alg, arc, tests, options, p)
                lines.extend(more)
            result.append(entry)
        self.emit(options, config, "\n".join(lines), result)
        return 0
