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

from gentle_thick.arcs import curve_of
from gentle_thick import pointed
from gentle_thick.cli.subcommand.reduce import collection_text
import gentle_thick.cli.subcommand.base as base


class PointedSubCommand(base.BaseSubCommand):

    verb = 'pointed'
    help = "rewrite a connected collection to point at a marked point"

    def parse_args(self, subparser):
        cmd = subparser.add_parser(self.verb, help=self.help)
        self.parse_arg_algebra(cmd)
        cmd.add_argument('collection', help="a .coll file")
        cmd.add_argument('--basepoint', default=None,
                         help="marked point (default: the file header, "
                         "else the first end of the first arc)")
        self.parse_option_output(cmd, help="write the pointed collection "
                                 "as a .coll file")
        return cmd

    def make_pointed(self, options):
        alg = self.load_algebra(options)
        collection = self.load_collection(alg, options.collection)
        self.require(collection.strings or None, "empty collection")
        basepoint = options.basepoint or collection.basepoint
        if basepoint is None:
            basepoint = curve_of(alg, collection.strings[0]).ends[0]
        return alg, pointed.to_pointed(alg, collection.strings, basepoint)

    def execute(self, options, config):
        alg, result = self.make_pointed(options)
        text = collection_text(result.strings, result.basepoint)
        if options.output:
            self.write_artifact(options.output, text)
        lines = [text.rstrip('\n')]
        for step in result.steps:
            if step.dropped:
                lines.append("# arc {0} dropped at {1}, rerouting through "
                             "arc {2} repeats another arc".format(
                                 step.replaced, step.pivot, step.through))
                continue
            lines.append("# arc {0} rerouted through arc {1} at "
                         "{2}".format(step.replaced, step.through,
                                      step.pivot))
        self.emit(options, config, "\n".join(lines), {
            'basepoint': result.basepoint,
            'strings': [str(s) for s in result.strings],
            'steps': [dict(s._asdict()) for s in result.steps]})
        return 0


class RegionsSubCommand(PointedSubCommand):

    verb = 'regions'
    help = "regions at the basepoint of a pointed collection and tau"

    def parse_args(self, subparser):
        cmd = super(RegionsSubCommand, self).parse_args(subparser)
        cmd.add_argument('--psi', action='store_true', default=False,
                         help="also follow every non-terminal region to its "
                         "path")
        return cmd

    def execute(self, options, config):
        alg, result = self.make_pointed(options)
        report = result.regions_and_tau()
        lines = []
        regions = []
        for k in sorted(report.kinds):
            kind = report.kinds[k]
            entry = {'region': k, 'kind': kind,
                     'tau': report.tau.get(k),
                     'orbit': report.orbits.get(k)}
            line = "R{0}: {1}".format(k, kind)
            if k in report.orbits:
                line += ", orbit {0}".format(
                    " ".join(str(i) for i in report.orbits[k]))
            if options.psi and kind != pointed.TERMINAL:
                psi = pointed.psi_path(result, k)
                line += ", {0} {1}".format(psi.tag, psi.string)
                entry['psi'] = {'tag': psi.tag, 'string': str(psi.string)}
            lines.append(line)
            regions.append(entry)
        self.emit(options, config, "\n".join(lines), {
            'basepoint': result.basepoint,
            'half_edges': ["{0}{1}".format(h.arc, h.end[0].upper())
                           for h in report.half_edges],
            'regions': regions})
        return 0
