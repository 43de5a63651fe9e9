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

from gentle_thick.arcs import reduce_to_collection
from gentle_thick.strings import GradedBand
from gentle_thick import thick
import gentle_thick.cli.subcommand.base as base


def collection_text(strings, basepoint=None):
    lines = []
    if basepoint is not None:
        lines.append("basepoint: {0}".format(basepoint))
    lines.extend(str(s) for s in strings)
    return "\n".join(lines) + "\n"


class ReduceSubCommand(base.BaseSubCommand):

    def parse_args(self, subparser):
        cmd = subparser.add_parser(
            'reduce',
            help="replace generating strings by a non-crossing collection")
        self.parse_arg_algebra(cmd)
        cmd.add_argument('objects', nargs='*', metavar='STRING',
                         help="string literals")
        cmd.add_argument('--strings', dest='strings_file', default=None,
                         help="a .str file")
        cmd.add_argument('--max-rounds', type=int, default=64,
                         help="bound on crossing resolutions")
        self.parse_option_output(cmd, help="write the result as a .coll "
                                 "file")

    def execute(self, options, config):
        alg = self.load_algebra(options)
        generators = self.load_objects(alg, options,
                                       path_attr='strings_file')
        if any(isinstance(g, GradedBand) for g in generators):
            self.require(None, "reduce takes strings; use eliminate-bands "
                         "first")
        reduction = reduce_to_collection(
            alg, generators, max_rounds=options.max_rounds,
            max_depth=config.search['max_depth'])
        text = collection_text(reduction.strings)
        if options.output:
            self.write_artifact(options.output, text)
        summary = text + "crossings: {0}".format(
            " ".join(str(m) for m in reduction.measures))
        self.emit(options, config, summary,
                  {'strings': [str(s) for s in reduction.strings],
                   'measures': reduction.measures})
        return 0


class EliminateBandsSubCommand(base.BaseSubCommand):

    def parse_args(self, subparser):
        cmd = subparser.add_parser(
            'eliminate-bands',
            help="replace band generators by strings of the same thick "
            "subcategory")
        self.parse_arg_algebra(cmd)
        cmd.add_argument('objects', nargs='*', metavar='OBJECT',
                         help="string or band literals")
        cmd.add_argument('--strings', dest='strings_file', default=None,
                         help="a .str file")

    def execute(self, options, config):
        alg = self.load_algebra(options)
        generators = self.load_objects(alg, options,
                                       path_attr='strings_file')
        elimination = thick.eliminate_bands(
            alg, generators, p=config.field_order,
            max_letters=config.search['max_letters'],
            n_workers=config.workers['n_workers'],
            family_letters=config.oracle['fingerprint_letters'])
        lines = [elimination.status]
        lines.extend(str(s) for s in elimination.strings)
        for r in elimination.replacements:
            lines.append("{0} -> {1} (through {2}, shift {3}, {4})".format(
                r.band, r.string, r.through, r.shift, r.direction))
        result = {
            'status': elimination.status,
            'strings': [str(s) for s in elimination.strings],
            'replacements': [{'band': str(r.band), 'string': str(r.string),
                              'through': str(r.through), 'shift': r.shift,
                              'direction': r.direction}
                             for r in elimination.replacements]}
        self.emit(options, config, "\n".join(lines), result)
        return 1 if elimination.status == thick.NO_STRING else 0
