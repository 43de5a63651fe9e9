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

import logging

from gentle_thick import formatter
from gentle_thick import thick
import gentle_thick.cli.subcommand.base as base

logger = logging.getLogger(__name__)


def build_poset(alg, options, config):
    max_letters = options.poset_letters or config.search['max_letters']
    return thick.poset(alg, max_letters=max_letters,
                       max_arcs=options.max_arcs or config.search['max_arcs'],
                       p=config.field_order,
                       n_workers=config.workers['n_workers'],
                       bounds={'factor_slack': config.search['factor_slack']})


def parse_poset_options(parser):
    parser.add_argument('--letters', dest='poset_letters', type=int,
                        default=None,
                        help="letter bound for candidate arcs (default: "
                        "--max-letters)")
    parser.add_argument('--max-arcs', dest='max_arcs', type=int,
                        default=None,
                        help="largest collection size to enumerate")


class PosetSubCommand(base.BaseSubCommand):

    def parse_args(self, subparser):
        cmd = subparser.add_parser(
            'poset',
            help="classes of arc collections ordered by generation")
        self.parse_arg_algebra(cmd)
        parse_poset_options(cmd)
        cmd.add_argument('--cross-check', dest='cross_check',
                         action='store_true', default=False,
                         help="recompute every class by closing its "
                         "representative under cones")
        self.parse_option_output(cmd, help="write the Hasse diagram as a "
                                 ".poset (Graphviz) file")

    def execute(self, options, config):
        alg = self.load_algebra(options)
        result = build_poset(alg, options, config)
        if options.output:
            self.write_artifact(options.output,
                                formatter.poset_to_dot(result))
        text = formatter.format_poset(result)
        data = formatter.poset_to_dict(result)
        disagreements = []
        if options.cross_check:
            disagreements = thick.cross_check(
                alg, result, depth=config.search['closure_depth'],
                p=config.field_order,
                family_letters=config.oracle['fingerprint_letters'])
            text += "\ncross-check: {0}".format(
                ", ".join(disagreements) or "agrees")
            data['cross_check'] = disagreements
        self.emit(options, config, text, data)
        return 3 if result.unknown or disagreements else 0
