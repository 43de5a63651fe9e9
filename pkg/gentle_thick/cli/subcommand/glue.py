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
from gentle_thick.arcs import glue
from gentle_thick.arcs import intersections
from gentle_thick.arcs import LEFT
from gentle_thick.arcs import RIGHT
from gentle_thick import oracle
from gentle_thick import parser as literals
import gentle_thick.cli.subcommand.base as base


class GlueSubCommand(base.BaseSubCommand):

    def parse_args(self, subparser):
        cmd = subparser.add_parser(
            'glue',
            help="join two arcs at a common marked point")
        self.parse_arg_algebra(cmd)
        cmd.add_argument('first', help="string literal")
        cmd.add_argument('first_end', choices=[LEFT, RIGHT],
                         help="end of the first arc")
        cmd.add_argument('second', help="string literal")
        cmd.add_argument('second_end', choices=[LEFT, RIGHT],
                         help="end of the second arc")
        cmd.add_argument('--certify', action='store_true', default=False,
                         help="find a morphism whose cone is the result")

    def execute(self, options, config):
        alg = self.load_algebra(options)
        p = config.field_order
        s = literals.parse_string(alg, options.first)
        t = literals.parse_string(alg, options.second)
        # both counts are compared with the hom oracle
        found = intersections(alg, Arc(alg, s, p), Arc(alg, t, p), p,
                              check=True)
        lines = ["{0} interior crossings, {1} shared marked points".format(
            found.interior, len(found.shared_endpoints))]
        test_family = None
        if options.certify:
            test_family = oracle.default_test_family(
                alg, p, config.oracle['fingerprint_letters'])
        results = glue(alg, s, options.first_end, t, options.second_end,
                       p=p, certify=options.certify,
                       test_family=test_family)
        if not results:
            lines.append("ends lie on different marked points")
            self.emit(options, config, "\n".join(lines), [])
            return 1
        data = []
        for r in results:
            if r.string is None:
                lines.append("the arcs cancel")
            else:
                lines.append("{0} (shift {1})".format(r.string, r.shift))
            entry = {'string': None if r.string is None else str(r.string),
                     'shift': r.shift}
            if r.certificate is not None:
                lines.append("certificate: {0} into shift {1}, offset "
                             "{2}".format(*r.certificate))
                direction, shift, offset = r.certificate
                entry['certificate'] = {'direction': direction,
                                        'shift': int(shift),
                                        'offset': int(offset)}
            data.append(entry)
        self.emit(options, config, "\n".join(lines), data)
        return 0
