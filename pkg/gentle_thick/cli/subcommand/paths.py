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

import gentle_thick.cli.subcommand.base as base


class PathsSubCommand(base.BaseSubCommand):

    def parse_args(self, subparser):
        paths = subparser.add_parser(
            'paths',
            help="list permitted paths between vertices")
        self.parse_arg_algebra(paths)
        paths.add_argument('--from', dest='source', default=None,
                           help="start vertex (default: all)")
        paths.add_argument('--to', dest='target', default=None,
                           help="end vertex (default: all)")

    def execute(self, options, config):
        alg = self.load_algebra(options)
        sources = [options.source] if options.source else alg.vertices
        targets = [options.target] if options.target else alg.vertices
        lines = []
        result = []
        for v in sources:
            for u in targets:
                found = [str(q) for q in alg.permitted_paths(v, u)]
                if not found:
                    continue
                lines.append("{0} -> {1}: {2}".format(v, u, " ".join(found)))
                result.append({'from': v, 'to': u, 'paths': found})
        self.emit(options, config, "\n".join(lines), result)
        return 0
