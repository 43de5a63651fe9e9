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

from gentle_thick.strings import enumerate_bands
from gentle_thick.strings import enumerate_strings
import gentle_thick.cli.subcommand.base as base


class StringsSubCommand(base.BaseSubCommand):

    verb = 'strings'
    help = "enumerate string classes up to inversion"

    def parse_args(self, subparser):
        cmd = subparser.add_parser(self.verb, help=self.help)
        self.parse_arg_algebra(cmd)

    def enumerate(self, alg, max_letters, n_workers):
        return enumerate_strings(alg, max_letters, n_workers)

    def execute(self, options, config):
        alg = self.load_algebra(options)
        found = self.enumerate(alg, config.search['max_letters'],
                               config.workers['n_workers'])
        words = [str(w) for w in found]
        self.emit(options, config, "\n".join(words), words)
        return 0


class BandsSubCommand(StringsSubCommand):

    verb = 'bands'
    help = "enumerate band classes up to rotation and inversion"

    def enumerate(self, alg, max_letters, n_workers):
        return enumerate_bands(alg, max_letters, n_workers)
