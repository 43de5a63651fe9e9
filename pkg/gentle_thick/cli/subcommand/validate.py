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

from gentle_thick.errors import NotGentleError
from gentle_thick import formatter
import gentle_thick.cli.subcommand.base as base

logger = logging.getLogger(__name__)


class ValidateSubCommand(base.BaseSubCommand):

    def parse_args(self, subparser):
        validate = subparser.add_parser(
            'validate',
            help="check the gentle and homological smoothness conditions")
        self.parse_arg_algebra(validate)
        validate.add_argument(
            '--canonical',
            action='store_true',
            default=False,
            help="print the canonical form of the algebra description")

    def execute(self, options, config):
        try:
            alg = self.load_algebra(options)
        except NotGentleError as exc:
            text = str(exc)
            result = {'gentle': False,
                      'violations': [{'clause': v.clause,
                                      'witness': v.witness}
                                     for v in exc.violations]}
            self.emit(options, config, text, result)
            return 1

        smooth, witness = alg.is_homologically_smooth()
        if smooth:
            text = "gentle, homologically smooth"
        else:
            text = "gentle, not homologically smooth (cycle {0})".format(
                " ".join(witness))
        if options.canonical:
            text = formatter.format_algebra(alg) + text
        result = {'gentle': True, 'smooth': smooth, 'witness': witness,
                  'algebra': formatter.algebra_to_dict(alg)}
        self.emit(options, config, text, result)
        return 0 if smooth else 1
