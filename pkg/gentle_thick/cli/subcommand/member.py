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

from gentle_thick import formatter
from gentle_thick import parser as literals
from gentle_thick import thick
import gentle_thick.cli.subcommand.base as base

EXIT_STATUS = {
    thick.GENERATED: 0,
    thick.NOT_GENERATED: 1,
    thick.EXHAUSTED: 3,
}


class MemberSubCommand(base.BaseSubCommand):

    def parse_args(self, subparser):
        cmd = subparser.add_parser(
            'member',
            help="decide whether a string is generated by a collection")
        self.parse_arg_algebra(cmd)
        cmd.add_argument('--target', required=True, help="string literal")
        cmd.add_argument('--collection', required=True, help="a .coll file")
        cmd.add_argument('--max-factors', type=int, default=None,
                         help="bound on the number of concatenated arcs")
        self.parse_option_output(cmd, help="write the certificate as a "
                                 ".cert file")

    def execute(self, options, config):
        alg = self.load_algebra(options)
        target = literals.parse_string(alg, options.target)
        collection = self.load_collection(alg, options.collection)
        membership = thick.is_generated(
            alg, target, collection.strings,
            max_factors=options.max_factors,
            factor_slack=config.search['factor_slack'])
        if options.output:
            comparison = thick.Comparison(membership.status,
                                          [(target, membership)])
            self.write_artifact(options.output, formatter.certificates_to_yaml(
                [(str(target), options.collection, comparison)]))
        self.emit(options, config, formatter.format_membership(membership),
                  formatter.membership_to_dict(membership))
        return EXIT_STATUS[membership.status]


class LeqSubCommand(base.BaseSubCommand):

    verb = 'leq'
    help = "whether every arc of the first collection is generated by the " \
        "second"

    def parse_args(self, subparser):
        cmd = subparser.add_parser(self.verb, help=self.help)
        self.parse_arg_algebra(cmd)
        cmd.add_argument('first', help="a .coll file")
        cmd.add_argument('second', help="a .coll file")
        self.parse_option_output(cmd, help="write the certificates as a "
                                 ".cert file")

    def compare(self, alg, a, b, config):
        return thick.leq_gen(alg, a, b,
                             factor_slack=config.search['factor_slack'])

    def execute(self, options, config):
        alg = self.load_algebra(options)
        a = self.load_collection(alg, options.first).strings
        b = self.load_collection(alg, options.second).strings
        comparison = self.compare(alg, a, b, config)
        if options.output:
            self.write_artifact(options.output, formatter.certificates_to_yaml(
                [(options.first, options.second, comparison)]))
        self.emit(options, config, formatter.format_comparison(comparison),
                  formatter.comparison_to_dict(comparison))
        return EXIT_STATUS[comparison.status]


class EquivSubCommand(LeqSubCommand):

    verb = 'equiv'
    help = "whether two collections generate each other"

    def compare(self, alg, a, b, config):
        return thick.equiv_gen(alg, a, b,
                               factor_slack=config.search['factor_slack'])
