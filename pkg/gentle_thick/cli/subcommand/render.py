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

import sys

from gentle_thick.arcs import curve_of
from gentle_thick.cli.subcommand.poset import build_poset
from gentle_thick.cli.subcommand.poset import parse_poset_options
from gentle_thick import parser as literals
from gentle_thick import pointed
from gentle_thick.registry import RendererRegistry
from gentle_thick import utils
import gentle_thick.cli.subcommand.base as base


class RenderSubCommand(base.BaseSubCommand):

    def parse_args(self, subparser):
        cmd = subparser.add_parser(
            'render',
            help="schematic SVG diagrams")
        self.parse_arg_algebra(cmd)
        cmd.add_argument('kind', choices=['star', 'complex', 'hasse'],
                         help="star diagram of a pointed collection, "
                         "unfolded complex or Hasse diagram")
        cmd.add_argument('--collection', default=None,
                         help="a .coll file (star)")
        cmd.add_argument('--basepoint', default=None,
                         help="marked point (star)")
        cmd.add_argument('--object', default=None,
                         help="string or band literal (complex)")
        parse_poset_options(cmd)
        cmd.add_argument('--reproducible', action='store_true',
                         default=False,
                         help="omit the generation timestamp")
        self.parse_option_output(cmd, help="SVG file (default: standard "
                                 "output)")

    def _data(self, alg, options, config):
        if options.kind == 'star':
            path = self.require(options.collection,
                                "star diagrams need --collection")
            collection = self.load_collection(alg, path)
            self.require(collection.strings or None, "empty collection")
            basepoint = options.basepoint or collection.basepoint or \
                curve_of(alg, collection.strings[0]).ends[0]
            return pointed.to_pointed(alg, collection.strings, basepoint)
        if options.kind == 'complex':
            literal = self.require(options.object,
                                   "complex diagrams need --object")
            return self.to_complex(alg, literals.parse_object(alg, literal),
                                   config.field_order)
        return build_poset(alg, options, config)

    def execute(self, options, config):
        alg = self.load_algebra(options)
        registry = RendererRegistry(config)
        document = registry.render(options.kind,
                                   self._data(alg, options, config))
        if options.output:
            self.write_artifact(options.output, document.output())
        else:
            utils.wrap_stream(sys.stdout).write(document.output())
        return 0
