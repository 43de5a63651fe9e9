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

import numpy as np

from gentle_thick.complexes import mapping_cone
from gentle_thick import formatter
from gentle_thick import oracle
from gentle_thick import parser as literals
import gentle_thick.cli.subcommand.base as base


class HomSubCommand(base.BaseSubCommand):

    def parse_args(self, subparser):
        hom = subparser.add_parser(
            'hom',
            help="dimensions of morphisms to every shift of the target")
        self.parse_arg_algebra(hom)
        hom.add_argument('--from', dest='source', required=True,
                         help="string or band literal")
        hom.add_argument('--to', dest='target', required=True,
                         help="string or band literal")

    def execute(self, options, config):
        alg = self.load_algebra(options)
        p = config.field_order
        A = self.to_complex(
            alg, literals.parse_object(alg, options.source), p)
        B = self.to_complex(
            alg, literals.parse_object(alg, options.target), p)
        table = oracle.hom_table(A, B, pad=config.oracle['window_pad'])
        self.emit(options, config, str(table), table.as_dict())
        return 0


class ConeSubCommand(base.BaseSubCommand):

    def parse_args(self, subparser):
        cone = subparser.add_parser(
            'cone',
            help="mapping cone of a morphism given in the basis of a "
            "morphism space")
        self.parse_arg_algebra(cone)
        cone.add_argument('--from', dest='source', required=True,
                          help="string or band literal")
        cone.add_argument('--to', dest='target', required=True,
                          help="string or band literal")
        cone.add_argument('--shift', type=int, default=0,
                          help="morphisms into this shift of the target")
        cone.add_argument('--coefficients', default=None,
                          help="space separated coordinates of the morphism "
                          "(default: the first basis vector)")
        cone.add_argument('--check', action='store_true', default=False,
                          help="also decide whether the cone is "
                          "indecomposable")

    def execute(self, options, config):
        alg = self.load_algebra(options)
        p = config.field_order
        A = self.to_complex(
            alg, literals.parse_object(alg, options.source), p)
        B = self.to_complex(
            alg, literals.parse_object(alg, options.target), p)
        space = oracle.hom_space(A, B, options.shift)
        basis = space.basis_vectors()
        if not basis:
            self.emit(options, config, "no morphisms",
                      {'dimension': 0, 'cone': None})
            return 1
        if options.coefficients:
            coeffs = [int(c) for c in options.coefficients.split()]
            self.require(coeffs if len(coeffs) == len(basis) else None,
                         "expected {0} coefficients".format(len(basis)))
            vector = sum(c * v for c, v in zip(coeffs, basis)) % p
        else:
            vector = basis[0]
        if not np.any(vector):
            self.require(None, "the zero morphism has no interesting cone")
        cone = mapping_cone(space.vector_to_map(vector))
        text = formatter.format_complex(cone)
        result = {'dimension': len(basis),
                  'cone': formatter.complex_to_dict(cone)}
        if options.check:
            verdict = oracle.indecomposability(
                cone, config.oracle['idempotent_bound'])
            text += "\n{0}".format(verdict.status)
            result['indecomposability'] = verdict.status
            self.emit(options, config, text, result)
            return 3 if verdict.status == 'undecided' else 0
        self.emit(options, config, text, result)
        return 0
