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

import abc
import logging
import sys

import six

from gentle_thick.complexes import band_tube_complex
from gentle_thick.complexes import band_to_complex
from gentle_thick.complexes import string_to_complex
from gentle_thick.errors import PreconditionError
from gentle_thick import formatter
from gentle_thick import parser as literals
from gentle_thick.strings import GradedBand
from gentle_thick import utils

logger = logging.getLogger(__name__)


@six.add_metaclass(abc.ABCMeta)
class BaseSubCommand(object):
    """Base class for gentle-thick subcommands, loaded as stevedore
    extensions so that third parties can add verbs.
    """
    def __init__(self):
        pass

    @abc.abstractmethod
    def parse_args(self, subparsers):
        """Define subcommand arguments.

        :param subparsers
          A sub parser object. Implementations of this method should
          create a new subcommand parser by calling
            parser = subparsers.add_parser('command-name', ...)
        """

    @abc.abstractmethod
    def execute(self, options, config):
        """Execute subcommand behavior and return the exit status.

        :param config
          GentleThickConfig object containing final configuration from
          config files, command line arguments, and environment variables.
        """

    @staticmethod
    def parse_arg_algebra(parser):
        parser.add_argument(
            'algebra',
            help="path to an .alg file")

    @staticmethod
    def parse_option_output(parser, help="write the artifact to this file"):
        parser.add_argument(
            '-o',
            dest='output',
            default=None,
            help=help)

    @staticmethod
    def load_algebra(options):
        return literals.load_algebra(options.algebra)

    @staticmethod
    def load_objects(alg, options, attr='objects', path_attr=None):
        """Literals given on the command line followed by the entries of
        a ``.str`` file."""
        objects = [literals.parse_object(alg, text)
                   for text in getattr(options, attr, None) or []]
        path = getattr(options, path_attr, None) if path_attr else None
        if path:
            objects.extend(literals.load_strings(alg, path))
        return objects

    @staticmethod
    def load_collection(alg, path):
        return literals.load_collection(alg, path)

    @staticmethod
    def to_complex(alg, obj, p):
        if isinstance(obj, GradedBand):
            if obj.dimension > 1:
                return band_tube_complex(alg, obj, obj.dimension, p)
            return band_to_complex(alg, obj, p)
        return string_to_complex(alg, obj, p)

    @staticmethod
    def require(value, message):
        if value is None:
            raise PreconditionError(message)
        return value

    def emit(self, options, config, text, result):
        """Write ``text``, or the JSON document for ``result``, to
        standard output."""
        if config.output['format'] == 'json':
            text = formatter.json_document(options.command, result)
        utils.write_text(utils.wrap_stream(sys.stdout), text)

    @staticmethod
    def write_artifact(path, data):
        if isinstance(data, six.text_type):
            data = data.encode('utf-8')
        with open(path, 'wb') as fp:
            fp.write(data)
        logger.info("Wrote {0}".format(path))
