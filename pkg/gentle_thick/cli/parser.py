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

import argparse

import gentle_thick.version

from stevedore import extension


def __version__():
    return "gentle-thick version: %s" % \
        gentle_thick.version.version_info.version_string()


def create_parser():
    """ Create an ArgumentParser object usable by GentleThick.
    """
    parser = argparse.ArgumentParser(prog='gentle-thick')
    parser.add_argument(
        '--conf',
        dest='conf',
        help="configuration file")
    parser.add_argument(
        '-l',
        '--log_level',
        dest='log_level',
        default='info',
        help="log level (default: %(default)s)")
    parser.add_argument(
        '--version',
        dest='version',
        action='version',
        version=__version__(),
        help="show version")
    parser.add_argument(
        '--field-order',
        type=int,
        dest='field_order',
        default=None,
        help="prime order of the coefficient field; overrides the "
        "configuration file and the environment")
    parser.add_argument(
        '--max-letters',
        type=int,
        dest='max_letters',
        default=None,
        help="letter bound for enumerations and searches")
    parser.add_argument(
        '--max-depth',
        type=int,
        dest='max_depth',
        default=None,
        help="recursion bound for surgery on self-intersections")
    parser.add_argument(
        '--format',
        dest='format',
        choices=['text', 'json'],
        default=None,
        help="output encoding (default: text)")
    parser.add_argument(
        '--workers',
        type=int,
        dest='n_workers',
        default=None,
        help="number of workers to use, 0 for autodetection and 1 "
        "for just one worker.")

    subparser = parser.add_subparsers(
        dest='command',
        help="operation to perform")

    extension_manager = extension.ExtensionManager(
        namespace='gentle_thick.cli.subcommands',
        invoke_on_load=True,
    )

    def parse_subcommand_args(ext, subparser):
        ext.obj.parse_args(subparser)

    extension_manager.map(parse_subcommand_args, subparser)

    return parser
