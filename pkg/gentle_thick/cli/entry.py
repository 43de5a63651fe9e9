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
import sys

from stevedore import extension

from gentle_thick.cli.parser import create_parser
from gentle_thick.config import GentleThickConfig
from gentle_thick import errors
from gentle_thick import version

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger()

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BOUND = 3

# most specific first
EXIT_CODES = (
    (errors.BoundExhausted, EXIT_BOUND),
    (errors.Undecided, EXIT_BOUND),
    (errors.AlgebraFormatError, EXIT_USAGE),
    (errors.GentleThickConfigException, EXIT_USAGE),
    (errors.PreconditionError, EXIT_USAGE),
    (errors.GentleThickException, EXIT_NEGATIVE),
    # unreadable input files
    (EnvironmentError, EXIT_USAGE),
)


def __version__():
    return "gentle-thick version: %s" % \
        version.version_info.version_string()


def exit_code(exc):
    for cls, code in EXIT_CODES:
        if isinstance(exc, cls):
            return code
    raise exc


class GentleThick(object):
    """ This is the entry point class for the `gentle-thick` command line
    tool. Tests and scripts may pass argument lists straight to this class
    instead of running the tool in a subprocess; configuration reaches the
    subcommands only through an .ini file, the environment and the global
    flags.
    """

    def __init__(self, args=None, **kwargs):
        if args is None:
            args = []
        self.parser = create_parser()
        self.options = self.parser.parse_args(args)

        self.config = GentleThickConfig(self.options.conf, **kwargs)

        if not self.options.command:
            self.parser.error("Must specify a 'command' to be performed")

        if (self.options.log_level is not None):
            self.options.log_level = getattr(logging,
                                             self.options.log_level.upper(),
                                             logger.getEffectiveLevel())
            logger.setLevel(self.options.log_level)

        self._parse_additional()
        self.config.validate()

    def _set_config(self, target, option):
        """
        Sets the option in target only if the given option was explicitly set
        """
        opt_val = getattr(self.options, option, None)
        if opt_val is not None:
            target[option] = opt_val

    def _parse_additional(self):
        self._set_config(self.config.oracle, 'field_order')
        self._set_config(self.config.search, 'max_letters')
        self._set_config(self.config.search, 'max_depth')
        self._set_config(self.config.output, 'format')
        self._set_config(self.config.workers, 'n_workers')
        if getattr(self.options, 'reproducible', False):
            self.config.output['reproducible'] = True

    def execute(self):

        extension_manager = extension.ExtensionManager(
            namespace='gentle_thick.cli.subcommands',
            invoke_on_load=True,)

        ext = extension_manager[self.options.command]
        return ext.obj.execute(self.options, self.config) or EXIT_OK


def main():
    argv = sys.argv[1:]
    try:
        tool = GentleThick(argv)
        status = tool.execute()
    except (errors.GentleThickException, EnvironmentError) as exc:
        status = exit_code(exc)
        logger.error(str(exc))
    sys.exit(status)
