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

# Manage gentle-thick configuration sources, defaults, and access.

from collections import defaultdict
import io
import logging
import os

from six.moves import configparser, StringIO
from six import PY2

from gentle_thick.errors import GentleThickConfigException

__all__ = [
    "GentleThickConfig"
]

logger = logging.getLogger(__name__)

FIELD_ORDER_ENV = 'GENTLE_THICK_FIELD_ORDER'

DEFAULT_CONF = """
[oracle]
field_order=2
idempotent_bound=12
fingerprint_letters=2
window_pad=1

[search]
max_letters=6
max_depth=8
factor_slack=2
closure_depth=8
max_arcs=3

[output]
format=text
reproducible=False

[workers]
n_workers=1
"""


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class GentleThickConfig(object):

    def __init__(self, config_filename=None, config_file_required=False):
        """
        Resolve the priority between all sources of configuration: the
        built-in defaults, an ini file and the environment. The resolved
        values are exposed per section as dictionaries (``oracle``,
        ``search``, ``output``, ``workers``) so that library users and the
        command line tool read them the same way.

        :arg str config_filename: configuration file to read instead of the
            local/user/global lookup.
        :arg bool config_file_required: raise instead of warning when the
            configuration file cannot be read.
        """

        config_parser = self._init_defaults()

        global_conf = '/etc/gentle_thick/gentle_thick.ini'
        user_conf = os.path.join(os.path.expanduser('~'), '.config',
                                 'gentle_thick', 'gentle_thick.ini')
        local_conf = os.path.join(os.path.dirname(__file__),
                                  'gentle_thick.ini')
        if config_filename is not None:
            conf = config_filename
        elif os.path.isfile(local_conf):
            conf = local_conf
        elif os.path.isfile(user_conf):
            conf = user_conf
        else:
            conf = global_conf

        config_fp = None
        try:
            config_fp = self._read_config_file(conf)
        except GentleThickConfigException:
            if config_file_required:
                raise
            if config_filename is not None:
                logger.warning("Config file, {0}, not found. Using default "
                               "config values.".format(conf))

        if config_fp is not None:
            with config_fp:
                if PY2:
                    config_parser.readfp(config_fp)
                else:
                    config_parser.read_file(config_fp)

        self.config_parser = config_parser

        self.oracle = defaultdict(lambda: None)
        self.search = defaultdict(lambda: None)
        self.output = defaultdict(lambda: None)
        self.workers = defaultdict(lambda: None)

        self._setup()

    def _init_defaults(self):
        """ Initialize default configuration values using DEFAULT_CONF
        """
        config = configparser.ConfigParser()
        if PY2:
            config.readfp(StringIO(DEFAULT_CONF))
        else:
            config.read_file(StringIO(DEFAULT_CONF))
        return config

    def _read_config_file(self, config_filename):
        if os.path.isfile(config_filename):
            logger.debug("Reading config from {0}".format(config_filename))
            return io.open(config_filename, 'r', encoding='utf-8')
        raise GentleThickConfigException(
            "A valid configuration file is required. "
            "\n{0} is not valid.".format(config_filename))

    def _getint(self, section, key):
        try:
            return self.config_parser.getint(section, key)
        except ValueError:
            raise GentleThickConfigException(
                "{0}.{1} must be an integer".format(section, key))

    def _setup(self):
        config = self.config_parser

        for key in ('field_order', 'idempotent_bound',
                    'fingerprint_letters', 'window_pad'):
            self.oracle[key] = self._getint('oracle', key)

        env_order = os.environ.get(FIELD_ORDER_ENV)
        if env_order:
            try:
                self.oracle['field_order'] = int(env_order)
            except ValueError:
                raise GentleThickConfigException(
                    "{0} must be an integer, got '{1}'".format(
                        FIELD_ORDER_ENV, env_order))
            logger.debug("Field order {0} taken from {1}".format(
                env_order, FIELD_ORDER_ENV))

        for key in ('max_letters', 'max_depth', 'factor_slack',
                    'closure_depth', 'max_arcs'):
            self.search[key] = self._getint('search', key)

        self.output['format'] = config.get('output', 'format')
        self.output['reproducible'] = config.getboolean('output',
                                                        'reproducible')
        self.workers['n_workers'] = self._getint('workers', 'n_workers')

    def validate(self):
        if not is_prime(self.oracle['field_order']):
            raise GentleThickConfigException(
                "field order must be prime, got {0}".format(
                    self.oracle['field_order']))
        if self.output['format'] not in ('text', 'json'):
            raise GentleThickConfigException(
                "output format must be 'text' or 'json'")
        for section in (self.oracle, self.search):
            for key, value in section.items():
                if value is not None and value < 0:
                    raise GentleThickConfigException(
                        "{0} must not be negative".format(key))

    @property
    def field_order(self):
        return self.oracle['field_order']
