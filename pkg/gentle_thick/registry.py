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

# Registry of schematic renderers.

import logging
import pkg_resources

from gentle_thick.errors import GentleThickException

__all__ = [
    "RendererRegistry"
]

logger = logging.getLogger(__name__)


class RendererRegistry(object):
    """Renderers found under the ``gentle_thick.renderers`` entry point
    group, keyed by entry point name."""

    def __init__(self, config=None):
        self.config = config
        self.renderers = {}

        for entrypoint in pkg_resources.iter_entry_points(
                group='gentle_thick.renderers'):
            Renderer = entrypoint.load()
            self.renderers[entrypoint.name] = Renderer(self)
            logger.debug("Loaded renderer {0}".format(entrypoint.name))

    @property
    def names(self):
        return sorted(self.renderers)

    def get(self, name):
        try:
            return self.renderers[name]
        except KeyError:
            raise GentleThickException(
                "Unknown renderer '{0}', expected one of: {1}".format(
                    name, ", ".join(self.names)))

    def render(self, name, data, reproducible=None):
        if reproducible is None:
            reproducible = bool(self.config and
                                self.config.output['reproducible'])
        return self.get(name).document(data, reproducible=reproducible)
