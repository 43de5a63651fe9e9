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

# Base class and document wrapper for SVG renderers.

import datetime
from xml.dom import minidom
import xml.etree.ElementTree as XML

from gentle_thick import version

SVG_NS = 'http://www.w3.org/2000/svg'


class SvgDocument(object):
    def __init__(self, svg, name, reproducible=False):
        self.svg = svg
        self.name = name
        self.reproducible = reproducible

    def output(self):
        out = minidom.parseString(XML.tostring(self.svg, encoding='UTF-8'))
        if not self.reproducible:
            stamp = out.createComment(
                " generated by gentle-thick {0} at {1} ".format(
                    version.version_info.version_string(),
                    datetime.datetime.utcnow().strftime(
                        '%Y-%m-%dT%H:%M:%SZ')))
            out.insertBefore(stamp, out.documentElement)
        return out.toprettyxml(indent='  ', encoding='utf-8')


class Base(object):
    """
    A base class for a renderer.

    :arg RendererRegistry registry: the registry that loaded the renderer.
    """

    #: Name of the produced document, used for default file names.
    name = None

    width = 480
    height = 360

    def __init__(self, registry):
        self.registry = registry

    def document(self, data, reproducible=False):
        svg = XML.Element('svg', {
            'xmlns': SVG_NS,
            'width': str(self.width),
            'height': str(self.height),
            'viewBox': "0 0 {0} {1}".format(self.width, self.height),
        })
        self.gen_svg(svg, data)
        return SvgDocument(svg, self.name, reproducible)

    def gen_svg(self, svg_parent, data):
        """Add elements describing ``data`` below ``svg_parent``."""
        raise NotImplementedError


def text(parent, x, y, label, **attrs):
    attrs.setdefault('font-family', 'sans-serif')
    attrs.setdefault('font-size', '12')
    node = XML.SubElement(parent, 'text', dict(
        (k, str(v)) for k, v in dict(attrs, x=fmt(x), y=fmt(y)).items()))
    node.text = label
    return node


def line(parent, x1, y1, x2, y2, **attrs):
    attrs.setdefault('stroke', 'black')
    return XML.SubElement(parent, 'line', dict(
        (k, str(v)) for k, v in dict(attrs, x1=fmt(x1), y1=fmt(y1),
                                     x2=fmt(x2), y2=fmt(y2)).items()))


def circle(parent, cx, cy, r, **attrs):
    return XML.SubElement(parent, 'circle', dict(
        (k, str(v)) for k, v in dict(attrs, cx=fmt(cx), cy=fmt(cy),
                                     r=fmt(r)).items()))


def fmt(value):
    return "{0:.2f}".format(value).rstrip('0').rstrip('.')
