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

# Readers for algebra descriptions and string, band and collection literals

import collections
import logging
import os
import re

import six
import yaml

from gentle_thick.algebra import Arrow
from gentle_thick.algebra import GentleAlgebra
from gentle_thick.algebra import Path
from gentle_thick.algebra import Quiver
from gentle_thick.errors import AlgebraFormatError
from gentle_thick.errors import InvalidStringError
from gentle_thick.strings import checked_band
from gentle_thick.strings import checked_string
from gentle_thick.strings import GradedBand
from gentle_thick.strings import GradedString
from gentle_thick.strings import Letter
from gentle_thick import utils

__all__ = [
    "AlgebraParser",
    "parse_algebra",
    "parse_string",
    "parse_band",
    "parse_object",
    "parse_collection",
]

logger = logging.getLogger(__name__)

Collection = collections.namedtuple('Collection', 'strings basepoint')

IDENT = r'[A-Za-z0-9_]+'
_NAME_RE = re.compile(r'^name\s*:\s*(\S+)\s*$')
_VERTICES_RE = re.compile(r'^vertices\s*:(.*)$')
_ARROW_RE = re.compile(
    r'^arrow\s+(?P<name>' + IDENT + r')\s*:\s*(?P<source>\S+)\s*->\s*'
    r'(?P<target>\S+)\s*$')
_RELATION_RE = re.compile(r'^relation\s+(\S+)\s+(\S+)\s*$')
_YAML_KEY_RE = re.compile(r'^\s*(arrows|relations)\s*:', re.M)
_ARROW_SPEC_RE = re.compile(r'^\s*(\S+)\s*->\s*(\S+)\s*$')

_EMPTY_RE = re.compile(r'^e@(?P<vertex>[^@\s]+)(?:@(?P<base>-?\d+))?$')
_STRING_RE = re.compile(r'^(?P<word>[^@]*?)\s*(?:@\s*(?P<base>-?\d+))?$')
_BAND_RE = re.compile(
    r'^\[(?P<word>[^\]]*)\]\s*(?:@\s*(?P<base>-?\d+))?'
    r'(?P<options>(?:\s*;\s*\w+\s*=\s*[^;]+)*)$')
_LETTER_RE = re.compile(r'^(?P<path>' + IDENT + r'(?:\.' + IDENT + r')*)'
                        r'(?P<inverse>\^-1?)?$')


def _strip_comment(line):
    return line.split('#', 1)[0].rstrip()


def looks_like_yaml(text, source=None):
    if source and os.path.splitext(str(source))[1] in ('.yaml', '.yml'):
        return True
    return (text.lstrip().startswith('---') or
            _YAML_KEY_RE.search(text) is not None)


class _AlgebraBuilder(object):
    """Collects declarations and checks references before building."""

    def __init__(self, source=None):
        self.source = source
        self.name = None
        self.vertices = []
        self.arrows = collections.OrderedDict()
        self.relations = []

    def error(self, message, line=None, column=None):
        return AlgebraFormatError(message, line=line, column=column,
                                  source=self.source)

    def add_vertex(self, vertex, line=None, column=None):
        if vertex in self.vertices:
            raise self.error("duplicate vertex '{0}'".format(vertex),
                             line, column)
        self.vertices.append(vertex)

    def add_arrow(self, name, source, target, line=None,
                  columns=(None, None, None)):
        if name in self.arrows:
            raise self.error("duplicate arrow '{0}'".format(name),
                             line, columns[0])
        for vertex, column in zip((source, target), columns[1:]):
            if vertex not in self.vertices:
                raise self.error("undeclared vertex '{0}'".format(vertex),
                                 line, column)
        self.arrows[name] = Arrow(name, source, target)

    def add_relation(self, a, b, line=None, columns=(None, None)):
        column = columns[0]
        for arrow, col in zip((a, b), columns):
            if arrow not in self.arrows:
                raise self.error("undeclared arrow '{0}'".format(arrow),
                                 line, col)
        if self.arrows[a].target != self.arrows[b].source:
            raise self.error("non-composable relation {0} {1}".format(a, b),
                             line, column)
        if (a, b) in self.relations:
            raise self.error("duplicate relation {0} {1}".format(a, b),
                             line, column)
        self.relations.append((a, b))

    def build(self):
        if not self.vertices:
            raise self.error("no vertices declared")
        quiver = Quiver(self.vertices, self.arrows.values())
        return GentleAlgebra(quiver, self.relations, name=self.name)


class AlgebraParser(object):
    """Read ``.alg`` descriptions, line-oriented or YAML."""

    def __init__(self, config=None):
        self.config = config
        self.algebras = []

    def load_files(self, fn):
        if not hasattr(fn, '__iter__') or hasattr(fn, 'read'):
            fn = [fn]
        for in_file in fn:
            if hasattr(in_file, 'name'):
                fname = in_file.name
            else:
                fname = in_file
            logger.debug("Parsing algebra file {0}".format(fname))
            if hasattr(in_file, 'read'):
                self._parse_fp(in_file)
            else:
                self.parse(in_file)
        return self.algebras

    def _parse_fp(self, fp):
        text, name = utils.read_source(fp)
        alg = self.parse_text(text, source=name)
        self.algebras.append(alg)
        return alg

    def parse(self, fn):
        text, name = utils.read_source(fn)
        alg = self.parse_text(text, source=name)
        self.algebras.append(alg)
        return alg

    def parse_text(self, text, source=None):
        if looks_like_yaml(text, source):
            alg = self._parse_yaml(text, source)
        else:
            alg = self._parse_lines(text, source)
        if alg.name is None and source and not source.startswith('<'):
            alg.name = os.path.splitext(os.path.basename(source))[0]
        logger.debug("Read {0!r}".format(alg))
        return alg

    def _parse_lines(self, text, source):
        builder = _AlgebraBuilder(source)
        for number, raw in enumerate(text.splitlines(), 1):
            line = _strip_comment(raw)
            if not line.strip():
                continue
            indent = len(line) - len(line.lstrip())
            line = line.strip()

            match = _NAME_RE.match(line)
            if match:
                builder.name = match.group(1)
                continue

            match = _VERTICES_RE.match(line)
            if match:
                offset = match.start(1)
                for token in re.finditer(r'\S+', match.group(1)):
                    builder.add_vertex(
                        token.group(0), number,
                        indent + offset + token.start() + 1)
                continue

            match = _ARROW_RE.match(line)
            if match:
                builder.add_arrow(
                    match.group('name'), match.group('source'),
                    match.group('target'), number,
                    tuple(indent + match.start(g) + 1
                          for g in ('name', 'source', 'target')))
                continue

            match = _RELATION_RE.match(line)
            if match:
                builder.add_relation(
                    match.group(1), match.group(2), number,
                    tuple(indent + match.start(g) + 1 for g in (1, 2)))
                continue

            raise builder.error("unrecognised declaration '{0}'".format(line),
                                number, indent + 1)
        return builder.build()

    def _parse_yaml(self, text, source):
        builder = _AlgebraBuilder(source)
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            mark = getattr(exc, 'problem_mark', None)
            if mark is None:
                raise builder.error(str(exc))
            raise builder.error(getattr(exc, 'problem', None) or str(exc),
                                mark.line + 1, mark.column + 1)
        if not isinstance(data, dict):
            raise builder.error("the topmost element must be a mapping")
        unknown = set(data) - set(['name', 'vertices', 'arrows', 'relations'])
        if unknown:
            raise builder.error("unknown keys: {0}".format(
                ", ".join(sorted(str(k) for k in unknown))))

        if data.get('name') is not None:
            builder.name = str(data['name'])

        vertices = data.get('vertices') or []
        if isinstance(vertices, six.string_types):
            vertices = vertices.split()
        if not isinstance(vertices, list):
            raise builder.error("'vertices' must be a list")
        for vertex in vertices:
            builder.add_vertex(str(vertex))

        arrows = data.get('arrows') or {}
        if not isinstance(arrows, dict):
            raise builder.error("'arrows' must map names to 'source -> "
                                "target'")
        for name, spec in arrows.items():
            match = _ARROW_SPEC_RE.match(str(spec))
            if not match:
                raise builder.error("arrow {0}: expected 'source -> target', "
                                    "got '{1}'".format(name, spec))
            builder.add_arrow(str(name), match.group(1), match.group(2))

        relations = data.get('relations') or []
        if not isinstance(relations, list):
            raise builder.error("'relations' must be a list")
        for rel in relations:
            pair = rel.split() if isinstance(rel, six.string_types) else rel
            if not isinstance(pair, list) or len(pair) != 2:
                raise builder.error("relation '{0}' must name two "
                                    "arrows".format(rel))
            builder.add_relation(str(pair[0]), str(pair[1]))
        return builder.build()


def parse_algebra(text, source=None):
    return AlgebraParser().parse_text(text, source=source)


def load_algebra(fn):
    return AlgebraParser().load_files([fn])[0]


def parse_letter(alg, token, source=None, line=None):
    match = _LETTER_RE.match(token)
    if not match:
        raise AlgebraFormatError("malformed letter '{0}'".format(token),
                                 line=line, source=source)
    arrows = tuple(match.group('path').split('.'))
    for arrow in arrows:
        if arrow not in alg.arrows:
            raise AlgebraFormatError("unknown arrow '{0}'".format(arrow),
                                     line=line, source=source)
    path = Path(alg.source(arrows[0]), alg.target(arrows[-1]), arrows)
    return Letter(path, bool(match.group('inverse')))


def _parse_word(alg, word, source, line):
    return tuple(parse_letter(alg, token, source, line)
                 for token in word.split())


def parse_string(alg, literal, check=True, source=None, line=None):
    """Read a graded string literal such as ``d c^-@1`` or ``e@2``."""
    literal = literal.strip()
    match = _EMPTY_RE.match(literal)
    if match:
        vertex = match.group('vertex')
        if vertex not in alg.vertices:
            raise InvalidStringError(["unknown vertex {0}".format(vertex)])
        return GradedString((), int(match.group('base') or 0), vertex)
    match = _STRING_RE.match(literal)
    if not match or not match.group('word').strip():
        raise AlgebraFormatError("malformed string '{0}'".format(literal),
                                 line=line, source=source)
    letters = _parse_word(alg, match.group('word'), source, line)
    base = int(match.group('base') or 0)
    if check:
        return checked_string(alg, letters, base)
    return GradedString(letters, base)


def parse_band(alg, literal, check=True, source=None, line=None):
    """Read ``[a b^- c d^-]@0;lambda=2;dim=1``."""
    literal = literal.strip()
    match = _BAND_RE.match(literal)
    if not match:
        raise AlgebraFormatError("malformed band '{0}'".format(literal),
                                 line=line, source=source)
    letters = _parse_word(alg, match.group('word'), source, line)
    base = int(match.group('base') or 0)
    options = {'lambda': 1, 'dim': 1}
    for option in re.finditer(r';\s*(\w+)\s*=\s*([^;]+)',
                              match.group('options')):
        key, value = option.group(1), option.group(2).strip()
        if key not in options:
            raise AlgebraFormatError("unknown band option '{0}'".format(key),
                                     line=line, source=source)
        try:
            options[key] = int(value)
        except ValueError:
            raise AlgebraFormatError(
                "band option {0} must be an integer".format(key),
                line=line, source=source)
    if check:
        return checked_band(alg, letters, base, options['lambda'],
                            options['dim'])
    return GradedBand(letters, base, options['lambda'], options['dim'])


def parse_object(alg, literal, check=True, source=None, line=None):
    if literal.strip().startswith('['):
        return parse_band(alg, literal, check, source, line)
    return parse_string(alg, literal, check, source, line)


def parse_collection(alg, literal, check=True):
    """Strings joined by ``|``, as printed by :func:`collection_literal`."""
    return [parse_string(alg, part, check)
            for part in literal.split('|') if part.strip()]


def parse_lines(alg, text, source=None, check=True, allow_basepoint=False):
    objects = []
    basepoint = None
    for number, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if line.startswith('basepoint:'):
            if not allow_basepoint or objects or basepoint is not None:
                raise AlgebraFormatError(
                    "'basepoint:' is only allowed as the first entry of a "
                    "collection", line=number, source=source)
            basepoint = line.split(':', 1)[1].strip()
            continue
        objects.append(parse_object(alg, line, check, source, number))
    return objects, basepoint


def load_strings(alg, fn, check=True):
    """Strings and bands from a ``.str`` file, in file order."""
    text, name = utils.read_source(fn)
    objects, _ = parse_lines(alg, text, name, check)
    return objects


def load_collection(alg, fn, check=True):
    text, name = utils.read_source(fn)
    objects, basepoint = parse_lines(alg, text, name, check,
                                     allow_basepoint=True)
    for obj in objects:
        if not isinstance(obj, GradedString):
            raise AlgebraFormatError("collections hold strings only, got "
                                     "'{0}'".format(obj), source=name)
    return Collection(objects, basepoint)
