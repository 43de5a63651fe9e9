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

# Canonical serializers and the text/JSON encodings of results

import json
import logging

import yaml

from gentle_thick.algebra import sort_key
from gentle_thick.complexes import elem_str

logger = logging.getLogger(__name__)

SCHEMA = 'gentle-thick/1'


def format_algebra(alg):
    """Canonical ``.alg`` text: vertices, arrows and relations by name."""
    lines = []
    if alg.name:
        lines.append("name: {0}".format(alg.name))
    lines.append("vertices: {0}".format(" ".join(alg.vertices)))
    for arrow in alg.quiver.arrows.values():
        lines.append("arrow {0}: {1} -> {2}".format(
            arrow.name, arrow.source, arrow.target))
    for a, b in sorted(alg.relations,
                       key=lambda r: (sort_key(r[0]), sort_key(r[1]))):
        lines.append("relation {0} {1}".format(a, b))
    return "\n".join(lines) + "\n"


def algebra_to_dict(alg):
    data = {
        'vertices': list(alg.vertices),
        'arrows': dict((a.name, "{0} -> {1}".format(a.source, a.target))
                       for a in alg.quiver.arrows.values()),
        'relations': ["{0} {1}".format(a, b) for a, b in sorted(
            alg.relations, key=lambda r: (sort_key(r[0]), sort_key(r[1])))],
    }
    if alg.name:
        data['name'] = alg.name
    return data


def algebra_to_yaml(alg):
    return yaml.safe_dump(algebra_to_dict(alg), default_flow_style=False)


def json_document(verb, result):
    return json.dumps({'schema': SCHEMA, 'verb': verb, 'result': result},
                      indent=4, sort_keys=True, separators=(',', ': '))


def complex_to_dict(A):
    terms = dict((str(i), list(A.term(i))) for i in A.degrees)
    differentials = {}
    for i in A.degrees:
        if i not in A.differentials:
            continue
        entries = []
        for r, row in enumerate(A.d(i)):
            for c, entry in enumerate(row):
                if entry:
                    entries.append({'row': r, 'column': c,
                                    'value': elem_str(entry)})
        differentials[str(i)] = entries
    return {'field_order': A.p, 'terms': terms,
            'differentials': differentials}


def format_complex(A):
    if A.is_zero:
        return "0"
    lines = []
    for i in A.degrees:
        lines.append("X^{0} = {1}".format(
            i, " + ".join("P{0}".format(v) for v in A.term(i))))
    for i in A.degrees:
        if i not in A.differentials:
            continue
        for r, row in enumerate(A.d(i)):
            for c, entry in enumerate(row):
                if entry:
                    lines.append("d^{0}[{1},{2}] = {3}".format(
                        i, r, c, elem_str(entry)))
    return "\n".join(lines)


def factorization_to_dict(factorization):
    if factorization is None:
        return None
    return {'target': str(factorization.target),
            'steps': [{'arc': index, 'orientation':
                       'forward' if orientation > 0 else 'reversed'}
                      for index, orientation in factorization.steps]}


def membership_to_dict(membership):
    return {'status': membership.status,
            'factorization': factorization_to_dict(membership.factorization),
            'reason': membership.reason,
            'explored': membership.explored}


def format_membership(membership):
    lines = [membership.status]
    if membership.factorization is not None:
        lines.append("factorization: {0}".format(membership.factorization))
    if membership.reason:
        lines.append("reason: {0}".format(membership.reason))
    lines.append("explored: {0}".format(membership.explored))
    return "\n".join(lines)


def comparison_to_dict(comparison):
    return {'status': comparison.status,
            'certificates': [dict(membership_to_dict(m), arc=str(s))
                             for s, m in comparison.certificates]}


def format_comparison(comparison):
    lines = [comparison.status]
    for s, m in comparison.certificates:
        detail = str(m.factorization) if m.factorization is not None \
            else m.reason
        lines.append("  {0}: {1} ({2})".format(s, m.status, detail))
    return "\n".join(lines)


def certificates_to_yaml(entries):
    """One YAML document per ``(source, target, comparison)`` entry."""
    documents = []
    for source, target, comparison in entries:
        doc = comparison_to_dict(comparison)
        doc['from'] = source
        doc['to'] = target
        documents.append(doc)
    return yaml.safe_dump_all(documents, default_flow_style=False,
                              explicit_start=True)


def _dot_id(text):
    return '"{0}"'.format(text.replace('\\', '\\\\').replace('"', '\\"'))


def poset_to_dot(poset, name='thick'):
    lines = ["digraph {0} {{".format(name), "    rankdir=BT;"]
    for node in sorted(poset.graph.nodes()):
        lines.append("    {0};".format(_dot_id(node)))
    for u, v in sorted(poset.graph.edges()):
        attrs = " [style=dashed]" if (u, v) in poset.unknown else ""
        lines.append("    {0} -> {1}{2};".format(_dot_id(u), _dot_id(v),
                                                 attrs))
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_dict(poset):
    return {
        'classes': [{'name': name,
                     'representative': [str(s) for s in cls.representative],
                     'basepoint': cls.basepoint,
                     'collections': len(cls.members),
                     'generated': len(cls.generated)}
                    for name, cls in sorted(poset.classes.items())],
        'covers': [{'lower': u, 'upper': v,
                    'unknown': (u, v) in poset.unknown}
                   for u, v in sorted(poset.graph.edges())],
        'minimal': poset.minimal(),
        'maximal': poset.maximal(),
    }


def format_poset(poset):
    lines = ["classes: {0}".format(len(poset))]
    for name in sorted(poset.classes):
        lines.append("  {0}".format(name))
    lines.append("covers:")
    for u, v in sorted(poset.graph.edges()):
        mark = " (unknown)" if (u, v) in poset.unknown else ""
        lines.append("  {0} < {1}{2}".format(u, v, mark))
    return "\n".join(lines)
