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

# Morphisms in the homotopy category of projectives, computed by rank
# counts over the prime field.

import collections
import itertools
import logging

import networkx as nx
import numpy as np

from gentle_thick.complexes import ChainMap
from gentle_thick.complexes import direct_sum
from gentle_thick.complexes import elem_mul
from gentle_thick.complexes import identity_map
from gentle_thick.complexes import mapping_cone
from gentle_thick.complexes import shift
from gentle_thick.complexes import string_to_complex
from gentle_thick.complexes import zero_matrix
from gentle_thick.errors import PreconditionError
from gentle_thick.errors import Undecided
from gentle_thick import linalg
from gentle_thick.strings import enumerate_strings

logger = logging.getLogger(__name__)


class _Basis(object):
    """Index of triples (degree, row, col, path) spanning a space of
    graded matrices of paths."""

    def __init__(self):
        self.keys = []
        self.index = {}

    def add(self, key):
        self.index[key] = len(self.keys)
        self.keys.append(key)

    def __len__(self):
        return len(self.keys)


def _matrix_space(alg, rows_of, cols_of, degrees, offset):
    """Basis of prod_j Hom(A^j, C^(j + offset)): entries at (j, r, c)
    are paths from the row vertex to the column vertex."""
    basis = _Basis()
    for j in degrees:
        rows = rows_of(j + offset)
        cols = cols_of(j)
        for r, u in enumerate(rows):
            for c, v in enumerate(cols):
                for path in alg.permitted_paths(u, v):
                    basis.add((j, r, c, path))
    return basis


def _accumulate(vector, basis, j, r, c, element, sign, p):
    for path, coeff in element.items():
        vector[basis.index[(j, r, c, path)]] += sign * coeff
    vector %= p


def _unit(path):
    return {path: 1}


class HomSpace(object):
    """Hom(A, C) of degree zero modulo null-homotopic maps."""

    def __init__(self, A, C):
        self.source = A
        self.target = C
        alg, p = A.alg, A.p
        self.p = p
        degrees = sorted(set(A.degrees) | set(C.degrees))
        self.maps = _matrix_space(alg, C.term, A.term, degrees, 0)
        self.obstructions = _matrix_space(alg, C.term, A.term, degrees, -1)
        self.homotopies = _matrix_space(alg, C.term, A.term, degrees, 1)

        # columns: images of the basis maps under f -> f d_A - d_C f
        D = np.zeros((len(self.obstructions), len(self.maps)),
                     dtype=linalg.DTYPE)
        for col, (j, r, c, path) in enumerate(self.maps.keys):
            out = D[:, col]
            dA = A.d(j + 1)
            for c2 in range(len(A.term(j + 1))):
                entry = dA[c][c2] if dA else {}
                if entry:
                    _accumulate(out, self.obstructions, j + 1, r, c2,
                                elem_mul(alg, _unit(path), entry, p), 1, p)
            dC = C.d(j)
            for r2 in range(len(C.term(j - 1))):
                entry = dC[r2][r]
                if entry:
                    _accumulate(out, self.obstructions, j, r2, c,
                                elem_mul(alg, entry, _unit(path), p), -1, p)
        self.cycle_matrix = D

        # columns: the maps d_C h + h d_A for basis homotopies h
        H = np.zeros((len(self.maps), len(self.homotopies)),
                     dtype=linalg.DTYPE)
        for col, (j, r, c, path) in enumerate(self.homotopies.keys):
            out = H[:, col]
            dC = C.d(j + 1)
            for r2 in range(len(C.term(j))):
                entry = dC[r2][r]
                if entry:
                    _accumulate(out, self.maps, j, r2, c,
                                elem_mul(alg, entry, _unit(path), p), 1, p)
            dA = A.d(j + 1)
            for c2 in range(len(A.term(j + 1))):
                entry = dA[c][c2] if dA else {}
                if entry:
                    _accumulate(out, self.maps, j + 1, r, c2,
                                elem_mul(alg, _unit(path), entry, p), 1, p)
        self.boundary_matrix = H

        n = len(self.maps)
        rank_d = linalg.rank(D, p) if D.size else 0
        rank_h = linalg.rank(H, p) if H.size else 0
        self.dimension = n - rank_d - rank_h
        self._basis = None

    def _boundaries(self):
        if not self.boundary_matrix.size:
            return np.zeros((0, len(self.maps)), dtype=linalg.DTYPE)
        return self.boundary_matrix.T % self.p

    def basis_vectors(self):
        if self._basis is None:
            n = len(self.maps)
            if not n:
                self._basis = np.zeros((0, 0), dtype=linalg.DTYPE)
            else:
                if self.cycle_matrix.shape[0]:
                    cycles = linalg.nullspace(self.cycle_matrix, self.p)
                else:
                    cycles = np.eye(n, dtype=linalg.DTYPE)
                chosen = linalg.independent_extension(
                    self._boundaries(), cycles, self.p)
                self._basis = cycles[chosen] if chosen else \
                    np.zeros((0, n), dtype=linalg.DTYPE)
        return self._basis

    def vector_to_map(self, vector):
        A, C = self.source, self.target
        comps = {}
        for j in A.degrees:
            if C.term(j):
                comps[j] = zero_matrix(len(C.term(j)), len(A.term(j)))
        for idx, coeff in enumerate(vector):
            coeff = int(coeff) % self.p
            if not coeff:
                continue
            j, r, c, path = self.maps.keys[idx]
            entry = comps[j][r][c]
            entry[path] = (entry.get(path, 0) + coeff) % self.p
            if not entry[path]:
                del entry[path]
        return ChainMap(A, C, comps)

    def map_to_vector(self, f):
        vector = np.zeros(len(self.maps), dtype=linalg.DTYPE)
        for j, matrix in f.components.items():
            for r, row in enumerate(matrix):
                for c, entry in enumerate(row):
                    if entry:
                        _accumulate(vector, self.maps, j, r, c, entry, 1,
                                    self.p)
        return vector

    def basis(self):
        return [self.vector_to_map(v) for v in self.basis_vectors()]

    def coordinates(self, f):
        """Coordinates of the class of the chain map ``f`` in
        :meth:`basis`."""
        basis = self.basis_vectors()
        d = len(basis)
        if not d:
            return np.zeros(0, dtype=linalg.DTYPE)
        columns = np.vstack([basis, self._boundaries()]).T
        x = linalg.solve(columns, self.map_to_vector(f), self.p)
        if x is None:
            raise PreconditionError("not a chain map of this hom space")
        return x[:d] % self.p


def hom_space(A, B, k=0):
    """Hom(A, B[k]) in the homotopy category."""
    if A.alg != B.alg or A.p != B.p:
        raise PreconditionError("complexes over different algebras or "
                                "fields")
    return HomSpace(A, shift(B, k))


def hom_window(A, B, pad=1):
    if A.is_zero or B.is_zero:
        return []
    lo_a, hi_a = A.support()
    lo_b, hi_b = B.support()
    return list(range(lo_a - hi_b - pad, hi_a - lo_b + pad + 1))


class HomTable(object):
    """dim Hom(A, B[k]) for every shift ``k``; ``total`` is the
    dimension up to shift."""

    def __init__(self, dims, bases=None):
        self.dims = dict((k, d) for k, d in dims.items() if d)
        self.bases = bases or {}

    @property
    def total(self):
        return sum(self.dims.values())

    def __getitem__(self, k):
        return self.dims.get(k, 0)

    def support(self):
        return sorted(self.dims)

    def as_dict(self):
        dims = dict((str(k), d) for k, d in sorted(self.dims.items()))
        return {'dims': dims,
                'total': self.total}

    def __str__(self):
        lines = ["{0}: {1}".format(k, self.dims[k]) for k in self.support()]
        lines.append("total: {0}".format(self.total))
        return "\n".join(lines)


def hom_table(A, B, with_bases=False, pad=1):
    dims = {}
    bases = {}
    for k in hom_window(A, B, pad):
        space = hom_space(A, B, k)
        if space.dimension:
            dims[k] = space.dimension
            if with_bases:
                bases[k] = space.basis()
    return HomTable(dims, bases if with_bases else None)


def hom_total(A, B, pad=1):
    return hom_table(A, B, pad=pad).total


IndecomposabilityResult = collections.namedtuple(
    'IndecomposabilityResult', 'status dimension witness')


def _structure_constants(space):
    basis = space.basis()
    d = len(basis)
    T = np.zeros((d, d, d), dtype=linalg.DTYPE)
    for a in range(d):
        for b in range(d):
            T[a, b] = space.coordinates(basis[a].compose(basis[b]))
    return T


def _idempotents(T, unit, p, chunk=4096):
    d = T.shape[0]
    candidates = itertools.product(range(p), repeat=d)
    while True:
        block = np.array(list(itertools.islice(candidates, chunk)),
                         dtype=linalg.DTYPE)
        if not len(block):
            return
        squares = np.einsum('na,nb,abk->nk', block, block, T) % p
        for row in np.nonzero(np.all(squares == block, axis=1))[0]:
            x = block[row]
            if np.any(x) and not np.array_equal(x, unit):
                yield x


def indecomposability(A, bound=12):
    """Search End(A) modulo homotopy for a nontrivial idempotent.

    The status is ``indecomposable``, ``decomposable`` (the witness is an
    idempotent chain map) or ``undecided`` when the search space exceeds
    ``bound``.
    """
    if A.is_zero:
        return IndecomposabilityResult('decomposable', 0, None)
    space = HomSpace(A, A)
    d = space.dimension
    if d == 1:
        return IndecomposabilityResult('indecomposable', 1, None)
    if d > bound or A.p ** d > 2 ** bound:
        logger.debug("endomorphism space of dimension %d is above the "
                     "search bound %d", d, bound)
        return IndecomposabilityResult('undecided', d, None)
    T = _structure_constants(space)
    unit = space.coordinates(identity_map(A))
    for x in _idempotents(T, unit, A.p):
        return IndecomposabilityResult('decomposable', d,
                                       space.vector_to_map(x))
    return IndecomposabilityResult('indecomposable', d, None)


def is_indecomposable(A, bound=12):
    result = indecomposability(A, bound)
    if result.status == 'undecided':
        raise Undecided(result.dimension, bound)
    return result.status == 'indecomposable'


def default_test_family(alg, p, max_letters=2):
    return [string_to_complex(alg, s, p)
            for s in enumerate_strings(alg, max_letters)]


def fingerprint(A, test_family, pad=1):
    """For each test complex, the nonzero pairs ``(k, hom(T, A[k]))``."""
    return tuple(tuple(sorted(hom_table(T, A, pad=pad).dims.items()))
                 for T in test_family)


def fingerprint_offset(fp1, fp2):
    """The shift ``s`` with fp2 the fingerprint of X[s] when fp1 is the
    fingerprint of X, or None."""
    if len(fp1) != len(fp2):
        return None
    offset = None
    for row1, row2 in zip(fp1, fp2):
        if len(row1) != len(row2):
            return None
        if not row1:
            continue
        if offset is None:
            offset = row1[0][0] - row2[0][0]
        for (k1, d1), (k2, d2) in zip(row1, row2):
            if d1 != d2 or k1 - k2 != offset:
                return None
    return 0 if offset is None else offset


def multiset_offset(A, B):
    """The shift ``s`` with the terms of B equal to those of A[s], or
    None."""
    ma, mb = A.multiset(), B.multiset()
    if len(ma) != len(mb):
        return None
    if not ma:
        return 0
    s = mb[0][0] - ma[0][0]
    if sorted((i + s, v) for i, v in ma) != mb:
        return None
    return s


def looks_isomorphic(A, B, test_family, pad=1):
    """Shift ``s`` with B resembling A[s] on terms and fingerprints."""
    s = multiset_offset(A, B)
    if s is None:
        return None
    if fingerprint_offset(fingerprint(A, test_family, pad),
                          fingerprint(B, test_family, pad)) != s:
        return None
    return s


def ext_components(complexes, pad=1):
    """Group complexes joined by nonzero morphisms in either direction."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(complexes)))
    for a, b in itertools.combinations(range(len(complexes)), 2):
        if hom_total(complexes[a], complexes[b], pad) or \
                hom_total(complexes[b], complexes[a], pad):
            graph.add_edge(a, b)
    return sorted(sorted(c) for c in nx.connected_components(graph))


ClosureStep = collections.namedtuple('ClosureStep', 'description total')


def zero_hom_closure_check(generators, X, steps=3, trials=5, seed=0,
                           pad=1):
    """Build complexes from ``generators`` by random shifts, sums and
    cones, reporting hom up to shift from each to ``X``."""
    for g in generators:
        if hom_total(g, X, pad):
            raise PreconditionError("a generator has nonzero hom to the "
                                    "test object")
    rng = np.random.RandomState(seed)
    report = []
    for _ in range(trials):
        current = generators[rng.randint(len(generators))]
        description = ["g{0}".format(generators.index(current))]
        for _ in range(steps):
            g_idx = rng.randint(len(generators))
            g = generators[g_idx]
            move = rng.randint(3)
            if move == 0:
                k = int(rng.choice([-1, 1]))
                current = shift(current, k)
                description.append("shift {0}".format(k))
            elif move == 1:
                current = direct_sum(current, g)
                description.append("sum g{0}".format(g_idx))
            else:
                table = hom_table(current, g, with_bases=True, pad=pad)
                if not table.dims:
                    current = direct_sum(current, shift(g, 1))
                    description.append("cone 0 -> g{0}".format(g_idx))
                    continue
                k = table.support()[rng.randint(len(table.dims))]
                maps = table.bases[k]
                current = mapping_cone(maps[rng.randint(len(maps))])
                description.append("cone -> g{0}[{1}]".format(g_idx, k))
        total = hom_total(current, X, pad)
        logger.debug("closure trial %s: %d", ", ".join(description), total)
        report.append(ClosureStep(", ".join(description), total))
    return report
