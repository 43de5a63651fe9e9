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

# Bounded complexes of indecomposable projectives.
#
# The differential d^i maps X^i to X^(i-1). Matrices have one row per
# summand of the target and one column per summand of the source; entries
# are linear combinations of permitted paths, stored as {Path: coeff}.
# An entry in row r, column c is a map P_c -> P_r given by a path from
# the vertex of r to the vertex of c, and matrix products multiply entries
# left factor first.

import logging

from gentle_thick.algebra import trivial_path
from gentle_thick.errors import ChainMapError
from gentle_thick.errors import PreconditionError
from gentle_thick.linalg import inverse_mod

logger = logging.getLogger(__name__)


def elem(path, coeff=1):
    return {path: coeff}


def elem_clean(x, p):
    return dict((k, v % p) for k, v in x.items() if v % p)


def elem_add(x, y, p, scale=1):
    out = dict(x)
    for k, v in y.items():
        out[k] = (out.get(k, 0) + scale * v) % p
    return dict((k, v) for k, v in out.items() if v)


def elem_scale(x, c, p):
    return elem_clean(dict((k, v * c) for k, v in x.items()), p)


def elem_mul(alg, x, y, p):
    out = {}
    for px, cx in x.items():
        for py, cy in y.items():
            prod = alg.multiply(px, py)
            if prod is not None:
                out[prod] = (out.get(prod, 0) + cx * cy) % p
    return dict((k, v) for k, v in out.items() if v)


def elem_unit_part(x, vertex):
    return x.get(trivial_path(vertex), 0)


def elem_inverse(alg, x, vertex, p):
    """Inverse of an automorphism ``lambda e_v + n`` of P_v."""
    lam = elem_unit_part(x, vertex)
    if not lam % p:
        raise PreconditionError("element is not invertible")
    lam_inv = inverse_mod(lam, p)
    nil = elem_scale(dict((k, v) for k, v in x.items() if not k.is_trivial),
                     -lam_inv, p)
    total = elem(trivial_path(vertex))
    term = elem(trivial_path(vertex))
    for _ in range(len(alg.arrows) + 1):
        term = elem_mul(alg, term, nil, p)
        if not term:
            break
        total = elem_add(total, term, p)
    return elem_scale(total, lam_inv, p)


def elem_str(x):
    if not x:
        return "0"
    parts = []
    for path in sorted(x, key=lambda q: q.sort_key()):
        coeff = x[path]
        parts.append(str(path) if coeff == 1 else
                     "{0}*{1}".format(coeff, path))
    return " + ".join(parts)


def zero_matrix(rows, cols):
    return [[{} for _ in range(cols)] for _ in range(rows)]


def mat_mul(alg, A, B, p, cols=None):
    # pass cols when B may have no rows
    rows = len(A)
    inner = len(B)
    if cols is None:
        cols = len(B[0]) if B else 0
    C = zero_matrix(rows, cols)
    for r in range(rows):
        for k in range(inner):
            a = A[r][k]
            if not a:
                continue
            for c in range(cols):
                b = B[k][c]
                if b:
                    C[r][c] = elem_add(C[r][c], elem_mul(alg, a, b, p), p)
    return C


def mat_add(A, B, p, scale=1):
    return [[elem_add(a, b, p, scale) for a, b in zip(ra, rb)]
            for ra, rb in zip(A, B)]


def mat_scale(A, c, p):
    return [[elem_scale(a, c, p) for a in row] for row in A]


def mat_is_zero(A):
    return all(not entry for row in A for entry in row)


class ProjComplex(object):
    """``terms[i]`` lists the vertices of the summands of X^i."""

    def __init__(self, alg, terms, differentials, p):
        self.alg = alg
        self.p = p
        self.terms = dict((i, tuple(vs)) for i, vs in terms.items() if vs)
        self.differentials = {}
        for i, matrix in differentials.items():
            if self.terms.get(i) and self.terms.get(i - 1):
                self.differentials[i] = [
                    [elem_clean(entry, p) for entry in row]
                    for row in matrix]

    @property
    def degrees(self):
        return sorted(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def support(self):
        degrees = self.degrees
        if not degrees:
            return None
        return degrees[0], degrees[-1]

    def term(self, i):
        return self.terms.get(i, ())

    def d(self, i):
        """The matrix of d^i : X^i -> X^(i-1)."""
        if i in self.differentials:
            return self.differentials[i]
        return zero_matrix(len(self.term(i - 1)), len(self.term(i)))

    def rank_profile(self):
        return tuple((i, self.terms[i]) for i in self.degrees)

    def square_violations(self):
        bad = []
        for i in self.degrees:
            if not self.term(i - 2):
                continue
            if not mat_is_zero(mat_mul(self.alg, self.d(i - 1), self.d(i),
                                       self.p)):
                bad.append(i)
        return bad

    def is_radical(self):
        for i, matrix in self.differentials.items():
            for row in matrix:
                for entry in row:
                    if any(path.is_trivial for path in entry):
                        return False
        return True

    def multiset(self):
        return sorted((i, v) for i in self.degrees for v in self.terms[i])

    def __eq__(self, other):
        if not isinstance(other, ProjComplex):
            return False
        if self.terms != other.terms or self.p != other.p:
            return False
        return all(self.d(i) == other.d(i) for i in self.degrees)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "<ProjComplex {0}>".format(
            " ".join("{0}:{1}".format(i, ",".join(vs))
                     for i, vs in self.rank_profile()))


def zero_complex(alg, p):
    return ProjComplex(alg, {}, {}, p)


def stalk_complex(alg, vertex, degree, p):
    return ProjComplex(alg, {degree: (vertex,)}, {}, p)


def _place(entries, degree, row, col, value, p):
    matrix = entries.setdefault(degree, {})
    matrix[(row, col)] = elem_add(matrix.get((row, col), {}), value, p)


def _assemble(alg, summands, entries, p):
    """Build a complex from ``summands`` (list of (degree, vertex)) and
    entries keyed by summand numbers."""
    terms = {}
    index = {}
    for number, (degree, vertex) in enumerate(summands):
        index[number] = len(terms.setdefault(degree, []))
        terms[degree].append(vertex)
    differentials = {}
    for degree, matrix in entries.items():
        d = zero_matrix(len(terms.get(degree - 1, [])),
                        len(terms.get(degree, [])))
        for (row, col), value in matrix.items():
            d[index[row]][index[col]] = elem_add(d[index[row]][index[col]],
                                                 value, p)
        differentials[degree] = d
    return ProjComplex(alg, terms, differentials, p)


def _letter_entry(letter, u_from, u_to, b_from, b_to, value, entries, p):
    # direct letters map the later summand to the earlier one
    if not letter.inverse:
        _place(entries, b_to, u_from, u_to, value, p)
    else:
        _place(entries, b_from, u_to, u_from, value, p)


def string_to_complex(alg, s, p):
    grading = s.grading
    summands = [(grading[l], v) for l, v in enumerate(s.vertices)]
    entries = {}
    for u, letter in enumerate(s.letters, 1):
        _letter_entry(letter, u - 1, u, grading[u - 1], grading[u],
                      elem(letter.path), entries, p)
    return _assemble(alg, summands, entries, p)


def _twisted_letter(n):
    # the twisted component: the second letter for n == 2 would give the
    # same complex, the first one matches the lambda s_1 + s_2 form
    return 0 if n == 2 else n - 1


def band_to_complex(alg, band, p):
    if band.dimension != 1:
        raise PreconditionError(
            "band of dimension {0}: use normalize_band or "
            "band_tube_complex".format(band.dimension))
    return band_tube_complex(alg, band, 1, p)


def band_tube_complex(alg, band, dimension, p):
    """The band object with a Jordan block of size ``dimension`` on the
    twisted component."""
    n = len(band.letters)
    grading = band.grading
    scalar = band.scalar % p
    if not scalar:
        raise PreconditionError("the band scalar must be nonzero modulo "
                                "{0}".format(p))
    summands = []
    for l, v in enumerate(band.vertices):
        for _ in range(dimension):
            summands.append((grading[l], v))
    twisted = _twisted_letter(n)
    entries = {}
    for u, letter in enumerate(band.letters):
        src, dst = u, (u + 1) % n
        b_src, b_dst = grading[src], grading[dst]
        path = letter.path
        for j in range(dimension):
            for k in range(dimension):
                if u == twisted:
                    coeff = scalar if j == k else (1 if k == j + 1 else 0)
                else:
                    coeff = 1 if j == k else 0
                if not coeff:
                    continue
                _letter_entry(letter, src * dimension + j,
                              dst * dimension + k, b_src, b_dst,
                              elem(path, coeff), entries, p)
    return _assemble(alg, summands, entries, p)


def shift(A, k):
    """A[k]: degree i moves to i + k, differentials change sign k times."""
    sign = -1 if k % 2 else 1
    terms = dict((i + k, vs) for i, vs in A.terms.items())
    diffs = dict((i + k, mat_scale(m, sign, A.p))
                 for i, m in A.differentials.items())
    return ProjComplex(A.alg, terms, diffs, A.p)


def direct_sum(A, B):
    terms = {}
    for i in set(A.terms) | set(B.terms):
        terms[i] = A.term(i) + B.term(i)
    diffs = {}
    for i in terms:
        if not terms.get(i - 1):
            continue
        top = [row + [{}] * len(B.term(i)) for row in A.d(i)]
        bottom = [[{}] * len(A.term(i)) + row for row in B.d(i)]
        diffs[i] = [list(r) for r in top + bottom]
    return ProjComplex(A.alg, terms, diffs, A.p)


class ChainMap(object):
    """``components[i]`` is the matrix of f^i : S^i -> T^i."""

    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        self.components = {}
        for i in source.degrees:
            if target.term(i):
                self.components[i] = components.get(
                    i, zero_matrix(len(target.term(i)),
                                   len(source.term(i))))

    def f(self, i):
        if i in self.components:
            return self.components[i]
        return zero_matrix(len(self.target.term(i)), len(self.source.term(i)))

    def is_chain_map(self):
        alg, p = self.source.alg, self.source.p
        for i in set(self.source.degrees) | set(self.target.degrees):
            cols = len(self.source.term(i))
            left = mat_mul(alg, self.target.d(i), self.f(i), p, cols)
            right = mat_mul(alg, self.f(i - 1), self.source.d(i), p, cols)
            if not mat_is_zero(mat_add(left, right, p, -1)):
                return False
        return True

    def is_zero(self):
        return all(mat_is_zero(m) for m in self.components.values())

    def compose(self, first):
        """``self`` after ``first``."""
        alg, p = self.source.alg, self.source.p
        comps = {}
        for i in first.source.degrees:
            if self.target.term(i):
                comps[i] = mat_mul(alg, self.f(i), first.f(i), p,
                                   len(first.source.term(i)))
        return ChainMap(first.source, self.target, comps)


def identity_map(A):
    comps = {}
    for i in A.degrees:
        n = len(A.term(i))
        comps[i] = [[elem(trivial_path(A.term(i)[r])) if r == c else {}
                     for c in range(n)] for r in range(n)]
    return ChainMap(A, A, comps)


def mapping_cone(f, minimal=True):
    """Cone of ``f : S -> T`` with X^i = S^(i-1) + T^i.

    The differential is ``[[-d_S, 0], [f, d_T]]``.
    """
    if not f.is_chain_map():
        raise ChainMapError("mapping_cone needs a chain map")
    S, T = f.source, f.target
    p = S.p
    degrees = set(i + 1 for i in S.degrees) | set(T.degrees)
    terms = {}
    for i in degrees:
        terms[i] = S.term(i - 1) + T.term(i)
    diffs = {}
    for i in degrees:
        if not terms.get(i - 1):
            continue
        ds = mat_scale(S.d(i - 1), -1, p)
        top = [row + [{}] * len(T.term(i)) for row in ds]
        bottom = [fr + dr for fr, dr in zip(f.f(i - 1), T.d(i))]
        diffs[i] = [list(r) for r in top + bottom]
    cone = ProjComplex(S.alg, terms, diffs, p)
    if minimal:
        cone = minimalize(cone)
    return cone


def _find_unit(A):
    for i in A.degrees:
        matrix = A.differentials.get(i)
        if not matrix:
            continue
        for r, row in enumerate(matrix):
            for c, entry in enumerate(row):
                v = A.terms[i][c]
                if A.terms[i - 1][r] == v and elem_unit_part(entry, v) % A.p:
                    return i, r, c
    return None


def minimalize(A):
    """Strip isomorphism components by Gaussian elimination; the result
    is homotopy equivalent to ``A`` and has radical differentials."""
    alg, p = A.alg, A.p
    terms = dict((i, list(vs)) for i, vs in A.terms.items())
    diffs = dict((i, [list(row) for row in m])
                 for i, m in A.differentials.items())
    current = A
    while True:
        found = _find_unit(current)
        if found is None:
            return current
        i, r, c = found
        d = diffs[i]
        phi_inv = elem_inverse(alg, d[r][c], terms[i][c], p)
        new_d = []
        for rr, row in enumerate(d):
            if rr == r:
                continue
            gamma = row[c]
            new_row = []
            for cc, entry in enumerate(row):
                if cc == c:
                    continue
                if gamma and d[r][cc]:
                    corr = elem_mul(alg, elem_mul(alg, gamma, phi_inv, p),
                                    d[r][cc], p)
                    entry = elem_add(entry, corr, p, -1)
                new_row.append(entry)
            new_d.append(new_row)
        diffs[i] = new_d
        if i + 1 in diffs:
            diffs[i + 1] = [row for rr, row in enumerate(diffs[i + 1])
                            if rr != c]
        if i - 1 in diffs:
            diffs[i - 1] = [[e for cc, e in enumerate(row) if cc != r]
                            for row in diffs[i - 1]]
        del terms[i][c]
        del terms[i - 1][r]
        current = ProjComplex(alg, terms, diffs, p)
        terms = dict((j, list(vs)) for j, vs in current.terms.items())
        diffs = dict((j, [list(row) for row in m])
                     for j, m in current.differentials.items())
