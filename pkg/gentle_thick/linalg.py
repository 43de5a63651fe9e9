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

# Gaussian elimination over a prime field.

import numpy as np

DTYPE = np.int64


def inverse_mod(a, p):
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse modulo {0}".format(p))
    return pow(int(a), p - 2, p)


def zeros(rows, cols):
    return np.zeros((rows, cols), dtype=DTYPE)


def row_reduce(matrix, p):
    """Reduced row echelon form of ``matrix`` modulo ``p``.

    Returns ``(reduced, pivots)`` where ``pivots`` lists pivot columns.
    """
    A = np.array(matrix, dtype=DTYPE) % p
    if A.ndim != 2:
        raise ValueError("expected a 2-dimensional matrix")
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(A[r:, c])[0]
        if not len(nonzero):
            continue
        pivot = r + nonzero[0]
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        A[r] = (A[r] * inverse_mod(A[r, c], p)) % p
        others = np.nonzero(A[:, c])[0]
        for i in others:
            if i != r:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank(matrix, p):
    A = np.asarray(matrix)
    if A.size == 0:
        return 0
    return len(row_reduce(A, p)[1])


def nullspace(matrix, p):
    """Basis of ``{x : matrix . x = 0}`` as the rows of the result."""
    A = np.asarray(matrix, dtype=DTYPE)
    cols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(cols, dtype=DTYPE)
    R, pivots = row_reduce(A, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = zeros(len(free), cols)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = (-R[i, f]) % p
    return basis


def solve(matrix, rhs, p):
    """Some ``x`` with ``matrix . x == rhs`` modulo ``p``, or None."""
    A = np.asarray(matrix, dtype=DTYPE)
    b = np.asarray(rhs, dtype=DTYPE).reshape(-1, 1)
    rows, cols = A.shape
    if cols == 0:
        return np.zeros(0, dtype=DTYPE) if not np.any(b % p) else None
    R, pivots = row_reduce(np.hstack([A, b]), p)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=DTYPE)
    for i, c in enumerate(pivots):
        x[c] = R[i, cols]
    return x % p


def independent_extension(span, candidates, p):
    """Indices of ``candidates`` (rows) extending the row space of
    ``span`` to a basis of the sum, chosen greedily in order."""
    current = np.asarray(span, dtype=DTYPE)
    base_rank = rank(current, p) if current.size else 0
    chosen = []
    for i, vector in enumerate(np.asarray(candidates, dtype=DTYPE)):
        trial = (np.vstack([current, vector]) if current.size
                 else vector.reshape(1, -1))
        trial_rank = rank(trial, p)
        if trial_rank > base_rank:
            current = trial
            base_rank = trial_rank
            chosen.append(i)
    return chosen
