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

# Graded homotopy strings and bands.

import collections
import logging

from gentle_thick.algebra import sort_key
from gentle_thick.errors import InvalidStringError
from gentle_thick.errors import PreconditionError
from gentle_thick.errors import UngradedError
from gentle_thick.parallel import concurrent

logger = logging.getLogger(__name__)


class Letter(collections.namedtuple('Letter', 'path inverse')):
    """A homotopy letter: a nonempty permitted path read forwards
    (direct) or backwards (inverse)."""
    __slots__ = ()

    @property
    def start(self):
        return self.path.target if self.inverse else self.path.source

    @property
    def end(self):
        return self.path.source if self.inverse else self.path.target

    @property
    def step(self):
        return -1 if self.inverse else 1

    def flipped(self):
        return Letter(self.path, not self.inverse)

    def key(self):
        return (tuple(sort_key(a) for a in self.path.arrows),
                1 if self.inverse else 0)

    def __str__(self):
        return str(self.path) + ("^-" if self.inverse else "")


def _word_key(letters):
    return tuple(letter.key() for letter in letters)


def inverse_word(letters):
    return tuple(letter.flipped() for letter in reversed(letters))


def letter_violations(alg, letters):
    violations = []
    for i, letter in enumerate(letters, 1):
        if letter.path is None or letter.path.is_trivial:
            violations.append("letter {0} is not a nonempty permitted "
                              "path".format(i))
        elif alg.path(letter.path.arrows) != letter.path:
            violations.append("letter {0} is not a permitted "
                              "path".format(i))
    return violations


def junction_violation(alg, x, y):
    """The rule broken when ``y`` follows ``x``, or None."""
    if x.end != y.start:
        return "letters do not meet"
    p, q = x.path, y.path
    if p == q and x.inverse != y.inverse:
        return "immediate backtrack"
    if not x.inverse and not y.inverse:
        if not alg.is_relation(p.arrows[-1], q.arrows[0]):
            return "direct-direct junction must lie in I"
    elif x.inverse and y.inverse:
        if not alg.is_relation(q.arrows[-1], p.arrows[0]):
            return "inverse-inverse junction must lie in I"
    elif not x.inverse and y.inverse:
        if p.arrows[-1] == q.arrows[-1]:
            return "direct-inverse junction needs distinct final arrows"
    else:
        if p.arrows[0] == q.arrows[0]:
            return "inverse-direct junction needs distinct initial arrows"
    return None


def validate_string(alg, letters):
    """Violations of the homotopy-string conditions; empty means valid."""
    letters = tuple(letters)
    violations = letter_violations(alg, letters)
    if violations:
        return violations
    for i, (x, y) in enumerate(zip(letters, letters[1:]), 1):
        rule = junction_violation(alg, x, y)
        if rule:
            violations.append("{0} at junction {1}".format(rule, i))
    return violations


def is_proper_power(letters):
    n = len(letters)
    for d in range(1, n):
        if n % d == 0 and letters[d:] + letters[:d] == letters:
            return True
    return False


def band_degree(letters):
    """Number of direct letters minus number of inverse letters."""
    return sum(letter.step for letter in letters)


def validate_band(alg, letters):
    letters = tuple(letters)
    if not letters:
        return ["a band needs at least one letter"]
    violations = validate_string(alg, letters)
    if violations:
        return violations
    rule = junction_violation(alg, letters[-1], letters[0])
    if rule:
        violations.append("{0} at junction {1}".format(rule, len(letters)))
    if is_proper_power(letters):
        violations.append("word is a proper power")
    degree = band_degree(letters)
    if degree:
        violations.append("degree {0} is not zero".format(degree))
    return violations


class GradedString(object):
    """Letters ``s_1 .. s_n`` with grading ``(b_0, .., b_n)``.

    The empty string carries its vertex. ``base`` is ``b_0``.
    """

    def __init__(self, letters=(), base=0, vertex=None):
        self.letters = tuple(letters)
        self.base = base
        if self.letters:
            vertex = self.letters[0].start
        elif vertex is None:
            raise PreconditionError("the empty string needs a vertex")
        self.vertex = vertex

    @property
    def is_empty(self):
        return not self.letters

    def __len__(self):
        return len(self.letters)

    @property
    def grading(self):
        grades = [self.base]
        for letter in self.letters:
            grades.append(grades[-1] + letter.step)
        return tuple(grades)

    @property
    def vertices(self):
        if not self.letters:
            return (self.vertex,)
        return (self.letters[0].start,) + tuple(l.end for l in self.letters)

    def inverse(self):
        return GradedString(inverse_word(self.letters), self.grading[-1],
                            self.vertex)

    def shift(self, k):
        return GradedString(self.letters, self.base + k, self.vertex)

    def word_key(self):
        if not self.letters:
            return ((), sort_key(self.vertex))
        return (_word_key(self.letters), ())

    def __eq__(self, other):
        return (isinstance(other, GradedString) and
                self.letters == other.letters and
                self.base == other.base and self.vertex == other.vertex)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.letters, self.base, self.vertex))

    def __str__(self):
        if not self.letters:
            text = "e@{0}".format(self.vertex)
        else:
            text = " ".join(str(l) for l in self.letters)
        if self.base:
            text += "@{0}".format(self.base)
        return text

    def __repr__(self):
        return "<GradedString {0}>".format(self)


class GradedBand(object):
    """A cyclic word ``s_1 .. s_n`` with grading ``(b_0, .., b_{n-1})``,
    scalar and dimension."""

    def __init__(self, letters, base=0, scalar=1, dimension=1):
        self.letters = tuple(letters)
        if not self.letters:
            raise PreconditionError("a band needs at least one letter")
        degree = band_degree(self.letters)
        if degree:
            raise UngradedError(degree)
        if scalar == 0:
            raise PreconditionError("the band scalar must be nonzero")
        if dimension < 1:
            raise PreconditionError("the band dimension must be positive")
        self.base = base
        self.scalar = scalar
        self.dimension = dimension

    def __len__(self):
        return len(self.letters)

    @property
    def grading(self):
        grades = [self.base]
        for letter in self.letters[:-1]:
            grades.append(grades[-1] + letter.step)
        return tuple(grades)

    @property
    def vertices(self):
        return tuple(l.start for l in self.letters)

    def rotate(self, k):
        k %= len(self.letters)
        return GradedBand(self.letters[k:] + self.letters[:k],
                          self.grading[k], self.scalar, self.dimension)

    def inverse(self):
        # the inverse word starts at the end of the last letter, which is
        # the start vertex again
        return GradedBand(inverse_word(self.letters), self.base,
                          self.scalar, self.dimension)

    def shift(self, k):
        return GradedBand(self.letters, self.base + k, self.scalar,
                          self.dimension)

    def __eq__(self, other):
        return (isinstance(other, GradedBand) and
                self.letters == other.letters and
                self.base == other.base and self.scalar == other.scalar and
                self.dimension == other.dimension)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.letters, self.base, self.scalar, self.dimension))

    def __str__(self):
        text = "[{0}]".format(" ".join(str(l) for l in self.letters))
        if self.base:
            text += "@{0}".format(self.base)
        if self.scalar != 1:
            text += ";lambda={0}".format(self.scalar)
        if self.dimension != 1:
            text += ";dim={0}".format(self.dimension)
        return text

    def __repr__(self):
        return "<GradedBand {0}>".format(self)


def grade_string(letters, base=0, vertex=None):
    return GradedString(letters, base, vertex)


def grade_band(letters, base=0, scalar=1, dimension=1):
    return GradedBand(letters, base, scalar, dimension)


def checked_string(alg, letters, base=0, vertex=None):
    violations = validate_string(alg, letters)
    if violations:
        raise InvalidStringError(violations)
    return GradedString(letters, base, vertex)


def checked_band(alg, letters, base=0, scalar=1, dimension=1):
    violations = validate_band(alg, letters)
    degree = band_degree(letters)
    if degree and letters:
        raise UngradedError(degree)
    if violations:
        raise InvalidStringError(violations, header="not a homotopy band")
    return GradedBand(letters, base, scalar, dimension)


def normalize_band(band):
    """The dimension-one band with the same word, grading and scalar."""
    return GradedBand(band.letters, band.base, band.scalar, 1)


def canonical_string(s):
    """Representative of the inversion class, re-graded to base 0."""
    if s.is_empty:
        return GradedString((), 0, s.vertex)
    inv = inverse_word(s.letters)
    letters = min(s.letters, inv, key=_word_key)
    return GradedString(letters, 0)


def canonical_band(band):
    """Least rotation of the word or of its inverse, re-graded to base 0."""
    best = None
    for word in (band.letters, inverse_word(band.letters)):
        for k in range(len(word)):
            rotated = word[k:] + word[:k]
            if best is None or _word_key(rotated) < _word_key(best):
                best = rotated
    return GradedBand(best, 0, band.scalar, band.dimension)


def string_equiv(s, t):
    """Same string up to inversion; gradings are compared up to shift."""
    return canonical_string(s) == canonical_string(t)


def band_equiv(b, c):
    return (canonical_band(b).letters == canonical_band(c).letters and
            b.scalar == c.scalar and b.dimension == c.dimension)


def all_letters(alg):
    letters = []
    for v in alg.vertices:
        for path in alg.paths_from(v):
            if not path.is_trivial:
                letters.append(Letter(path, False))
                letters.append(Letter(path, True))
    letters.sort(key=Letter.key)
    return letters


def _extensions(alg, word, letters):
    last = word[-1]
    for letter in letters:
        if letter.start == last.end and \
                junction_violation(alg, last, letter) is None:
            yield letter


@concurrent
def _words_from(alg, first, max_letters, letters):
    words = []
    stack = [(first,)]
    while stack:
        word = stack.pop()
        words.append(word)
        if len(word) < max_letters:
            for letter in _extensions(alg, word, letters):
                stack.append(word + (letter,))
    return words


def enumerate_words(alg, max_letters, n_workers=1):
    """Every valid nonempty letter sequence with at most ``max_letters``
    letters, partitioned by first letter."""
    if max_letters < 1:
        return []
    letters = all_letters(alg)
    if not letters:
        return []
    parts = _words_from(alg=alg, max_letters=max_letters, letters=letters,
                        concurrent=[{'first': l} for l in letters],
                        n_workers=n_workers)
    words = []
    for part in parts:
        words.extend(part)
    return words


def enumerate_strings(alg, max_letters, n_workers=1):
    """String classes with at most ``max_letters`` letters, canonical
    representatives in sorted order."""
    classes = {}
    for v in alg.vertices:
        s = GradedString((), 0, v)
        classes[s.word_key()] = s
    for word in enumerate_words(alg, max_letters, n_workers):
        s = canonical_string(GradedString(word))
        classes.setdefault(s.word_key(), s)
    logger.debug("%d string classes up to %d letters", len(classes),
                 max_letters)
    return [classes[k] for k in sorted(classes)]


def enumerate_bands(alg, max_letters, n_workers=1):
    classes = {}
    for word in enumerate_words(alg, max_letters, n_workers):
        if len(word) < 2 or word[-1].end != word[0].start:
            continue
        if band_degree(word) != 0 or is_proper_power(word):
            continue
        if junction_violation(alg, word[-1], word[0]) is not None:
            continue
        band = canonical_band(GradedBand(word))
        classes.setdefault(_word_key(band.letters), band)
    logger.debug("%d band classes up to %d letters", len(classes),
                 max_letters)
    return [classes[k] for k in sorted(classes)]
