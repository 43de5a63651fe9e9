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

# Combinatorial surface of a gentle algebra.
#
# Every vertex has two slots, one on each maximal permitted thread through
# it (a thread may be trivial). A thread is a marked point; its slots in
# thread order, preceded by the marked point itself, are the
# anticlockwise boundary of one polygon. Polygons are glued along the two
# slots of each vertex, so a curve is a sequence of polygon occurrences
# ``(thread, entry, exit)`` where entry and exit are slots, or None for
# the marked point.

import collections
import logging
import threading

from gentle_thick.errors import PreconditionError
from gentle_thick.strings import GradedString
from gentle_thick.strings import Letter

logger = logging.getLogger(__name__)


class Slot(collections.namedtuple('Slot',
                                  'vertex index in_arrow out_arrow')):
    __slots__ = ()

    def __str__(self):
        return "{0}:{1}".format(self.vertex, self.index)


Occurrence = collections.namedtuple('Occurrence', 'thread entry exit')


def _flip(occ):
    return Occurrence(occ.thread, occ.exit, occ.entry)


def reverse_occurrences(occs):
    return [_flip(o) for o in reversed(occs)]


class Thread(object):

    def __init__(self, number, arrows, slots, name=None):
        self.number = number
        self.arrows = tuple(arrows)
        self.slots = tuple(slots)
        if name is None:
            name = ".".join(arrows) or "({0})".format(slots[0].vertex)
        self.name = name

    def __len__(self):
        return len(self.slots) + 1

    def __repr__(self):
        return "<Thread {0}>".format(self.name)


class SurfaceModel(object):
    """Slots, threads and polygons of a gentle algebra."""

    def __init__(self, alg):
        self.alg = alg
        self.slots = {}
        for v in alg.vertices:
            pairs = []
            for a in alg.quiver.in_arrows(v):
                pairs.append((a, alg.permitted_successor.get(a)))
            for b in alg.quiver.out_arrows(v):
                if b not in alg.permitted_predecessor:
                    pairs.append((None, b))
            while len(pairs) < 2:
                pairs.append((None, None))
            self.slots[v] = tuple(Slot(v, i, a, b)
                                  for i, (a, b) in enumerate(pairs))

        self.threads = []
        self.thread_of = {}
        self.position = {}
        for v in alg.vertices:
            for slot in self.slots[v]:
                if slot.in_arrow is None:
                    self._add_thread(slot)

    def _add_thread(self, first):
        chain = [first]
        arrows = []
        while chain[-1].out_arrow is not None:
            arrow = chain[-1].out_arrow
            arrows.append(arrow)
            nxt = self.alg.target(arrow)
            chain.append(self.slot_with_in(nxt, arrow))
        name = None
        if not arrows and first.index == 1 and \
                self.slots[first.vertex][0].out_arrow is None and \
                self.slots[first.vertex][0].in_arrow is None:
            name = "({0})'".format(first.vertex)
        thread = Thread(len(self.threads), arrows, chain, name)
        self.threads.append(thread)
        for pos, slot in enumerate(chain):
            self.thread_of[slot] = thread.number
            self.position[slot] = pos

    def slot_with_in(self, vertex, arrow):
        for slot in self.slots[vertex]:
            if slot.in_arrow == arrow:
                return slot
        raise PreconditionError("no slot at {0} receives {1}".format(
            vertex, arrow))

    def slot_with_out(self, vertex, arrow):
        for slot in self.slots[vertex]:
            if slot.out_arrow == arrow:
                return slot
        raise PreconditionError("no slot at {0} emits {1}".format(
            vertex, arrow))

    def other(self, slot):
        a, b = self.slots[slot.vertex]
        return b if slot == a else a

    def marked_points(self):
        return [t.name for t in self.threads]

    def thread_named(self, name):
        for t in self.threads:
            if t.name == name:
                return t
        raise PreconditionError("unknown marked point {0}".format(name))

    def boundary_index(self, side):
        return 0 if side is None else self.position[side] + 1

    def rank(self, thread, origin, side):
        """Anticlockwise distance from ``origin`` to ``side`` on the
        boundary of the polygon of ``thread``."""
        size = len(self.threads[thread])
        return (self.boundary_index(side) -
                self.boundary_index(origin)) % size

    # letters and occurrences

    def start_slot(self, letter):
        arrows = letter.path.arrows
        if letter.inverse:
            return self.slot_with_in(letter.path.target, arrows[-1])
        return self.slot_with_out(letter.path.source, arrows[0])

    def end_slot(self, letter):
        arrows = letter.path.arrows
        if letter.inverse:
            return self.slot_with_out(letter.path.source, arrows[0])
        return self.slot_with_in(letter.path.target, arrows[-1])

    def letter_occurrence(self, letter):
        start = self.start_slot(letter)
        return Occurrence(self.thread_of[start], start, self.end_slot(letter))

    def occurrence_letter(self, occ):
        a = self.position[occ.entry]
        b = self.position[occ.exit]
        arrows = self.threads[occ.thread].arrows
        if a < b:
            return Letter(self.alg.path(arrows[a:b]), False)
        return Letter(self.alg.path(arrows[b:a]), True)

    def end_occurrence(self, slot, leaving=True):
        if leaving:
            return Occurrence(self.thread_of[slot], None, slot)
        return Occurrence(self.thread_of[slot], slot, None)

    # curves

    def string_curve(self, s):
        if s.is_empty:
            first, second = self.slots[s.vertex]
            occs = [self.end_occurrence(first),
                    self.end_occurrence(second, leaving=False)]
        else:
            occs = [self.end_occurrence(
                self.other(self.start_slot(s.letters[0])))]
            occs.extend(self.letter_occurrence(l) for l in s.letters)
            occs.append(self.end_occurrence(
                self.other(self.end_slot(s.letters[-1])), leaving=False))
        return Curve(self, occs, s.base)

    def band_curve(self, band):
        occs = [self.letter_occurrence(l) for l in band.letters]
        return Curve(self, occs, band.base, closed=True)


def _cancel_open(occs, tags):
    occs = list(occs)
    tags = list(tags)
    k = 1
    while 0 < k < len(occs) - 1:
        occ = occs[k]
        if occ.entry is not None and occ.entry == occ.exit:
            before, after = occs[k - 1], occs[k + 1]
            merged = Occurrence(before.thread, before.entry, after.exit)
            occs[k - 1:k + 2] = [merged]
            del tags[k - 1:k + 1]
            k = max(1, k - 1)
        else:
            k += 1
    if len(occs) == 1:
        return [], []
    return occs, tags


def _cancel_closed(occs, tags):
    occs = list(occs)
    tags = list(tags)
    k = 0
    while k < len(occs):
        occ = occs[k]
        if occ.entry != occ.exit:
            k += 1
            continue
        if len(occs) <= 2:
            return [], []
        # rotate so that the cancelled occurrence comes second
        start = (k - 1) % len(occs)
        occs = occs[start:] + occs[:start]
        tags = tags[start:] + tags[:start]
        before, after = occs[0], occs[2]
        occs = [Occurrence(before.thread, before.entry, after.exit)] + \
            occs[3:]
        tags = tags[2:]
        k = 0
    return occs, tags


class Curve(object):
    """A reduced curve: an arc between marked points or a closed loop.

    ``base`` is the grade at the first crossing; ``tags`` label crossings
    with their origin when curves are concatenated.
    """

    def __init__(self, model, occurrences, base=0, closed=False, tags=None):
        self.model = model
        self.closed = closed
        n_cross = len(occurrences) if closed else \
            max(len(occurrences) - 1, 0)
        if tags is None:
            tags = [None] * n_cross
        if closed:
            occs, tags = _cancel_closed(occurrences, tags)
        else:
            occs, tags = _cancel_open(occurrences, tags)
        self.occurrences = occs
        self.tags = tags
        self.base = base

    @property
    def is_zero(self):
        return not self.occurrences

    @property
    def ends(self):
        """Marked-point names of the two ends, or None for loops."""
        if self.closed or self.is_zero:
            return None
        threads = self.model.threads
        return (threads[self.occurrences[0].thread].name,
                threads[self.occurrences[-1].thread].name)

    def letters(self):
        occs = self.occurrences if self.closed else self.occurrences[1:-1]
        return tuple(self.model.occurrence_letter(o) for o in occs)

    def grading(self):
        grades = [self.base]
        for letter in self.letters():
            grades.append(grades[-1] + letter.step)
        return grades

    def to_string(self):
        if self.closed:
            raise PreconditionError("a closed curve is not a string")
        if self.is_zero:
            return None
        letters = self.letters()
        if not letters:
            return GradedString((), self.base,
                                self.occurrences[0].exit.vertex)
        return GradedString(letters, self.base)

    def reversed(self):
        base = self.grading()[-1] if not self.closed else self.base
        return Curve(self.model, reverse_occurrences(self.occurrences),
                     base, self.closed, list(reversed(self.tags)))

    def tagged(self, label):
        tags = [(label, i) for i in range(len(self.tags))]
        return Curve(self.model, self.occurrences, self.base, self.closed,
                     tags)

    def germ_key(self, right=False):
        """Boundary ranks along the germ leaving one end; sorting the keys
        of the half-edges at a marked point gives their anticlockwise
        order."""
        occs = reverse_occurrences(self.occurrences) if right else \
            self.occurrences
        model = self.model
        return tuple(model.rank(o.thread, o.entry, o.exit) for o in occs)

    def close(self):
        """Join the two ends at their common marked point into a loop."""
        first, last = self.occurrences[0], self.occurrences[-1]
        if first.thread != last.thread:
            raise PreconditionError("the ends lie on different marked "
                                    "points")
        merged = Occurrence(first.thread, last.entry, first.exit)
        return Curve(self.model, [merged] + self.occurrences[1:-1],
                     self.base, closed=True,
                     tags=list(self.tags))

    def __eq__(self, other):
        return (isinstance(other, Curve) and
                self.closed == other.closed and
                self.occurrences == other.occurrences)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "<Curve {0}>".format(" ".join(
            "{0}[{1}>{2}]".format(self.model.threads[o.thread].name,
                                  o.entry or "*", o.exit or "*")
            for o in self.occurrences))


def concatenate(x, y):
    """``x`` followed by ``y`` through the marked point ending ``x`` and
    starting ``y``; None when those marked points differ."""
    last, first = x.occurrences[-1], y.occurrences[0]
    if last.thread != first.thread:
        return None
    merged = Occurrence(last.thread, last.entry, first.exit)
    occs = x.occurrences[:-1] + [merged] + y.occurrences[1:]
    return Curve(x.model, occs, x.base, tags=list(x.tags) + list(y.tags))


# intersections

Crossing = collections.namedtuple('Crossing', 'x_index y_index')


def _interleave(model, thread, a, b, c, d):
    points = [model.boundary_index(p) for p in (a, b, c, d)]
    if len(set(points)) < 4:
        return False
    size = len(model.threads[thread])
    lo = points[0]
    span = (points[1] - lo) % size

    def inside(p):
        return 0 < (p - lo) % size < span

    return inside(points[2]) != inside(points[3])


def _run_is_crossing(model, xs, ys, i, ip, j, jp):
    a, a2 = xs[i].entry, ys[ip].entry
    b, b2 = xs[j].exit, ys[jp].exit
    if (a is None and a2 is None) or (b is None and b2 is None):
        return False
    if i == j:
        return _interleave(model, xs[i].thread, a, b, a2, b2)
    shared_out = xs[i].exit
    shared_in = xs[j].entry
    left_start = (model.rank(xs[i].thread, shared_out, a2) <
                  model.rank(xs[i].thread, shared_out, a))
    left_end = (model.rank(xs[j].thread, shared_in, b2) >
                model.rank(xs[j].thread, shared_in, b))
    return left_start != left_end


def _crossings_aligned(x, ys, y_closed, single_polygon):
    model = x.model
    xs = x.occurrences
    nx_, ny = len(xs), len(ys)
    found = []
    for i in range(nx_):
        for ip in range(ny):
            if xs[i].thread != ys[ip].thread:
                continue
            if xs[i].entry is not None and xs[i].entry == ys[ip].entry:
                continue
            t = 0
            limit = min(nx_, ny)
            wrapped = False
            while True:
                ex = xs[(i + t) % nx_].exit
                ey = ys[(ip + t) % ny].exit
                if ex is None or ex != ey:
                    break
                if not x.closed and i + t + 1 >= nx_:
                    break
                if not y_closed and ip + t + 1 >= ny:
                    break
                t += 1
                if t >= limit:
                    wrapped = True
                    break
            if wrapped:
                continue
            if t == 0 and not single_polygon:
                continue
            if _run_is_crossing(model, _cyc(xs, i, t), _cyc(ys, ip, t),
                                0, 0, t, t):
                found.append((i, ip))
    return found


def _cyc(occs, start, t):
    n = len(occs)
    return [occs[(start + k) % n] for k in range(t + 1)]


def interior_crossings(x, y):
    """Interior intersection points of two reduced curves, located by
    occurrence indices of the first polygon of each parallel run."""
    if x.is_zero or y.is_zero:
        return []
    ys = y.occurrences
    n = len(ys)
    found = [Crossing(i, ip)
             for i, ip in _crossings_aligned(x, ys, y.closed, True)]
    rev = reverse_occurrences(ys)
    found.extend(Crossing(i, n - 1 - ip)
                 for i, ip in _crossings_aligned(x, rev, y.closed, False))
    return sorted(found)


def self_crossings(x):
    """Self-intersections as index pairs ``(k, l)`` with ``k < l``."""
    return [c for c in interior_crossings(x, x) if c.x_index < c.y_index]


def self_crossing_count(x):
    if x.is_zero:
        return 0
    return len(interior_crossings(x, x)) // 2


def shared_endpoints(x, y):
    """Pairs of ends (0 left, 1 right) of ``x`` and ``y`` on a common
    marked point."""
    if x.ends is None or y.ends is None:
        return []
    pairs = []
    for e, mx in enumerate(x.ends):
        for f, my in enumerate(y.ends):
            if mx == my:
                pairs.append((e, f))
    return pairs


# surgery

def resolve_crossing(x, y, crossing):
    """Split ``y`` at its crossing with ``x``: returns the curves
    ``x[0, p] y[p, 1]`` and ``x[0, p] y[0, p]^-1``."""
    model = x.model
    k, l = crossing
    xs, ys = x.occurrences, y.occurrences
    thread = xs[k].thread
    head = xs[:k]
    forward = Curve(model, head + [Occurrence(thread, xs[k].entry,
                                              ys[l].exit)] + ys[l + 1:])
    back = Curve(model, head + [Occurrence(thread, xs[k].entry,
                                           ys[l].entry)] +
                 reverse_occurrences(ys[:l]))
    return forward, back


def split_self_crossing(x, crossing):
    """Surgery at a self-crossing ``(k, l)``, ``k < l``: returns the
    closed arc ``x[0, q] x[0, p]^-1`` and the shortcut
    ``x[0, p] x[q, 1]``."""
    model = x.model
    k, l = crossing
    xs = x.occurrences
    thread = xs[k].thread
    loop = Curve(model, xs[:l] + [Occurrence(thread, xs[l].entry,
                                             xs[k].entry)] +
                 reverse_occurrences(xs[:k]))
    shortcut = Curve(model, xs[:k] + [Occurrence(thread, xs[k].entry,
                                                 xs[l].exit)] +
                     xs[l + 1:])
    return loop, shortcut


_models = {}
_models_lock = threading.Lock()


def surface_model(alg):
    """The (cached) surface model of ``alg``."""
    with _models_lock:
        model = _models.get(alg)
        if model is None:
            model = _models[alg] = SurfaceModel(alg)
    return model
