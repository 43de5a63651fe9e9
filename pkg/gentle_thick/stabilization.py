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

# Growth of morphisms from the powers of a spherelike string.

import collections
import logging

from gentle_thick.arcs import power
from gentle_thick.arcs import power_string
from gentle_thick.complexes import string_to_complex
from gentle_thick import oracle

logger = logging.getLogger(__name__)

CONSTANT = 'constant'
INCREASING = 'increasing'
IRREGULAR = 'irregular'

StabilizationReport = collections.namedtuple(
    'StabilizationReport', 'values verdict slope start')


def classify_sequence(values):
    """Find the tail on which ``values`` grows by a fixed step.

    ``start`` is the first 1-based index of that tail.
    """
    if len(values) < 2:
        return CONSTANT, 0, 1
    steps = [b - a for a, b in zip(values, values[1:])]
    slope = steps[-1]
    start = len(steps)
    while start > 0 and steps[start - 1] == slope:
        start -= 1
    if slope == 0:
        verdict = CONSTANT
    elif slope in (1, 2):
        verdict = INCREASING
    else:
        verdict = IRREGULAR
    return verdict, slope, start + 1


def stabilization_check(alg, s, P, i_max=6, p=2):
    """Tabulate morphisms up to shift from power(s, i) to ``P``."""
    decomposition = power_string(alg, s, p)
    values = []
    for i in range(1, i_max + 1):
        S = string_to_complex(alg, power(alg, s, i, decomposition, p), p)
        values.append(oracle.hom_total(S, P))
        logger.debug("power %d of %s: %d", i, s, values[-1])
    verdict, slope, start = classify_sequence(values)
    return StabilizationReport(values, verdict, slope, start)
