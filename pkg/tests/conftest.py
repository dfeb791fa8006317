"""Shared oracles and instance samplers.

The oracles here are deliberately naive: full box scans and sorts that
evaluate the weight expression directly, so the production search code is
checked against an independent enumeration path.
"""

import itertools
import math
import random

import pytest

from anisob import ExplicitFamily, SequencePair


def make_pair(a_vals, b_vals):
    return SequencePair(ExplicitFamily(tuple(a_vals)), ExplicitFamily(tuple(b_vals)), len(a_vals))


def box_weight(a, b, point):
    return sum(a[j] * abs(point[j]) ** (2 * b[j]) for j in range(len(a)))


def box_ranges(a, b, threshold):
    """Symmetric per-coordinate ranges covering every point with weight <= threshold."""
    ranges = []
    for j in range(len(a)):
        km = 0
        while a[j] * (km + 1) ** (2 * b[j]) <= threshold:
            km += 1
        ranges.append(range(-km, km + 1))
    return ranges


def box_count(a, b, threshold, strict=False):
    total = 0
    for point in itertools.product(*box_ranges(a, b, threshold)):
        w = box_weight(a, b, point)
        if (w < threshold) if strict else (w <= threshold):
            total += 1
    return total


def sorted_weights(a, b, n):
    """The n smallest lattice weights (with multiplicity), by full scan and sort."""
    threshold = 1.0
    while box_count(a, b, threshold) < n:
        threshold *= 2.0
    weights = []
    for point in itertools.product(*box_ranges(a, b, threshold)):
        w = box_weight(a, b, point)
        if w <= threshold:
            weights.append(w)
    weights.sort()
    return weights[:n]


def random_instance(rng: random.Random, d, a_range=(0.5, 4.0), b_range=(0.5, 3.0), sort_a=False):
    a = [rng.uniform(*a_range) for _ in range(d)]
    if sort_a:
        a.sort()
    b = [rng.uniform(*b_range) for _ in range(d)]
    return make_pair(a, b)


@pytest.fixture
def rng():
    return random.Random(20240817)
