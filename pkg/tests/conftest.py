import random

import pytest

from welzlorder.setsystem import Partition, build


def random_system(rng, max_a=16, max_b=16, density=0.4):
    """Random bipartite incidence structure, possibly with isolated ids."""
    n_a = rng.randint(1, max_a)
    n_b = rng.randint(1, max_b)
    edges = [(x, v) for x in range(n_b) for v in range(n_a)
             if rng.random() < density]
    return build(edges, n_elements=n_a, n_sets=n_b)


def random_order(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def random_b_partition(rng, system):
    """Random partition of the set side with smallest-id representatives."""
    ids = list(range(system.n_sets))
    rng.shuffle(ids)
    n_classes = rng.randint(1, system.n_sets)
    cuts = sorted(rng.sample(range(1, system.n_sets), n_classes - 1)) \
        if n_classes > 1 else []
    groups = []
    prev = 0
    for cut in cuts + [system.n_sets]:
        groups.append(sorted(ids[prev:cut]))
        prev = cut
    groups.sort(key=lambda g: g[0])
    class_of = [0] * system.n_sets
    reps = []
    for ci, group in enumerate(groups):
        reps.append(group[0])
        for x in group:
            class_of[x] = ci
    return Partition(side="B", class_of=tuple(class_of), representative=tuple(reps))


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
