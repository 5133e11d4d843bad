"""
Random Sampling
Seeded random cochains and sparse operations for the structural property checks
"""

import random
from fractions import Fraction
from typing import List, Optional

from repository.circle_complex import CircleComplex, Cochain
from repository.graded import Degree
from repository.operations import Entry, Operation


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3, 4]))


def random_cochain(complex: CircleComplex, degree: Degree, rng: random.Random, terms: int = 3) -> Cochain:
    cells = complex.cells(degree)
    return complex.cochain(degree, {rng.choice(cells): random_rational(rng) for _ in range(terms)})


def random_operation(complex: CircleComplex, m: int, n: int, degree: Degree, rng: random.Random,
                     entries: int = 4, window: Optional[int] = None) -> Operation:
    """
    A sparse operation with up to `entries` random entries.
    With a window, every cell of an entry lies within `window` doubled steps of a common center.
    """
    items: List[Entry] = []
    attempts = 0
    while len(items) < entries and attempts < 50 * entries:
        attempts += 1
        center = rng.randrange(complex.size)

        def pick() -> int:
            if window is None:
                return rng.randrange(complex.size)
            return (center + rng.randint(-window, window)) % complex.size

        inp = tuple(pick() for _ in range(m))
        odd_outputs = degree + sum(c & 1 for c in inp)
        if not 0 <= odd_outputs <= n:
            continue
        odd_slots = set(rng.sample(range(n), odd_outputs))
        out = []
        for j in range(n):
            c = pick()
            if (c & 1) != (j in odd_slots):
                c = (c + rng.choice([-1, 1])) % complex.size
            out.append(c)
        items.append((inp, tuple(out), random_rational(rng)))
    return Operation.from_items(complex, m, n, degree, items)
