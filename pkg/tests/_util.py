"""Shared helpers for the test-suite: random elements and small instance builders."""

import random

from nullsatz.findim import preset
from nullsatz.leftideal import AlgPoly, LeftIdeal, parse_algpoly


def random_algpoly(A, n, rng, max_deg=3, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, max_deg) for _ in range(n))
        terms[e] = [A.field.random(rng) for _ in range(A.dim)]
    return AlgPoly(A, n, {e: tuple(c) for e, c in terms.items()})


def ideal(A, n, *texts):
    if isinstance(A, str):
        A = preset(A)
    return LeftIdeal.generate(A, n, [parse_algpoly(t, A, n) for t in texts])


def rng(seed=0):
    return random.Random(seed)
