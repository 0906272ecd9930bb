"""Randomized element generators shared across the test modules."""

import random

from chainops.barratt_eccles import BarrattEcclesElement
from chainops.surjection import SurjectionElement, is_degenerate_surjection


def rand_perm(rng: random.Random, r: int) -> tuple:
    values = list(range(1, r + 1))
    rng.shuffle(values)
    return tuple(values)


def rand_surjection_key(rng: random.Random, arity: int, degree: int) -> tuple:
    if arity == 1 and degree > 0:
        raise ValueError("no nondegenerate arity-1 keys in positive degree")
    while True:
        key = tuple(rng.randint(1, arity) for _ in range(arity + degree))
        if max(key) == arity and not is_degenerate_surjection(key):
            return key


def _rand_coeff(rng, torsion):
    if torsion:
        return rng.randint(1, max(1, torsion - 1))
    return rng.randint(-4, 4) or 1


def rand_surjection(rng, convention, arity=None, degree=None, torsion=0,
                    max_terms=3):
    arity = arity if arity is not None else rng.randint(1, 4)
    if degree is None:
        degree = rng.randint(0, 4)
    if arity == 1:
        degree = 0
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rand_surjection_key(rng, arity, degree)] = _rand_coeff(rng, torsion)
    return SurjectionElement(terms, torsion=torsion, convention=convention)


def rand_be_key(rng: random.Random, arity: int, degree: int) -> tuple:
    if arity == 1 and degree > 0:
        raise ValueError("no nondegenerate arity-1 simplices in positive degree")
    while True:
        key = tuple(rand_perm(rng, arity) for _ in range(degree + 1))
        if not any(a == b for a, b in zip(key, key[1:])):
            return key


def rand_barratt_eccles(rng, arity=None, degree=None, torsion=0, max_terms=3):
    arity = arity if arity is not None else rng.randint(1, 3)
    if degree is None:
        degree = rng.randint(0, 3)
    if arity == 1:
        degree = 0
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rand_be_key(rng, arity, degree)] = _rand_coeff(rng, torsion)
    return BarrattEcclesElement(terms, torsion=torsion)
