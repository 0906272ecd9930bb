import random

import pytest

from chainops.surjection import (BERGER_FRESSE, MCCLURE_SMITH, SurjectionElement,
                                 is_degenerate_surjection, symmetric_action)
from chainops.symgroup import SymmetricRingElement
from helpers import rand_perm, rand_surjection, rand_surjection_key

CONVENTIONS = (BERGER_FRESSE, MCCLURE_SMITH)


def test_degenerate_keys_dropped():
    assert SurjectionElement({(1, 1, 2): 1}).is_zero()
    assert SurjectionElement({(1, 3): 1}).is_zero()  # not surjective onto 1..3


def test_boundary_oracle():
    x = SurjectionElement({(1, 2, 1, 3): 1})
    assert x.boundary().terms == {(2, 1, 3): 1, (1, 2, 3): -1}


def test_boundary_of_degree_zero():
    assert SurjectionElement({(1, 2, 3): 1}).boundary().is_zero()


def test_boundary_squares_to_zero_simple():
    x = SurjectionElement({(1, 2, 1, 2): 1})
    assert x.boundary().boundary().is_zero()


def test_compose_oracle():
    x = SurjectionElement({(1, 2, 1, 3): 1})
    y = SurjectionElement({(1, 2, 1): 1})
    assert x.compose(y, 1).terms == {(1, 3, 1, 2, 1, 4): 1,
                                     (1, 2, 3, 2, 1, 4): -1,
                                     (1, 2, 1, 3, 1, 4): -1}


def test_compose_unitality():
    unit = SurjectionElement({(1,): 1})
    for conv in CONVENTIONS:
        x = SurjectionElement({(1, 2, 1, 3): 1}, convention=conv)
        for i in (1, 2, 3):
            assert x.compose(SurjectionElement({(1,): 1}, convention=conv), i) == x
        assert unit.compose(unit, 1) == unit


def test_compose_degree_zero():
    x = SurjectionElement({(1, 2): 1})
    assert x.compose(x, 1).terms == {(1, 2, 3): 1}


def test_compose_convention_mismatch():
    x = SurjectionElement({(1, 2): 1}, convention=BERGER_FRESSE)
    y = SurjectionElement({(1, 2): 1}, convention=MCCLURE_SMITH)
    with pytest.raises(ValueError):
        x.compose(y, 1)


def test_compose_position_out_of_range():
    x = SurjectionElement({(1, 2): 1})
    with pytest.raises(ValueError):
        x.compose(x, 3)


def test_complexity_examples():
    assert SurjectionElement({(1, 2, 1, 3, 1): 1}).complexity() == 1
    assert SurjectionElement({(1, 2, 1, 2): 1}).complexity() == 2
    assert SurjectionElement({(1, 2): 1}).complexity() == 0


def test_complexity_equals_degree_at_arity_two():
    rng = random.Random(40)
    for _ in range(100):
        degree = rng.randint(0, 4)
        key = rand_surjection_key(rng, 2, degree)
        assert SurjectionElement({key: 1}).complexity() == degree


def test_symmetric_action_examples():
    ident = SymmetricRingElement({(1, 2): 1})
    x = SurjectionElement({(1, 2, 1): 1})
    assert symmetric_action(ident, x) == x
    swap = SymmetricRingElement({(2, 1): 1})
    acted = symmetric_action(swap, x)
    assert set(acted.terms) == {(2, 1, 2)} and acted.terms[(2, 1, 2)] in (1, -1)
    rho = SymmetricRingElement({(2, 3, 1): 1})
    deg0 = SurjectionElement({(1, 2, 3): 1})
    assert symmetric_action(rho, deg0).terms == {(2, 3, 1): 1}


def test_boundary_squares_to_zero_randomized():
    rng = random.Random(41)
    for conv in CONVENTIONS:
        for _ in range(150):
            torsion = rng.choice([0, 2, 3, 5])
            x = rand_surjection(rng, conv, torsion=torsion)
            assert x.boundary().boundary().is_zero()


def test_derivation_rule_randomized():
    rng = random.Random(42)
    for conv in CONVENTIONS:
        for _ in range(150):
            xa, ya = rng.randint(1, 3), rng.randint(1, 3)
            x = rand_surjection(rng, conv, arity=xa, degree=rng.randint(0, 3))
            y = rand_surjection(rng, conv, arity=ya, degree=rng.randint(0, 3))
            i = rng.randint(1, xa)
            lhs = x.compose(y, i).boundary()
            rhs = x.boundary().compose(y, i) + \
                ((-1) ** x.degree) * x.compose(y.boundary(), i)
            assert lhs == rhs


def test_symmetric_action_is_chain_map():
    rng = random.Random(43)
    for conv in CONVENTIONS:
        for _ in range(100):
            arity = rng.randint(1, 4)
            x = rand_surjection(rng, conv, arity=arity, degree=rng.randint(0, 3))
            pi = SymmetricRingElement({rand_perm(rng, arity): 1})
            assert symmetric_action(pi, x).boundary() == \
                symmetric_action(pi, x.boundary())


def test_operadic_equivariance_spot_checks():
    # composing with a permuted second factor matches permuting the result
    # inside the grafted block
    rng = random.Random(44)

    def block_perm(pi, r, s, i):
        vals = []
        for v in range(1, r + s):
            if v < i:
                vals.append(v)
            elif v < i + s:
                vals.append(pi[v - i] + i - 1)
            else:
                vals.append(v)
        return tuple(vals)

    for conv in CONVENTIONS:
        for _ in range(100):
            xa, ya = rng.randint(2, 3), rng.randint(2, 3)
            x = rand_surjection(rng, conv, arity=xa, degree=rng.randint(0, 2))
            y = rand_surjection(rng, conv, arity=ya, degree=rng.randint(0, 2))
            i = rng.randint(1, xa)
            pi = rand_perm(rng, ya)
            lhs = x.compose(symmetric_action(SymmetricRingElement({pi: 1}), y), i)
            bp = SymmetricRingElement({block_perm(pi, xa, ya, i): 1})
            rhs = symmetric_action(bp, x.compose(y, i))
            assert lhs == rhs


def test_sequential_associativity():
    rng = random.Random(45)
    for conv in CONVENTIONS:
        for _ in range(100):
            xa, ya, za = rng.randint(2, 3), rng.randint(2, 3), rng.randint(1, 2)
            x = rand_surjection(rng, conv, arity=xa, degree=rng.randint(0, 2))
            y = rand_surjection(rng, conv, arity=ya, degree=rng.randint(0, 2))
            z = rand_surjection(rng, conv, arity=za,
                                degree=0 if za == 1 else rng.randint(0, 2))
            i, j = rng.randint(1, xa), rng.randint(1, ya)
            assert x.compose(y, i).compose(z, i - 1 + j) == \
                x.compose(y.compose(z, j), i)


def test_complexity_filtration_closure():
    rng = random.Random(46)
    for _ in range(150):
        xa = rng.randint(2, 3)
        x = rand_surjection(rng, BERGER_FRESSE, arity=xa, degree=rng.randint(0, 3))
        y = rand_surjection(rng, BERGER_FRESSE, arity=rng.randint(1, 3),
                            degree=rng.randint(0, 3))
        i = rng.randint(1, xa)
        z = x.compose(y, i)
        if z:
            assert z.complexity() <= max(x.complexity(), y.complexity())
        pi = SymmetricRingElement({rand_perm(rng, xa): 1})
        assert symmetric_action(pi, x).complexity() == x.complexity()


def test_homogeneity_enforced():
    with pytest.raises(ValueError):
        SurjectionElement({(1, 2): 1, (1, 2, 1): 1})


def test_is_degenerate_relative_arity():
    assert is_degenerate_surjection((1, 2, 1), 3)
    assert not is_degenerate_surjection((1, 2, 1), 2)
