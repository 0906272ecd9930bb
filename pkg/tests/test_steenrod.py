import pytest

from chainops.barratt_eccles import symmetric_action as be_action
from chainops.chains import cube_dim, simplex_dim
from chainops.steenrod import (nu, psi_be, psi_surj, steenrod_chain,
                               steenrod_index)
from chainops.surjection import BERGER_FRESSE
from chainops.surjection import symmetric_action as surj_action
from chainops.symgroup import norm_element, transfer_element


def test_psi_be_oracle():
    assert psi_be(3, 2).terms == {((1, 2, 3), (2, 3, 1), (3, 1, 2)): 1,
                                  ((1, 2, 3), (3, 1, 2), (1, 2, 3)): 1}


def test_psi_be_base_and_small_cases():
    for r in (1, 2, 3, 4):
        assert psi_be(r, 0).terms == {(tuple(range(1, r + 1)),): 1}
    assert psi_be(2, 2).terms == {((1, 2), (2, 1), (1, 2)): 1}


def test_psi_surj_oracle():
    assert psi_surj(3, 2).terms == {(1, 2, 3, 1, 2): 1, (1, 3, 1, 2, 3): 1,
                                    (1, 2, 3, 2, 3): 1}
    assert psi_surj(3, 0).terms == {(1, 2, 3): 1}
    assert psi_surj(3, 2).convention == BERGER_FRESSE


def test_psi_surj_arity_two_alternating():
    for i in range(6):
        terms = psi_surj(2, i).terms
        assert len(terms) == 1
        (key, coeff), = terms.items()
        assert len(key) == i + 2
        assert coeff in (1, -1)
        start = key[0]
        assert all(key[k] == (start if k % 2 == 0 else 3 - start)
                   for k in range(len(key)))


def test_recursion_identities():
    for r in range(1, 6):
        T, N = transfer_element(r), norm_element(r)
        for i in range(1, 6):
            prev_be, cur_be = psi_be(r, i - 1), psi_be(r, i)
            rhs = be_action(T, prev_be) if i % 2 else be_action(N, prev_be)
            assert cur_be.boundary() == rhs
            prev_s, cur_s = psi_surj(r, i - 1), psi_surj(r, i)
            rhs_s = surj_action(T, prev_s) if i % 2 else surj_action(N, prev_s)
            assert cur_s.boundary() == rhs_s


def test_psi_shapes():
    for r in range(1, 6):
        for i in range(6):
            for key in psi_be(r, i).terms:
                assert len(key) == i + 1 and all(len(s) == r for s in key)
            for key in psi_surj(r, i).terms:
                assert len(key) == i + r


def test_steenrod_index():
    assert steenrod_index(2, -1, -3, False) == 2
    assert steenrod_index(3, -1, -3, True) == 1
    assert steenrod_index(3, -2, -4, False) == 0
    with pytest.raises(ValueError):
        steenrod_index(2, -1, -3, True)
    with pytest.raises(ValueError):
        steenrod_index(4, 0, 0)


def test_nu():
    assert nu(3, -3) == 1
    assert nu(3, -4) == 1
    assert nu(5, -2) == 4
    with pytest.raises(ValueError):
        nu(2, -1)


def test_steenrod_chain_prime_two():
    e = steenrod_chain(2, -1, -3)
    assert e.torsion == 2
    assert e.terms == {((0, 1, 2, 3), (0, 1, 3, 4)): 1,
                       ((0, 2, 3, 4), (0, 1, 2, 4)): 1,
                       ((0, 1, 2, 3), (1, 2, 3, 4)): 1,
                       ((0, 1, 3, 4), (1, 2, 3, 4)): 1}


def test_steenrod_chain_bockstein():
    e = steenrod_chain(3, -1, -3, bockstein=True)
    assert e.torsion == 3
    assert e.terms == {((0, 6, 7, 8), (0, 1, 2, 3), (3, 4, 5, 6)): 2,
                       ((0, 1, 7, 8), (1, 2, 3, 4), (4, 5, 6, 7)): 1,
                       ((0, 1, 2, 8), (2, 3, 4, 5), (5, 6, 7, 8)): 2}


def test_steenrod_chain_prime_three():
    e = steenrod_chain(3, -2, -4)
    assert e.terms == {((0, 1, 2, 3, 4), (4, 5, 6, 7, 8), (8, 9, 10, 11, 12)): 1}


def test_steenrod_chain_zero_branch():
    assert steenrod_chain(2, -4, -3).is_zero()


def test_steenrod_chain_validation():
    with pytest.raises(ValueError):
        steenrod_chain(2, -1, -3, bockstein=True)
    with pytest.raises(ValueError):
        steenrod_chain(6, -1, -3)
    with pytest.raises(ValueError):
        steenrod_chain(2, -1, 1)
    with pytest.raises(ValueError):
        steenrod_chain(2, -1, -3, context="mystery")


def test_steenrod_chain_factor_dimensions():
    for p, s, q, bock, ctx in [(2, -1, -3, False, "simplicial"),
                               (3, -1, -3, True, "simplicial"),
                               (2, -2, -2, False, "cubical"),
                               (3, -1, -2, False, "cubical")]:
        e = steenrod_chain(p, s, q, bockstein=bock, context=ctx)
        dim = simplex_dim if ctx == "simplicial" else cube_dim
        for key in e.terms:
            assert len(key) == p
            assert all(dim(f) == -q for f in key)
        assert e.torsion == p
