"""Cyclic-resolution structure maps and chain-level power operation data.

The preferred elements psi(r, i) arise from the minimal free resolution
of the cyclic group of order r, transported to the Barratt-Eccles and
surjection operads by a contracting homotopy that prepends the identity
permutation.  From them, steenrod_chain assembles the representative
whose evaluation against p-th tensor powers of a cocycle computes the
mod-p power operations on standard simplices and cubes.
"""

from __future__ import annotations

from functools import lru_cache

from .barratt_eccles import BarrattEcclesElement, symmetric_action
from .chains import (CubicalElement, SimplicialElement, act_cubical,
                     act_simplicial, cube_dim, simplex_dim)
from .surjection import SurjectionElement
from .symgroup import identity, norm_element, transfer_element


@lru_cache(maxsize=None)
def psi_be(r: int, i: int) -> BarrattEcclesElement:
    """Image of the i-th resolution generator in the Barratt-Eccles operad.

    The recursion alternates the transfer and norm elements of the
    cyclic group with the homotopy h that prepends the identity
    permutation to every simplex.
    """
    if r < 1:
        raise ValueError("arity must be positive")
    if i < 0:
        raise ValueError("degree must be non-negative")
    if i == 0:
        return BarrattEcclesElement({(identity(r),): 1})
    operator = transfer_element(r) if i % 2 else norm_element(r)
    return _prepend_identity(symmetric_action(operator, psi_be(r, i - 1)))


def _prepend_identity(x: BarrattEcclesElement) -> BarrattEcclesElement:
    terms = {}
    for key, coeff in x.terms.items():
        new = (identity(len(key[0])),) + key
        terms[new] = terms.get(new, 0) + coeff
    return BarrattEcclesElement(terms, torsion=x.torsion)


@lru_cache(maxsize=None)
def psi_surj(r: int, i: int) -> SurjectionElement:
    """Table reduction of psi_be; Berger-Fresse convention."""
    return psi_be(r, i).table_reduction()


def steenrod_index(p: int, s: int, q: int, bockstein: bool = False) -> int:
    """Resolution degree addressed by the power operation of index s.

    For p = 2 this is s - q; at odd primes (2s - q)(p - 1), lowered by
    one for the Bockstein variant.
    """
    _check_prime(p)
    if bockstein and p == 2:
        raise ValueError("the Bockstein variant requires an odd prime")
    if p == 2:
        return s - q
    d = (2 * s - q) * (p - 1)
    return d - 1 if bockstein else d


def nu(p: int, q: int) -> int:
    """Coefficient correcting odd-prime operations: (-1)^(q(q-1)m/2) (m!)^q mod p."""
    _check_prime(p)
    if p == 2:
        raise ValueError("the coefficient is defined for odd primes only")
    m = (p - 1) // 2
    sign_exp = (q * (q - 1) // 2) * m
    fact = 1
    for k in range(2, m + 1):
        fact = (fact * k) % p
    power = pow(fact, q % (p - 1), p)
    value = (-power) % p if sign_exp % 2 else power % p
    return value


def _check_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")


def steenrod_chain(p: int, s: int, q: int, bockstein: bool = False,
                   context: str = "simplicial"):
    """Chain-level representative of a power operation on a standard cell.

    The resolution element psi(p, d) with d = steenrod_index(...) acts
    on the standard cell of dimension -pq - d; only the terms whose
    tensor factors all have dimension -q survive evaluation against a
    p-th tensor power, and the result is reduced mod p.
    """
    _check_prime(p)
    if q > 0:
        raise ValueError("cochains live in non-positive degrees, need q <= 0")
    if context not in ("simplicial", "cubical"):
        raise ValueError(f"unknown context {context!r}")
    d = steenrod_index(p, s, q, bockstein)
    m = -p * q - d
    if d < 0 or m < 0:
        if context == "simplicial":
            return SimplicialElement({}, torsion=p)
        return CubicalElement({}, torsion=p)
    coeff = 1 if p == 2 else (-1 if s % 2 else 1) * nu(p, q)
    x = psi_surj(p, d)
    if context == "simplicial":
        acted = act_simplicial(x, m)
        dim = simplex_dim
    else:
        acted = act_cubical(x, m)
        dim = cube_dim
    terms = {}
    for key, c in acted.terms.items():
        if all(dim(f) == -q for f in key):
            terms[key] = c * coeff
    if context == "simplicial":
        return SimplicialElement(terms, torsion=p)
    return CubicalElement(terms, torsion=p)
