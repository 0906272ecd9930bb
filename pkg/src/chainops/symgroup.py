"""Permutations, the group ring of the symmetric group, and its operad.

A permutation of {1..r} is stored as the tuple of its values
(sigma(1), ..., sigma(r)).  The product convention is
(sigma * tau)(k) = sigma(tau(k)).  The partial composition grafts one
permutation into a value slot of another, producing a permutation of
{1..r+s-1}; together with left multiplication this makes the family of
group rings an operad in degree zero.
"""

from __future__ import annotations

from itertools import combinations

from .freemod import FreeModuleElement

Perm = tuple

# permutation combinatorics


def is_permutation(values) -> bool:
    return sorted(values) == list(range(1, len(values) + 1))


def identity(r: int) -> Perm:
    return tuple(range(1, r + 1))


def compose_perms(sigma: Perm, tau: Perm) -> Perm:
    """(sigma . tau)(k) = sigma(tau(k)); both must have equal arity."""
    if len(sigma) != len(tau):
        raise ValueError(f"arity mismatch: {len(sigma)} vs {len(tau)}")
    return tuple(sigma[t - 1] for t in tau)


def sign(sigma: Perm) -> int:
    """Parity of the inversion count: +1 or -1."""
    inv = sum(1 for a, b in combinations(sigma, 2) if a > b)
    return -1 if inv % 2 else 1


def inverse(sigma: Perm) -> Perm:
    out = [0] * len(sigma)
    for k, v in enumerate(sigma, start=1):
        out[v - 1] = k
    return tuple(out)


def compose_at(x: Perm, y: Perm, i: int) -> Perm:
    """Graft y into the slot where x takes the value i.

    Values of x greater than i are shifted up by arity(y) - 1, the
    values of y are shifted up by i - 1, and the shifted block replaces
    the occurrence of the value i in x.
    """
    r, s = len(x), len(y)
    if not 1 <= i <= r:
        raise ValueError(f"composition position {i} out of range 1..{r}")
    shifted_x = [v if v <= i else v + s - 1 for v in x]
    block = [w + i - 1 for w in y]
    pos = x.index(i)
    return tuple(shifted_x[:pos] + block + shifted_x[pos + 1 :])


def cyclic_generator(r: int) -> Perm:
    """The r-cycle (2, 3, ..., r, 1)."""
    if r < 1:
        raise ValueError("arity must be positive")
    return tuple(list(range(2, r + 1)) + [1])


class SymmetricRingElement(FreeModuleElement):
    """Integer (or mod-n) combination of permutations of one arity."""

    __slots__ = ()

    def _normalize_key(self, key):
        return tuple(key)

    def _validate_key(self, key):
        if not is_permutation(key):
            raise ValueError(f"{key} is not a permutation of 1..{len(key)}")

    def _validate_element(self):
        arities = {len(k) for k in self._terms}
        if len(arities) > 1:
            raise ValueError(f"mixed arities in group-ring element: {sorted(arities)}")

    @property
    def arity(self):
        return len(next(iter(self._terms))) if self._terms else None

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, SymmetricRingElement):
            return NotImplemented
        self._check_compatible(other)
        if self and other and self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        terms: dict = {}
        for ks, cs in self._terms.items():
            for kt, ct in other._terms.items():
                key = compose_perms(ks, kt)
                terms[key] = terms.get(key, 0) + cs * ct
        return self._replicate(terms)

    def compose(self, other: "SymmetricRingElement", i: int) -> "SymmetricRingElement":
        """Bilinear extension of the partial composition of permutations."""
        self._check_compatible(other)
        terms: dict = {}
        for ks, cs in self._terms.items():
            for kt, ct in other._terms.items():
                key = compose_at(ks, kt, i)
                terms[key] = terms.get(key, 0) + cs * ct
        return self._replicate(terms)


def ring_identity(r: int, torsion: int = 0) -> SymmetricRingElement:
    return SymmetricRingElement({identity(r): 1}, torsion=torsion)


def transfer_element(r: int, torsion: int = 0) -> SymmetricRingElement:
    """rho - 1 in the group ring of the cyclic group of order r."""
    rho = cyclic_generator(r)
    return SymmetricRingElement({rho: 1}, torsion=torsion) - ring_identity(r, torsion)


def norm_element(r: int, torsion: int = 0) -> SymmetricRingElement:
    """1 + rho + ... + rho^(r-1) in the group ring of the cyclic group."""
    rho = cyclic_generator(r)
    power = identity(r)
    terms = {}
    for _ in range(r):
        terms[power] = terms.get(power, 0) + 1
        power = compose_perms(rho, power)
    return SymmetricRingElement(terms, torsion=torsion)
