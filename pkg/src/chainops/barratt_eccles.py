"""Normalized chains on the total simplicial sets of symmetric groups.

A basis element of arity r and degree n is a tuple of n+1 permutations
of {1..r} with no two equal neighbours.  Composition precomposes the
coordinatewise grafting of permutations with the Eilenberg-Zilber map;
the Alexander-Whitney diagonal makes the family a Hopf operad.  Table
reduction reads each simplex as a table and produces a surjection
element in the Berger-Fresse convention.
"""

from __future__ import annotations

from itertools import combinations

from .freemod import FreeModuleElement
from .surjection import BERGER_FRESSE, SurjectionElement, is_degenerate_surjection
from .symgroup import compose_at, compose_perms, is_permutation


def is_degenerate_simplex(key) -> bool:
    return any(a == b for a, b in zip(key, key[1:]))


class BarrattEcclesElement(FreeModuleElement):
    """Linear combination of permutation simplices of one arity and degree."""

    __slots__ = ()

    def _normalize_key(self, key):
        return tuple(tuple(sigma) for sigma in key)

    def _validate_key(self, key):
        if not key:
            raise ValueError("simplices must contain at least one permutation")
        for sigma in key:
            if not is_permutation(sigma):
                raise ValueError(f"{sigma} is not a permutation of 1..{len(sigma)}")
        if len({len(sigma) for sigma in key}) > 1:
            raise ValueError(f"mixed arities within a simplex: {key}")

    def _is_degenerate_key(self, key):
        return is_degenerate_simplex(key)

    def _validate_element(self):
        shapes = {(len(k[0]), len(k)) for k in self._terms}
        if len(shapes) > 1:
            raise ValueError(f"mixed arity/degree in element: {sorted(shapes)}")

    @property
    def arity(self):
        return len(next(iter(self._terms))[0]) if self._terms else None

    @property
    def degree(self):
        return len(next(iter(self._terms))) - 1 if self._terms else None

    def boundary(self) -> "BarrattEcclesElement":
        """Alternating sum of coordinate deletions, degenerates dropped."""
        terms: dict = {}
        for key, coeff in self._terms.items():
            for p in range(len(key)):
                child = key[:p] + key[p + 1 :]
                if child and not is_degenerate_simplex(child):
                    c = coeff * (-1 if p % 2 else 1)
                    terms[child] = terms.get(child, 0) + c
        return self._replicate(terms)

    def compose(self, other: "BarrattEcclesElement", i: int) -> "BarrattEcclesElement":
        """Eilenberg-Zilber map followed by coordinatewise grafting at i."""
        self._check_compatible(other)
        if self and not 1 <= i <= (self.arity or 0):
            raise ValueError(f"composition position {i} out of range 1..{self.arity}")
        terms: dict = {}
        for akey, ac in self._terms.items():
            for bkey, bc in other._terms.items():
                for (left, right), sgn in eilenberg_zilber(akey, bkey):
                    key = tuple(
                        compose_at(sig, tau, i) for sig, tau in zip(left, right)
                    )
                    if is_degenerate_simplex(key):
                        continue
                    terms[key] = terms.get(key, 0) + ac * bc * sgn
        return self._replicate(terms)

    def diagonal(self) -> FreeModuleElement:
        """Alexander-Whitney diagonal: sum of front/back coordinate splits."""
        terms: dict = {}
        for key, coeff in self._terms.items():
            for p in range(len(key)):
                pair = (key[: p + 1], key[p:])
                terms[pair] = terms.get(pair, 0) + coeff
        return FreeModuleElement(terms, torsion=self._torsion)

    def complexity(self) -> int:
        """Largest number of order changes over pairs of column values."""
        best = 0
        for key in self._terms:
            r = len(key[0])
            for a, b in combinations(range(1, r + 1), 2):
                orders = [sigma.index(a) < sigma.index(b) for sigma in key]
                changes = sum(1 for s, t in zip(orders, orders[1:]) if s != t)
                best = max(best, changes)
        return best

    def table_reduction(self) -> SurjectionElement:
        """Berger-Fresse table reduction onto the surjection operad."""
        terms: dict = {}
        for key, coeff in self._terms.items():
            for skey in _reduce_table(key):
                terms[skey] = terms.get(skey, 0) + coeff
        return SurjectionElement(terms, torsion=self._torsion, convention=BERGER_FRESSE)


def eilenberg_zilber(akey, bkey):
    """Shuffle the coordinates of two simplices along staircase paths.

    Yields ((left, right), sign) pairs where left and right are the two
    path-sampled coordinate tuples and the sign is the parity of the
    area under the path.
    """
    n, m = len(akey) - 1, len(bkey) - 1
    for a_steps in combinations(range(n + m), n):
        a_set = set(a_steps)
        area = 0
        ai = bi = 0
        left = [akey[0]]
        right = [bkey[0]]
        for step in range(n + m):
            if step in a_set:
                ai += 1
                area += bi
            else:
                bi += 1
            left.append(akey[ai])
            right.append(bkey[bi])
        yield (tuple(left), tuple(right)), (-1 if area % 2 else 1)


def _compositions(total: int, parts: int):
    """All tuples of `parts` positive integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _reduce_table(key):
    """Surjection sequences read from one permutation table.

    For each composition (a_0, ..., a_n) of n + r, line k contributes
    the first a_k values of its permutation not yet marked used; of
    those, all but the last are marked (the final line marks nothing).
    Degenerate readings are skipped.
    """
    n = len(key) - 1
    r = len(key[0])
    for comp in _compositions(n + r, n + 1):
        used: set = set()
        word = []
        ok = True
        for k, (line, take) in enumerate(zip(key, comp)):
            fresh = [v for v in line if v not in used]
            if len(fresh) < take:
                ok = False
                break
            picked = fresh[:take]
            word.extend(picked)
            if k < n:
                used.update(picked[:-1])
        if not ok:
            continue
        skey = tuple(word)
        if not is_degenerate_surjection(skey):
            yield skey


def symmetric_action(pi, x: BarrattEcclesElement) -> BarrattEcclesElement:
    """Coordinatewise left multiplication; the action carries no signs."""
    if x and pi and pi.arity != x.arity:
        raise ValueError(f"arity mismatch: {pi.arity} vs {x.arity}")
    x._check_compatible(pi)
    terms: dict = {}
    for perm, pc in pi.terms.items():
        for key, xc in x.terms.items():
            new = tuple(compose_perms(perm, sigma) for sigma in key)
            if is_degenerate_simplex(new):
                continue
            terms[new] = terms.get(new, 0) + pc * xc
    return x._replicate(terms)
