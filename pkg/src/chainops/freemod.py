"""Sparse linear combinations over the integers or the integers mod n.

Every algebraic object in this package (group-ring elements, surjection
and Barratt-Eccles elements, tensor products of chains) is a finite
integer combination of hashable basis keys.  The coefficient ring is
selected by the ``torsion`` attribute: 0 means the integers, n >= 1
means the integers mod n, with coefficients kept as canonical residues
in {1, ..., n-1}.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class TorsionError(ValueError):
    """Raised when combining elements over different coefficient rings."""


def reduce_coefficient(c: int, torsion: int) -> int:
    """Canonical representative of c in Z (torsion 0) or Z/torsion."""
    if torsion == 0:
        return c
    return c % torsion


class FreeModuleElement:
    """Finite integer combination of totally ordered, hashable basis keys.

    Instances are immutable: every operation returns a new element.
    Subclasses may declare keys degenerate (they are silently dropped,
    implementing a quotient complex) and may enforce shape invariants.
    """

    __slots__ = ("_terms", "_torsion")

    def __init__(self, terms=None, torsion: int = 0):
        if torsion < 0:
            raise ValueError(f"torsion must be non-negative, got {torsion}")
        data: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                key = self._normalize_key(key)
                self._validate_key(key)
                if self._is_degenerate_key(key):
                    continue
                data[key] = data.get(key, 0) + coeff
        reduced = {}
        for key, coeff in data.items():
            coeff = reduce_coefficient(coeff, torsion)
            if coeff != 0:
                reduced[key] = coeff
        object.__setattr__(self, "_terms", reduced)
        object.__setattr__(self, "_torsion", torsion)
        self._validate_element()

    # subclass hooks

    def _normalize_key(self, key):
        return key

    def _validate_key(self, key) -> None:
        pass

    def _is_degenerate_key(self, key) -> bool:
        return False

    def _validate_element(self) -> None:
        pass

    def _replicate(self, terms, torsion: int | None = None):
        """Build an element of the same kind, preserving attributes."""
        if torsion is None:
            torsion = self._torsion
        return type(self)(terms, torsion=torsion)

    # read access

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    @property
    def torsion(self) -> int:
        return self._torsion

    def coefficient(self, key) -> int:
        return self._terms.get(key, 0)

    def keys(self):
        return sorted(self._terms)

    def items(self):
        return [(k, self._terms[k]) for k in sorted(self._terms)]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms))

    # algebra

    def _check_compatible(self, other) -> None:
        if self._torsion != other._torsion:
            raise TorsionError(
                f"incompatible coefficient rings: torsion {self._torsion} vs {other._torsion}"
            )

    def __add__(self, other):
        if not isinstance(other, FreeModuleElement):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return self._replicate(terms)

    def __sub__(self, other):
        if not isinstance(other, FreeModuleElement):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms.get(key, 0) - coeff
        return self._replicate(terms)

    def __neg__(self):
        return self._replicate({k: -c for k, c in self._terms.items()})

    def scale(self, c: int):
        return self._replicate({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, int):
            return self.scale(c)
        return NotImplemented

    def set_torsion(self, torsion: int):
        """Re-reduce the coefficients over a new ring."""
        return self._replicate(self._terms, torsion=torsion)

    # comparison / hashing

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeModuleElement):
            return NotImplemented
        return self._torsion == other._torsion and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._torsion, frozenset(self._terms.items())))

    # rendering

    def _format_key(self, key) -> str:
        return format_tuple(key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for key in sorted(self._terms):
            coeff = self._terms[key]
            mag = abs(coeff)
            body = ("" if mag == 1 else str(mag)) + self._format_key(key)
            if not pieces:
                pieces.append(body if coeff > 0 else "- " + body)
            else:
                pieces.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self) -> str:
        inner = ", ".join(f"{k!r}: {c}" for k, c in self.items())
        return f"{type(self).__name__}({{{inner}}}, torsion={self._torsion})"


def format_tuple(key) -> str:
    """Render nested tuples without spaces, Python-style for 1-tuples."""
    if isinstance(key, tuple):
        inner = ",".join(format_tuple(k) for k in key)
        if len(key) == 1:
            inner += ","
        return f"({inner})"
    return str(key)


def make_element(pairs: Iterable, torsion: int = 0) -> FreeModuleElement:
    """Sum a list of (key, coefficient) pairs into canonical form."""
    return FreeModuleElement(pairs, torsion=torsion)
