"""The surjection operad: boundary, composition, symmetric action, complexity.

A basis element is a finite sequence of positive integers, surjective
onto {1..r} with no two equal adjacent values; r is the arity and
(length - r) the degree.  Signs depend on a convention attribute,
'Berger-Fresse' or 'McClure-Smith'.

The Berger-Fresse orientation reads the caesuras of a sequence (the
values that occur again later) in position order; boundary and
composition signs are Koszul signs in that orientation.  The
McClure-Smith basis differs by the parity of regrouping the caesuras
into value order, so the two conventions are diagonal twists of each
other.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .freemod import FreeModuleElement

BERGER_FRESSE = "Berger-Fresse"
MCCLURE_SMITH = "McClure-Smith"

_CONVENTIONS = {
    BERGER_FRESSE.lower(): BERGER_FRESSE,
    MCCLURE_SMITH.lower(): MCCLURE_SMITH,
}


def normalize_convention(name: str) -> str:
    try:
        return _CONVENTIONS[name.lower()]
    except KeyError:
        raise ValueError(
            f"unknown convention {name!r}; expected {BERGER_FRESSE!r} or {MCCLURE_SMITH!r}"
        ) from None


def surjection_arity(key) -> int:
    return max(key) if key else 0


def is_degenerate_surjection(key, arity: int | None = None) -> bool:
    """Not surjective onto {1..arity}, or a pair of equal adjacent values.

    When no arity is given the target is {1..max(key)}.
    """
    if not key:
        return True
    if any(a == b for a, b in zip(key, key[1:])):
        return True
    if arity is None:
        arity = max(key)
    return set(key) != set(range(1, arity + 1))


def caesuras(key) -> tuple:
    """Positions (0-based) whose value occurs again strictly later."""
    out = []
    for p, v in enumerate(key):
        if v in key[p + 1 :]:
            out.append(p)
    return tuple(out)


def regroup_sign(key) -> int:
    """Parity of sorting the caesuras from position order to value order."""
    cs = caesuras(key)
    inv = 0
    for a in range(len(cs)):
        for b in range(a + 1, len(cs)):
            if key[cs[a]] > key[cs[b]]:
                inv += 1
    return -1 if inv % 2 else 1


class SurjectionElement(FreeModuleElement):
    """Linear combination of surjection sequences of one arity and degree."""

    __slots__ = ("_convention",)

    def __init__(self, terms=None, torsion: int = 0, convention: str = BERGER_FRESSE):
        object.__setattr__(self, "_convention", normalize_convention(convention))
        super().__init__(terms, torsion=torsion)

    def _replicate(self, terms, torsion=None):
        if torsion is None:
            torsion = self._torsion
        return SurjectionElement(terms, torsion=torsion, convention=self._convention)

    def _normalize_key(self, key):
        return tuple(key)

    def _validate_key(self, key):
        if not key or any(not isinstance(v, int) or v < 1 for v in key):
            raise ValueError(f"surjection keys are nonempty positive sequences, got {key}")

    def _is_degenerate_key(self, key):
        return is_degenerate_surjection(key)

    def _validate_element(self):
        shapes = {(surjection_arity(k), len(k)) for k in self._terms}
        if len(shapes) > 1:
            raise ValueError(f"mixed arity/degree in surjection element: {sorted(shapes)}")

    @property
    def convention(self) -> str:
        return self._convention

    @property
    def arity(self):
        return surjection_arity(next(iter(self._terms))) if self._terms else None

    @property
    def degree(self):
        if not self._terms:
            return None
        key = next(iter(self._terms))
        return len(key) - surjection_arity(key)

    def _twist(self, key) -> int:
        # McClure-Smith basis = regroup-parity twist of the Berger-Fresse one.
        return regroup_sign(key) if self._convention == MCCLURE_SMITH else 1

    def boundary(self) -> "SurjectionElement":
        """Signed sum of single-value deletions, degenerate terms dropped.

        Deleting a caesura at position p contributes the parity of the
        caesuras before p; deleting a final occurrence kills the caesura
        at the previous occurrence of the same value, with one extra
        sign flip.
        """
        terms: dict = {}
        for key, coeff in self._terms.items():
            r = surjection_arity(key)
            cs = caesuras(key)
            caes_before = []
            count = 0
            for p in range(len(key)):
                caes_before.append(count)
                if p in cs:
                    count += 1
            base = coeff * self._twist(key)
            for p, v in enumerate(key):
                child = key[:p] + key[p + 1 :]
                if is_degenerate_surjection(child, r):
                    continue
                if v in key[p + 1 :]:
                    exponent = caes_before[p]
                else:
                    prev = max(q for q in range(p) if key[q] == v) if v in key[:p] else None
                    if prev is None:
                        continue  # sole occurrence: child not surjective, unreachable
                    exponent = caes_before[prev] + 1
                c = base * (-1 if exponent % 2 else 1) * self._twist(child)
                terms[child] = terms.get(child, 0) + c
        return self._replicate(terms)

    def compose(self, other: "SurjectionElement", i: int) -> "SurjectionElement":
        """Partial composition: splice other's sequence over the occurrences of i."""
        if self._convention != other._convention:
            raise ValueError(
                f"convention mismatch: {self._convention} vs {other._convention}"
            )
        self._check_compatible(other)
        if self and not 1 <= i <= (self.arity or 0):
            raise ValueError(f"composition position {i} out of range 1..{self.arity}")
        terms: dict = {}
        for xkey, xc in self._terms.items():
            for ykey, yc in other._terms.items():
                for zkey, sgn in _compose_basis(xkey, ykey, i):
                    c = xc * yc * sgn * self._twist(xkey) * self._twist(ykey) * self._twist(zkey)
                    terms[zkey] = terms.get(zkey, 0) + c
        return self._replicate(terms)

    def complexity(self) -> int:
        """Largest number of alternations, minus one, over binary subsequences."""
        best = 0
        for key in self._terms:
            values = sorted(set(key))
            for a, b in ((x, y) for x in values for y in values if x < y):
                sub = [v for v in key if v == a or v == b]
                changes = sum(1 for s, t in zip(sub, sub[1:]) if s != t)
                best = max(best, changes - 1)
        return best

    def _format_key(self, key):
        from .freemod import format_tuple

        return format_tuple(key)


def _compose_basis(xkey, ykey, i):
    """Terms of the Berger-Fresse composition of two basis surjections.

    Yields (spliced sequence, sign).  The sign counts inversions between
    the caesuras inherited from x (an occurrence of i maps to the end of
    its block) and those inherited from y (a cut entry maps to its last
    copy), both read in the spliced sequence.
    """
    s_arity = surjection_arity(ykey)
    shift = s_arity - 1
    slots = [p for p, v in enumerate(xkey) if v == i]
    w = len(slots)
    x_caes = caesuras(xkey)
    y_caes = caesuras(ykey)
    shifted_x = [v if v <= i else v + shift for v in xkey]
    n_y = len(ykey)
    for cuts in combinations_with_replacement(range(1, n_y + 1), w - 1):
        bounds = (1,) + cuts + (n_y,)
        blocks = [
            tuple(v + i - 1 for v in ykey[bounds[k] - 1 : bounds[k + 1]])
            for k in range(w)
        ]
        # splice, recording where each position of x and of y lands
        spliced = []
        x_pos_to_z = {}
        block_spans = []
        slot_iter = iter(range(w))
        for p, v in enumerate(xkey):
            if v == i:
                k = next(slot_iter)
                start = len(spliced)
                spliced.extend(blocks[k])
                block_spans.append((start, len(spliced) - 1))
            else:
                x_pos_to_z[p] = len(spliced)
                spliced.append(shifted_x[p])
        zkey = tuple(spliced)
        if is_degenerate_surjection(zkey):
            continue
        x_symbols = []
        for p in x_caes:
            if xkey[p] == i:
                x_symbols.append(block_spans[slots.index(p)][1])
            else:
                x_symbols.append(x_pos_to_z[p])
        # y position q (1-based) lands in the block after the last cut at q
        y_symbols = []
        for q0 in y_caes:
            q = q0 + 1
            k = 0
            for c in cuts:
                if c <= q:
                    k += 1
            start, _ = block_spans[k]
            y_symbols.append(start + (q - bounds[k]))
        inv = sum(1 for zx in x_symbols for zy in y_symbols if zy < zx)
        yield zkey, -1 if inv % 2 else 1


def symmetric_action(pi, x: SurjectionElement) -> SurjectionElement:
    """Left action of a group-ring element by relabelling output values."""
    if x and pi and pi.arity != x.arity:
        raise ValueError(f"arity mismatch: {pi.arity} vs {x.arity}")
    x._check_compatible(pi)
    terms: dict = {}
    for perm, pc in pi.terms.items():
        for key, xc in x.terms.items():
            new = tuple(perm[v - 1] for v in key)
            c = pc * xc
            if x.convention == MCCLURE_SMITH:
                c *= regroup_sign(key) * regroup_sign(new)
            terms[new] = terms.get(new, 0) + c
    return x._replicate(terms)
