"""Tensor products of normalized chains on standard simplices and cubes.

Simplicial basis keys are tuples of vertex tuples; cubical basis keys
are tuples of equal-length digit words over {0, 1, 2} (0 and 1 are the
interval endpoints, 2 the full interval coordinate).  Surjection
elements act by interval cuts: iterate the diagonal, regroup the pieces
by output factor with Koszul signs, and fuse each group with the
degree-one join of the underlying cell complex.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, product

from .freemod import FreeModuleElement
from .surjection import MCCLURE_SMITH, SurjectionElement, regroup_sign


def simplex_dim(factor) -> int:
    return len(factor) - 1


def cube_dim(factor) -> int:
    return sum(1 for d in factor if d == 2)


class SimplicialElement(FreeModuleElement):
    """Linear combination of tensor products of simplex vertex tuples."""

    __slots__ = ()

    def _normalize_key(self, key):
        return tuple(tuple(f) for f in key)

    def _validate_key(self, key):
        if not key:
            raise ValueError("keys must have at least one tensor factor")
        for f in key:
            if not f or any(not isinstance(v, int) or v < 0 for v in f):
                raise ValueError(f"vertex tuples must be nonempty and non-negative: {f}")

    def _is_degenerate_key(self, key):
        return any(a == b for f in key for a, b in zip(f, f[1:]))

    def _validate_element(self):
        if len({len(k) for k in self._terms}) > 1:
            raise ValueError("mixed arities in simplicial element")

    @property
    def arity(self):
        return len(next(iter(self._terms))) if self._terms else None

    def degree_of(self, key) -> int:
        return sum(simplex_dim(f) for f in key)

    def boundary(self) -> "SimplicialElement":
        """Vertex deletions per factor, tensor factors with Koszul signs."""
        terms: dict = {}
        for key, coeff in self._terms.items():
            prior = 0
            for fi, factor in enumerate(key):
                for p in range(len(factor)):
                    child_factor = factor[:p] + factor[p + 1 :]
                    if not child_factor:
                        continue
                    child = key[:fi] + (child_factor,) + key[fi + 1 :]
                    if any(a == b for a, b in zip(child_factor, child_factor[1:])):
                        continue
                    sgn = -1 if (prior + p) % 2 else 1
                    terms[child] = terms.get(child, 0) + coeff * sgn
                prior += simplex_dim(factor)
        return self._replicate(terms)

    def _format_key(self, key):
        from .freemod import format_tuple

        return format_tuple(key)

    def latex(self) -> str:
        return render_latex(self, _latex_simplicial_factor)


class CubicalElement(FreeModuleElement):
    """Linear combination of tensor products of cube digit words."""

    __slots__ = ()

    def _normalize_key(self, key):
        return tuple(tuple(f) for f in key)

    def _validate_key(self, key):
        if not key:
            raise ValueError("keys must have at least one tensor factor")
        for f in key:
            if any(d not in (0, 1, 2) for d in f):
                raise ValueError(f"cube words use digits 0, 1, 2 only: {f}")
        if len({len(f) for f in key}) > 1:
            raise ValueError(f"factors must share one word length: {key}")

    def _validate_element(self):
        if len({(len(k), len(k[0])) for k in self._terms}) > 1:
            raise ValueError("mixed arities or word lengths in cubical element")

    @property
    def arity(self):
        return len(next(iter(self._terms))) if self._terms else None

    def degree_of(self, key) -> int:
        return sum(cube_dim(f) for f in key)

    def boundary(self) -> "CubicalElement":
        """Replace each interval digit by 1 minus by 0, Koszul-signed."""
        terms: dict = {}
        for key, coeff in self._terms.items():
            prior = 0
            for fi, factor in enumerate(key):
                for p, digit in enumerate(factor):
                    if digit != 2:
                        continue
                    sgn = -1 if prior % 2 else 1
                    for endpoint, esign in ((1, 1), (0, -1)):
                        child_factor = factor[:p] + (endpoint,) + factor[p + 1 :]
                        child = key[:fi] + (child_factor,) + key[fi + 1 :]
                        terms[child] = terms.get(child, 0) + coeff * sgn * esign
                    prior += 1
        return self._replicate(terms)

    def _format_key(self, key):
        from .freemod import format_tuple

        return format_tuple(key)

    def latex(self) -> str:
        return render_latex(self, _latex_cubical_factor)


def standard_simplex(n: int, torsion: int = 0) -> SimplicialElement:
    if n < 0:
        raise ValueError("dimension must be non-negative")
    return SimplicialElement({(tuple(range(n + 1)),): 1}, torsion=torsion)


def standard_cube(n: int, torsion: int = 0) -> CubicalElement:
    if n < 0:
        raise ValueError("dimension must be non-negative")
    return CubicalElement({((2,) * n,): 1}, torsion=torsion)


# interval-cut action, simplicial

def _act_simplicial_basis(key, cell):
    """Interval cuts of one surjection sequence on one simplex.

    Yields (factors, sign) in the McClure-Smith convention: iterated
    front/back diagonal, Koszul regrouping of the intervals by value,
    then the join (degree one, sign the degree of its left argument)
    fusing each group.
    """
    ell = len(key)
    r = max(key)
    n = len(cell) - 1
    positions_of = [[l for l, v in enumerate(key) if v == j] for j in range(1, r + 1)]
    for cuts in combinations_with_replacement(range(n + 1), ell - 1):
        bounds = (0,) + cuts + (n,)
        dims = [bounds[l + 1] - bounds[l] for l in range(ell)]
        factors = []
        ok = True
        for group in positions_of:
            word = []
            for l in group:
                piece = cell[bounds[l] : bounds[l + 1] + 1]
                if word and word[-1] == piece[0]:
                    ok = False
                    break
                word.extend(piece)
            if not ok:
                break
            factors.append(tuple(word))
        if not ok:
            continue
        exponent = 0
        # regrouping the interval symbols by value (Koszul)
        for la in range(ell):
            for lb in range(la + 1, ell):
                if key[la] > key[lb]:
                    exponent += dims[la] * dims[lb]
        # applying the per-value joins left to right
        left_degree = 0
        for group in positions_of:
            exponent += (len(group) - 1) * left_degree
            left_degree += sum(dims[l] for l in group)
        # right-nested joins: the internal sign of each pairing plus the
        # Koszul cost of sliding inner joins past the pieces to their left
        for group in positions_of:
            w = len(group)
            exponent += sum(dims[l] for l in group[:-1])
            exponent += sum((w - 1 - k) * dims[group[k - 1]]
                            for k in range(1, w - 1))
        yield tuple(factors), (-1 if exponent % 2 else 1)


def act_simplicial(x: SurjectionElement, n: int) -> SimplicialElement:
    """Act on the standard n-simplex by interval cuts."""
    return act_on_simplicial_cell(x, tuple(range(n + 1)))


def act_on_simplicial_cell(x: SurjectionElement, cell) -> SimplicialElement:
    cell = tuple(cell)
    terms: dict = {}
    for key, coeff in x.terms.items():
        base = coeff if x.convention == MCCLURE_SMITH else coeff * regroup_sign(key)
        for factors, sgn in _act_simplicial_basis(key, cell):
            terms[factors] = terms.get(factors, 0) + base * sgn
    return SimplicialElement(terms, torsion=x.torsion)


# interval-cut action, cubical

# chain maps induced by the cellular min and max on a product of intervals;
# None marks a dimension drop, which dies in normalized chains
_MIN = {(0, 0): 0, (0, 1): 0, (1, 0): 0, (1, 1): 1, (2, 1): 2, (1, 2): 2}
_MAX = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 1, (0, 2): 2, (2, 0): 2}


def _cube_join(c, d):
    """Degree-one fusion of two cube words.

    One coordinate joins the endpoints 0 and 1 into the full interval;
    coordinates before it follow the min of the two cells, coordinates
    after it the max.  Each valid meeting coordinate contributes one
    Koszul-signed term.
    """
    n = len(c)
    out = []
    cross = 0
    for q in range(n):
        for q2 in range(q + 1, n):
            if d[q] == 2 and c[q2] == 2:
                cross += 1
    for k in range(n):
        if (c[k], d[k]) != (0, 1):
            continue
        word = []
        ok = True
        for q in range(k):
            digit = _MIN.get((c[q], d[q]))
            if digit is None:
                ok = False
                break
            word.append(digit)
        if not ok:
            continue
        word.append(2)
        for q in range(k + 1, n):
            digit = _MAX.get((c[q], d[q]))
            if digit is None:
                ok = False
                break
            word.append(digit)
        if not ok:
            continue
        exponent = cross + sum(
            (1 if c[q] == 2 else 0) + (1 if d[q] == 2 else 0) for q in range(k)
        )
        out.append((tuple(word), -1 if exponent % 2 else 1))
    return out


def _cube_join_group(words_dims):
    """Right-nested iterated join of a list of (word, dim) pieces.

    Sliding each inner join (degree one) past the pieces to its left
    contributes the usual Koszul sign on top of the pairwise signs.
    """
    words = [w for w, _ in words_dims]
    dims = [d for _, d in words_dims]
    w = len(words)
    extra = sum((w - 1 - k) * dims[k - 1] for k in range(1, w - 1))
    current = [(words[-1], 1)]
    for piece in reversed(words[:-1]):
        nxt = []
        for word, sgn in current:
            for joined, jsgn in _cube_join(piece, word):
                nxt.append((joined, sgn * jsgn))
        current = nxt
    if extra % 2:
        current = [(word, -sgn) for word, sgn in current]
    return current


def _act_cubical_basis(key, word_len):
    """Interval cuts of one surjection sequence on one standard cube."""
    ell = len(key)
    r = max(key)
    n = word_len
    positions_of = [[l for l, v in enumerate(key) if v == j] for j in range(1, r + 1)]
    for jumps in product(range(ell), repeat=n):
        # coordinate k carries digit 2 in piece jumps[k], 0 before, 1 after
        pieces = []
        for l in range(ell):
            pieces.append(tuple(0 if l < j else 2 if l == j else 1 for j in jumps))
        exponent = 0
        for ka in range(n):
            for kb in range(ka + 1, n):
                if jumps[ka] > jumps[kb]:
                    exponent += 1
        dims = [cube_dim(p) for p in pieces]
        for la in range(ell):
            for lb in range(la + 1, ell):
                if key[la] > key[lb]:
                    exponent += dims[la] * dims[lb]
        left_degree = 0
        app_exponent = 0
        for group in positions_of:
            app_exponent += (len(group) - 1) * left_degree
            left_degree += sum(dims[l] for l in group)
        exponent += app_exponent
        base_sign = -1 if exponent % 2 else 1
        groups = []
        for group in positions_of:
            groups.append(_cube_join_group([(pieces[l], dims[l]) for l in group]))
        for combo in product(*groups):
            factors = tuple(w for w, _ in combo)
            sgn = base_sign
            for _, s in combo:
                sgn *= s
            yield factors, sgn


def act_cubical(x: SurjectionElement, n: int) -> CubicalElement:
    """Act on the standard n-cube by per-coordinate interval cuts."""
    return act_on_cubical_cell(x, (2,) * n)


def act_on_cubical_cell(x: SurjectionElement, cell) -> CubicalElement:
    cell = tuple(cell)
    free = [k for k, d in enumerate(cell) if d == 2]
    m = len(free)
    terms: dict = {}
    for key, coeff in x.terms.items():
        base = coeff if x.convention == MCCLURE_SMITH else coeff * regroup_sign(key)
        for factors, sgn in _act_cubical_basis(key, m):
            expanded = []
            for factor in factors:
                word = list(cell)
                for k, digit in zip(free, factor):
                    word[k] = digit
                expanded.append(tuple(word))
            ekey = tuple(expanded)
            terms[ekey] = terms.get(ekey, 0) + base * sgn
    return CubicalElement(terms, torsion=x.torsion)


# rendering

def _latex_simplicial_factor(factor) -> str:
    return "[" + ",".join(str(v) for v in factor) + "]"


_CUBE_DIGIT = {0: "[0]", 1: "[1]", 2: "[01]"}


def _latex_cubical_factor(factor) -> str:
    return "".join(_CUBE_DIGIT[d] for d in factor)


def render_latex(element, factor_renderer) -> str:
    if element.is_zero():
        return "0"
    pieces = []
    for key in sorted(element.terms):
        coeff = element.terms[key]
        mag = abs(coeff)
        body = " \\otimes ".join(factor_renderer(f) for f in key)
        if mag != 1:
            body = str(mag) + body
        if not pieces:
            pieces.append(body if coeff > 0 else "- " + body)
        else:
            pieces.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(pieces)


def render(element, format: str = "text") -> str:
    """Text or LaTeX rendering of a chains element."""
    if format == "text":
        return str(element)
    if format == "latex":
        if isinstance(element, SimplicialElement):
            return render_latex(element, _latex_simplicial_factor)
        if isinstance(element, CubicalElement):
            return render_latex(element, _latex_cubical_factor)
        raise ValueError(f"no latex renderer for {type(element).__name__}")
    raise ValueError(f"unknown format {format!r}")
