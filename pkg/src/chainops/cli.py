"""Command-line frontend: parse element literals, run kernel operations,
emit deterministic text, LaTeX, or JSON.

Exit codes: 0 success, 2 malformed input (with the offending position),
3 domain errors such as invalid primes or out-of-range compositions.
"""

from __future__ import annotations

import argparse
import json
import sys

from .barratt_eccles import BarrattEcclesElement
from .chains import CubicalElement, SimplicialElement, act_cubical, act_simplicial, render
from .freemod import FreeModuleElement, format_tuple
from .steenrod import psi_be, psi_surj, steenrod_chain
from .surjection import BERGER_FRESSE, MCCLURE_SMITH, SurjectionElement, normalize_convention
from .symgroup import SymmetricRingElement

KINDS = ("surjection", "perm-ring", "barratt-eccles", "simplicial", "cubical")

PARSE_ERROR = 2
DOMAIN_ERROR = 3


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"at position {position}: {message}")
        self.position = position


# element literal parsing

class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start : self.pos])

    def done(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def _parse_int_tuple(sc: _Scanner) -> tuple:
    sc.expect("(")
    values = []
    if sc.peek() == ")":
        sc.expect(")")
        return tuple(values)
    while True:
        values.append(sc.integer())
        ch = sc.peek()
        if ch == ",":
            sc.expect(",")
            if sc.peek() == ")":
                break
        elif ch == ")":
            break
        else:
            raise ParseError("expected ',' or ')'", sc.pos)
    sc.expect(")")
    return tuple(values)


def _parse_nested_tuple(sc: _Scanner) -> tuple:
    sc.expect("(")
    factors = []
    while True:
        factors.append(_parse_int_tuple(sc))
        ch = sc.peek()
        if ch == ",":
            sc.expect(",")
            if sc.peek() == ")":
                break
        elif ch == ")":
            break
        else:
            raise ParseError("expected ',' or ')'", sc.pos)
    sc.expect(")")
    return tuple(factors)


def _parse_basis(sc: _Scanner, kind: str):
    if kind in ("surjection", "perm-ring"):
        return _parse_int_tuple(sc)
    return _parse_nested_tuple(sc)


def parse_element(text: str, kind: str, torsion: int = 0,
                  convention: str = BERGER_FRESSE):
    """Parse a signed-term literal into an element of the requested kind."""
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}", 0)
    sc = _Scanner(text)
    if sc.peek() == "0":
        mark = sc.pos
        sc.pos += 1
        if sc.done():
            return _build_element({}, kind, torsion, convention)
        sc.pos = mark
    pairs = []
    first = True
    while not sc.done():
        sign = 1
        ch = sc.peek()
        if ch == "+":
            if first:
                raise ParseError("a leading '+' is not allowed", sc.pos)
            sc.expect("+")
        elif ch == "-":
            sc.expect("-")
            sign = -1
        elif not first:
            raise ParseError("expected '+' or '-' between terms", sc.pos)
        coeff = sign
        if sc.peek().isdigit():
            coeff = sign * sc.integer()
        try:
            basis = _parse_basis(sc, kind)
        except ParseError:
            raise
        pairs.append((basis, coeff))
        first = False
    if not pairs:
        raise ParseError("empty input", sc.pos)
    try:
        return _build_element(pairs, kind, torsion, convention)
    except ValueError as exc:
        raise ParseError(f"shape mismatch for kind {kind!r}: {exc}", 0) from exc


def _build_element(pairs, kind: str, torsion: int, convention: str):
    if kind == "surjection":
        return SurjectionElement(pairs, torsion=torsion, convention=convention)
    if kind == "perm-ring":
        return SymmetricRingElement(pairs, torsion=torsion)
    if kind == "barratt-eccles":
        return BarrattEcclesElement(pairs, torsion=torsion)
    if kind == "simplicial":
        return SimplicialElement(pairs, torsion=torsion)
    if kind == "cubical":
        return CubicalElement(pairs, torsion=torsion)
    raise ParseError(f"unknown kind {kind!r}", 0)


# JSON wire format

def element_to_json(element, kind: str) -> str:
    convention = getattr(element, "convention", "")
    terms = [
        {"basis": _basis_to_lists(key), "coeff": coeff}
        for key, coeff in element.items()
    ]
    doc = {"kind": kind, "torsion": element.torsion,
           "convention": convention, "terms": terms}
    return json.dumps(doc, separators=(",", ":"), sort_keys=True)


def _basis_to_lists(key):
    if isinstance(key, tuple):
        return [_basis_to_lists(k) for k in key]
    return key


def _lists_to_basis(data):
    if isinstance(data, list):
        return tuple(_lists_to_basis(d) for d in data)
    return data


def element_from_json(doc: dict):
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r} in JSON input", 0)
    pairs = [(_lists_to_basis(t["basis"]), t["coeff"]) for t in doc.get("terms", [])]
    convention = doc.get("convention") or BERGER_FRESSE
    try:
        return _build_element(pairs, kind, doc.get("torsion", 0), convention)
    except ValueError as exc:
        raise ParseError(f"shape mismatch for kind {kind!r}: {exc}", 0) from exc


def read_element(text: str, kind: str, torsion: int, convention: str):
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
        return element_from_json(doc)
    return parse_element(stripped, kind, torsion, convention)


def emit(element, kind: str, fmt: str) -> str:
    if fmt == "text":
        return str(element)
    if fmt == "latex":
        if isinstance(element, (SimplicialElement, CubicalElement)):
            return render(element, "latex")
        return str(element)
    if fmt == "json":
        return element_to_json(element, kind)
    raise ValueError(f"unknown format {fmt!r}")


# diagonal output: pairs of simplices rendered side by side

def emit_diagonal(element, fmt: str) -> str:
    if fmt == "json":
        terms = [
            {"basis": _basis_to_lists(key), "coeff": coeff}
            for key, coeff in element.items()
        ]
        doc = {"kind": "barratt-eccles-pair", "torsion": element.torsion,
               "convention": "", "terms": terms}
        return json.dumps(doc, separators=(",", ":"), sort_keys=True)
    return str(element)


# command implementations

def _add_common(p, default_convention=BERGER_FRESSE):
    p.add_argument("--kind", choices=KINDS, default="surjection")
    p.add_argument("--torsion", type=int, default=0)
    p.add_argument("--convention", default=default_convention)
    p.add_argument("--format", dest="fmt", choices=("text", "latex", "json"),
                   default="text")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="chainops",
        description="Exact operadic chain algebra: surjection and "
                    "Barratt-Eccles operads, chain-level power operations.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a literal and re-emit it")
    _add_common(p)
    p.add_argument("element")

    p = sub.add_parser("boundary", help="differential of an element")
    _add_common(p)
    p.add_argument("element")

    p = sub.add_parser("compose", help="partial composition x o_i y")
    _add_common(p)
    p.add_argument("--position", type=int, required=True)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("diagonal", help="Alexander-Whitney diagonal")
    _add_common(p)
    p.add_argument("element")

    p = sub.add_parser("complexity", help="complexity filtration value")
    _add_common(p)
    p.add_argument("element")

    p = sub.add_parser("act", help="act on a standard simplex or cube")
    _add_common(p, default_convention=MCCLURE_SMITH)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--context", choices=("simplicial", "cubical"),
                   default="simplicial")
    p.add_argument("element")

    p = sub.add_parser("psi", help="preferred resolution elements")
    p.add_argument("--operad", choices=("surjection", "barratt-eccles"),
                   required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-i", type=int, required=True)
    p.add_argument("--format", dest="fmt", choices=("text", "latex", "json"),
                   default="text")

    p = sub.add_parser("steenrod", help="chain-level power operation data")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--bockstein", action="store_true")
    p.add_argument("--context", choices=("simplicial", "cubical"),
                   default="simplicial")
    p.add_argument("--format", dest="fmt", choices=("text", "latex", "json"),
                   default="text")
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else PARSE_ERROR
    try:
        return _dispatch(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "psi":
        if args.r < 1 or args.i < 0:
            raise ValueError("psi needs arity >= 1 and degree >= 0")
        el = psi_surj(args.r, args.i) if args.operad == "surjection" else psi_be(args.r, args.i)
        kind = "surjection" if args.operad == "surjection" else "barratt-eccles"
        print(emit(el, kind, args.fmt))
        return 0
    if cmd == "steenrod":
        el = steenrod_chain(args.prime, args.s, args.q,
                            bockstein=args.bockstein, context=args.context)
        print(emit(el, args.context, args.fmt))
        return 0

    convention = normalize_convention(args.convention)
    if cmd == "compose":
        left = read_element(args.left, args.kind, args.torsion, convention)
        right = read_element(args.right, args.kind, args.torsion, convention)
        if args.kind not in ("perm-ring", "surjection", "barratt-eccles"):
            raise ValueError(f"compose is not defined for kind {args.kind!r}")
        result = left.compose(right, args.position)
        print(emit(result, args.kind, args.fmt))
        return 0

    el = read_element(args.element, args.kind, args.torsion, convention)
    if cmd == "parse":
        print(emit(el, args.kind, args.fmt))
        return 0
    if cmd == "boundary":
        if args.kind == "perm-ring":
            raise ValueError("group-ring elements are concentrated in degree zero")
        print(emit(el.boundary(), args.kind, args.fmt))
        return 0
    if cmd == "diagonal":
        if args.kind != "barratt-eccles":
            raise ValueError("the diagonal lives on the Barratt-Eccles operad")
        print(emit_diagonal(el.diagonal(), args.fmt))
        return 0
    if cmd == "complexity":
        if args.kind not in ("surjection", "barratt-eccles"):
            raise ValueError("complexity is defined for operad elements")
        print(el.complexity())
        return 0
    if cmd == "act":
        if args.kind != "surjection":
            raise ValueError("only surjection elements act on chains")
        if args.dim < 0:
            raise ValueError("the dimension must be non-negative")
        acted = act_simplicial(el, args.dim) if args.context == "simplicial" \
            else act_cubical(el, args.dim)
        print(emit(acted, args.context, args.fmt))
        return 0
    raise ValueError(f"unknown command {cmd!r}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
