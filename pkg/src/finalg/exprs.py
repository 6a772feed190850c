"""Mini-language for naming groups and rings on the command line.

Groups:  ``Q8``, ``C<n>``, ``D<n>``, products with ``x`` (e.g. ``Q8xC2xC3``),
parsed left-associatively.

Rings:   ``Z/<n>``, ``GF(<p>)`` or ``GF(<p>^<k>)`` (modulus from the built-in
irreducible table), ``M<n>(<ring>)``, direct sums with ``(+)``
(e.g. ``GF(2)(+)Z/3``).

Labels produced by the constructors re-parse to identical structures.
"""

from __future__ import annotations

import re

from .groups import FiniteGroup, direct_product, make_cyclic, make_dihedral, make_quaternion8
from .rings import FiniteRing, direct_sum, make_gf, make_matrix_ring, make_zmod


class ParseError(ValueError):
    """Bad expression, annotated with the character position."""

    def __init__(self, text: str, pos: int, message: str):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos} in {text!r}")


def parse_group(text: str, order_cap: int = 256) -> FiniteGroup:
    s = text.strip()
    if not s:
        raise ParseError(text, 0, "empty group expression")
    pos = 0
    atoms = []
    for piece in s.split("x"):
        piece_stripped = piece.strip()
        if not piece_stripped:
            raise ParseError(text, pos, "empty factor")
        atoms.append((_group_atom(text, pos, piece_stripped), pos))
        pos += len(piece) + 1
    group = atoms[0][0]
    for atom, at in atoms[1:]:
        group = direct_product(group, atom, order_cap=order_cap)
    return group


def _group_atom(text: str, pos: int, piece: str) -> FiniteGroup:
    if piece == "Q8":
        return make_quaternion8()
    m = re.fullmatch(r"C(\d+)", piece)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ParseError(text, pos, "cyclic order must be >= 1")
        return make_cyclic(n)
    m = re.fullmatch(r"D(\d+)", piece)
    if m:
        n = int(m.group(1))
        if n < 3:
            raise ParseError(text, pos, "dihedral index must be >= 3")
        return make_dihedral(n)
    raise ParseError(text, pos, f"unknown group atom {piece!r}")


def parse_ring(text: str) -> FiniteRing:
    parser = _RingParser(text)
    ring = parser.parse()
    return ring


class _RingParser:
    def __init__(self, text: str):
        self.text = text
        self.s = text.strip()
        self.i = 0

    def fail(self, message: str):
        raise ParseError(self.text, self.i, message)

    def peek(self, token: str) -> bool:
        return self.s.startswith(token, self.i)

    def eat(self, token: str) -> None:
        if not self.peek(token):
            self.fail(f"expected {token!r}")
        self.i += len(token)

    def integer(self) -> int:
        m = re.match(r"\d+", self.s[self.i :])
        if not m:
            self.fail("expected an integer")
        self.i += len(m.group(0))
        return int(m.group(0))

    def parse(self) -> FiniteRing:
        ring = self.term()
        parts = [ring]
        while self.peek("(+)"):
            self.eat("(+)")
            parts.append(self.term())
        if self.i != len(self.s):
            self.fail("trailing input")
        return parts[0] if len(parts) == 1 else direct_sum(parts)

    def term(self) -> FiniteRing:
        if self.peek("Z/"):
            self.eat("Z/")
            return make_zmod(self.integer())
        if self.peek("GF("):
            self.eat("GF(")
            p = self.integer()
            k = 1
            if self.peek("^"):
                self.eat("^")
                k = self.integer()
            self.eat(")")
            if k > 4:
                self.fail("built-in irreducible table stops at k = 4")
            return make_gf(p, k)
        if self.peek("M"):
            self.eat("M")
            n = self.integer()
            self.eat("(")
            base = self.term_or_sum_until_paren()
            self.eat(")")
            return make_matrix_ring(base, n)
        self.fail("expected Z/<n>, GF(p^k), or M<n>(...)")

    def term_or_sum_until_paren(self) -> FiniteRing:
        parts = [self.term()]
        while self.peek("(+)"):
            self.eat("(+)")
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else direct_sum(parts)
