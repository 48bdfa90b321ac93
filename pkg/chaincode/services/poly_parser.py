"""Recursive-descent parser and printer for polynomial expressions.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" uint)?
    atom   := uint | "z" | "g" | "w" | "(" expr ")" | "-" atom

``g`` is gamma (``u`` and the Greek letter are accepted too), ``w`` the
generator of the residue field (only when s > 1). Integer literals denote
k * 1. Whitespace is ignored.
"""

from dataclasses import dataclass

from chaincode.core.exceptions import PolyParseError
from chaincode.services.chain_ring import ChainRing
from chaincode.services.poly_arith import (
    FPoly,
    RPoly,
    rpoly_add,
    rpoly_mod_zn,
    rpoly_mul,
    rpoly_power_mod_zn,
    rpoly_sub,
)
from chaincode.services.residue_field import ResidueField

MAX_EXPONENT = 1 << 16

ALIASES = {
    "γ": "g",  # gamma
    "u": "g",
    "ω": "w",  # omega
    "−": "-",  # minus sign
    "·": "*",  # middle dot
    "×": "*",
}
SYMBOLS = set("+-*^()zgw")
DIGITS = set("0123456789")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", a symbol character, or "eof"
    text: str
    pos: int


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(src):
        ch = ALIASES.get(src[pos], src[pos])
        if ch.isspace():
            pos += 1
        elif ch in DIGITS:
            start = pos
            while pos < len(src) and src[pos] in DIGITS:
                pos += 1
            tokens.append(Token("int", src[start:pos], start))
        elif ch in SYMBOLS:
            tokens.append(Token(ch, ch, pos))
            pos += 1
        else:
            raise PolyParseError(f"unexpected character {src[pos]!r}", pos)
    tokens.append(Token("eof", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, ring: ChainRing, n: int | None):
        self.tokens = tokenize(src)
        self.index = 0
        self.ring = ring
        self.n = n

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def _reduce(self, poly: RPoly) -> RPoly:
        return rpoly_mod_zn(poly, self.n) if self.n is not None else poly

    def parse(self) -> RPoly:
        result = self.expr()
        if self.current.kind != "eof":
            raise PolyParseError(f"syntax error near {self.current.text!r}", self.current.pos)
        return result

    def expr(self) -> RPoly:
        result = self.term()
        while self.current.kind in ("+", "-"):
            op = self._advance().kind
            right = self.term()
            result = rpoly_add(result, right) if op == "+" else rpoly_sub(result, right)
        return result

    def term(self) -> RPoly:
        result = self.factor()
        while self.current.kind == "*":
            self._advance()
            result = self._reduce(rpoly_mul(result, self.factor()))
        return result

    def factor(self) -> RPoly:
        base = self.atom()
        if self.current.kind != "^":
            return base
        self._advance()
        token = self.current
        if token.kind != "int":
            raise PolyParseError("syntax error: exponent expected", token.pos)
        self._advance()
        exponent = int(token.text)
        if exponent > MAX_EXPONENT:
            raise PolyParseError(f"exponent overflow: {exponent} > {MAX_EXPONENT}", token.pos)
        return rpoly_power_mod_zn(base, exponent, self.n)

    def atom(self) -> RPoly:
        ring = self.ring
        token = self.current
        if token.kind == "int":
            self._advance()
            return RPoly.constant(ring, ring.from_int(int(token.text)))
        if token.kind == "z":
            self._advance()
            return self._reduce(RPoly.monomial(ring, ring.one, 1))
        if token.kind == "g":
            self._advance()
            return RPoly.constant(ring, ring.gamma_pow(1))
        if token.kind == "w":
            if ring.is_integer_modular or ring.s == 1:
                raise PolyParseError("'w' is only defined when s > 1", token.pos)
            self._advance()
            return RPoly.constant(ring, ring.field_generator())
        if token.kind == "(":
            self._advance()
            inner = self.expr()
            if self.current.kind != ")":
                raise PolyParseError("syntax error: ')' expected", self.current.pos)
            self._advance()
            return inner
        if token.kind == "-":
            self._advance()
            return -self.atom()
        raise PolyParseError("syntax error", token.pos)


def parse_poly(src: str, ring: ChainRing, n: int | None = None) -> RPoly:
    """Evaluate ``src`` in R[z], reduced modulo z^n - 1 when n is given.

    Raises:
        PolyParseError: On a syntax error, 'w' with s = 1, or an oversized exponent.
    """
    return _Parser(src, ring, n).parse()


def _format_coefficient(ring: ChainRing, c: int) -> tuple[str, bool]:
    """Text of a coefficient and whether it is a sum needing parentheses."""
    if ring.is_integer_modular:
        return str(c), False
    terms = []
    for i, digit in enumerate(ring.digits(c)):
        if not digit:
            continue
        g_part = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
        for k, a in enumerate(ring.field.coefficients(digit)):
            if not a:
                continue
            w_part = "" if k == 0 else ("w" if k == 1 else f"w^{k}")
            factors = [f for f in (str(a) if a != 1 else "", w_part, g_part) if f]
            terms.append("*".join(factors) or "1")
    return " + ".join(terms), len(terms) > 1


def format_poly(poly: RPoly) -> str:
    """Canonical text of a polynomial, highest degree first; parses back to itself."""
    if poly.is_zero():
        return "0"
    ring = poly.ring
    parts = []
    for d in range(len(poly.coeffs) - 1, -1, -1):
        c = poly.coeffs[d]
        if not c:
            continue
        text, is_sum = _format_coefficient(ring, c)
        z_part = "" if d == 0 else ("z" if d == 1 else f"z^{d}")
        if not z_part:
            parts.append(text)
        elif text == "1":
            parts.append(z_part)
        else:
            parts.append(f"({text})*{z_part}" if is_sum else f"{text}*{z_part}")
    return " + ".join(parts)


def _format_field_element(field: ResidueField, a: int) -> tuple[str, bool]:
    terms = []
    for k, c in enumerate(field.coefficients(a)):
        if c:
            w_part = "" if k == 0 else ("w" if k == 1 else f"w^{k}")
            terms.append("*".join(f for f in (str(c) if c != 1 else "", w_part) if f) or "1")
    return " + ".join(terms), len(terms) > 1


def format_fpoly(poly: FPoly) -> str:
    """Text of a residue-field polynomial in the same grammar."""
    if poly.is_zero():
        return "0"
    parts = []
    for d in range(len(poly.coeffs) - 1, -1, -1):
        c = poly.coeffs[d]
        if not c:
            continue
        text, is_sum = _format_field_element(poly.field, c)
        z_part = "" if d == 0 else ("z" if d == 1 else f"z^{d}")
        if not z_part:
            parts.append(text)
        elif text == "1":
            parts.append(z_part)
        else:
            parts.append(f"({text})*{z_part}" if is_sum else f"{text}*{z_part}")
    return " + ".join(parts)
