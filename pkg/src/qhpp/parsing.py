"""Reader for plain-text planar systems.

A system file is two equations, in order:

    dx/dt = <polynomial in x, y>
    dy/dt = <polynomial in x, y>

Blank lines and ``#`` comments are ignored.  Polynomials use integer
literals, ``x``, ``y``, ``+ - * / ^`` and parentheses; multiplication may
be implicit (``3x^2y``).  Division is only allowed by a nonzero constant,
which is how rational coefficients are written (``1/2*x``).  Decimal
literals are rejected on purpose: the whole pipeline is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from qhpp.errors import ParseError, ZeroSystemError
from qhpp.poly import BiPoly, PolySystem


@dataclass(frozen=True)
class _Token:
    kind: str  # NUMBER, VAR, OP, LPAREN, RPAREN, END
    text: str
    column: int


def _tokenize(text: str, line_no: int) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        col = i + 1
        if ch in " \t":
            i += 1
            continue
        if ch == ".":
            raise ParseError(
                "decimal literals are not supported; write rationals as fractions (e.g. 3/10)",
                line_no,
                col,
            )
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            if j < len(text) and text[j] == ".":
                raise ParseError(
                    "decimal literals are not supported; write rationals as fractions (e.g. 3/10)",
                    line_no,
                    j + 1,
                )
            tokens.append(_Token("NUMBER", text[i:j], col))
            i = j
            continue
        if ch in "xy":
            tokens.append(_Token("VAR", ch, col))
            i += 1
            continue
        if ch in "+-*/^":
            tokens.append(_Token("OP", ch, col))
            i += 1
            continue
        if ch == "(":
            tokens.append(_Token("LPAREN", ch, col))
            i += 1
            continue
        if ch == ")":
            tokens.append(_Token("RPAREN", ch, col))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line_no, col)
    tokens.append(_Token("END", "", len(text) + 1))
    return tokens


class _ExprParser:
    """Recursive-descent parser building a BiPoly directly."""

    def __init__(self, tokens: list[_Token], line_no: int):
        self.tokens = tokens
        self.pos = 0
        self.line_no = line_no

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, tok: _Token) -> ParseError:
        return ParseError(message, self.line_no, tok.column)

    def parse(self) -> BiPoly:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "END":
            raise self.fail(f"unexpected {tok.text!r} after expression", tok)
        return value

    def expr(self) -> BiPoly:
        # a leading sign is handled inside the first factor
        value = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if tok.text == "+" else value - rhs
            else:
                return value

    def term(self) -> BiPoly:
        value = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text == "*":
                self.take()
                value = value * self.factor()
            elif tok.kind == "OP" and tok.text == "/":
                self.take()
                divisor = self.factor()
                if divisor.degree() > 0:
                    raise self.fail("division is only allowed by a constant", tok)
                c = divisor.coeff(0, 0)
                if c == 0:
                    raise self.fail("division by zero", tok)
                value = value.scale(Fraction(1) / c)
            elif tok.kind in ("NUMBER", "VAR", "LPAREN"):
                # implicit multiplication: 3x, xy, 2(x+y)
                value = value * self.factor()
            else:
                return value

    def factor(self) -> BiPoly:
        sign = 1
        tok = self.peek()
        while tok.kind == "OP" and tok.text in "+-":
            if tok.text == "-":
                sign = -sign
            self.take()
            tok = self.peek()
        base = self.atom()
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "^":
            self.take()
            etok = self.take()
            if etok.kind != "NUMBER":
                raise self.fail("exponent must be a nonnegative integer", etok)
            power = int(etok.text)
            result = BiPoly.const(1)
            for _ in range(power):
                result = result * base
            base = result
        return base if sign > 0 else -base

    def atom(self) -> BiPoly:
        tok = self.take()
        if tok.kind == "NUMBER":
            return BiPoly.const(int(tok.text))
        if tok.kind == "VAR":
            return BiPoly.monomial(1, 0) if tok.text == "x" else BiPoly.monomial(0, 1)
        if tok.kind == "LPAREN":
            inner = self.expr()
            closing = self.take()
            if closing.kind != "RPAREN":
                raise self.fail("expected ')'", closing)
            return inner
        raise self.fail(f"expected a number, variable or '(', got {tok.text!r}", tok)


def parse_expr(text: str, line_no: int = 1) -> BiPoly:
    """Parse one polynomial expression."""
    return _ExprParser(_tokenize(text, line_no), line_no).parse()


def parse_system(text: str) -> PolySystem:
    """Parse a two-line system file into a PolySystem.

    Raises ParseError (with position) on malformed input and
    ZeroSystemError when either right-hand side is identically zero.
    """
    equations: list[tuple[int, str]] = []
    for idx, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            equations.append((idx, line))
    if len(equations) != 2:
        raise ParseError(f"expected exactly 2 equations, found {len(equations)}")

    sides = []
    for (line_no, line), lhs in zip(equations, ("dx/dt", "dy/dt")):
        stripped = line.lstrip()
        offset = len(line) - len(stripped)
        if not stripped.startswith(lhs):
            raise ParseError(f"expected the equation to start with '{lhs} ='", line_no, offset + 1)
        rest = stripped[len(lhs):].lstrip()
        eq_col = line.index(lhs) + len(lhs) + 1
        if not rest.startswith("="):
            raise ParseError(f"expected '=' after '{lhs}'", line_no, eq_col)
        rhs = rest[1:]
        rhs_col = len(line) - len(rhs)
        tokens = _tokenize(rhs, line_no)
        tokens = [_Token(t.kind, t.text, t.column + rhs_col) for t in tokens]
        sides.append(_ExprParser(tokens, line_no).parse())

    p, q = sides
    if p.is_zero:
        raise ZeroSystemError("dx/dt")
    if q.is_zero:
        raise ZeroSystemError("dy/dt")
    return PolySystem(p, q)


def parse_system_file(path: str) -> PolySystem:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_system(fh.read())
