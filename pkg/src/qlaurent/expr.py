"""Parser for torus-element and coefficient expressions.

Grammar (whitespace insignificant):

    element  := ['-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := atom ['^' exponent]
    atom     := INT | 'q' | 'h[' SINT ',' SINT ']'
              | 'X(' SINT (',' SINT)* ')' | 'X' INT | '(' element ')'
    exponent := INT | '(' SINT ')' | '(' SINT '/' '2' ')'

Only q may carry a half-integer exponent; `X(c1,...,cm)` is a torus basis
element and `Xk` the k-th variable X(e_k), so ordered-form output reparses
through the same grammar.  Everything evaluates through torus arithmetic; a
coefficient-only string is parsed against a 0-dimensional torus whose scalar
ring is the coefficient ring itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import QCoefficient
from .torus import TorusContext, TorusElement


class ElementSyntaxError(SyntaxError):
    """Rejected input, carrying the 0-based character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass
class _Token:
    kind: str  # INT NUM-less kinds: q h X XVAR SYM END
    value: int | str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    toks: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Token("INT", int(text[i:j]), i))
            i = j
            continue
        if ch == "X":
            if i + 1 < n and text[i + 1].isdigit():
                j = i + 1
                while j < n and text[j].isdigit():
                    j += 1
                toks.append(_Token("XVAR", int(text[i + 1 : j]), i))
                i = j
                continue
            toks.append(_Token("X", "X", i))
            i += 1
            continue
        if ch in "qh":
            toks.append(_Token(ch, ch, i))
            i += 1
            continue
        if ch in "+-*^()[],/":
            toks.append(_Token("SYM", ch, i))
            i += 1
            continue
        raise ElementSyntaxError(f"unexpected character {ch!r}", i)
    toks.append(_Token("END", "", n))
    return toks


class _Parser:
    def __init__(self, text: str, ctx: TorusContext):
        self.text = text
        self.ctx = ctx
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def next(self) -> _Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_sym(self, ch: str) -> _Token:
        t = self.next()
        if t.kind != "SYM" or t.value != ch:
            raise ElementSyntaxError(f"expected {ch!r}", t.pos)
        return t

    def at_sym(self, ch: str) -> bool:
        t = self.peek()
        return t.kind == "SYM" and t.value == ch

    # -- grammar ------------------------------------------------------------

    def element(self) -> TorusElement:
        negate = False
        if self.at_sym("-"):
            self.next()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while self.at_sym("+") or self.at_sym("-"):
            op = self.next().value
            t = self.term()
            acc = acc - t if op == "-" else acc + t
        return acc

    def term(self) -> TorusElement:
        acc = self.factor()
        while self.at_sym("*"):
            self.next()
            acc = acc * self.factor()
        return acc

    def factor(self) -> TorusElement:
        tok = self.peek()
        if tok.kind == "q":
            self.next()
            qexp = 2
            if self.at_sym("^"):
                self.next()
                qexp = self.exponent(half_units=True)
            return self.ctx.scalar(QCoefficient.q_power(qexp))
        base = self.atom()
        if self.at_sym("^"):
            sym_pos = self.next().pos
            e = self.exponent(half_units=False)
            try:
                return base**e
            except ArithmeticError as exc:
                raise ElementSyntaxError(str(exc), sym_pos) from exc
        return base

    def atom(self) -> TorusElement:
        tok = self.next()
        if tok.kind == "INT":
            return self.ctx.scalar(QCoefficient.from_int(tok.value))
        if tok.kind == "h":
            self.expect_sym("[")
            k = self.signed_int()
            self.expect_sym(",")
            r = self.signed_int()
            self.expect_sym("]")
            return self.ctx.scalar(QCoefficient.h_symbol(k, r))
        if tok.kind == "X":
            self.expect_sym("(")
            c = [self.signed_int()]
            while self.at_sym(","):
                self.next()
                c.append(self.signed_int())
            self.expect_sym(")")
            return self.ctx.basis(tuple(c))
        if tok.kind == "XVAR":
            k = tok.value
            if not 1 <= k <= self.ctx.m:
                from .torus import DimensionMismatch

                raise DimensionMismatch(f"X{k} outside dimension {self.ctx.m}")
            e_k = tuple(1 if j == k - 1 else 0 for j in range(self.ctx.m))
            return self.ctx.basis(e_k)
        if tok.kind == "SYM" and tok.value == "(":
            e = self.element()
            self.expect_sym(")")
            return e
        raise ElementSyntaxError("expected a term", tok.pos)

    def signed_int(self) -> int:
        neg = False
        if self.at_sym("-"):
            self.next()
            neg = True
        t = self.next()
        if t.kind != "INT":
            raise ElementSyntaxError("expected an integer", t.pos)
        return -t.value if neg else t.value

    def exponent(self, half_units: bool) -> int:
        """Exponent value; in half_units mode the result counts q^(1/2) powers."""
        t = self.peek()
        if t.kind == "INT":
            self.next()
            return 2 * t.value if half_units else t.value
        self.expect_sym("(")
        num = self.signed_int()
        denom = 1
        if self.at_sym("/"):
            self.next()
            d = self.next()
            if d.kind != "INT" or d.value != 2:
                raise ElementSyntaxError("only /2 exponents are allowed", d.pos)
            denom = 2
        self.expect_sym(")")
        if denom == 2:
            if not half_units:
                raise ElementSyntaxError(
                    "half-integer exponents are only allowed on q", t.pos
                )
            return num
        return 2 * num if half_units else num


_SCALAR_CTX = TorusContext(0, ())


def parse_element(text: str, ctx: TorusContext) -> TorusElement:
    """Parse text into a canonical TorusElement of the given context."""
    p = _Parser(text, ctx)
    e = p.element()
    tok = p.peek()
    if tok.kind != "END":
        raise ElementSyntaxError("trailing input", tok.pos)
    return e


def parse_coefficient(text: str) -> QCoefficient:
    """Parse a coefficient expression (no X atoms)."""
    e = parse_element(text, _SCALAR_CTX)
    if e.is_zero():
        return QCoefficient.zero()
    return e.terms[()]
