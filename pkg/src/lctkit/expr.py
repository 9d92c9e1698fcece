"""Recursive descent parser for polynomial expressions.

Grammar (whitespace ignored, multiplication always explicit):

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nonneg-int)?
    base     := rational | variable | '(' expr ')'
    rational := int ('/' int)?

Variables are x and y for plane curves, or x1..x8 in n-variable mode; the
two namings cannot be mixed.  Expressions expand to SparsePoly values as
they parse, so the result is always the exact expansion.  Exponents above
10^6 and coefficients wider than max_bits bits abort early instead of
eating the machine.
"""

from __future__ import annotations

import re
from fractions import Fraction

from lctkit.errors import ParseError
from lctkit.poly import MAX_VARS, SparsePoly

MAX_EXPONENT = 10**6
DEFAULT_MAX_BITS = 10**6

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|([-+*/^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            tail = text[pos:].lstrip()
            if not tail:
                break
            raise ParseError(f"unexpected character {tail[0]!r}", pos + (len(text[pos:]) - len(tail)))
        kind = "int" if m.group(1) else "name" if m.group(2) else "op"
        tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _variable_table(tokens):
    """Map variable names to indices and fix the variable count n."""
    names = {tok for kind, tok, _ in tokens if kind == "name"}
    if not names:
        return 2, {"x": 0, "y": 1}
    plain = names & {"x", "y"}
    indexed = {n for n in names if re.fullmatch(r"x[1-9]\d*", n)}
    bad = names - plain - indexed
    if bad:
        raise ParseError(f"unknown variable {sorted(bad)[0]!r}")
    if plain and indexed:
        raise ParseError("cannot mix x,y with numbered variables x1..xn")
    if indexed:
        n = max(int(name[1:]) for name in indexed)
        if n < 2:
            n = 2
        if n > MAX_VARS:
            raise ParseError(f"at most {MAX_VARS} variables are supported (saw x{n})")
        return n, {f"x{i + 1}": i for i in range(n)}
    return 2, {"x": 0, "y": 1}


class _Parser:
    def __init__(self, tokens, n, varmap, max_bits):
        self.tokens = tokens
        self.i = 0
        self.n = n
        self.varmap = varmap
        self.max_bits = max_bits

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, off = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val or 'end of input'!r}", off)

    def guard(self, poly: SparsePoly) -> SparsePoly:
        for c in poly.terms.values():
            if (
                c.numerator.bit_length() > self.max_bits
                or c.denominator.bit_length() > self.max_bits
            ):
                raise ParseError(
                    f"coefficient exceeds {self.max_bits} bits "
                    "(raise LCTKIT_MAX_BITS to allow this)"
                )
        return poly

    def parse_expr(self) -> SparsePoly:
        kind, val, _ = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.parse_term()
        if sign < 0:
            acc = -acc
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.parse_term()
                acc = self.guard(acc - rhs if val == "-" else acc + rhs)
            else:
                return acc

    def parse_term(self) -> SparsePoly:
        acc = self.parse_factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = self.guard(acc * self.parse_factor())
            else:
                return acc

    def parse_factor(self) -> SparsePoly:
        base = self.parse_base()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, off = self.take()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", off)
            k = int(val)
            if k > MAX_EXPONENT:
                raise ParseError(f"exponent {k} exceeds the limit {MAX_EXPONENT}", off)
            return self.guard(base**k)
        return base

    def parse_base(self) -> SparsePoly:
        kind, val, off = self.take()
        if kind == "int":
            value = Fraction(int(val))
            kind2, val2, off2 = self.peek()
            if kind2 == "op" and val2 == "/":
                self.take()
                kind3, val3, off3 = self.take()
                if kind3 != "int":
                    raise ParseError("denominator must be an integer", off3)
                if int(val3) == 0:
                    raise ParseError("zero denominator", off3)
                value /= int(val3)
            return SparsePoly.constant(self.n, value)
        if kind == "name":
            return SparsePoly.variable(self.n, self.varmap[val])
        if kind == "op" and val == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"expected a number, variable or '(', found {val or 'end of input'!r}", off)


def parse(text: str, max_bits: int = DEFAULT_MAX_BITS) -> SparsePoly:
    """Parse and exactly expand a polynomial expression."""
    tokens = _tokenize(text)
    if tokens[0][0] == "end":
        raise ParseError("empty expression", 0)
    n, varmap = _variable_table(tokens)
    parser = _Parser(tokens, n, varmap, max_bits)
    result = parser.parse_expr()
    kind, val, off = parser.peek()
    if kind != "end":
        raise ParseError(f"trailing input starting at {val!r}", off)
    return result


__all__ = ["DEFAULT_MAX_BITS", "MAX_EXPONENT", "parse"]
