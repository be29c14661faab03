"""Expression and ideal-file parsing.

Expression grammar (no implicit multiplication):

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER | NAME | '(' expr ')'

NUMBER is an integer or, over Q, a rational written NUM '/' NUM with no other
use of '/'.  Ideal files are line oriented:

    field Q            (or: field GF <p>)
    vars z < y < x     (first name is the variable eliminated to)
    order lex          (optional; lex or grevlex)
    ideal:
    <one expression per line>

Blank lines and '#' comments are skipped.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .fields import GF, QQ, RationalField
from .multipoly import MultiPoly, VarContext, base_context
from .unipoly import UniPoly


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", column {col}" if col is not None else "")
        super().__init__(message + where)


_TOKEN_CHARS = set("+-*^()")


def _tokenize(text: str, line_no: int | None = None):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _TOKEN_CHARS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            # rational literal: INT '/' INT
            if j < n and text[j] == "/":
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise ParseError("expected digits after '/'", line_no, j + 1)
                tokens.append(("num", text[i:k], i))
                i = k
            else:
                tokens.append(("num", text[i:j], i))
                i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line_no, i + 1)
    tokens.append(("end", "", n))
    return tokens


class _ExprParser:
    def __init__(self, tokens, ctx: VarContext, line_no: int | None):
        self.tokens = tokens
        self.pos = 0
        self.ctx = ctx
        self.line = line_no

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", self.line, tok[2] + 1)
        self.pos += 1
        return tok

    def parse(self) -> MultiPoly:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"trailing input {tok[1]!r}", self.line, tok[2] + 1)
        return value

    def expr(self) -> MultiPoly:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> MultiPoly:
        value = self.unary()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.unary()
        return value

    def unary(self) -> MultiPoly:
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        if self.peek()[0] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> MultiPoly:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("num")
            if "/" in tok[1]:
                raise ParseError("exponent must be an integer", self.line, tok[2] + 1)
            n = int(tok[1])
            value = MultiPoly.from_coeff(self.ctx, self.ctx.ring_one())
            for _ in range(n):
                value = value * base
            return value
        return base

    def atom(self) -> MultiPoly:
        kind, text, col = self.peek()
        if kind == "num":
            self.take()
            if "/" in text and not isinstance(self.ctx.field, RationalField):
                raise ParseError("rational literal in a prime field", self.line, col + 1)
            scalar = self.ctx.field.parse(text)
            c = UniPoly.constant(self.ctx.field, scalar)
            return MultiPoly.from_coeff(self.ctx, self._to_ring(c))
        if kind == "name":
            self.take()
            try:
                return MultiPoly.var(self.ctx, text)
            except ValueError as exc:
                raise ParseError(str(exc), self.line, col + 1) from exc
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        raise ParseError(f"unexpected token {text!r}", self.line, col + 1)

    def _to_ring(self, c: UniPoly):
        ring = self.ctx.ring
        if hasattr(ring, "elem"):
            return ring.elem(c)
        return c


def parse_poly(text: str, ctx: VarContext, line_no: int | None = None) -> MultiPoly:
    return _ExprParser(_tokenize(text, line_no), ctx, line_no).parse()


@dataclass
class IdealFile:
    field: object
    x1: str
    tilde: tuple[str, ...]
    order: str
    generators: list = dc_field(default_factory=list)
    generator_texts: list = dc_field(default_factory=list)

    @property
    def ctx(self) -> VarContext:
        return base_context(self.field, self.x1, self.tilde, self.order)


def parse_ideal_file(text: str) -> IdealFile:
    field = None
    names: list[str] | None = None
    order = "lex"
    gen_lines: list[tuple[int, str]] = []
    in_ideal = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if in_ideal:
            gen_lines.append((line_no, line))
            continue
        head, _, rest = line.partition(" ")
        head = head.lower()
        if head == "field":
            spec = rest.split()
            if spec and spec[0].upper() == "Q" and len(spec) == 1:
                field = QQ
            elif len(spec) == 2 and spec[0].upper() == "GF" and spec[1].isdigit():
                try:
                    field = GF(int(spec[1]))
                except ValueError as exc:
                    raise ParseError(str(exc), line_no) from exc
            else:
                raise ParseError(f"bad field spec {rest!r}", line_no)
        elif head == "vars":
            names = [v.strip() for v in rest.split("<")]
            if len(names) < 2 or any(not v.isidentifier() for v in names):
                raise ParseError(f"bad variable declaration {rest!r}", line_no)
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable name", line_no)
        elif head == "order":
            order = rest.strip().lower()
            if order not in ("lex", "grevlex"):
                raise ParseError(f"unknown order {rest!r}", line_no)
        elif line.lower().rstrip(":") == "ideal":
            in_ideal = True
        else:
            raise ParseError(f"unexpected directive {line!r}", line_no)
    if field is None:
        raise ParseError("missing 'field' line")
    if names is None:
        raise ParseError("missing 'vars' line")
    if not gen_lines:
        raise ParseError("no generators after 'ideal:'")
    out = IdealFile(field=field, x1=names[0], tilde=tuple(names[1:]), order=order)
    ctx = out.ctx
    for line_no, line in gen_lines:
        out.generators.append(parse_poly(line, ctx, line_no))
        out.generator_texts.append(line)
    return out


def parse_probe_file(text: str, ctx: VarContext) -> list[tuple[str, MultiPoly]]:
    probes = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        probes.append((line, parse_poly(line, ctx, line_no)))
    return probes
