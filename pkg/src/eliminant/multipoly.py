"""Sparse polynomials in the eliminated-from variables with univariate
coefficients, plus elimination orderings.

A polynomial in K[x1, x2, ..., xn] is stored as a term map from monomials in
the tail variables (x2..xn) to coefficients in K[x1]; the same class also
carries residue-ring coefficients for the modular phase.  Monomials are bare
exponent tuples indexed by the tail variables in ascending precedence.
"""

from __future__ import annotations

from .unipoly import UniPoly

Monomial = tuple  # exponent tuple over the tail variables


class ContextMismatchError(ValueError):
    """Operands built over different variable contexts."""


class ArityMismatchError(ValueError):
    """Monomials of different arity compared."""


class ZeroPolynomialError(ValueError):
    """Leading data requested from the zero polynomial."""


# -- monomial helpers ---------------------------------------------------------


def mon_one(arity: int) -> Monomial:
    return (0,) * arity


def mon_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mon_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mon_div(a: Monomial, b: Monomial) -> Monomial:
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise ArithmeticError("monomial division with negative exponent")
    return out


def mon_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mon_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def mon_is_one(a: Monomial) -> bool:
    return all(e == 0 for e in a)


class ElimOrder:
    """Monomial ordering on the tail-variable block (lex or grevlex).

    Exponent tuples are indexed smallest variable first, so lex compares from
    the last coordinate down.  Any tail monomial dominates any power of the
    eliminated variable, which lives in the coefficients and never enters the
    comparison.
    """

    TAGS = ("lex", "grevlex")

    def __init__(self, tag: str):
        if tag not in self.TAGS:
            raise ValueError(f"unknown ordering {tag!r}")
        self.tag = tag

    def key(self, m: Monomial):
        if self.tag == "lex":
            return tuple(reversed(m))
        return (sum(m), tuple(-e for e in m))

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != len(b):
            raise ArityMismatchError("monomial arity mismatch")
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0

    def __eq__(self, other) -> bool:
        return isinstance(other, ElimOrder) and other.tag == self.tag

    def __hash__(self) -> int:
        return hash(("ElimOrder", self.tag))

    def __repr__(self) -> str:
        return f"ElimOrder({self.tag})"


class VarContext:
    """Session object fixing the field/ring, variable names and ordering.

    `ring` is the coefficient ring marker: the field itself for K[x1]
    coefficients, or a residue-ring context for modular coefficients.
    Mixing polynomials from different contexts is a hard error.
    """

    __slots__ = ("ring", "field", "x1", "tilde", "order")

    def __init__(self, ring, field, x1: str, tilde: tuple[str, ...], order: ElimOrder):
        if x1 in tilde:
            raise ValueError("eliminated variable duplicated in the tail block")
        self.ring = ring
        self.field = field
        self.x1 = x1
        self.tilde = tuple(tilde)
        self.order = order

    @property
    def arity(self) -> int:
        return len(self.tilde)

    def mon_one(self) -> Monomial:
        return mon_one(self.arity)

    def zero_coeff(self):
        return self.ring_zero()

    def ring_zero(self):
        if isinstance(self.ring, _PolyRingTag):
            return UniPoly.zero(self.field)
        return self.ring.zero_elem()

    def ring_one(self):
        if isinstance(self.ring, _PolyRingTag):
            return UniPoly.one(self.field)
        return self.ring.one_elem()

    def coeff_is_zero(self, c) -> bool:
        return c.is_zero

    def with_ring(self, ring) -> "VarContext":
        return VarContext(ring, self.field, self.x1, self.tilde, self.order)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VarContext)
            and self.ring == other.ring
            and self.field == other.field
            and self.x1 == other.x1
            and self.tilde == other.tilde
            and self.order == other.order
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.field, self.x1, self.tilde, self.order))

    def __repr__(self) -> str:
        names = f"{self.x1} < " + " < ".join(self.tilde)
        return f"VarContext({self.ring!r}; {names}; {self.order.tag})"


class _PolyRingTag:
    """Marker for plain K[x1] coefficients."""

    def __init__(self, field):
        self.field = field

    def __eq__(self, other) -> bool:
        return isinstance(other, _PolyRingTag) and other.field == self.field

    def __hash__(self) -> int:
        return hash(("PolyRing", self.field))

    def __repr__(self) -> str:
        return f"{self.field!r}[x1]"


def base_context(field, x1: str, tilde: tuple[str, ...], order: str = "lex") -> VarContext:
    return VarContext(_PolyRingTag(field), field, x1, tuple(tilde), ElimOrder(order))


class MultiPoly:
    """Immutable sparse polynomial over a VarContext.

    Terms are kept sorted descending under the context ordering so the
    leading term is terms[0] and reduction loops walk the support in
    decreasing order.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: VarContext, term_map: dict):
        items = [(m, c) for m, c in term_map.items() if not c.is_zero]
        items.sort(key=lambda mc: ctx.order.key(mc[0]), reverse=True)
        self.ctx = ctx
        self.terms = tuple(items)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ctx: VarContext) -> "MultiPoly":
        return cls(ctx, {})

    @classmethod
    def from_coeff(cls, ctx: VarContext, c) -> "MultiPoly":
        return cls(ctx, {ctx.mon_one(): c})

    @classmethod
    def term(cls, ctx: VarContext, c, mon: Monomial) -> "MultiPoly":
        return cls(ctx, {tuple(mon): c})

    @classmethod
    def var(cls, ctx: VarContext, name: str) -> "MultiPoly":
        if name == ctx.x1:
            gen = UniPoly.gen(ctx.field)
            if isinstance(ctx.ring, _PolyRingTag):
                return cls.from_coeff(ctx, gen)
            return cls.from_coeff(ctx, ctx.ring.elem(gen))
        if name not in ctx.tilde:
            raise ValueError(f"unknown variable {name!r}")
        mon = tuple(1 if v == name else 0 for v in ctx.tilde)
        return cls.term(ctx, ctx.ring_one(), mon)

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_coeff(self) -> bool:
        """True when the support is contained in {1} (no tail variables)."""
        return not self.terms or (len(self.terms) == 1 and mon_is_one(self.terms[0][0]))

    def as_coeff(self):
        if self.is_zero:
            return self.ctx.ring_zero()
        if not self.is_coeff:
            raise ValueError("polynomial has tail-variable terms")
        return self.terms[0][1]

    @property
    def lm(self) -> Monomial:
        if not self.terms:
            raise ZeroPolynomialError("leading monomial of zero")
        return self.terms[0][0]

    @property
    def lc(self):
        if not self.terms:
            raise ZeroPolynomialError("leading coefficient of zero")
        return self.terms[0][1]

    def coeff_at(self, mon: Monomial):
        for m, c in self.terms:
            if m == mon:
                return c
        return self.ctx.ring_zero()

    def tail(self) -> "MultiPoly":
        """Drop the leading term."""
        return MultiPoly(self.ctx, dict(self.terms[1:]))

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.ctx != other.ctx:
            raise ContextMismatchError("mixed variable contexts")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms:
            if m in out:
                out[m] = out[m] + c
            else:
                out[m] = c
        return MultiPoly(self.ctx, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.ctx, {m: -c for m, c in self.terms})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mon_mul(m1, m2)
                p = c1 * c2
                if m in out:
                    out[m] = out[m] + p
                else:
                    out[m] = p
        return MultiPoly(self.ctx, out)

    def scale(self, c) -> "MultiPoly":
        return MultiPoly(self.ctx, {m: a * c for m, a in self.terms})

    def mul_term(self, c, mon: Monomial) -> "MultiPoly":
        return MultiPoly(self.ctx, {mon_mul(m, mon): a * c for m, a in self.terms})

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.terms))

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- printing ----------------------------------------------------------

    def _mon_fmt(self, mon: Monomial) -> str:
        parts = []
        for name, e in reversed(list(zip(self.ctx.tilde, mon))):
            if e == 0:
                continue
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def fmt(self) -> str:
        if not self.terms:
            return "0"
        x1 = self.ctx.x1
        pieces = []
        for mon, c in self.terms:
            cu = c if isinstance(c, UniPoly) else c.rep
            cs = cu.fmt(x1)
            if mon_is_one(mon):
                body, neg = cs, False
                if body.startswith("-") and " " not in body:
                    body, neg = body[1:], True
                elif body.startswith("-"):
                    # multi-term with negative head: keep sign inside parens
                    body, neg = f"({cs})", False
                elif " " in body:
                    body = f"({cs})"
            else:
                ms = self._mon_fmt(mon)
                neg = False
                if " " in cs:
                    body = f"({cs})*{ms}"
                elif cs == "1":
                    body = ms
                elif cs == "-1":
                    body, neg = ms, True
                elif cs.startswith("-"):
                    body, neg = f"{cs[1:]}*{ms}", True
                else:
                    body = f"{cs}*{ms}"
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly({self.fmt()})"
