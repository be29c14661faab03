"""Shared builders for the test suite: contexts, random polynomials, ideals."""

from __future__ import annotations

import random
from fractions import Fraction

from eliminant.fields import QQ
from eliminant.multipoly import MultiPoly, base_context
from eliminant.parser import parse_poly
from eliminant.unipoly import UniPoly


def ctx3(order: str = "lex"):
    """(Q[z])[y, x] with z the eliminated-to variable."""
    return base_context(QQ, "z", ("y", "x"), order)


def ctx2(order: str = "lex"):
    return base_context(QQ, "z", ("y",), order)


def P(text: str, ctx=None) -> MultiPoly:
    return parse_poly(text, ctx if ctx is not None else ctx3())


def U(text: str, var: str = "z", field=QQ) -> UniPoly:
    """Univariate polynomial from an expression in a single variable."""
    ctx = base_context(field, var, ("__t__",))
    return parse_poly(text, ctx).as_coeff()


def random_unipoly(rng: random.Random, field=QQ, max_deg=3, bound=4, nonzero=False):
    while True:
        deg = rng.randint(0, max_deg)
        coeffs = [field.from_int(rng.randint(-bound, bound)) for _ in range(deg + 1)]
        p = UniPoly(field, coeffs)
        if not nonzero or not p.is_zero:
            return p


def random_multipoly(rng: random.Random, ctx, max_total=3, terms=4, bound=3, unideg=2):
    """Random polynomial over the base context, coefficients in K[x1]."""
    out = {}
    for _ in range(terms):
        mon = []
        budget = max_total
        for _ in ctx.tilde:
            e = rng.randint(0, budget)
            mon.append(e)
            budget -= e
        mon = tuple(mon)
        c = random_unipoly(rng, ctx.field, max_deg=unideg, bound=bound)
        if c.is_zero:
            continue
        out[mon] = out.get(mon, UniPoly.zero(ctx.field)) + c
    return MultiPoly(ctx, out)


def random_zero_dim_ideal(rng: random.Random, nvars: int | None = None):
    """A random zero-dimensional ideal: perturbed pure powers plus extras.

    Every variable gets a generator of the form v^k + (lower total degree),
    which bounds the quotient under any degree order; an optional extra
    generator adds variety.
    """
    nvars = nvars or rng.choice((2, 2, 3))
    names = ["z", "y", "x"][:nvars]
    ctx = base_context(QQ, names[0], tuple(names[1:]))
    gens = []
    for pos in range(nvars):
        k = rng.randint(1, 3)
        full = [0] * nvars
        full[pos] = k
        lead = _from_full_term(ctx, full, UniPoly.one(QQ))
        pert = _random_low_total(rng, ctx, max(k - 1, 0))
        gens.append(lead + pert)
    if rng.random() < 0.2:
        extra = _random_low_total(rng, ctx, rng.randint(1, 2))
        if not extra.is_zero:
            gens.append(extra)
    elif rng.random() < 0.6:
        # a generator with a non-trivial leading coefficient drives the
        # incompatible/modular branch of the pipeline
        lc = random_unipoly(rng, QQ, max_deg=2, bound=2, nonzero=True)
        mon = [0] * (nvars - 1)
        mon[rng.randrange(nvars - 1)] = 1
        head = MultiPoly.term(ctx, lc, tuple(mon))
        gens.append(head + _random_low_total(rng, ctx, 1))
    return ctx, gens


def _from_full_term(ctx, full_exps, scalar_poly: UniPoly) -> MultiPoly:
    coeff = scalar_poly.shift(full_exps[0])
    return MultiPoly.term(ctx, coeff, tuple(full_exps[1:]))


def _random_low_total(rng, ctx, max_total: int) -> MultiPoly:
    out = MultiPoly.zero(ctx)
    for _ in range(rng.randint(1, 3)):
        budget = max_total
        full = []
        for _ in range(len(ctx.tilde) + 1):
            e = rng.randint(0, budget)
            full.append(e)
            budget -= e
        c = rng.randint(-3, 3)
        if c == 0:
            continue
        out = out + _from_full_term(
            ctx, full, UniPoly.constant(QQ, Fraction(c))
        )
    return out


def random_member(rng, ctx, gens) -> MultiPoly:
    """A random small combination of the generators (a member by construction)."""
    acc = MultiPoly.zero(ctx)
    for g in gens:
        if rng.random() < 0.7:
            mult = _random_low_total(rng, ctx, 1)
            acc = acc + mult * g
    if acc.is_zero:
        acc = gens[0]
    return acc
