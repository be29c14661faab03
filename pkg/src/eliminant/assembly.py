"""Assemble the eliminant and ideal decomposition, and normalize bases.

The true eliminant is the compatible part of the pseudo-eliminant times the
contribution of each composite divisor (its modulus when the modular run
ends at zero, the lifted modular eliminant otherwise, nothing when the
component is trivial).  Each surviving component carries a basis over its
residue ring; membership and normal forms reduce component-wise and, for
normal forms, recombine by the Chinese remainder theorem over the pairwise
coprime moduli.

Reduction here is gcd-division: a term is reducible when its coefficient
lies in the ideal generated by the gcd of the eligible leading coefficients,
and the reduction combines all eligible divisors through that gcd's
cofactors.  This is the membership-grade reduction; the eliminant engines
never use it because the cofactors are where coefficient swell hides.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .compat import CompatSplit
from .multipoly import MultiPoly, VarContext, mon_div, mon_divides
from .pqr import (
    PqrCtx,
    PqrElem,
    ProperOutcome,
    _unit_normalize,
    lift_multipoly,
    project_multipoly,
    residue_context,
)
from .pseudo import PseudoOutcome
from .unipoly import (
    UniPoly,
    exact_div,
    poly_ext_gcd,
    poly_gcd,
    poly_lcm,
    poly_multi_ext_gcd,
)


class MissingComponentError(ValueError):
    pass


# -- gcd-term reduction ---------------------------------------------------------


def _coprime_adjust(g: UniPoly, d_st: UniPoly, modulus: UniPoly) -> UniPoly:
    """A lift w with w*d_st congruent to g and w coprime to the modulus.

    g is a nonzero lift with gcd(g, modulus) = d_st; the adjustment adds a
    multiple of modulus/d_st, searching small polynomials until coprime.
    """
    base = exact_div(g, d_st)
    bump = exact_div(modulus, d_st)
    field = g.field
    if field.char == 0:
        candidates = (UniPoly.constant(field, field.from_int(n)) for n in range(modulus.degree + 2))
    else:
        def gf_candidates():
            n = 0
            while True:
                digits, m = [], n
                while True:
                    digits.append(field.from_int(m % field.char))
                    m //= field.char
                    if m == 0:
                        break
                yield UniPoly(field, digits)
                n += 1
        candidates = gf_candidates()
    for t in candidates:
        w = base + t * bump
        if not w.is_zero and poly_gcd(w, modulus).is_constant:
            return w
    raise AssertionError("no coprime adjustment found")


@dataclass
class GcdDivision:
    multiplier: PqrElem        # unit
    quotients: list
    remainder: MultiPoly


def _eligible(divisors, mon):
    return [(i, b) for i, b in enumerate(divisors) if mon_divides(b.lm, mon)]


def _term_reducible(c: PqrElem, hits, modulus: UniPoly) -> bool:
    g, _ = poly_multi_ext_gcd([b.lc.lift() for _, b in hits])
    d_st = poly_gcd(g, modulus)
    return (c.rep % d_st).is_zero if not d_st.is_constant else True


def gcd_reduce(f: MultiPoly, divisors: list[MultiPoly]) -> GcdDivision:
    """Full gcd-division of f by the divisor list over a residue context.

    The overall multiplier is always a unit: a reduction step either has a
    unit interim multiplier outright, or is replaced by a combination scaled
    through a coprime adjustment of the coefficient gcd.
    """
    ctx = f.ctx
    ring: PqrCtx = ctx.ring
    lam = ring.one_elem()
    quotients = [MultiPoly.zero(ctx) for _ in divisors]
    h = f
    while True:
        hit = None
        for mon, c in h.terms:
            cands = _eligible(divisors, mon)
            if not cands:
                continue
            g, cofs = poly_multi_ext_gcd([b.lc.lift() for _, b in cands])
            d_st = poly_gcd(g, ring.modulus)
            if not d_st.is_constant and not (c.rep % d_st).is_zero:
                continue
            hit = (mon, c, cands, g, cofs, d_st)
            break
        if hit is None:
            break
        mon, c, cands, g, cofs, d_st = hit
        l_alpha = c.lift()
        mu = ring.elem(exact_div(poly_lcm(l_alpha, g), l_alpha))
        if mu.is_unit():
            m = ring.elem(exact_div(poly_lcm(l_alpha, g), g))
            if not mu.rep.is_one:
                lam = lam * mu
                h = h.scale(mu)
                quotients = [q.scale(mu) for q in quotients]
            for (bi, b), cof in zip(cands, cofs):
                factor = m * ring.elem(cof)
                if factor.is_zero:
                    continue
                shift = mon_div(mon, b.lm)
                h = h - b.mul_term(factor, shift)
                quotients[bi] = quotients[bi] + MultiPoly.term(ctx, factor, shift)
        else:
            # coefficient gcd has a non-unit cofactor against this term:
            # rescale the combination instead of the dividend
            w = _coprime_adjust(g, d_st, ring.modulus)
            t = ring.elem(exact_div(c.rep, d_st)) * ring.elem(w).inverse()
            for (bi, b), cof in zip(cands, cofs):
                factor = t * ring.elem(cof)
                if factor.is_zero:
                    continue
                shift = mon_div(mon, b.lm)
                h = h - b.mul_term(factor, shift)
                quotients[bi] = quotients[bi] + MultiPoly.term(ctx, factor, shift)
        if not h.coeff_at(mon).is_zero:
            raise AssertionError("gcd-term reduction failed to clear the term")
    return GcdDivision(lam, quotients, h)


def gcd_reduced(f: MultiPoly, divisors: list[MultiPoly]) -> bool:
    ring: PqrCtx = f.ctx.ring
    for mon, c in f.terms:
        cands = _eligible(divisors, mon)
        if cands and _term_reducible(c, cands, ring.modulus):
            return False
    return True


# -- basis normalization ladder ---------------------------------------------------


def _basis_sorted(basis: list[MultiPoly]) -> list[MultiPoly]:
    return sorted(
        basis,
        key=lambda b: (b.ctx.order.key(b.lm), b.lc.rep.degree, b.fmt()),
    )


def _lt_reducible(b: MultiPoly, others: list[MultiPoly]) -> bool:
    ring: PqrCtx = b.ctx.ring
    cands = _eligible(others, b.lm)
    return bool(cands) and _term_reducible(b.lc, cands, ring.modulus)


def make_irredundant(basis: list[MultiPoly]) -> list[MultiPoly]:
    """Drop elements whose leading term the rest already covers.

    Candidates are tried most-complex-first so that of two elements with
    mutually reducible leading terms the simpler one survives.
    """
    out = [_unit_normalize(b) for b in _basis_sorted(basis) if not b.is_zero]
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1, -1, -1):
            b = out[i]
            rest = out[:i] + out[i + 1 :]
            if rest and _lt_reducible(b, rest):
                out.pop(i)
                changed = True
                break
    return out


def make_minimal(basis: list[MultiPoly]) -> list[MultiPoly]:
    """Irredundant basis whose leading coefficients attain the local gcds."""
    out = make_irredundant(basis)
    if not out:
        return out
    ctx = out[0].ctx
    ring: PqrCtx = ctx.ring
    replaced = []
    for f in out:
        cands = _eligible(out, f.lm)
        g, cofs = poly_multi_ext_gcd([b.lc.lift() for _, b in cands])
        d_st = poly_gcd(g, ring.modulus)
        f_st = poly_gcd(f.lc.rep, ring.modulus)
        if f_st == d_st:
            replaced.append(f)
            continue
        w = _coprime_adjust(g, d_st, ring.modulus)
        acc = MultiPoly.zero(ctx)
        scale = ring.elem(w).inverse()
        for (_, b), cof in zip(cands, cofs):
            factor = scale * ring.elem(cof)
            if factor.is_zero:
                continue
            acc = acc + b.mul_term(factor, mon_div(f.lm, b.lm))
        if acc.is_zero or acc.lm != f.lm:
            raise AssertionError("minimal-basis combination lost its leading term")
        replaced.append(_unit_normalize(acc))
    # drop later duplicates whose leading terms agree up to a unit
    seen = {}
    out2 = []
    for b in _basis_sorted(replaced):
        key = (b.lm, poly_gcd(b.lc.rep, ring.modulus).coeffs)
        if key in seen:
            continue
        seen[key] = True
        out2.append(b)
    return make_irredundant(out2)


def make_reduced(basis: list[MultiPoly]) -> list[MultiPoly]:
    """Fully tail-reduced minimal basis; canonical up to the constant scale."""
    out = make_minimal(basis)
    if len(out) <= 1:
        return out
    for _ in range(64):
        changed = False
        for i in range(len(out)):
            rest = out[:i] + out[i + 1 :]
            division = gcd_reduce(out[i], rest)
            r = _unit_normalize(division.remainder)
            if r.is_zero:
                raise AssertionError("reduced-basis element vanished")
            if r != out[i]:
                changed = True
                out[i] = r
        out = _basis_sorted(out)
        if not changed:
            return out
    raise AssertionError("tail reduction failed to stabilize")


# -- decomposition -----------------------------------------------------------------


@dataclass
class Component:
    kind: str                      # "compatible" or "modular"
    modulus: UniPoly               # monic, non-constant
    var_ctx: VarContext
    basis: list                    # reduced basis over var_ctx
    source_modulus: UniPoly | None = None   # composite divisor for modular parts
    eliminant_code: str = ""

    def project(self, f: MultiPoly) -> MultiPoly:
        return project_multipoly(f, self.var_ctx)


@dataclass
class TrivialComponent:
    source_modulus: UniPoly
    eliminant_code: str = "1"


@dataclass
class Decomposition:
    eliminant: UniPoly
    components: list = dc_field(default_factory=list)
    trivial: list = dc_field(default_factory=list)
    inconsistent: bool = False
    base_ctx: VarContext | None = None
    pseudo: PseudoOutcome | None = None
    split: CompatSplit | None = None


def assemble(
    pseudo: PseudoOutcome,
    split: CompatSplit,
    propers: dict,
    base_ctx: VarContext,
) -> Decomposition:
    """Combine the pseudo run, the split and the modular runs.

    `propers` maps each composite divisor (as produced by the split) to its
    modular outcome.  Component bases are pushed through the normalization
    ladder so reduced, canonical bases are what membership uses and reports
    show.
    """
    field = base_ctx.field
    chi = split.compatible_part.monic()
    components: list[Component] = []
    trivial: list[TrivialComponent] = []
    if not split.compatible_part.is_constant:
        ctx_d = residue_context(base_ctx, split.compatible_part)
        basis = [project_multipoly(b, ctx_d, keep_lifts=True) for b in pseudo.basis]
        basis = [b for b in basis if not b.is_zero]
        if any(b.is_coeff for b in basis):
            raise AssertionError("pseudo-basis element projected to a nonzero residue")
        components.append(
            Component(
                kind="compatible",
                modulus=split.compatible_part,
                var_ctx=ctx_d,
                basis=make_reduced(basis),
            )
        )
    for q in split.composite_divisors():
        if q not in propers:
            raise MissingComponentError(f"no modular run for {q.fmt()}")
        outcome: ProperOutcome = propers[q]
        if outcome.inconsistent:
            trivial.append(TrivialComponent(source_modulus=q))
            continue
        delta = q if outcome.eliminant is None else outcome.eliminant
        chi = chi * delta
        ctx_delta = residue_context(base_ctx, delta)
        basis = []
        for b in outcome.basis:
            moved = project_multipoly(b, ctx_delta, keep_lifts=True)
            if moved.is_zero:
                continue
            if moved.is_coeff:
                raise AssertionError("modular basis element projected to a nonzero residue")
            basis.append(moved)
        components.append(
            Component(
                kind="modular",
                modulus=delta,
                var_ctx=ctx_delta,
                basis=make_reduced(basis),
                source_modulus=q,
                eliminant_code=outcome.eliminant_code,
            )
        )
    return Decomposition(
        eliminant=chi.monic(),
        components=components,
        trivial=trivial,
        inconsistent=pseudo.inconsistent,
        base_ctx=base_ctx,
        pseudo=pseudo,
        split=split,
    )


# -- membership and normal forms -----------------------------------------------------


def component_remainder(f: MultiPoly, comp: Component) -> MultiPoly:
    """Unit-free gcd-reduction remainder of f in the component's ring."""
    division = gcd_reduce(comp.project(f), comp.basis)
    inv = division.multiplier.inverse()
    return division.remainder.scale(inv)


def is_member(f: MultiPoly, dec: Decomposition) -> bool:
    """Membership in the original ideal, component by component."""
    if dec.inconsistent:
        return True
    return all(component_remainder(f, comp).is_zero for comp in dec.components)


def _crt_data(dec: Decomposition):
    moduli = [comp.modulus for comp in dec.components]
    total = dec.eliminant
    combos = []
    for m in moduli:
        rest = exact_div(total, m)
        _, u, _ = poly_ext_gcd(rest % m, m)
        combos.append((rest * u) % total)
    return total, combos


def normal_form(f: MultiPoly, dec: Decomposition):
    """Per-component remainders and their CRT recombination mod the eliminant.

    Returns (combined, remainders); the combined representative satisfies
    normal_form(f - combined) == 0 and is a fixpoint of normal_form itself.
    """
    if dec.base_ctx is None:
        raise ValueError("decomposition lacks its base context")
    remainders = [component_remainder(f, comp) for comp in dec.components]
    total, combos = _crt_data(dec)
    mons = sorted(
        {m for r in remainders for m, _ in r.terms},
        key=dec.base_ctx.order.key,
        reverse=True,
    )
    out = {}
    for mon in mons:
        acc = UniPoly.zero(dec.base_ctx.field)
        for r, combo in zip(remainders, combos):
            c = r.coeff_at(mon)
            if c.is_zero:
                continue
            acc = (acc + c.rep * combo) % total
        out[mon] = acc
    combined = MultiPoly(dec.base_ctx, out)
    return combined, remainders


def lift_component_basis(comp: Component, base_ctx: VarContext, pseudo_basis=None):
    """Generators of (ideal + modulus) up in the polynomial ring.

    Default form lifts the component's reduced basis; passing the pseudo
    basis swaps in its elements instead, which span the same ideal alongside
    the modulus.
    """
    mod_poly = MultiPoly.from_coeff(base_ctx, comp.modulus)
    if pseudo_basis is not None:
        return list(pseudo_basis) + [mod_poly]
    return [lift_multipoly(b, base_ctx) for b in comp.basis] + [mod_poly]
