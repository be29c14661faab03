"""Pseudo-division over K[x1] and the pseudo-eliminant computation.

Division here never inverts leading coefficients: a term with coefficient c
is cleared against a divisor with leading coefficient l by scaling the whole
dividend with the interim multiplier lcm(c, l)/c.  The accumulated multiplier
stays a univariate polynomial, so no rational-function coefficients (and none
of their size explosion) ever appear.

The eliminant search processes S-polynomials smallest first, prunes pairs
with coprime leading monomials or with a usable triangular identity, and
collects every non-constant multiplier it uses; those multipliers are what
later decides which factors of the result are trustworthy.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd

from .fields import RationalField
from .multipoly import (
    MultiPoly,
    VarContext,
    mon_coprime,
    mon_div,
    mon_divides,
    mon_lcm,
)
from .unipoly import UniPoly, exact_div, poly_gcd, poly_lcm, squarefree_part


class NotZeroDimensionalError(ValueError):
    """No univariate combination was found; the ideal cannot be zero-dimensional."""


class InvalidSPolyInput(ValueError):
    pass


DEBUG_ENV = "ELIMINANT_DEBUG_CHECKS"


def debug_checks_enabled() -> bool:
    return os.environ.get(DEBUG_ENV, "") not in ("", "0")


@dataclass(frozen=True)
class StrategyConfig:
    coprime_skip: bool = True
    triangular_skip: bool = True
    chi_delta: bool = True
    base_change: bool = True
    debug_checks: bool = False

    @classmethod
    def from_toggles(cls, toggles: str) -> "StrategyConfig":
        kwargs = {}
        mapping = {
            "coprime-skip": "coprime_skip",
            "triangular-skip": "triangular_skip",
            "chi-delta": "chi_delta",
            "base-change": "base_change",
        }
        for raw in toggles.split(","):
            name = raw.strip()
            if not name:
                continue
            enable = True
            if name.startswith("no-"):
                enable = False
                name = name[3:]
            if name not in mapping:
                raise ValueError(f"unknown strategy toggle {raw!r}")
            kwargs[mapping[name]] = enable
        return cls(**kwargs, debug_checks=debug_checks_enabled())


# -- normalization ------------------------------------------------------------


def normalize_content(f: MultiPoly) -> MultiPoly:
    """Scale by a nonzero constant into the canonical printable form.

    Over Q: integer coefficients with trivial common content and a positive
    leading integer of the leading coefficient.  Over GF(p): leading
    coefficient of the leading coefficient normalized to 1.
    """
    if f.is_zero:
        return f
    field = f.ctx.field
    if isinstance(field, RationalField):
        num_gcd, den_lcm = 0, 1
        for _, c in f.terms:
            for a in c.coeffs:
                num_gcd = int_gcd(num_gcd, abs(a.numerator))
                den_lcm = den_lcm * a.denominator // int_gcd(den_lcm, a.denominator)
        scale = Fraction(den_lcm, num_gcd)
        if f.lc.lc * scale < 0:
            scale = -scale
        return f.scale(UniPoly.constant(field, scale))
    inv = field.inv(f.lc.lc)
    return f.scale(UniPoly.constant(field, inv))


# -- S-polynomials over the PID ----------------------------------------------


def spoly(f: MultiPoly, g) -> MultiPoly:
    """S-polynomial of f and g, where g is a MultiPoly or a UniPoly.

    Both leading terms are lifted to their least common multiple using
    univariate lcms, so the multipliers stay in K[x1].
    """
    if f.is_zero or f.is_coeff:
        raise InvalidSPolyInput("first operand must have tail variables")
    if isinstance(g, UniPoly):
        if g.is_zero:
            raise InvalidSPolyInput("zero operand")
        m = poly_lcm(f.lc, g)
        return f.scale(exact_div(m, f.lc)) - MultiPoly.term(f.ctx, m, f.lm)
    if g.is_zero:
        raise InvalidSPolyInput("zero operand")
    if g.is_coeff:
        return spoly(f, g.as_coeff())
    m = poly_lcm(f.lc, g.lc)
    gamma = mon_lcm(f.lm, g.lm)
    left = f.mul_term(exact_div(m, f.lc), mon_div(gamma, f.lm))
    right = g.mul_term(exact_div(m, g.lc), mon_div(gamma, g.lm))
    return left - right


def coprime_multiplier(f: MultiPoly, g: MultiPoly) -> UniPoly | None:
    """gcd(lc f, lc g) when the leading monomials are coprime, else None.

    When defined, d*S(f,g) = (f - lt f)*g - (g - lt g)*f, so S(f,g) reduces
    to zero by {f, g} with multiplier d and can be skipped.
    """
    if f.is_coeff or g.is_coeff:
        raise InvalidSPolyInput("operands must have tail variables")
    if not mon_coprime(f.lm, g.lm):
        return None
    return poly_gcd(f.lc, g.lc)


def triangular_multiplier(f: MultiPoly, g: MultiPoly, h: MultiPoly) -> UniPoly | None:
    """Multiplier of the triangular identity rewriting S(f,g) through h."""
    gamma = mon_lcm(f.lm, g.lm)
    if not mon_divides(h.lm, gamma):
        return None
    d = poly_gcd(poly_lcm(f.lc, g.lc), h.lc)
    return exact_div(h.lc, d)


def check_triangular_identity(f: MultiPoly, g: MultiPoly, h: MultiPoly) -> bool:
    """Expand the triangular identity for S(f,g) through h and verify it."""
    lam = triangular_multiplier(f, g, h)
    if lam is None:
        return False

    def lcm_term(a, b):
        return poly_lcm(a.lc, b.lc), mon_lcm(a.lm, b.lm)

    m_fg, g_fg = lcm_term(f, g)
    m_fh, g_fh = lcm_term(f, h)
    m_hg, g_hg = lcm_term(h, g)
    lhs = spoly(f, g).scale(lam)
    c1 = exact_div(lam * m_fg, m_fh)
    c2 = exact_div(lam * m_fg, m_hg)
    rhs = spoly(f, h).mul_term(c1, mon_div(g_fg, g_fh)) - spoly(g, h).mul_term(
        c2, mon_div(g_fg, g_hg)
    )
    return lhs == rhs


# -- pseudo-division -----------------------------------------------------------


@dataclass
class PseudoDivision:
    multiplier: UniPoly
    quotients: list
    remainder: MultiPoly


def pseudo_divide(f: MultiPoly, divisors: list[MultiPoly]) -> PseudoDivision:
    """Divide f by the list, scaling f as needed so every step stays in K[x1].

    Divisor preference follows list order, so callers pass divisors sorted by
    increasing leading term.  The result satisfies

        multiplier * f == sum(quotients[i] * divisors[i]) + remainder

    with the remainder's support disjoint from the leading-monomial ideal of
    the divisors.
    """
    ctx = f.ctx
    for b in divisors:
        if b.is_zero or b.is_coeff:
            raise InvalidSPolyInput("divisors must have tail variables")
    lam = UniPoly.one(ctx.field)
    quotients = [MultiPoly.zero(ctx) for _ in divisors]
    h = f
    while True:
        hit = None
        for mon, c in h.terms:
            for bi, b in enumerate(divisors):
                if mon_divides(b.lm, mon):
                    hit = (mon, c, bi, b)
                    break
            if hit:
                break
        if hit is None:
            break
        mon, c, bi, b = hit
        m = poly_lcm(c, b.lc)
        mu = exact_div(m, c)
        factor = exact_div(m, b.lc)
        shift = mon_div(mon, b.lm)
        if not mu.is_one:
            lam = lam * mu
            h = h.scale(mu)
            quotients = [q.scale(mu) for q in quotients]
        h = h - b.mul_term(factor, shift)
        quotients[bi] = quotients[bi] + MultiPoly.term(ctx, factor, shift)
    return PseudoDivision(lam, quotients, h)


def pseudo_reduced(f: MultiPoly, divisors: list[MultiPoly]) -> bool:
    return all(
        not mon_divides(b.lm, mon) for mon, _ in f.terms for b in divisors
    )


# -- the eliminant engine -------------------------------------------------------


@dataclass
class PseudoOutcome:
    eliminant: UniPoly              # monic; constant 1 means the ideal is trivial
    basis: list                     # pseudo-basis, all with tail variables
    multipliers: list               # non-constant reduction multipliers, monic
    lc_gcds: list                   # gcd(lc b, eliminant) sweep, monic, non-constant
    inconsistent: bool = False

    @property
    def screen_multipliers(self) -> list:
        """Multipliers used to screen eliminant factors for authenticity."""
        merged = {p for p in self.multipliers}
        merged.update(self.lc_gcds)
        return sorted(merged, key=_poly_sort_key)


def _poly_sort_key(p: UniPoly):
    return (p.degree, tuple(str(c) for c in p.coeffs))


def _basis_sort_key(entry):
    slot, poly = entry
    return (poly.ctx.order.key(poly.lm), poly.lc.degree, slot)


class _PseudoEngine:
    def __init__(self, ctx: VarContext, strategy: StrategyConfig):
        self.ctx = ctx
        self.strategy = strategy
        self.arena: list[MultiPoly] = []
        self.alive: list[int] = []
        self.f0 = UniPoly.zero(ctx.field)
        self.multipliers: dict = {}
        self.queue: list = []   # (lcm key, seq, spoly, pair)
        self.seq = 0
        self.used_triplets: set = set()
        self.decided_pairs: set = set()
        self.inconsistent = False

    # ordering helpers

    def listed(self) -> list[tuple[int, MultiPoly]]:
        entries = [(i, self.arena[i]) for i in self.alive]
        entries.sort(key=_basis_sort_key)
        return entries

    def record_multiplier(self, lam: UniPoly):
        if lam.is_constant:
            return
        if self.strategy.chi_delta and not self.f0.is_zero:
            if poly_gcd(lam, self.f0).is_constant:
                return
        self.multipliers[lam.monic()] = None

    def fold_univariate(self, r: UniPoly) -> bool:
        """Account for a univariate member; returns False on a unit (trivial ideal)."""
        if r.is_constant:
            self.inconsistent = True
            return False
        if self.f0.is_zero:
            self.f0 = r.monic()
        else:
            self.f0 = poly_gcd(self.f0, r)
            if self.f0.is_constant:
                self.inconsistent = True
                return False
        return True

    def add_element(self, f: MultiPoly, check_growth: bool = False) -> int:
        slot = len(self.arena)
        if check_growth and self.strategy.debug_checks:
            others = [self.arena[i] for i in self.alive]
            if not pseudo_reduced(f, others):
                raise AssertionError("inserted element not reduced: lt ideal did not grow")
        self.arena.append(f)
        self.alive.append(slot)
        return slot

    # pair decisions

    def pair_key(self, i: int, j: int):
        lcm = mon_lcm(self.arena[i].lm, self.arena[j].lm)
        return self.ctx.order.key(lcm)

    def decide_batch(self, pairs: list[tuple[int, int]]):
        for i, j in sorted(pairs, key=lambda p: (self.pair_key(*p), p)):
            self.decide_pair(i, j)
            self.decided_pairs.add(frozenset((i, j)))

    def decide_pair(self, i: int, j: int):
        f, g = self.arena[i], self.arena[j]
        if self.strategy.coprime_skip:
            d = coprime_multiplier(f, g)
            if d is not None:
                self.record_multiplier(d)
                return
        if self.strategy.triangular_skip and self._try_triangular(i, j):
            return
        s = spoly(f, g)
        if s.is_zero:
            return
        self.queue.append((self.pair_key(i, j), self.seq, s))
        self.seq += 1

    def _triangular_candidates(self, i: int, j: int):
        # a pair may be excused through h only when both of its companion
        # pairs were already decided: the rewrite chain then points strictly
        # backwards and can never lose an S-polynomial in a cycle
        f, g = self.arena[i], self.arena[j]
        gamma = mon_lcm(f.lm, g.lm)
        out = []
        for pos, (k, h) in enumerate(self.listed()):
            if k in (i, j):
                continue
            if frozenset((i, j, k)) in self.used_triplets:
                continue
            if (
                frozenset((i, k)) not in self.decided_pairs
                or frozenset((j, k)) not in self.decided_pairs
            ):
                continue
            if not mon_divides(h.lm, gamma):
                continue
            lam = triangular_multiplier(f, g, h)
            out.append((squarefree_part(lam).degree, pos, k, lam))
        out.sort(key=lambda t: (t[0], t[1]))
        return out

    def _try_triangular(self, i: int, j: int) -> bool:
        candidates = self._triangular_candidates(i, j)
        if not candidates:
            return False
        _, _, k, lam = candidates[0]
        self.used_triplets.add(frozenset((i, j, k)))
        if self.strategy.debug_checks:
            if not check_triangular_identity(self.arena[i], self.arena[j], self.arena[k]):
                raise AssertionError("triangular identity failed to verify")
        self.record_multiplier(lam)
        return True

    # the main loop

    def run(self, generators: list[MultiPoly]) -> PseudoOutcome:
        for gen in generators:
            if gen.is_zero:
                continue
            if gen.is_coeff:
                if not self.fold_univariate(gen.as_coeff()):
                    return self._trivial_outcome()
            else:
                self.add_element(normalize_content(gen))
        ids = list(self.alive)
        self.decide_batch([(i, j) for a, i in enumerate(ids) for j in ids[a + 1 :]])
        while self.queue:
            self.queue.sort(key=lambda t: (t[0], t[1]))
            _, _, s = self.queue.pop(0)
            div = self.listed()
            division = pseudo_divide(s, [p for _, p in div])
            self.record_multiplier(division.multiplier)
            r = division.remainder
            if r.is_zero:
                continue
            if r.is_coeff:
                if not self.fold_univariate(r.as_coeff()):
                    return self._trivial_outcome()
                continue
            r = normalize_content(r)
            slot = self.add_element(r, check_growth=True)
            self.decide_batch([(i, slot) for i in self.alive if i != slot])
        if self.f0.is_zero:
            raise NotZeroDimensionalError(
                "no univariate member found; ideal is not zero-dimensional over "
                f"{self.ctx.x1}"
            )
        chi = self.f0.monic()
        basis = [p for _, p in self.listed()]
        lc_gcds = {}
        for b in basis:
            d = poly_gcd(b.lc, chi)
            if not d.is_constant:
                lc_gcds[d.monic()] = None
        return PseudoOutcome(
            eliminant=chi,
            basis=basis,
            multipliers=sorted(self.multipliers, key=_poly_sort_key),
            lc_gcds=sorted(lc_gcds, key=_poly_sort_key),
        )

    def _trivial_outcome(self) -> PseudoOutcome:
        return PseudoOutcome(
            eliminant=UniPoly.one(self.ctx.field),
            basis=[],
            multipliers=sorted(self.multipliers, key=_poly_sort_key),
            lc_gcds=[],
            inconsistent=True,
        )


def pseudo_eliminant(
    generators: list[MultiPoly], strategy: StrategyConfig | None = None
) -> PseudoOutcome:
    """Run the eliminant search on generators over a base context."""
    if not generators:
        raise ValueError("empty generator list")
    ctx = generators[0].ctx
    for g in generators:
        if g.ctx != ctx:
            raise ValueError("generators from mixed contexts")
    return _PseudoEngine(ctx, strategy or StrategyConfig()).run(generators)
