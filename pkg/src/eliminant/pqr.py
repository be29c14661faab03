"""Residue rings K[x1]/(q) with zero divisors, and the modular eliminant search.

Residues are kept as polynomials of degree below deg q with arithmetic
reduced mod q.  Units are exactly the residues coprime to q; every nonzero
residue factors as unit * standard factor, where the standard factor is the
monic gcd of its lift with q.  Division in the tail variables is restricted
to steps whose interim multiplier is a unit (term divisibility by the whole
leading term), so remainders stay meaningful despite zero divisors.

The eliminant search mirrors the one over K[x1]: S-polynomials are formed
with multipliers computed on lifts (never zero), pairs are pruned when the
skip multiplier is a unit, and univariate remainders shrink the modulus.  By
default the ring itself is rebased to the shrunken modulus (all carried data
re-projected), which both matches the mathematics and keeps coefficients
small; the final answer is read back in the ring we started from.
"""

from __future__ import annotations

from dataclasses import dataclass

from .multipoly import (
    MultiPoly,
    VarContext,
    mon_coprime,
    mon_div,
    mon_divides,
    mon_lcm,
)
from .pseudo import StrategyConfig
from .unipoly import UniPoly, exact_div, poly_gcd, poly_lcm, poly_multi_ext_gcd


class NotAUnitError(ValueError):
    pass


class ZeroElementError(ValueError):
    pass


class PqrCtx:
    """The ring of residues modulo a fixed monic non-constant q."""

    __slots__ = ("modulus",)

    def __init__(self, modulus: UniPoly):
        if modulus.is_constant:
            raise ValueError("modulus must be non-constant")
        if modulus.lc != modulus.field.one:
            modulus = modulus.monic()
        self.modulus = modulus

    @property
    def field(self):
        return self.modulus.field

    def elem(self, rep: UniPoly) -> "PqrElem":
        return PqrElem(self, rep % self.modulus)

    def zero_elem(self) -> "PqrElem":
        return PqrElem(self, UniPoly.zero(self.field))

    def one_elem(self) -> "PqrElem":
        return PqrElem(self, UniPoly.one(self.field))

    def __eq__(self, other) -> bool:
        return isinstance(other, PqrCtx) and other.modulus == self.modulus

    def __hash__(self) -> int:
        return hash(("PqrCtx", self.modulus))

    def __repr__(self) -> str:
        return f"PqrCtx({self.modulus.fmt()})"


class PqrElem:
    """A residue, stored by its canonical representative of degree < deg q.

    A residue may carry a preferred lift: a congruent polynomial with a
    simpler factored shape (typically the original coefficient it was
    projected from).  Multiplier and lcm computations work on lifts, so a
    good lift keeps skip decisions and reduction multipliers simple; it
    never affects equality, which is on canonical representatives only.
    """

    __slots__ = ("ctx", "rep", "pref")

    def __init__(self, ctx: PqrCtx, rep: UniPoly, pref: UniPoly | None = None):
        self.ctx = ctx
        self.rep = rep
        self.pref = pref

    def lift(self) -> UniPoly:
        return self.pref if self.pref is not None else self.rep

    def scale_scalar(self, k) -> "PqrElem":
        """Multiply by a field constant, keeping the preferred lift aligned."""
        c = UniPoly.constant(self.ctx.field, k)
        pref = self.pref * c if self.pref is not None else None
        return PqrElem(self.ctx, (self.rep * c) % self.ctx.modulus, pref)

    @property
    def is_zero(self) -> bool:
        return self.rep.is_zero

    def _check(self, other: "PqrElem"):
        if self.ctx != other.ctx:
            raise ValueError("mixed residue contexts")

    def __add__(self, other: "PqrElem") -> "PqrElem":
        self._check(other)
        return self.ctx.elem(self.rep + other.rep)

    def __sub__(self, other: "PqrElem") -> "PqrElem":
        self._check(other)
        return self.ctx.elem(self.rep - other.rep)

    def __mul__(self, other: "PqrElem") -> "PqrElem":
        self._check(other)
        return self.ctx.elem(self.rep * other.rep)

    def __neg__(self) -> "PqrElem":
        return PqrElem(self.ctx, -self.rep)

    def is_unit(self) -> bool:
        if self.rep.is_zero:
            return False
        return poly_gcd(self.rep, self.ctx.modulus).is_constant

    def inverse(self) -> "PqrElem":
        from .unipoly import poly_ext_gcd

        if self.rep.is_zero:
            raise NotAUnitError("zero has no inverse")
        d, u, _ = poly_ext_gcd(self.rep, self.ctx.modulus)
        if not d.is_constant:
            raise NotAUnitError(f"{self.rep.fmt()} shares {d.fmt()} with the modulus")
        return self.ctx.elem(u)

    def standard_factor(self) -> "PqrElem":
        """Monic divisor of q carrying this residue up to a unit."""
        if self.rep.is_zero:
            raise ZeroElementError("standard factor of zero")
        return self.ctx.elem(poly_gcd(self.rep, self.ctx.modulus))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PqrElem)
            and self.ctx == other.ctx
            and self.rep == other.rep
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.rep))

    def __bool__(self) -> bool:
        return not self.rep.is_zero

    def __repr__(self) -> str:
        return f"PqrElem({self.rep.fmt()} mod {self.ctx.modulus.fmt()})"


# -- gcd / lcm in the residue ring ---------------------------------------------


def pqr_gcd(a: PqrElem, b: PqrElem) -> PqrElem:
    if a.is_zero and b.is_zero:
        raise ZeroElementError("gcd(0, 0) in residue ring")
    if a.is_zero:
        return b.standard_factor()
    if b.is_zero:
        return a.standard_factor()
    return a.ctx.elem(poly_gcd(a.rep, b.rep))


def pqr_lcm(a: PqrElem, b: PqrElem) -> PqrElem:
    if a.is_zero or b.is_zero:
        raise ZeroElementError("lcm with zero in residue ring")
    return a.ctx.elem(poly_lcm(a.rep, b.rep))


def pqr_multi_ext_gcd(elems: list[PqrElem]) -> tuple[PqrElem, list[PqrElem]]:
    """gcd d of the family with cofactors: sum(c_i * elems[i]) == d."""
    if not elems or all(e.is_zero for e in elems):
        raise ZeroElementError("gcd of an all-zero family")
    ctx = elems[0].ctx
    d, coeffs = poly_multi_ext_gcd([e.rep for e in elems])
    return ctx.elem(d), [ctx.elem(c) for c in coeffs]


# -- projections ----------------------------------------------------------------


def residue_context(base: VarContext, modulus: UniPoly) -> VarContext:
    return base.with_ring(PqrCtx(modulus))


def project_multipoly(
    f: MultiPoly, target: VarContext, keep_lifts: bool = False
) -> MultiPoly:
    """Apply the coefficient-wise projection into a residue context.

    With keep_lifts, each source coefficient survives as the preferred lift
    of its image whenever the projection actually reduced it.
    """
    ring: PqrCtx = target.ring
    out = {}
    for mon, c in f.terms:
        src = c.lift() if isinstance(c, PqrElem) else c
        rep = src % ring.modulus
        pref = src if keep_lifts and src != rep else None
        out[mon] = PqrElem(ring, rep, pref)
    return MultiPoly(target, out)


def lift_multipoly(f: MultiPoly, base: VarContext) -> MultiPoly:
    """Coefficient-wise injection of the canonical representatives."""
    out = {}
    for mon, c in f.terms:
        out[mon] = c.rep if isinstance(c, PqrElem) else c
    return MultiPoly(base, out)


# -- S-polynomials over the residue ring ----------------------------------------


class ModulusOperand:
    """Marker selecting the S-polynomial against the ring modulus itself."""

    def __repr__(self) -> str:
        return "MODULUS"


MODULUS = ModulusOperand()


def spoly_q(f: MultiPoly, g) -> MultiPoly:
    """S-polynomial over the residue ring.

    g may be another polynomial with tail variables, a residue (univariate
    member), or MODULUS for the special pairs against the modulus; in the
    latter case the leading coefficient of f must be a non-unit.  Multipliers
    are computed on lifts, so they are nonzero even when the lcm of the
    leading coefficients vanishes in the ring.
    """
    from .pseudo import InvalidSPolyInput

    if f.is_zero or f.is_coeff:
        raise InvalidSPolyInput("first operand must have tail variables")
    ctx = f.ctx
    ring: PqrCtx = ctx.ring
    lf = f.lc.lift()
    if isinstance(g, ModulusOperand):
        lc = f.lc
        if lc.is_unit():
            raise InvalidSPolyInput("leading coefficient is a unit")
        n = ring.elem(exact_div(ring.modulus, poly_gcd(lf, ring.modulus)))
        return f.tail().scale(n)
    if isinstance(g, PqrElem):
        if g.is_zero:
            raise InvalidSPolyInput("zero operand")
        if g.is_unit():
            raise InvalidSPolyInput("unit operand")
        lg = g.lift()
        m_f = ring.elem(exact_div(poly_lcm(lf, lg), lf))
        return f.tail().scale(m_f)
    if g.is_zero:
        raise InvalidSPolyInput("zero operand")
    if g.is_coeff:
        return spoly_q(f, g.as_coeff())
    lg = g.lc.lift()
    m = poly_lcm(lf, lg)
    m_f = ring.elem(exact_div(m, lf))
    m_g = ring.elem(exact_div(m, lg))
    gamma = mon_lcm(f.lm, g.lm)
    left = f.mul_term(m_f, mon_div(gamma, f.lm))
    right = g.mul_term(m_g, mon_div(gamma, g.lm))
    return left - right


def coprime_skip_multiplier(f: MultiPoly, g: MultiPoly) -> PqrElem | None:
    """gcd of the leading coefficients when leading monomials are coprime."""
    if not mon_coprime(f.lm, g.lm):
        return None
    return pqr_gcd(f.lc, g.lc)


def triangular_multiplier_q(f: MultiPoly, g: MultiPoly, h: MultiPoly) -> PqrElem | None:
    gamma = mon_lcm(f.lm, g.lm)
    if not mon_divides(h.lm, gamma):
        return None
    ring: PqrCtx = f.ctx.ring
    lh = h.lc.lift()
    d = poly_gcd(poly_lcm(f.lc.lift(), g.lc.lift()), lh)
    return ring.elem(exact_div(lh, d))


def check_triangular_identity_q(f: MultiPoly, g: MultiPoly, h: MultiPoly) -> bool:
    """Expand the residue-ring triangular identity and verify it."""
    lam = triangular_multiplier_q(f, g, h)
    if lam is None:
        return False
    ring: PqrCtx = f.ctx.ring

    def cm(b, a):
        # lcm multiplier of the pair (a paired against b): coefficient part on
        # lifts, monomial part exact
        la, lb = a.lc.lift(), b.lc.lift()
        coeff = exact_div(poly_lcm(la, lb), la)
        mono = mon_div(mon_lcm(a.lm, b.lm), a.lm)
        return coeff, mono

    cf_g, mf_g = cm(g, f)   # multiplier on f inside S(f,g)
    cf_h, mf_h = cm(h, f)   # multiplier on f inside S(f,h)
    cg_f, mg_f = cm(f, g)
    cg_h, mg_h = cm(h, g)
    lam_lift = lam.lift()
    c1 = exact_div(lam_lift * cf_g, cf_h)
    c2 = exact_div(lam_lift * cg_f, cg_h)
    lhs = spoly_q(f, g).scale(lam)
    rhs = spoly_q(f, h).mul_term(ring.elem(c1), mon_div(mf_g, mf_h)) - spoly_q(
        g, h
    ).mul_term(ring.elem(c2), mon_div(mg_f, mg_h))
    return lhs == rhs


# -- proper division --------------------------------------------------------------


@dataclass
class ProperDivision:
    multiplier: PqrElem            # always a unit
    quotients: list
    remainder: MultiPoly


def proper_divide(f: MultiPoly, divisors: list[MultiPoly]) -> ProperDivision:
    """Divide f in the residue ring, reducing only unit-multiplier steps.

    A term c*m reduces against a divisor b when lm(b) divides m and the
    interim multiplier lcm(lift c, lift lc b)/lift c projects to a unit,
    which is exactly divisibility of the term by the whole leading term of b.
    """
    from .pseudo import InvalidSPolyInput

    ctx = f.ctx
    ring: PqrCtx = ctx.ring
    for b in divisors:
        if b.is_zero or b.is_coeff:
            raise InvalidSPolyInput("divisors must have tail variables")
    lam = ring.one_elem()
    quotients = [MultiPoly.zero(ctx) for _ in divisors]
    h = f
    while True:
        hit = None
        for mon, c in h.terms:
            lc_lift = c.lift()
            for bi, b in enumerate(divisors):
                if not mon_divides(b.lm, mon):
                    continue
                lb = b.lc.lift()
                m = poly_lcm(lc_lift, lb)
                mu = ring.elem(exact_div(m, lc_lift))
                if not mu.is_unit():
                    continue
                hit = (mon, bi, b, mu, ring.elem(exact_div(m, lb)))
                break
            if hit:
                break
        if hit is None:
            break
        mon, bi, b, mu, factor = hit
        shift = mon_div(mon, b.lm)
        if not mu.rep.is_one:
            lam = lam * mu
            h = h.scale(mu)
            quotients = [q.scale(mu) for q in quotients]
        h = h - b.mul_term(factor, shift)
        quotients[bi] = quotients[bi] + MultiPoly.term(ctx, factor, shift)
    return ProperDivision(lam, quotients, h)


def properly_reduced(f: MultiPoly, divisors: list[MultiPoly]) -> bool:
    ring: PqrCtx = f.ctx.ring
    for mon, c in f.terms:
        lc_lift = c.lift()
        for b in divisors:
            if not mon_divides(b.lm, mon):
                continue
            mu = ring.elem(exact_div(poly_lcm(lc_lift, b.lc.lift()), lc_lift))
            if mu.is_unit():
                return False
    return True


# -- the modular eliminant engine ---------------------------------------------


@dataclass
class ProperOutcome:
    ctx: PqrCtx                    # ring the computation started in
    eliminant: UniPoly | None      # monic divisor of q; None encodes zero
    basis: list                    # proper basis over `basis_ctx`
    basis_var_ctx: VarContext      # residue context of the basis elements
    inconsistent: bool = False     # eliminant collapsed to a unit

    @property
    def eliminant_code(self) -> str:
        if self.inconsistent:
            return "1"
        if self.eliminant is None:
            return "0"
        return self.eliminant.fmt(self.basis_var_ctx.x1)


def _content_scalar(f: MultiPoly):
    """Scalar bringing the canonical lift of f into content-normal form."""
    from fractions import Fraction
    from math import gcd as int_gcd

    from .fields import RationalField

    field = f.ctx.field
    if isinstance(field, RationalField):
        num_gcd, den_lcm = 0, 1
        for _, c in f.terms:
            for a in c.rep.coeffs:
                num_gcd = int_gcd(num_gcd, abs(a.numerator))
                den_lcm = den_lcm * a.denominator // int_gcd(den_lcm, a.denominator)
        scale = Fraction(den_lcm, num_gcd)
        if f.lc.rep.lc * scale < 0:
            scale = -scale
        return scale
    return field.inv(f.lc.rep.lc)


def _unit_normalize(f: MultiPoly) -> MultiPoly:
    """Constant-scale normalization; preferred lifts follow the scaling."""
    if f.is_zero:
        return f
    k = _content_scalar(f)
    return MultiPoly(f.ctx, {m: c.scale_scalar(k) for m, c in f.terms})


class _ProperEngine:
    def __init__(self, var_ctx: VarContext, strategy: StrategyConfig):
        self.var_ctx = var_ctx
        self.ring: PqrCtx = var_ctx.ring
        self.strategy = strategy
        self.arena: list[MultiPoly | None] = []
        self.alive: list[int] = []
        self.queue: list = []       # (key, seq, spoly)
        self.seq = 0
        self.used_triplets: set = set()
        self.decided_pairs: set = set()
        self.e: UniPoly | None = None   # nonzero temporary eliminant (no base change)
        self.inconsistent = False
        self.behead_done: set = set()   # (slot, modulus/eliminant) pairs

    # ----- bookkeeping

    def listed(self) -> list[tuple[int, MultiPoly]]:
        entries = [(i, self.arena[i]) for i in self.alive]
        entries.sort(
            key=lambda e: (self.var_ctx.order.key(e[1].lm), e[1].lc.rep.degree, e[0])
        )
        return entries

    def pair_key(self, i: int, j: int):
        return self.var_ctx.order.key(mon_lcm(self.arena[i].lm, self.arena[j].lm))

    def add_element(self, f: MultiPoly) -> int:
        slot = len(self.arena)
        self.arena.append(f)
        self.alive.append(slot)
        return slot

    # ----- univariate members: shrink the modulus / rebase

    def fold_univariate(self, r: PqrElem) -> bool:
        """Fold a univariate ideal member into the eliminant state.

        Returns False when the ideal is revealed trivial.
        """
        if r.is_zero:
            return True
        g = poly_gcd(r.rep, self.ring.modulus)
        if g.is_constant:
            self.inconsistent = True
            return False
        if self.strategy.base_change:
            if g == self.ring.modulus:
                return True
            self._rebase(g)
            return True
        if self.e is None:
            self.e = g
        else:
            g2 = poly_gcd(g, self.e)
            if g2.is_constant:
                self.inconsistent = True
                return False
            self.e = g2
        return True

    def _rebase(self, new_modulus: UniPoly):
        """Continue over the smaller ring modulo new_modulus.

        The new modulus divides the old one, so canonical representatives
        and preferred lifts both stay congruent; everything carried by the
        run is re-projected in place.
        """
        new_ring = PqrCtx(new_modulus)
        new_ctx = self.var_ctx.with_ring(new_ring)

        def move(f: MultiPoly) -> MultiPoly:
            out = {}
            for mon, c in f.terms:
                out[mon] = PqrElem(new_ring, c.rep % new_modulus, c.pref)
            return MultiPoly(new_ctx, out)

        pending_univ: list[PqrElem] = []
        for slot in list(self.alive):
            moved = move(self.arena[slot])
            if moved.is_zero:
                self.alive.remove(slot)
                self.arena[slot] = None
            elif moved.is_coeff:
                self.alive.remove(slot)
                self.arena[slot] = None
                pending_univ.append(moved.as_coeff())
            else:
                self.arena[slot] = moved
        new_queue = []
        for key, seq, s in self.queue:
            moved = move(s)
            if moved.is_zero:
                continue
            if moved.is_coeff:
                pending_univ.append(moved.as_coeff())
                continue
            new_queue.append((key, seq, moved))
        self.var_ctx = new_ctx
        self.ring = new_ring
        self.queue = new_queue
        # behead bookkeeping refers to the old modulus; reset
        self.behead_done = set()
        for r in pending_univ:
            if not self.fold_univariate(r):
                return

    # ----- pair decisions

    def decide_batch(self, pairs: list[tuple[int, int]]):
        for i, j in sorted(pairs, key=lambda p: (self.pair_key(*p), p)):
            if self.inconsistent:
                return
            self.decide_pair(i, j)
            self.decided_pairs.add(frozenset((i, j)))

    def decide_pair(self, i: int, j: int):
        # a coprime pair is only skippable when the shared coefficient gcd is
        # a unit; otherwise a triangular identity may still excuse the pair
        f, g = self.arena[i], self.arena[j]
        if self.strategy.coprime_skip and mon_coprime(f.lm, g.lm):
            d = coprime_skip_multiplier(f, g)
            if d.is_unit():
                return
            if (
                self.strategy.chi_delta
                and not self.strategy.base_change
                and self.e is not None
                and poly_gcd(d.rep, self.e).is_constant
            ):
                return
        if self.strategy.triangular_skip and self._try_triangular(i, j):
            return
        s = spoly_q(f, g)
        if s.is_zero:
            return
        self.queue.append((self.pair_key(i, j), self.seq, s))
        self.seq += 1

    def _tri_complexity(self, lam: PqrElem):
        st = poly_gcd(lam.rep, self.ring.modulus)
        return (st.degree, lam.rep.degree - st.degree)

    def _triangular_candidates(self, i: int, j: int):
        # both companion pairs must already be decided so rewrite chains
        # always point backwards (see the polynomial-ring engine)
        f, g = self.arena[i], self.arena[j]
        gamma = mon_lcm(f.lm, g.lm)
        out = []
        for pos, (k, h) in enumerate(self.listed()):
            if k in (i, j) or frozenset((i, j, k)) in self.used_triplets:
                continue
            if (
                frozenset((i, k)) not in self.decided_pairs
                or frozenset((j, k)) not in self.decided_pairs
            ):
                continue
            if not mon_divides(h.lm, gamma):
                continue
            lam = triangular_multiplier_q(f, g, h)
            out.append((self._tri_complexity(lam), pos, k, lam))
        out.sort(key=lambda t: (t[0], t[1]))
        return out

    def _try_triangular(self, i: int, j: int) -> bool:
        for _, _, k, lam in self._triangular_candidates(i, j):
            skippable = lam.is_unit() or (
                self.strategy.chi_delta
                and not self.strategy.base_change
                and self.e is not None
                and poly_gcd(lam.rep, self.e).is_constant
            )
            if not skippable:
                continue
            self.used_triplets.add(frozenset((i, j, k)))
            if self.strategy.debug_checks:
                if not check_triangular_identity_q(
                    self.arena[i], self.arena[j], self.arena[k]
                ):
                    raise AssertionError(
                        "residue-ring triangular identity failed to verify"
                    )
            return True
        return False

    # ----- main loop

    def run(self, projected: list[MultiPoly]) -> ProperOutcome:
        start_ring = self.ring
        for f in projected:
            if self.inconsistent:
                break
            if f.ctx != self.var_ctx:
                # an earlier univariate member already shrank the modulus
                ring = self.ring
                f = MultiPoly(
                    self.var_ctx,
                    {m: PqrElem(ring, c.rep % ring.modulus, c.pref) for m, c in f.terms},
                )
            if f.is_zero:
                continue
            if f.is_coeff:
                if not self.fold_univariate(f.as_coeff()):
                    break
            else:
                self.add_element(_unit_normalize(f))
        if not self.inconsistent:
            ids = list(self.alive)
            self.decide_batch([(i, j) for a, i in enumerate(ids) for j in ids[a + 1 :]])
            self._drain()
            while not self.inconsistent:
                before = (self.ring.modulus, self.e, tuple(self.alive))
                self._behead_round()
                self._drain()
                if (self.ring.modulus, self.e, tuple(self.alive)) == before:
                    break
        return self._finalize(start_ring)

    def _drain(self):
        while self.queue and not self.inconsistent:
            self.queue.sort(key=lambda t: (t[0], t[1]))
            _, _, s = self.queue.pop(0)
            if s.ctx != self.var_ctx:
                # queued before a rebase that happened mid-drain
                ring = self.ring
                s = MultiPoly(
                    self.var_ctx,
                    {m: PqrElem(ring, c.rep % ring.modulus, c.pref) for m, c in s.terms},
                )
            if s.is_zero:
                continue
            if s.is_coeff:
                if not self.fold_univariate(s.as_coeff()):
                    return
                continue
            division = proper_divide(s, [p for _, p in self.listed()])
            r = division.remainder
            if r.is_zero:
                continue
            if r.is_coeff:
                if not self.fold_univariate(r.as_coeff()):
                    return
                continue
            slot = self.add_element(_unit_normalize(r))
            self.decide_batch([(i, slot) for i in self.alive if i != slot])

    def _behead_round(self):
        """Queue the special S-polynomials against the modulus or eliminant."""
        if self.strategy.base_change or self.e is None:
            marker = ("q", self.ring.modulus)
            for slot, f in self.listed():
                if f.lc.is_unit():
                    continue
                if (slot, marker) in self.behead_done:
                    continue
                self.behead_done.add((slot, marker))
                s = spoly_q(f, MODULUS)
                if not s.is_zero:
                    self.queue.append((self.var_ctx.order.key(f.lm), self.seq, s))
                    self.seq += 1
        else:
            e_elem = self.ring.elem(self.e)
            marker = ("e", self.e)
            for slot, f in self.listed():
                if f.lc.is_unit():
                    continue
                d = pqr_gcd(f.lc, e_elem)
                if d.is_unit():
                    continue
                if (slot, marker) in self.behead_done:
                    continue
                self.behead_done.add((slot, marker))
                s = spoly_q(f, e_elem)
                if not s.is_zero:
                    self.queue.append((self.var_ctx.order.key(f.lm), self.seq, s))
                    self.seq += 1

    def _finalize(self, start_ring: PqrCtx) -> ProperOutcome:
        basis = [p for _, p in self.listed()]
        if self.inconsistent:
            return ProperOutcome(
                ctx=start_ring,
                eliminant=UniPoly.one(start_ring.field),
                basis=[],
                basis_var_ctx=self.var_ctx,
                inconsistent=True,
            )
        if self.strategy.base_change:
            final_modulus = self.ring.modulus
            e = None if final_modulus == start_ring.modulus else final_modulus
        else:
            e = self.e
        return ProperOutcome(
            ctx=start_ring,
            eliminant=e,
            basis=basis,
            basis_var_ctx=self.var_ctx,
        )


def proper_eliminant(
    generators: list[MultiPoly],
    var_ctx: VarContext,
    strategy: StrategyConfig | None = None,
) -> ProperOutcome:
    """Modular eliminant/basis computation over a residue context.

    `generators` are polynomials over the base context (coefficients in
    K[x1]); they are projected coefficient-wise before the run.
    """
    strategy = strategy or StrategyConfig()
    projected = [project_multipoly(g, var_ctx, keep_lifts=True) for g in generators]
    return _ProperEngine(var_ctx, strategy).run(projected)
