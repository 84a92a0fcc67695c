"""Twistings of a right H-module coalgebra.

A right twisting is a map τ: C -> H⊗C, written c ↦ c₋₁⊗c₀; a left twisting
is a map λ: C -> C⊗H, written c ↦ c₀⊗c₁.  Right twistings form a monoid
under ∗ with unit σ(c) = 1⊗c, left twistings under × with unit σ′(c) = c⊗1.
"""

from __future__ import annotations

from .errors import InverseMissing, NotATwisting, NotInvertible, SpaceMismatch
from .hopf import Coalgebra
from .linmap import (LinMap, chain, ground, identity, inverse, is_bijective, swap_map,
                     tensor_space)
from .modcoalg import ModuleCoalgebra, RelHopfModule, check_module_coalgebra, check_rel_hopf_module
from .report import CheckReport
from .wiring import Wiring

UNKNOWN, PASS, FAIL = "unknown", "pass", "fail"


class _Twist:
    """Shared plumbing: lazily computed check report and tri-state flags."""

    _flag_checks: dict[str, tuple[str, ...]] = {}

    def __init__(self, mc: ModuleCoalgebra, map: LinMap, name: str, legs):
        C = mc.space
        expected = legs(C, mc.hopf.space)
        if map.dom != C or map.cod != tensor_space(*expected):
            raise SpaceMismatch(f"{name} must be a map {C.name} -> "
                                f"{'⊗'.join(s.name for s in expected)}")
        self.mc = mc
        self.map = map.with_legs(*expected).named(name)
        self.name = name
        self._report: CheckReport | None = None
        self.inverse = None

    @property
    def report(self) -> CheckReport:
        if self._report is None:
            self._report = self._check()
        return self._report

    def flag(self, key: str) -> str:
        if self._report is None:
            return UNKNOWN
        names = self._flag_checks[key]
        return PASS if all(self._report.get(n).passed for n in names) else FAIL

    @property
    def flags(self) -> dict[str, str]:
        return {k: self.flag(k) for k in self._flag_checks}

    @property
    def is_twisting(self) -> bool:
        return self.report.passed

    def require(self):
        if not self.is_twisting:
            bad = ", ".join(r.name for r in self.report.failures())
            raise NotATwisting(f"{self.name} fails: {bad}")
        return self

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.map == other.map

    __hash__ = None

    def __repr__(self):
        return f"{type(self).__name__}({self.name} on {self.mc.name})"


class RightTwist(_Twist):
    _flag_checks = {
        "normality": ("normality: (1⊗ε)τ = ε1", "normality: (ε⊗1)τ = id"),
        "eq6": ("compatibility with the action",),
        "eq7": ("twisted coassociativity",),
    }

    def __init__(self, mc: ModuleCoalgebra, tau: LinMap, name: str = "tau"):
        super().__init__(mc, tau, name, lambda C, H: (H, C))

    def _check(self) -> CheckReport:
        return check_right_twisting(self)

    def with_inverse(self, inv: RightTwist) -> RightTwist:
        self.inverse = inv
        return self


class LeftTwist(_Twist):
    _flag_checks = {
        "normality": ("normality: (1⊗ε)λ = id", "normality: (ε⊗1)λ = ε1"),
        "eq8": ("compatibility with the action",),
        "eq9": ("twisted coassociativity",),
    }

    def __init__(self, mc: ModuleCoalgebra, lam: LinMap, name: str = "lambda"):
        super().__init__(mc, lam, name, lambda C, H: (C, H))

    def _check(self) -> CheckReport:
        return check_left_twisting(self)

    def with_inverse(self, inv: LeftTwist) -> LeftTwist:
        self.inverse = inv
        return self


# ---------------------------------------------------------------- units and products


def sigma(mc: ModuleCoalgebra) -> RightTwist:
    C = mc.space
    m = Wiring(ground(C.field), C).apply(mc.hopf.unit, 0).map()
    return RightTwist(mc, m, "sigma")


def sigma_prime(mc: ModuleCoalgebra) -> LeftTwist:
    C = mc.space
    m = Wiring(C, ground(C.field)).apply(mc.hopf.unit, 1).map()
    return LeftTwist(mc, m, "sigma'")


def _same_context(a: _Twist, b: _Twist):
    if a.mc.space != b.mc.space or a.mc.hopf.space != b.mc.hopf.space:
        raise SpaceMismatch(f"{a.name} and {b.name} live over different module coalgebras")


def star_map(mc: ModuleCoalgebra, t1: LinMap, t2: LinMap) -> LinMap:
    """t1 ∗ t2 = (m_H⊗id)(id⊗t2)t1."""
    C = mc.space
    return (Wiring(C).apply(t1.with_legs(mc.hopf.space, C), 0)
            .apply(t2.with_legs(mc.hopf.space, C), 1).apply(mc.hopf.mult, 0, 1).map())


def star_product(t1: RightTwist, t2: RightTwist) -> RightTwist:
    _same_context(t1, t2)
    return RightTwist(t1.mc, star_map(t1.mc, t1.map, t2.map), f"({t1.name}*{t2.name})")


def _T(mc: ModuleCoalgebra, f: LinMap, to_left: bool) -> LinMap:
    C, H = mc.space, mc.hopf.space
    if to_left:
        return chain(swap_map(H, C), f.with_legs(H, C)).with_legs(C, H)
    return chain(swap_map(C, H), f.with_legs(C, H)).with_legs(H, C)


def times_map(mc: ModuleCoalgebra, l1: LinMap, l2: LinMap) -> LinMap:
    """l1 × l2 = T∘(T∘l2 ∗ T∘l1)."""
    return _T(mc, star_map(mc, _T(mc, l2, False), _T(mc, l1, False)), True)


def times_product(l1: LeftTwist, l2: LeftTwist) -> LeftTwist:
    _same_context(l1, l2)
    return LeftTwist(l1.mc, times_map(l1.mc, l1.map, l2.map), f"({l1.name}x{l2.name})")


def f_tau(mc: ModuleCoalgebra, tau: LinMap) -> LinMap:
    """Endomorphism h⊗c ↦ hτ(c) of H⊗C; turns ∗ into reversed composition."""
    H, C = mc.hopf.space, mc.space
    return (Wiring(H, C).apply(tau.with_legs(H, C), 1).apply(mc.hopf.mult, 0, 1)
            .map().with_legs(H, C))


# ---------------------------------------------------------------- right twisting checks


def delta_tau(mc: ModuleCoalgebra, tau: LinMap) -> LinMap:
    """Δ_τ(c) = c₁·c₂₋₁ ⊗ c₂₀."""
    C = mc.space
    return (Wiring(C).apply(mc.delta, 0).apply(tau.with_legs(mc.hopf.space, C), 1)
            .apply(mc.act, 0, 1).map().with_legs(C, C))


def check_right_twisting(t: RightTwist) -> CheckReport:
    mc, tau = t.mc, t.map
    C, H, h = mc.space, mc.hopf.space, mc.hopf
    rep = CheckReport(f"right twisting {t.name}")
    rep.equal("normality: (1⊗ε)τ = ε1", Wiring(C).apply(tau, 0).apply(mc.eps, 1).map(),
              chain(h.unit, mc.eps))
    rep.equal("normality: (ε⊗1)τ = id", Wiring(C).apply(tau, 0).apply(h.eps, 0).map(),
              identity(C))
    # c₋₁h₁ ⊗ c₀·h₂ = h₁(c·h₂)₋₁ ⊗ (c·h₂)₀
    lhs = (Wiring(C, H).apply(tau, 0).apply(h.delta, 2).permute(0, 2, 1, 3)
           .apply(h.mult, 0, 1).apply(mc.act, 1, 2).map())
    rhs = (Wiring(C, H).apply(h.delta, 1).permute(1, 0, 2).apply(mc.act, 1, 2)
           .apply(tau, 1).apply(h.mult, 0, 1).map())
    eq6 = rep.equal("compatibility with the action", lhs, rhs)
    # c₋₁ ⊗ Δ_τ(c₀) = c₁₋₁c₂₋₁₁ ⊗ c₁₀·c₂₋₁₂ ⊗ c₂₀
    lhs = Wiring(C).apply(tau, 0).apply(delta_tau(mc, tau), 1).map()
    rhs = (Wiring(C).apply(mc.delta, 0).apply(tau, 0).apply(tau, 2).apply(h.delta, 2)
           .permute(0, 2, 1, 3, 4).apply(h.mult, 0, 1).apply(mc.act, 1, 2).map())
    rep.equal("twisted coassociativity", lhs, rhs)
    # S(h₁)c₋₁h₂ ⊗ c₀·h₃ = (c·h)₋₁ ⊗ (c·h)₀
    lhs = (Wiring(C, H).apply(tau, 0).apply(h.comult_n(2), 2).apply(h.S, 2)
           .permute(2, 0, 3, 1, 4).apply(h.mult_n(3), 0, 1, 2).apply(mc.act, 1, 2).map())
    rhs = Wiring(C, H).apply(mc.act, 0, 1).apply(tau, 0).map()
    eq10 = rep.equal("conjugated action compatibility", lhs, rhs)
    rep.record("the two action compatibility forms agree", eq6 == eq10,
               f"direct {'pass' if eq6 else 'fail'}, conjugated {'pass' if eq10 else 'fail'}")
    return rep


# ---------------------------------------------------------------- left twisting checks


def delta_lambda(mc: ModuleCoalgebra, lam: LinMap) -> LinMap:
    """_λΔ(c) = c₁₀ ⊗ c₂·c₁₁."""
    C = mc.space
    return (Wiring(C).apply(mc.delta, 0).apply(lam.with_legs(C, mc.hopf.space), 0)
            .permute(0, 2, 1).apply(mc.act, 1, 2).map().with_legs(C, C))


def check_left_twisting(t: LeftTwist) -> CheckReport:
    mc, lam = t.mc, t.map
    C, H, h = mc.space, mc.hopf.space, mc.hopf
    rep = CheckReport(f"left twisting {t.name}")
    rep.equal("normality: (1⊗ε)λ = id", Wiring(C).apply(lam, 0).apply(h.eps, 1).map(),
              identity(C))
    rep.equal("normality: (ε⊗1)λ = ε1", Wiring(C).apply(lam, 0).apply(mc.eps, 0).map(),
              chain(h.unit, mc.eps))
    # c₀·h₁ ⊗ c₁h₂ = (c·h₁)₀ ⊗ h₂(c·h₁)₁
    lhs = (Wiring(C, H).apply(lam, 0).apply(h.delta, 2).permute(0, 2, 1, 3)
           .apply(mc.act, 0, 1).apply(h.mult, 1, 2).map())
    rhs = (Wiring(C, H).apply(h.delta, 1).apply(mc.act, 0, 1).apply(lam, 0)
           .permute(0, 2, 1).apply(h.mult, 1, 2).map())
    eq8 = rep.equal("compatibility with the action", lhs, rhs)
    # (_λΔ⊗id)λ(c) = c₁₀ ⊗ c₂₀·c₁₁₁ ⊗ c₂₁c₁₁₂
    lhs = Wiring(C).apply(lam, 0).apply(delta_lambda(mc, lam), 0).map()
    rhs = (Wiring(C).apply(mc.delta, 0).apply(lam, 0).apply(lam, 2).apply(h.delta, 1)
           .permute(0, 3, 1, 4, 2).apply(mc.act, 1, 2).apply(h.mult, 2, 3).map())
    rep.equal("twisted coassociativity", lhs, rhs)
    # c₀·h₁ ⊗ S̄(h₃)c₁h₂ = (c·h)₀ ⊗ (c·h)₁
    lhs = (Wiring(C, H).apply(lam, 0).apply(h.comult_n(2), 2).apply(h.Sbar, 4)
           .permute(0, 2, 4, 1, 3).apply(mc.act, 0, 1).apply(h.mult_n(3), 1, 2, 3).map())
    rhs = Wiring(C, H).apply(mc.act, 0, 1).apply(lam, 0).map()
    eq11 = rep.equal("conjugated action compatibility", lhs, rhs)
    rep.record("the two action compatibility forms agree", eq8 == eq11,
               f"direct {'pass' if eq8 else 'fail'}, conjugated {'pass' if eq11 else 'fail'}")
    return rep


# ---------------------------------------------------------------- twisted structures


def twist_coalgebra(t: RightTwist | LeftTwist, force: bool = False) -> ModuleCoalgebra:
    """C^τ (or ^λC): same space and action, deformed comultiplication.

    With ``force`` the candidate is returned even when t is not a twisting;
    its coalgebra axioms are then unverified.
    """
    if not force:
        t.require()
    mc = t.mc
    if isinstance(t, RightTwist):
        delta, name = delta_tau(mc, t.map), f"{mc.name}^{t.name}"
    else:
        delta, name = delta_lambda(mc, t.map), f"^{t.name}{mc.name}"
    return mc.with_coalgebra(Coalgebra(mc.space, delta, mc.eps), name)


def twist_comodule(m: RelHopfModule, t: RightTwist | LeftTwist, force: bool = False
                   ) -> RelHopfModule:
    """M^τ with ρ^τ(m) = m₀·m₁₋₁ ⊗ m₁₀, or ^λM with ^λρ(m) = m₋₁₀ ⊗ m₀·m₋₁₁."""
    if not force:
        t.require()
    M, C, H = m.space, m.mc.space, m.mc.hopf.space
    twisted = twist_coalgebra(t, force=True)
    if isinstance(t, RightTwist):
        if m.side != "right":
            raise SpaceMismatch("right twistings act on right comodules")
        coact = (Wiring(M).apply(m.coact, 0).apply(t.map, 1).apply(m.act, 0, 1)
                 .map().with_legs(M, C))
    else:
        if m.side != "left":
            raise SpaceMismatch("left twistings act on left comodules")
        coact = (Wiring(M).apply(m.coact, 0).apply(t.map, 0).permute(0, 2, 1)
                 .apply(m.act, 1, 2).map().with_legs(C, M))
    return RelHopfModule(M, m.act, coact, twisted, m.side)


def check_twisted_structures(t: RightTwist | LeftTwist, modules=()) -> CheckReport:
    """Check that the twisted coalgebra and twisted comodules are again in the category."""
    rep = CheckReport(f"twisted structures for {t.name}")
    rep.extend(check_module_coalgebra(twist_coalgebra(t, force=True)), "twisted coalgebra: ")
    for i, m in enumerate(modules):
        rep.extend(check_rel_hopf_module(twist_comodule(m, t, force=True)),
                   f"twisted comodule {i}: ")
    return rep


# ---------------------------------------------------------------- inversion


def _check_star_inverse(mc, tau: LinMap, lam: LinMap, rep: CheckReport, a="tau", b="inv"):
    unit = sigma(mc).map
    rep.equal(f"{a} * {b} = sigma", star_map(mc, tau, lam), unit)
    rep.equal(f"{b} * {a} = sigma", star_map(mc, lam, tau), unit)


def invert_right_map(mc: ModuleCoalgebra, tau: LinMap) -> LinMap:
    """∗-inverse via the endomorphism picture: λ = f_τ⁻¹ ∘ (u⊗id)."""
    f = f_tau(mc, tau)
    if not is_bijective(f):
        raise NotInvertible("f_tau is not bijective, so the map has no *-inverse")
    C = mc.space
    finv = inverse(f).with_legs(mc.hopf.space, C)
    embed = Wiring(ground(C.field), C).apply(mc.hopf.unit, 0).map()
    lam = chain(finv, embed).with_legs(mc.hopf.space, C)
    rep = CheckReport()
    _check_star_inverse(mc, tau, lam, rep)
    if not rep.passed:
        raise NotInvertible("one-sided *-inverse is not two-sided")
    return lam


def invert_twisting(t: RightTwist | LeftTwist) -> RightTwist | LeftTwist:
    """Two-sided inverse, attached to t and returned (also with t attached)."""
    mc = t.mc
    if isinstance(t, RightTwist):
        inv = RightTwist(mc, invert_right_map(mc, t.map), f"{t.name}^-1")
    else:
        # γ×μ = σ′ iff T∘μ ∗ T∘γ = σ, so invert T∘γ for ∗
        tinv = invert_right_map(mc, _T(mc, t.map, False))
        inv = LeftTwist(mc, _T(mc, tinv, True), f"{t.name}^-1")
    t.inverse = inv
    inv.inverse = t
    return inv


def check_inverse_pair(t: RightTwist | LeftTwist, inv=None) -> CheckReport:
    inv = inv if inv is not None else t.inverse
    if inv is None:
        raise InverseMissing(f"{t.name} has no attached inverse")
    rep = CheckReport(f"inverse of {t.name}")
    if isinstance(t, RightTwist):
        _check_star_inverse(t.mc, t.map, inv.map, rep, t.name, inv.name)
    else:
        unit = sigma_prime(t.mc).map
        rep.equal(f"{t.name} x {inv.name} = sigma'", times_map(t.mc, t.map, inv.map), unit)
        rep.equal(f"{inv.name} x {t.name} = sigma'", times_map(t.mc, inv.map, t.map), unit)
    return rep


# ---------------------------------------------------------------- transposition ℓ / r


def ell_maps(mc: ModuleCoalgebra, tau: LinMap, lam: LinMap) -> tuple[LinMap, LinMap]:
    """ℓ(τ) and its ×-inverse ℓ(τ)′, given the ∗-inverse λ of τ.

    With A = S̄(c₋₁), B = S̄(c₀₍₋₁₎), d = c₀₍₀₎:
    ℓ(τ)(c) = d·(B A₁) ⊗ A₂ and ℓ(τ)′(c) = d·(B₁A₁) ⊗ S̄(A₃)B₂A₂.
    """
    C, h = mc.space, mc.hopf
    base = (Wiring(C).apply(tau.with_legs(h.space, C), 0)
            .apply(lam.with_legs(h.space, C), 1).apply(h.Sbar, 0).apply(h.Sbar, 1).map())
    ell = (Wiring.after(base).apply(h.delta, 0).permute(3, 2, 0, 1).apply(h.mult, 1, 2)
           .apply(mc.act, 0, 1).map().with_legs(C, h.space))
    ell_inv = (Wiring.after(base).apply(h.comult_n(2), 0).apply(h.delta, 3).apply(h.Sbar, 2)
               .permute(5, 3, 0, 2, 4, 1).apply(h.mult, 1, 2).apply(mc.act, 0, 1)
               .apply(h.mult_n(3), 1, 2, 3).map().with_legs(C, h.space))
    return ell, ell_inv


def r_maps(mc: ModuleCoalgebra, gamma: LinMap, mu: LinMap) -> tuple[LinMap, LinMap]:
    """r(γ) and its ∗-inverse r(γ)′, given the ×-inverse μ of γ.

    With X = S(c₁), Y = S(c₀₍₁₎), d = c₀₍₀₎:
    r(γ)(c) = X₁ ⊗ d·(Y X₂) and r(γ)′(c) = S(X₁)Y₁X₂ ⊗ d·(Y₂X₃).
    """
    C, h = mc.space, mc.hopf
    base = (Wiring(C).apply(gamma.with_legs(C, h.space), 0)
            .apply(mu.with_legs(C, h.space), 0).apply(h.S, 1).apply(h.S, 2).map())
    r = (Wiring.after(base).apply(h.delta, 2).permute(2, 0, 1, 3).apply(h.mult, 2, 3)
         .apply(mc.act, 1, 2).map().with_legs(h.space, C))
    r_inv = (Wiring.after(base).apply(h.comult_n(2), 2).apply(h.delta, 1).apply(h.S, 3)
             .permute(3, 1, 4, 0, 2, 5).apply(h.mult_n(3), 0, 1, 2).apply(h.mult, 2, 3)
             .apply(mc.act, 1, 2).map().with_legs(h.space, C))
    return r, r_inv


def transpose_twisting(t: RightTwist | LeftTwist, direction: str | None = None):
    """ℓ (right-to-left) or r (left-to-right); the result carries its inverse."""
    if t.inverse is None:
        raise InverseMissing(f"{t.name} needs an attached inverse to be transposed")
    if isinstance(t, RightTwist):
        if direction not in (None, "rtl", "right-to-left"):
            raise ValueError("a right twisting transposes right-to-left")
        ell, ell_inv = ell_maps(t.mc, t.map, t.inverse.map)
        out = LeftTwist(t.mc, ell, f"l({t.name})")
        out.inverse = LeftTwist(t.mc, ell_inv, f"l({t.name})'")
    else:
        if direction not in (None, "ltr", "left-to-right"):
            raise ValueError("a left twisting transposes left-to-right")
        r, r_inv = r_maps(t.mc, t.map, t.inverse.map)
        out = RightTwist(t.mc, r, f"r({t.name})")
        out.inverse = RightTwist(t.mc, r_inv, f"r({t.name})'")
    out.inverse.inverse = out
    return out
