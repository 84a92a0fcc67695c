"""Weak coactions, Harrison 2-cocycles and crossed coproducts C ⊲_α H.

Notation: ρ(c) = c₍₋₁₎⊗c₍₀₎ is the weak coaction, α(c) = α₁(c)⊗α₂(c).
The crossed coproduct lives on C⊗H with H acting on the right tensorand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import NotACocycle, NotATwisting, SpaceMismatch, WitnessInvalid
from .hopf import Coalgebra, ConvElement, HopfAlgebra, check_coalgebra, convolution_inverse
from .linmap import LinMap, chain, ground, identity, is_bijective, kronecker, tensor_space
from .modcoalg import ModuleCoalgebra, check_module_coalgebra, tensor_module_coalgebra
from .report import CheckReport
from .twistings import RightTwist
from .wiring import Wiring


@dataclass(frozen=True, eq=False)
class WeakCoaction:
    coalgebra: Coalgebra
    hopf: HopfAlgebra
    rho: LinMap

    def __post_init__(self):
        C, H = self.coalgebra.space, self.hopf.space
        if self.rho.dom != C or self.rho.cod != tensor_space(H, C):
            raise SpaceMismatch("weak coaction must be a map C -> H⊗C")
        object.__setattr__(self, "rho", self.rho.with_legs(H, C))

    @cached_property
    def report(self) -> CheckReport:
        return check_weak_coaction(self)


def trivial_coaction(c: Coalgebra, h: HopfAlgebra) -> WeakCoaction:
    rho = Wiring(ground(c.field), c.space).apply(h.unit, 0).map()
    return WeakCoaction(c, h, rho)


def check_weak_coaction(w: WeakCoaction) -> CheckReport:
    c, h, rho = w.coalgebra, w.hopf, w.rho
    C = c.space
    rep = CheckReport("weak coaction")
    lhs = Wiring(C).apply(rho, 0).apply(c.delta, 1).map()
    rhs = (Wiring(C).apply(c.delta, 0).apply(rho, 0).apply(rho, 2).permute(0, 2, 1, 3)
           .apply(h.mult, 0, 1).map())
    rep.equal("comultiplicative", lhs, rhs)
    rep.equal("counit: (1⊗ε)ρ = ε1", Wiring(C).apply(rho, 0).apply(c.eps, 1).map(),
              chain(h.unit, c.eps))
    rep.equal("counit: (ε⊗1)ρ = id", Wiring(C).apply(rho, 0).apply(h.eps, 0).map(), identity(C))
    return rep


@dataclass(frozen=True, eq=False)
class HarrisonCocycle:
    coaction: WeakCoaction
    alpha: LinMap
    name: str = "alpha"

    def __post_init__(self):
        C, H = self.coaction.coalgebra.space, self.coaction.hopf.space
        if self.alpha.dom != C or self.alpha.cod != tensor_space(H, H):
            raise SpaceMismatch("cocycle must be a map C -> H⊗H")
        object.__setattr__(self, "alpha", self.alpha.with_legs(H, H))

    @property
    def coalgebra(self) -> Coalgebra:
        return self.coaction.coalgebra

    @property
    def hopf(self) -> HopfAlgebra:
        return self.coaction.hopf

    @property
    def rho(self) -> LinMap:
        return self.coaction.rho

    @cached_property
    def report(self) -> CheckReport:
        return check_harrison(self)

    def require(self) -> HarrisonCocycle:
        if not self.report.passed:
            bad = ", ".join(r.name for r in self.report.failures())
            raise NotACocycle(f"{self.name} fails: {bad}")
        return self


def trivial_cocycle_map(c: Coalgebra, h: HopfAlgebra) -> LinMap:
    """α(c) = ε(c)1⊗1."""
    one = chain(kronecker(h.unit, h.unit), c.eps)
    return one.with_legs(h.space, h.space)


def check_harrison(hc: HarrisonCocycle, title: str = "Harrison cocycle") -> CheckReport:
    c, h, rho, alpha = hc.coalgebra, hc.hopf, hc.rho, hc.alpha
    C = c.space
    rep = CheckReport(title)
    unit_eps = chain(h.unit, c.eps)
    rep.equal("counit: (ε⊗1)α = ε1", Wiring(C).apply(alpha, 0).apply(h.eps, 0).map(), unit_eps)
    rep.equal("counit: (1⊗ε)α = ε1", Wiring(C).apply(alpha, 0).apply(h.eps, 1).map(), unit_eps)
    # c₁₍₋₁₎α₁(c₂) ⊗ α₁(c₁₍₀₎)α₂(c₂)₁ ⊗ α₂(c₁₍₀₎)α₂(c₂)₂
    lhs = (Wiring(C).apply(c.delta, 0).apply(rho, 0).apply(alpha, 1).apply(alpha, 3)
           .apply(h.delta, 4).permute(0, 3, 1, 4, 2, 5)
           .apply(h.mult, 0, 1).apply(h.mult, 1, 2).apply(h.mult, 2, 3).map())
    rhs = _cocycle_rhs(c, h, alpha)
    rep.equal("cocycle condition", lhs, rhs)
    # c₁₍₋₁₎α₁(c₂) ⊗ c₁₍₀₎₍₋₁₎α₂(c₂) ⊗ c₁₍₀₎₍₀₎ = α₁(c₁)c₂₍₋₁₎₁ ⊗ α₂(c₁)c₂₍₋₁₎₂ ⊗ c₂₍₀₎
    lhs = (Wiring(C).apply(c.delta, 0).apply(rho, 0).apply(rho, 1).apply(alpha, 3)
           .permute(0, 3, 1, 4, 2).apply(h.mult, 0, 1).apply(h.mult, 1, 2).map())
    rhs = (Wiring(C).apply(c.delta, 0).apply(alpha, 0).apply(rho, 2).apply(h.delta, 2)
           .permute(0, 2, 1, 3, 4).apply(h.mult, 0, 1).apply(h.mult, 1, 2).map())
    rep.equal("twisted comodule condition", lhs, rhs)
    return rep


def _cocycle_rhs(c: Coalgebra, h: HopfAlgebra, alpha: LinMap) -> LinMap:
    """α₁(c₁)α₁(c₂)₁ ⊗ α₂(c₁)α₁(c₂)₂ ⊗ α₂(c₂)."""
    return (Wiring(c.space).apply(c.delta, 0).apply(alpha, 0).apply(alpha, 2)
            .apply(h.delta, 2).permute(0, 2, 1, 3, 4)
            .apply(h.mult, 0, 1).apply(h.mult, 1, 2).map())


# ---------------------------------------------------------------- crossed coproduct


@dataclass(frozen=True, eq=False)
class CrossedCoproduct:
    cocycle: HarrisonCocycle
    mc: ModuleCoalgebra

    @property
    def delta(self) -> LinMap:
        return self.mc.delta

    @cached_property
    def report(self) -> CheckReport:
        rep = CheckReport("crossed coproduct")
        rep.extend(check_module_coalgebra(self.mc))
        return rep


def crossed_delta(hc: HarrisonCocycle) -> LinMap:
    """Δ_α(c⊗h) = (c₁ ⊗ c₂₍₋₁₎α₁(c₃)h₁) ⊗ (c₂₍₀₎ ⊗ α₂(c₃)h₂)."""
    c, h = hc.coalgebra, hc.hopf
    C, H = c.space, h.space
    D = tensor_space(C, H)
    return (Wiring(C, H).apply(c.delta, 0).apply(c.delta, 0).apply(hc.rho, 1)
            .apply(hc.alpha, 3).apply(h.delta, 5).permute(0, 1, 3, 5, 2, 4, 6)
            .apply(h.mult_n(3), 1, 2, 3).apply(h.mult, 3, 4).map().with_legs(D, D))


def build_crossed(hc: HarrisonCocycle, force: bool = False) -> CrossedCoproduct:
    if not force:
        hc.require()
    base = tensor_module_coalgebra(hc.coalgebra, hc.hopf)
    D = base.space
    coalg = Coalgebra(D, crossed_delta(hc), base.eps)
    mc = ModuleCoalgebra(coalg, hc.hopf, base.act, f"C>|{hc.name}H", tensor_base=hc.coalgebra)
    out = CrossedCoproduct(hc, mc)
    if not force and not check_coalgebra(coalg).passed:
        raise NotACocycle("crossed coproduct is not a coalgebra although the cocycle checks pass")
    return out


def _left_c_coaction(cc: CrossedCoproduct) -> LinMap:
    """(id⊗ε_H ⊗ id)Δ_α: C⊗H -> C⊗(C⊗H)."""
    c, h = cc.cocycle.coalgebra, cc.cocycle.hopf
    D = cc.mc.space
    return Wiring(D).apply(cc.delta, 0).split(0, c.space, h.space).apply(h.eps, 1).map()


# ---------------------------------------------------------------- isomorphisms from u


def check_iso_conditions(u: LinMap, source: HarrisonCocycle, target: HarrisonCocycle,
                         u_inv: LinMap | None = None) -> CheckReport:
    """Conditions relating (ρ′, α′) = source and (ρ, α) = target through u."""
    c, h = target.coalgebra, target.hopf
    C = c.space
    if u_inv is None:
        u_inv = convolution_inverse(ConvElement(u, c, h.algebra)).map
    rep = CheckReport("crossed coproduct isomorphism conditions")
    # ρ′(c) = u⁻¹(c₁)c₂₍₋₁₎u(c₃) ⊗ c₂₍₀₎
    rhs = (Wiring(C).apply(c.delta, 0).apply(c.delta, 0).apply(u_inv, 0).apply(target.rho, 1)
           .apply(u, 3).permute(0, 1, 3, 2).apply(h.mult_n(3), 0, 1, 2).map())
    rep.equal("coaction transported by u", source.rho, rhs)
    # α′(c) = u⁻¹(c₁)c₂₍₋₁₎α₁(c₃)u(c₄)₁ ⊗ u⁻¹(c₂₍₀₎)α₂(c₃)u(c₄)₂
    rhs = (Wiring(C).apply(c.delta, 0).apply(c.delta, 0).apply(c.delta, 0)
           .apply(u_inv, 0).apply(target.rho, 1).apply(u_inv, 2).apply(target.alpha, 3)
           .apply(u, 5).apply(h.delta, 5).permute(0, 1, 3, 5, 2, 4, 6)
           .apply(h.mult_n(4), 0, 1, 2, 3).apply(h.mult_n(3), 1, 2, 3).map())
    rep.equal("cocycle transported by u", source.alpha, rhs)
    return rep


def phi_from_u(u: LinMap, c: Coalgebra, h: HopfAlgebra) -> LinMap:
    """φ(c⊗h) = c₁ ⊗ u(c₂)h."""
    D = tensor_space(c.space, h.space)
    return (Wiring(c.space, h.space).apply(c.delta, 0).apply(u, 1).apply(h.mult, 1, 2)
            .map().with_legs(D))


def check_crossed_iso(phi: LinMap, source: CrossedCoproduct, target: CrossedCoproduct
                      ) -> CheckReport:
    """φ: source -> target is a left C-colinear, right H-linear coalgebra isomorphism."""
    rep = CheckReport("crossed coproduct isomorphism")
    c = target.cocycle.coalgebra
    rep.equal("coalgebra map", chain(target.delta, phi), chain(kronecker(phi, phi), source.delta))
    rep.equal("counital", chain(target.mc.eps, phi), source.mc.eps)
    rep.equal("left C-colinear", chain(kronecker(identity(c.space), phi), _left_c_coaction(source)),
              chain(_left_c_coaction(target), phi))
    rep.equal("right H-linear", chain(phi, source.mc.act),
              chain(target.mc.act, kronecker(phi, identity(target.cocycle.hopf.space))))
    rep.record("bijective", is_bijective(phi))
    return rep


def crossed_iso_from_u(u: LinMap | ConvElement, source: CrossedCoproduct,
                       target: CrossedCoproduct) -> LinMap:
    """φ: C ⊲′_{α′} H -> C ⊲_α H, raising when the transport conditions fail."""
    if isinstance(u, ConvElement):
        u = u.map
    c, h = target.cocycle.coalgebra, target.cocycle.hopf
    u_inv = convolution_inverse(ConvElement(u, c, h.algebra)).map
    cond = check_iso_conditions(u, source.cocycle, target.cocycle, u_inv)
    if not cond.passed:
        raise WitnessInvalid(cond.failures()[0].line())
    phi = phi_from_u(u, c, h).named("phi")
    iso = check_crossed_iso(phi, source, target)
    if not iso.passed:
        raise WitnessInvalid(iso.failures()[0].line())
    return phi


def u_from_iso(phi: LinMap, c: Coalgebra, h: HopfAlgebra) -> LinMap:
    """u(c) = (ε⊗id)φ(c⊗1)."""
    return (Wiring(c.space, ground(c.field)).apply(h.unit, 1).apply(phi, 0, 1)
            .split(0, c.space, h.space).apply(c.eps, 0).map())


# ---------------------------------------------------------------- twistings of C⊗H


def twisting_map_from_crossed(hc: HarrisonCocycle) -> LinMap:
    """τ(c⊗h) = S(h₁)c₁₍₋₁₎α₁(c₂)h₂ ⊗ c₁₍₀₎ ⊗ α₂(c₂)h₃."""
    c, h = hc.coalgebra, hc.hopf
    C, H = c.space, h.space
    D = tensor_space(C, H)
    return (Wiring(C, H).apply(c.delta, 0).apply(hc.rho, 0).apply(hc.alpha, 2)
            .apply(h.comult_n(2), 4).apply(h.S, 4).permute(4, 0, 2, 5, 1, 3, 6)
            .apply(h.mult_n(4), 0, 1, 2, 3).apply(h.mult, 2, 3).map().with_legs(H, D))


def twisting_from_crossed(hc: HarrisonCocycle, force: bool = False) -> RightTwist:
    if not force:
        hc.require()
    mc = tensor_module_coalgebra(hc.coalgebra, hc.hopf)
    return RightTwist(mc, twisting_map_from_crossed(hc), f"tau[{hc.name}]")


def crossed_from_twisting(t: RightTwist, force: bool = False
                          ) -> tuple[WeakCoaction, HarrisonCocycle]:
    """ρ(c) = (1⊗1⊗ε)τ(c⊗1) and α(c) = (1⊗ε⊗1)τ(c⊗1)."""
    if not force:
        t.require()
    base = t.mc.tensor_base
    if base is None:
        raise SpaceMismatch("twisting does not live on a tensor product C⊗H")
    c = base.coalgebra if isinstance(base, ModuleCoalgebra) else base
    h = t.mc.hopf
    C, H = c.space, h.space
    at_one = (Wiring(C, ground(C.field)).apply(h.unit, 1).apply(t.map, 0, 1)
              .split(1, C, H).map())
    rho = Wiring.after(at_one).apply(h.eps, 2).map().with_legs(H, C)
    alpha = Wiring.after(at_one).apply(c.eps, 1).map().with_legs(H, H)
    w = WeakCoaction(c, h, rho)
    return w, HarrisonCocycle(w, alpha, f"alpha[{t.name}]")


def check_crossed_correspondence(hc: HarrisonCocycle) -> CheckReport:
    """Roundtrips between cocycle data and twistings, and (C⊗H)^τ = C ⊲_α H."""
    from .twistings import twist_coalgebra

    rep = CheckReport("crossed coproducts and twistings of C⊗H")
    rep.extend(hc.report, "cocycle: ")
    t = twisting_from_crossed(hc, force=True)
    rep.extend(t.report, "twisting: ")
    w, back = crossed_from_twisting(t, force=True)
    rep.equal("coaction recovered from the twisting", w.rho, hc.rho)
    rep.equal("cocycle recovered from the twisting", back.alpha, hc.alpha)
    again = twisting_from_crossed(back, force=True)
    rep.equal("twisting rebuilt from the recovered data", again.map, t.map)
    cc = build_crossed(hc, force=True)
    twisted = twist_coalgebra(t, force=True)
    rep.equal("twisted comultiplication equals the crossed coproduct", twisted.delta, cc.delta)
    return rep


def require_twisting(t: RightTwist) -> RightTwist:
    if not t.is_twisting:
        raise NotATwisting(t.report.failures()[0].line())
    return t
