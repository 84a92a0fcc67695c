"""Twisted 2-cocycles, the twisting τ_α they induce, and Harrison cocycles
for the trivial weak coaction together with the lift/restrict bijection."""

from __future__ import annotations

from functools import cached_property

from .crossed import HarrisonCocycle, _cocycle_rhs, trivial_coaction
from .errors import NotACocycle, SpaceMismatch
from .linmap import LinMap, chain, ground, tensor_space
from .modcoalg import ModuleCoalgebra, tensor_module_coalgebra
from .report import CheckReport
from .twistings import RightTwist
from .wiring import Wiring


class _Cocycle:
    def __init__(self, mc: ModuleCoalgebra, alpha: LinMap, name: str):
        H = mc.hopf.space
        if alpha.dom != mc.space or alpha.cod != tensor_space(H, H):
            raise SpaceMismatch(f"{name} must be a map {mc.space.name} -> H⊗H")
        self.mc = mc
        self.alpha = alpha.with_legs(H, H).named(name)
        self.name = name

    @property
    def hopf(self):
        return self.mc.hopf

    def require(self):
        if not self.report.passed:
            bad = ", ".join(r.name for r in self.report.failures())
            raise NotACocycle(f"{self.name} fails: {bad}")
        return self

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.alpha == other.alpha

    __hash__ = None


class TwistedCocycle(_Cocycle):
    def __init__(self, mc: ModuleCoalgebra, alpha: LinMap, name: str = "alpha"):
        # conjugation by S̄ needs a bijective antipode; fail early
        mc.hopf.antipode_inverse
        super().__init__(mc, alpha, name)

    @cached_property
    def report(self) -> CheckReport:
        return check_twisted_cocycle(self)


class TrivialHarrison(_Cocycle):
    def __init__(self, mc: ModuleCoalgebra, alpha: LinMap, name: str = "alpha"):
        super().__init__(mc, alpha, name)

    @cached_property
    def report(self) -> CheckReport:
        return check_trivial_harrison(self)

    def as_harrison(self) -> HarrisonCocycle:
        return HarrisonCocycle(trivial_coaction(self.mc.coalgebra, self.hopf), self.alpha,
                               self.name)


def _counit_checks(rep: CheckReport, mc: ModuleCoalgebra, alpha: LinMap):
    h = mc.hopf
    C = mc.space
    unit_eps = chain(h.unit, mc.eps)
    rep.equal("counit: (1⊗ε)α = ε1", Wiring(C).apply(alpha, 0).apply(h.eps, 1).map(), unit_eps)
    rep.equal("counit: (ε⊗1)α = ε1", Wiring(C).apply(alpha, 0).apply(h.eps, 0).map(), unit_eps)


def conjugated(mc_space, h, alpha: LinMap) -> LinMap:
    """c⊗h ↦ S(h₁)α₁(c)h₂ ⊗ S̄(h₄)α₂(c)h₃, a map C⊗H -> H⊗H."""
    return (Wiring(mc_space, h.space).apply(alpha, 0).apply(h.comult_n(3), 2)
            .apply(h.S, 2).apply(h.Sbar, 5).permute(2, 0, 3, 5, 1, 4)
            .apply(h.mult_n(3), 0, 1, 2).apply(h.mult_n(3), 1, 2, 3).map())


def check_twisted_cocycle(tc: TwistedCocycle) -> CheckReport:
    mc, alpha, h = tc.mc, tc.alpha, tc.hopf
    C = mc.space
    rep = CheckReport(f"twisted 2-cocycle {tc.name}")
    _counit_checks(rep, mc, alpha)
    rep.equal("conjugation under the action", chain(alpha, mc.act), conjugated(C, h, alpha))
    # α₁(c₁)α₁(c₃)₁ ⊗ c₂·α₂(c₁)α₁(c₃)₂ ⊗ α₂(c₃)
    #   = α₁(c₁) ⊗ c₂·α₁(c₃)α₂(c₁)₁ ⊗ α₂(c₃)α₂(c₁)₂
    three = Wiring(C).apply(mc.delta, 0).apply(mc.delta, 0).apply(alpha, 0).apply(alpha, 3).map()
    lhs = (Wiring.after(three).apply(h.delta, 3).permute(0, 3, 2, 1, 4, 5)
           .apply(h.mult, 0, 1).apply(h.mult, 2, 3).apply(mc.act, 1, 2).map())
    rhs = (Wiring.after(three).apply(h.delta, 1).permute(0, 3, 4, 1, 5, 2)
           .apply(h.mult, 2, 3).apply(h.mult, 3, 4).apply(mc.act, 1, 2).map())
    rep.equal("cocycle condition", lhs, rhs)
    return rep


def tau_alpha_map(mc: ModuleCoalgebra, alpha: LinMap) -> LinMap:
    """τ_α(c) = α₁(c₁) ⊗ c₂·α₂(c₁)."""
    return (Wiring(mc.space).apply(mc.delta, 0).apply(alpha, 0).permute(0, 2, 1)
            .apply(mc.act, 1, 2).map().with_legs(mc.hopf.space, mc.space))


def twisting_from_twisted_cocycle(tc: TwistedCocycle, force: bool = False) -> RightTwist:
    if not force:
        tc.require()
    return RightTwist(tc.mc, tau_alpha_map(tc.mc, tc.alpha), f"tau[{tc.name}]")


def check_trivial_harrison(th: TrivialHarrison) -> CheckReport:
    mc, alpha, h = th.mc, th.alpha, th.hopf
    C = mc.space
    rep = CheckReport(f"Harrison cocycle {th.name} (trivial coaction)")
    _counit_checks(rep, mc, alpha)
    # α₁(c₂) ⊗ α₁(c₁)α₂(c₂)₁ ⊗ α₂(c₁)α₂(c₂)₂
    lhs = (Wiring(C).apply(mc.delta, 0).apply(alpha, 0).apply(alpha, 2).apply(h.delta, 3)
           .permute(2, 0, 3, 1, 4).apply(h.mult, 1, 2).apply(h.mult, 2, 3).map())
    rep.equal("cocycle condition", lhs, _cocycle_rhs(mc.coalgebra, h, alpha))
    lhs = Wiring(C).apply(mc.delta, 0).apply(alpha, 1).permute(1, 2, 0).map()
    rhs = Wiring(C).apply(mc.delta, 0).apply(alpha, 0).map()
    rep.equal("cocommutativity against α", lhs, rhs)
    return rep


def lift_to_twisted(th: TrivialHarrison, force: bool = False) -> TwistedCocycle:
    """αᵗ(c⊗h) = S(h₁)α₁(c)h₂ ⊗ S̄(h₄)α₂(c)h₃ on C⊗H."""
    if not force:
        th.require()
    h = th.hopf
    big = tensor_module_coalgebra(th.mc.coalgebra, h, f"{th.mc.name}⊗H")
    big = ModuleCoalgebra(big.coalgebra, h, big.act, big.name, tensor_base=th.mc)
    alpha_t = conjugated(th.mc.space, h, th.alpha).relabel(dom=big.space)
    return TwistedCocycle(big, alpha_t.with_legs(h.space, h.space), f"{th.name}^t")


def restrict_to_harrison(tc: TwistedCocycle, base: ModuleCoalgebra | None = None,
                         force: bool = False) -> TrivialHarrison:
    """α(c) = αᵗ(c⊗1)."""
    if not force:
        tc.require()
    base = base or tc.mc.tensor_base
    if not isinstance(base, ModuleCoalgebra):
        raise SpaceMismatch("restriction needs the module coalgebra C underlying C⊗H")
    h = tc.hopf
    C = base.space
    alpha = (Wiring(C, ground(C.field)).apply(h.unit, 1).apply(tc.alpha, 0, 1).map())
    name = tc.name[:-2] if tc.name.endswith("^t") else f"{tc.name}|"
    return TrivialHarrison(base, alpha.with_legs(h.space, h.space), name)


def gauge_transform(th: TrivialHarrison, u: LinMap, name: str | None = None) -> TrivialHarrison:
    """α′ = (u⁻¹⊗u⁻¹)·α·Δ(u) for C = k and an invertible u ∈ H with ε(u) = 1."""
    from .hopf import ConvElement, convolution_inverse

    mc, h = th.mc, th.hopf
    if mc.space.dim != 1:
        raise SpaceMismatch("gauge transformations are implemented for C = k only")
    if u.dom != mc.space or u.cod != h.space:
        raise SpaceMismatch("u must be a map k -> H")
    u_inv = convolution_inverse(ConvElement(u, mc.coalgebra, h.algebra)).map
    k = mc.space
    # k ≅ k⊗k⊗k⊗k carrying u⁻¹ ⊗ u⁻¹ ⊗ α ⊗ Δu, then multiply leg-wise
    four = Wiring(k, k, k, k).apply(u_inv, 0).apply(u_inv, 1).apply(th.alpha, 2).apply(u, 4)
    four.apply(h.delta, 4).permute(0, 2, 4, 1, 3, 5)
    four.apply(h.mult_n(3), 0, 1, 2).apply(h.mult_n(3), 1, 2, 3)
    alpha = four.map().relabel(dom=k).with_legs(h.space, h.space)
    return TrivialHarrison(mc, alpha, name or f"{th.name}[u]")
