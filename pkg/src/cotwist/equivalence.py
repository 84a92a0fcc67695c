"""Equivalence of twistings through maps v: C -> H.

For twistings τ, λ of C a witness v gives ψ(c) = c₁·v(c₂), a left
B-colinear, right H-linear coalgebra map C^τ -> C^λ; τ ∼ λ when v is
convolution invertible.
"""

from __future__ import annotations

from .errors import InverseMissing, NotInvertible, SpaceMismatch, WitnessInvalid
from .hopf import ConvElement, convolution_inverse, convolve
from .linmap import LinMap, chain, identity, is_bijective, kronecker, tensor_space
from .modcoalg import ModuleCoalgebra, quotient_base
from .report import CheckReport
from .twistings import (RightTwist, check_inverse_pair, sigma, star_map, twist_coalgebra)
from .wiring import Wiring


class EquivWitness:
    def __init__(self, tau: RightTwist, lam: RightTwist, v: LinMap, name: str = "v"):
        mc = tau.mc
        if lam.mc.space != mc.space or lam.mc.hopf.space != mc.hopf.space:
            raise SpaceMismatch("the two twistings live on different module coalgebras")
        if v.dom != mc.space or v.cod != mc.hopf.space:
            raise SpaceMismatch("a witness is a map C -> H")
        self.mc = mc
        self.tau = tau
        self.lam = lam
        self.v = v.named(name)
        self.name = name
        self._report = None
        self._inverse = None

    def conv(self, f: LinMap) -> ConvElement:
        return ConvElement(f, self.mc.coalgebra, self.mc.hopf.algebra)

    @property
    def v_inverse(self) -> LinMap:
        """Convolution inverse of v; raises NotInvertible outside Reg(C, H)."""
        if self._inverse is None:
            self._inverse = convolution_inverse(self.conv(self.v)).map
        return self._inverse

    @property
    def invertible(self) -> bool:
        try:
            self.v_inverse
        except NotInvertible:
            return False
        return True

    @property
    def report(self) -> CheckReport:
        if self._report is None:
            self._report = check_witness(self)
        return self._report

    def require(self) -> EquivWitness:
        if not self.report.passed:
            raise WitnessInvalid(self.report.failures()[0].line())
        return self


def _eq22_sides(mc: ModuleCoalgebra, tau: LinMap, lam: LinMap, v: LinMap):
    """c₁₍₋₁₎v(c₂)₁ ⊗ c₁₍₀₎·v(c₂)₂ (with λ) and v(c₁)c₂₋₁ ⊗ c₂₀₁·v(c₂₀₂) (with τ)."""
    C, h = mc.space, mc.hopf
    lhs = (Wiring(C).apply(mc.delta, 0).apply(lam, 0).apply(v, 2).apply(h.delta, 2)
           .permute(0, 2, 1, 3).apply(h.mult, 0, 1).apply(mc.act, 1, 2).map())
    rhs = (Wiring(C).apply(mc.delta, 0).apply(v, 0).apply(tau, 1).apply(mc.delta, 2)
           .apply(v, 3).apply(h.mult, 0, 1).apply(mc.act, 1, 2).map())
    return lhs, rhs


def lambda_from_witness(mc: ModuleCoalgebra, tau: LinMap, v: LinMap, v_inv: LinMap) -> LinMap:
    """v(c₁)c₂₋₁v⁻¹(c₃)₁ ⊗ c₂₀₁·v(c₂₀₂)v⁻¹(c₃)₂."""
    C, h = mc.space, mc.hopf
    return (Wiring(C).apply(mc.delta, 0).apply(mc.delta, 0).apply(v, 0).apply(tau, 1)
            .apply(mc.delta, 2).apply(v, 3).apply(v_inv, 4).apply(h.delta, 4)
            .permute(0, 1, 4, 2, 3, 5).apply(h.mult_n(3), 0, 1, 2).apply(h.mult, 2, 3)
            .apply(mc.act, 1, 2).map().with_legs(h.space, C))


def check_witness(w: EquivWitness) -> CheckReport:
    mc, h, v = w.mc, w.mc.hopf, w.v
    C, H = mc.space, h.space
    rep = CheckReport(f"witness {w.name}: {w.tau.name} ~ {w.lam.name}")
    rep.equal("counit: ε∘v = ε", chain(h.eps, v), mc.eps)
    rhs = (Wiring(C, H).apply(v, 0).apply(h.delta, 1).apply(h.S, 1).permute(1, 0, 2)
           .apply(h.mult_n(3), 0, 1, 2).map())
    rep.equal("H-linearity: v(c·h) = S(h₁)v(c)h₂", chain(v, mc.act), rhs)
    lhs, rhs = _eq22_sides(mc, w.tau.map, w.lam.map, v)
    rep.equal("intertwines the twistings", lhs, rhs)
    if w.invertible:
        rep.equal("solved form: λ from τ and v",
                  w.lam.map, lambda_from_witness(mc, w.tau.map, v, w.v_inverse))
    return rep


def reflexive_witness(t: RightTwist) -> EquivWitness:
    """τ ∼ τ through v(c) = ε(c)1."""
    h = t.mc.hopf
    return EquivWitness(t, t, chain(h.unit, t.mc.eps), "unit")


# ---------------------------------------------------------------- ψ


def psi_map(mc: ModuleCoalgebra, v: LinMap) -> LinMap:
    """c ↦ c₁·v(c₂)."""
    return Wiring(mc.space).apply(mc.delta, 0).apply(v, 1).apply(mc.act, 0, 1).map()


def check_psi(psi: LinMap, source: ModuleCoalgebra, target: ModuleCoalgebra) -> CheckReport:
    """ψ: source -> target is a left B-colinear, right H-linear coalgebra map inducing id on B."""
    q = quotient_base(source)
    H = source.hopf.space
    rep = CheckReport("induced map")
    rep.equal("coalgebra map", chain(target.delta, psi), chain(kronecker(psi, psi), source.delta))
    rep.equal("counital", chain(target.eps, psi), source.eps)
    rep.equal("right H-linear", chain(psi, source.act),
              chain(target.act, kronecker(psi, identity(H))))
    rep.equal("left B-colinear", chain(kronecker(q.pi, psi), source.delta),
              chain(kronecker(q.pi, identity(target.space)), target.delta, psi))
    rep.equal("induces the identity on B", chain(q.pi, psi), q.pi)
    return rep


def psi_from_witness(w: EquivWitness) -> LinMap:
    w.require()
    psi = psi_map(w.mc, w.v).named("psi")
    src, tgt = twist_coalgebra(w.tau, force=True), twist_coalgebra(w.lam, force=True)
    rep = check_psi(psi, src, tgt)
    if w.invertible:
        phi = psi_map(w.mc, w.v_inverse)
        rep.equal("psi o phi = id", chain(psi, phi), identity(w.mc.space))
        rep.equal("phi o psi = id", chain(phi, psi), identity(w.mc.space))
    if not rep.passed:
        raise WitnessInvalid(rep.failures()[0].line())
    return psi


# ---------------------------------------------------------------- the relation


def invert_witness(w: EquivWitness) -> EquivWitness:
    """λ ∼ τ through the convolution inverse of v."""
    return EquivWitness(w.lam, w.tau, w.v_inverse, f"{w.name}^-1")


def compose_witness(w1: EquivWitness, w2: EquivWitness) -> EquivWitness:
    """τ ∼ λ via v and λ ∼ γ via u give τ ∼ γ via u ∗ v."""
    if w1.lam.map != w2.tau.map:
        raise SpaceMismatch(f"middle twistings differ: {w1.lam.name} vs {w2.tau.name}")
    uv = convolve(w2.conv(w2.v), w1.conv(w1.v)).map
    return EquivWitness(w1.tau, w2.lam, uv, f"{w2.name}*{w1.name}")


def transfer_inverse(w: EquivWitness, tau_inv: RightTwist | None = None) -> RightTwist:
    """The ∗-inverse μ of λ built from τ⁻¹ and v.

    With x = ψ⁻¹(c) and τ⁻¹(x) = a⊗b: μ(c) = a v⁻¹(b₁)v(b₃)₁ ⊗ b₂·v(b₃)₂.
    """
    w.require()
    tau_inv = tau_inv if tau_inv is not None else w.tau.inverse
    if tau_inv is None:
        raise InverseMissing(f"{w.tau.name} has no attached inverse")
    if not check_inverse_pair(w.tau, tau_inv).passed:
        raise InverseMissing(f"{tau_inv.name} is not the inverse of {w.tau.name}")
    try:
        v_inv = w.v_inverse
    except NotInvertible as exc:
        raise WitnessInvalid("the witness is not convolution invertible") from exc
    mc, h = w.mc, w.mc.hopf
    C = mc.space
    psi_inv = psi_map(mc, v_inv)
    mu = (Wiring(C).apply(psi_inv, 0).apply(tau_inv.map, 0).apply(h.comult_n(2), 1)
          .apply(v_inv, 1).apply(w.v, 3).apply(h.delta, 3).permute(0, 1, 3, 2, 4)
          .apply(h.mult_n(3), 0, 1, 2).apply(mc.act, 1, 2).map())
    out = RightTwist(mc, mu, f"{w.lam.name}^-1")
    rep = CheckReport()
    unit = sigma(mc).map
    rep.equal("mu * lambda = sigma", star_map(mc, mu, w.lam.map), unit)
    rep.equal("lambda * mu = sigma", star_map(mc, w.lam.map, mu), unit)
    if not rep.passed:
        raise WitnessInvalid(rep.failures()[0].line())
    out.inverse = w.lam
    return out


# ---------------------------------------------------------------- crossed coproducts on C⊗H


def v_from_u(u_inv: LinMap, c_space, h) -> LinMap:
    """v(c⊗h) = S(h₁)u⁻¹(c)h₂."""
    return (Wiring(c_space, h.space).apply(u_inv, 0).apply(h.delta, 1).apply(h.S, 1)
            .permute(1, 0, 2).apply(h.mult_n(3), 0, 1, 2).map()
            .relabel(dom=tensor_space(c_space, h.space)))


def witness_from_crossed_iso(u: LinMap | ConvElement, tau: RightTwist, lam: RightTwist
                             ) -> EquivWitness:
    """Witness for τ ∼ λ on C⊗H from u satisfying the crossed isomorphism conditions."""
    from .crossed import crossed_from_twisting

    if isinstance(u, ConvElement):
        u = u.map
    _, hc = crossed_from_twisting(tau, force=True)
    c, h = hc.coalgebra, hc.hopf
    u_inv = convolution_inverse(ConvElement(u, c, h.algebra)).map
    w = EquivWitness(tau, lam, v_from_u(u_inv, c.space, h), "v[u]")
    return w


def crossed_iso_from_witness(w: EquivWitness) -> ConvElement:
    """u(c) = v⁻¹(c⊗1)."""
    base = w.mc.tensor_base
    if base is None:
        raise SpaceMismatch("witness does not live on a tensor product C⊗H")
    c = base.coalgebra if isinstance(base, ModuleCoalgebra) else base
    h = w.mc.hopf
    from .linmap import ground

    u = Wiring(c.space, ground(c.field)).apply(h.unit, 1).apply(w.v_inverse, 0, 1).map()
    return ConvElement(u, c, h.algebra)
