"""Instances shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass

from .. import catalog as cat
from ..cocycles import TrivialHarrison, gauge_transform
from ..crossed import twisting_from_crossed
from ..errors import NotInvertible, UnknownName
from ..field import FieldSpec
from ..linmap import LinMap
from ..modcoalg import ModuleCoalgebra
from ..twistings import RightTwist, invert_twisting, sigma


@dataclass
class TwistedInstance:
    """A Harrison cocycle on C = k, its twisting τ of C⊗H ≅ H and gauge partners."""

    cocycle: TrivialHarrison
    tau: RightTwist
    gauges: list[LinMap]

    @property
    def mc(self) -> ModuleCoalgebra:
        return self.tau.mc

    @property
    def hopf(self):
        return self.cocycle.hopf

    def partner(self, steps: int = 1) -> tuple[list[TrivialHarrison], list[RightTwist]]:
        """Cocycles α_i obtained by applying the gauges in turn, with their twistings."""
        cocycles, twists = [self.cocycle], [self.tau]
        for i, u in enumerate(self.gauges[:steps]):
            nxt = gauge_transform(cocycles[-1], u, f"{self.cocycle.name}[u{i + 1}]")
            t = RightTwist(self.mc, twisting_from_crossed(nxt.as_harrison(), force=True).map,
                           f"tau[u{i + 1}]")
            cocycles.append(nxt)
            twists.append(t)
        return cocycles, twists


def twisted_instance(name: str, fld: FieldSpec) -> TwistedInstance:
    th = cat.harrison(name, fld)
    tau = twisting_from_crossed(th.as_harrison(), force=True)
    tau = RightTwist(tau.mc, tau.map, "tau")
    try:
        invert_twisting(tau)
    except NotInvertible:
        pass
    try:
        gauges = cat.gauge_elements(th.hopf)
    except UnknownName:
        gauges = []
    return TwistedInstance(th, tau, gauges)


def module_coalgebra_twist(name: str, fld: FieldSpec) -> tuple[ModuleCoalgebra, RightTwist]:
    """For "regular:<H>" use the catalog twist of H transported to C = H (σ if none);
    for a cocycle name use its twisting of k⊗H; for "trivial:<H>" use σ."""
    if name.startswith("harrison:"):
        inst = twisted_instance(name, fld)
        return inst.mc, inst.tau
    mc = cat.module_coalgebra(name, fld)
    kind, _, hname = name.partition(":")
    if kind == "regular" and hname in cat.REGULAR_TWISTS:
        inst = twisted_instance(cat.REGULAR_TWISTS[hname], fld)
        tau = RightTwist(mc, inst.tau.map, "tau")
        invert_twisting(tau)
        return mc, tau
    s = sigma(mc)
    invert_twisting(s)
    return mc, s


COCYCLE_INSTANCES = ("harrison:C2-sign", "harrison:H4-twist")
