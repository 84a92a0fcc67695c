"""Harrison cocycles for the trivial coaction and twisted cocycles on C⊗H correspond."""

from .. import catalog as cat
from ..cocycles import TrivialHarrison, lift_to_twisted, restrict_to_harrison
from ..crossed import trivial_cocycle_map
from ..report import CheckReport

DEFAULT = "harrison:C2-sign"
INSTANCES = cat.COCYCLES + tuple(f"trivial:{h}" for h in cat.HOPF_NAMES)


def _cocycle(instance: str, fld) -> TrivialHarrison:
    if instance.startswith("trivial:"):
        mc = cat.module_coalgebra(instance, fld)
        return TrivialHarrison(mc, trivial_cocycle_map(mc.coalgebra, mc.hopf), "1⊗1")
    return cat.harrison(instance, fld)


def run(instance: str, fld) -> CheckReport:
    th = _cocycle(instance, fld)
    rep = CheckReport(f"lifting and restricting {th.name}")
    rep.extend(th.report, "Harrison: ")
    tc = lift_to_twisted(th, force=True)
    rep.extend(tc.report, "lifted: ")
    back = restrict_to_harrison(tc, th.mc, force=True)
    rep.equal("restrict(lift(alpha)) = alpha", back.alpha, th.alpha)
    again = lift_to_twisted(back, force=True)
    rep.equal("lift(restrict(alpha^t)) = alpha^t", again.alpha, tc.alpha)
    return rep
