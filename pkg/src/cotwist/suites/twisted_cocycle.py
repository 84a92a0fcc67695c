"""A twisted 2-cocycle α gives a twisting τ_α."""

from .. import catalog as cat
from ..cocycles import lift_to_twisted, twisting_from_twisted_cocycle
from ..crossed import twisting_from_crossed
from ..modcoalg import regular_comodule
from ..report import CheckReport
from ..twistings import check_twisted_structures

DEFAULT = "harrison:C2-sign"
INSTANCES = cat.COCYCLES


def run(instance: str, fld) -> CheckReport:
    th = cat.harrison(instance, fld)
    tc = lift_to_twisted(th, force=True)
    rep = CheckReport(f"twisting from the twisted cocycle of {instance}")
    rep.extend(tc.report, "twisted cocycle: ")
    t = twisting_from_twisted_cocycle(tc, force=True)
    rep.extend(t.report, "tau_alpha: ")
    rep.extend(check_twisted_structures(t, [regular_comodule(t.mc)]), "tau_alpha: ")
    rep.equal("tau_alpha agrees with the crossed coproduct twisting",
              t.map, twisting_from_crossed(th.as_harrison(), force=True).map)
    return rep
