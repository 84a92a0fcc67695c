"""Twisting by an invertible twisting preserves the Galois property."""

from .. import catalog as cat
from ..galois import NotGalois, check_diamond, check_galois, thm32_check
from ..report import CheckReport
from ..twistings import twist_coalgebra
from ._common import module_coalgebra_twist

DEFAULT = "regular:sweedler:H4"
INSTANCES = cat.MODULE_COALGEBRA_NAMES + cat.COCYCLES


def run(instance: str, fld) -> CheckReport:
    mc, tau = module_coalgebra_twist(instance, fld)
    rep = CheckReport(f"Galois property of {mc.name} under {tau.name}")
    if not rep.record("tau is invertible", tau.inverse is not None):
        rep.extend(tau.report, "tau: ")
        return rep
    if not rep.extend(thm32_check(mc, tau, force=True)):
        return rep
    before = check_galois(mc)
    after = check_galois(twist_coalgebra(tau, force=True))
    rep.record("C Galois iff C^tau Galois",
               isinstance(before, NotGalois) == isinstance(after, NotGalois),
               f"before: {'not Galois' if isinstance(before, NotGalois) else 'Galois'}, "
               f"after: {'not Galois' if isinstance(after, NotGalois) else 'Galois'}")
    if not isinstance(after, NotGalois):
        rep.extend(check_diamond(after), "twisted translation map: ")
    return rep
