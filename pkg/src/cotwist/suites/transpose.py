"""Right and left twistings correspond through ℓ and r."""

from .. import catalog as cat
from ..report import CheckReport
from ..twistings import (check_inverse_pair, invert_twisting, sigma, sigma_prime,
                         transpose_twisting)
from ._common import module_coalgebra_twist

DEFAULT = "harrison:C2-sign"
INSTANCES = cat.COCYCLES + cat.MODULE_COALGEBRA_NAMES


def run(instance: str, fld) -> CheckReport:
    mc, tau = module_coalgebra_twist(instance, fld)
    rep = CheckReport(f"transposing twistings on {mc.name}")
    s, sp = sigma(mc), sigma_prime(mc)
    invert_twisting(s)
    invert_twisting(sp)
    rep.equal("l(sigma) = sigma'", transpose_twisting(s).map, sp.map)
    rep.equal("r(sigma') = sigma", transpose_twisting(sp).map, s.map)
    rep.extend(tau.report, "tau: ")
    if not rep.record("tau is invertible", tau.inverse is not None):
        return rep
    for t in (tau, tau.inverse):
        left = transpose_twisting(t)
        rep.extend(left.report, f"l({t.name}): ")
        rep.extend(check_inverse_pair(left), f"l({t.name}): ")
        rep.extend(left.inverse.report, f"l({t.name})': ")
        back = transpose_twisting(left)
        rep.equal(f"r(l({t.name})) = {t.name}", back.map, t.map)
        rep.equal(f"r(l({t.name})') = {t.name}'", back.inverse.map, t.inverse.map)
        again = transpose_twisting(back)
        rep.equal(f"l(r(gamma)) = gamma for gamma = l({t.name})", again.map, left.map)
    return rep
