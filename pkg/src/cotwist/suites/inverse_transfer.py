"""An equivalence carries the inverse of τ to an inverse of λ."""

from ..equivalence import transfer_inverse, witness_from_crossed_iso
from ..errors import CotwistError
from ..report import CheckReport
from ..twistings import RightTwist, check_inverse_pair, invert_twisting
from ._common import COCYCLE_INSTANCES, twisted_instance

DEFAULT = "harrison:C2-sign"
INSTANCES = COCYCLE_INSTANCES


def run(instance: str, fld) -> CheckReport:
    inst = twisted_instance(instance, fld)
    _, (tau, lam) = inst.partner(1)
    rep = CheckReport(f"transferring the inverse on {inst.mc.name}")
    rep.extend(check_inverse_pair(tau), "tau: ")
    w = witness_from_crossed_iso(inst.gauges[0], tau, lam)
    rep.extend(w.report, "witness: ")
    try:
        mu = transfer_inverse(w)
    except CotwistError as exc:
        rep.record("transferred inverse", False, str(exc))
        return rep
    rep.extend(check_inverse_pair(lam, mu), "mu: ")
    direct = invert_twisting(RightTwist(lam.mc, lam.map, lam.name))
    rep.equal("mu equals the directly computed inverse", mu.map, direct.map)
    return rep
