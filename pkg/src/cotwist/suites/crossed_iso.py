"""Isomorphic crossed coproducts from a convolution invertible u: C -> H."""

from .. import catalog as cat
from ..crossed import (build_crossed, check_crossed_correspondence, check_crossed_iso,
                       check_iso_conditions, phi_from_u, u_from_iso)
from ..report import CheckReport
from ._common import twisted_instance

DEFAULT = "harrison:C2-sign"
INSTANCES = cat.COCYCLES


def run(instance: str, fld) -> CheckReport:
    inst = twisted_instance(instance, fld)
    hc = inst.cocycle.as_harrison()
    rep = CheckReport(f"crossed coproducts for {instance}")
    rep.extend(check_crossed_correspondence(hc))
    target = build_crossed(hc, force=True)
    rep.extend(target.report, "crossed coproduct: ")
    cocycles, _ = inst.partner(1)
    src_hc = cocycles[1].as_harrison()
    rep.extend(src_hc.report, "gauge partner: ")
    source = build_crossed(src_hc, force=True)
    u = inst.gauges[0]
    c, h = hc.coalgebra, hc.hopf
    rep.extend(check_iso_conditions(u, src_hc, hc), "u: ")
    phi = phi_from_u(u, c, h)
    rep.extend(check_crossed_iso(phi, source, target), "phi: ")
    rep.equal("u recovered from phi", u_from_iso(phi, c, h), u)
    return rep
