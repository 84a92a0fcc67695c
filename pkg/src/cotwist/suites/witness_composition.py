"""Witnesses compose by convolution and the induced maps compose accordingly."""

from ..equivalence import compose_witness, invert_witness, psi_map, witness_from_crossed_iso
from ..linmap import chain, identity
from ..report import CheckReport
from ._common import COCYCLE_INSTANCES, twisted_instance

DEFAULT = "harrison:H4-twist"
INSTANCES = COCYCLE_INSTANCES


def run(instance: str, fld) -> CheckReport:
    inst = twisted_instance(instance, fld)
    _, (tau, lam, gam) = inst.partner(2)
    mc = inst.mc
    w1 = witness_from_crossed_iso(inst.gauges[0], tau, lam)
    w2 = witness_from_crossed_iso(inst.gauges[1], lam, gam)
    rep = CheckReport(f"composing witnesses on {mc.name}")
    comp = compose_witness(w1, w2)
    rep.extend(comp.report, "u*v: ")
    p1, p2 = psi_map(mc, w1.v), psi_map(mc, w2.v)
    rep.equal("psi of u*v = psi_u o psi_v", psi_map(mc, comp.v), chain(p2, p1))
    inv = invert_witness(w1)
    rep.extend(inv.report, "v^-1: ")
    rep.equal("psi of v^-1 inverts psi_v", chain(psi_map(mc, inv.v), p1), identity(mc.space))
    return rep
