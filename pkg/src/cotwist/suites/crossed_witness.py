"""Equivalent twistings of C⊗H and isomorphic crossed coproducts determine each other."""

from ..crossed import build_crossed, crossed_iso_from_u, phi_from_u
from ..equivalence import crossed_iso_from_witness, psi_from_witness, witness_from_crossed_iso
from ..errors import CotwistError
from ..linmap import chain, identity
from ..report import CheckReport
from ._common import COCYCLE_INSTANCES, twisted_instance

DEFAULT = "harrison:H4-twist"
INSTANCES = COCYCLE_INSTANCES


def run(instance: str, fld) -> CheckReport:
    inst = twisted_instance(instance, fld)
    cocycles, (tau, lam) = inst.partner(1)
    u = inst.gauges[0]
    hc, hc1 = cocycles[0].as_harrison(), cocycles[1].as_harrison()
    c, h = hc.coalgebra, hc.hopf
    rep = CheckReport(f"crossed isomorphisms and witnesses on {inst.mc.name}")
    try:
        phi = crossed_iso_from_u(u, build_crossed(hc1), build_crossed(hc))
        rep.record("u gives a crossed coproduct isomorphism", True)
    except CotwistError as exc:
        rep.record("u gives a crossed coproduct isomorphism", False, str(exc))
        phi = phi_from_u(u, c, h)
    w = witness_from_crossed_iso(u, tau, lam)
    rep.extend(w.report, "forward witness: ")
    back = crossed_iso_from_witness(w)
    rep.equal("backward construction recovers u", back.map, u)
    again = witness_from_crossed_iso(back, tau, lam)
    rep.equal("forward construction recovers v", again.v, w.v)
    psi = psi_from_witness(w)
    D = inst.mc.space
    phi = phi.relabel(dom=D, cod=D)
    rep.equal("psi o phi = id", chain(psi, phi), identity(D))
    rep.equal("phi o psi = id", chain(phi, psi), identity(D))
    return rep
