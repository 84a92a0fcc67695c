"""On a Galois coextension every induced map comes from a unique witness."""

from ..equivalence import psi_from_witness, reflexive_witness, witness_from_crossed_iso
from ..errors import CotwistError
from ..galois import check_extraction, extract_witness, require_galois
from ..linmap import chain, identity
from ..report import CheckReport
from ..twistings import sigma
from ._common import COCYCLE_INSTANCES, twisted_instance

DEFAULT = "harrison:H4-twist"
INSTANCES = COCYCLE_INSTANCES


def run(instance: str, fld) -> CheckReport:
    inst = twisted_instance(instance, fld)
    _, (tau, lam) = inst.partner(1)
    mc = inst.mc
    rep = CheckReport(f"extracting witnesses on {mc.name}")
    cert = require_galois(mc)
    s = sigma(mc)
    ext = extract_witness(identity(mc.space), cert, s, s)
    rep.equal("identity on C^sigma gives the unit witness", ext.v, reflexive_witness(s).v)
    for label, w in (("reflexive", reflexive_witness(tau)),
                     ("gauge", witness_from_crossed_iso(inst.gauges[0], tau, lam))):
        psi = psi_from_witness(w)
        rep.extend(check_extraction(psi, cert, w.tau, w.lam), f"{label}: ")
        rep.equal(f"{label}: extract(psi_v) = v", extract_witness(psi, cert, w.tau, w.lam).v, w.v)
    # c ↦ ε(c)1 is a counital coalgebra map but not H-linear
    collapse = chain(mc.hopf.unit, mc.eps).relabel(cod=mc.space)
    try:
        extract_witness(collapse, cert, s, s)
        rep.record("map that is not H-linear rejected", False)
    except CotwistError as exc:
        rep.record("map that is not H-linear rejected", True, type(exc).__name__)
    return rep
