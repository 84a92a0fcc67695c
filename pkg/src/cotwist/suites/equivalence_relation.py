"""Equivalence of twistings is reflexive, symmetric and transitive."""

from ..equivalence import (compose_witness, invert_witness, psi_from_witness, reflexive_witness,
                           witness_from_crossed_iso)
from ..errors import CotwistError
from ..report import CheckReport
from ._common import COCYCLE_INSTANCES, twisted_instance

DEFAULT = "harrison:H4-twist"
INSTANCES = COCYCLE_INSTANCES


def run(instance: str, fld) -> CheckReport:
    inst = twisted_instance(instance, fld)
    _, (tau, lam, gam) = inst.partner(2)
    u1, u2 = inst.gauges[:2]
    rep = CheckReport(f"equivalence of twistings on {inst.mc.name}")
    rep.extend(reflexive_witness(tau).report, "reflexive: ")
    w1 = witness_from_crossed_iso(u1, tau, lam)
    w2 = witness_from_crossed_iso(u2, lam, gam)
    rep.extend(w1.report, "tau ~ lambda: ")
    rep.extend(w2.report, "lambda ~ gamma: ")
    rep.record("tau ~ lambda: witness convolution invertible", w1.invertible)
    rep.extend(invert_witness(w1).report, "symmetric: ")
    rep.extend(compose_witness(w1, w2).report, "transitive: ")
    try:
        psi_from_witness(w1)
        rep.record("induced map is an isomorphism over B", True)
    except CotwistError as exc:
        rep.record("induced map is an isomorphism over B", False, str(exc))
    return rep
