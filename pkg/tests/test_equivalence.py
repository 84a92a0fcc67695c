import pytest

from cotwist.equivalence import (EquivWitness, compose_witness, crossed_iso_from_witness,
                                 invert_witness, psi_from_witness, psi_map, reflexive_witness,
                                 transfer_inverse, witness_from_crossed_iso)
from cotwist.errors import WitnessInvalid
from cotwist.field import QQ
from cotwist.hopf import ConvElement, convolve
from cotwist.linmap import chain, identity
from cotwist.suites._common import twisted_instance
from cotwist.twistings import RightTwist, invert_twisting, sigma, star_map

NAMES = ["harrison:C2-sign", "harrison:H4-twist"]


def _chain3(name, fld):
    inst = twisted_instance(name, fld)
    _, (tau, lam, gam) = inst.partner(2)
    w1 = witness_from_crossed_iso(inst.gauges[0], tau, lam)
    w2 = witness_from_crossed_iso(inst.gauges[1], lam, gam)
    return inst, w1, w2


@pytest.mark.parametrize("name", NAMES)
def test_relation_laws(name, fld):
    inst, w1, w2 = _chain3(name, fld)
    assert reflexive_witness(inst.tau).report.passed
    assert w1.report.passed and w2.report.passed
    assert w1.invertible
    assert invert_witness(w1).report.passed
    comp = compose_witness(w1, w2)
    assert comp.report.passed, comp.report.to_text()


@pytest.mark.parametrize("name", NAMES)
def test_induced_maps_compose(name, fld):
    inst, w1, w2 = _chain3(name, fld)
    mc = inst.mc
    comp = compose_witness(w1, w2)
    assert psi_map(mc, comp.v) == chain(psi_map(mc, w2.v), psi_map(mc, w1.v))
    assert chain(psi_map(mc, invert_witness(w1).v), psi_from_witness(w1)) == identity(mc.space)


def test_composite_order_matters():
    # on H4 the gauges 1+x and g do not commute, so v∗u is not a witness
    inst, w1, w2 = _chain3("harrison:H4-twist", QQ)
    wrong = convolve(w1.conv(w1.v), w2.conv(w2.v)).map
    assert not EquivWitness(w1.tau, w2.lam, wrong).report.passed


@pytest.mark.parametrize("name", NAMES)
def test_transfer_inverse_matches_direct(name, fld):
    inst = twisted_instance(name, fld)
    _, (tau, lam) = inst.partner(1)
    w = witness_from_crossed_iso(inst.gauges[0], tau, lam)
    mu = transfer_inverse(w)
    s = sigma(inst.mc).map
    assert star_map(inst.mc, mu.map, lam.map) == s
    assert star_map(inst.mc, lam.map, mu.map) == s
    direct = invert_twisting(RightTwist(lam.mc, lam.map, "lam"))
    assert mu.map == direct.map


@pytest.mark.parametrize("name", NAMES)
def test_crossed_iso_and_witness_inverse(name, fld):
    inst = twisted_instance(name, fld)
    _, (tau, lam) = inst.partner(1)
    u = inst.gauges[0]
    w = witness_from_crossed_iso(u, tau, lam)
    back = crossed_iso_from_witness(w)
    assert back.map == u
    assert witness_from_crossed_iso(back, tau, lam).v == w.v


def test_mismatched_twistings_fail_with_witness():
    inst = twisted_instance("harrison:H4-twist", QQ)
    _, (tau, lam) = inst.partner(1)
    w = witness_from_crossed_iso(inst.gauges[0], tau, lam)
    bad = EquivWitness(tau, tau, w.v)
    rep = bad.report
    assert not rep.passed
    assert rep.failures()[0].witness is not None
    with pytest.raises(WitnessInvalid):
        bad.require()
    with pytest.raises(WitnessInvalid):
        psi_from_witness(bad)


def test_zero_witness_fails_counit():
    inst = twisted_instance("harrison:C2-sign", QQ)
    zero = inst.tau.mc.eps.scale(0)
    v = chain(inst.hopf.unit, zero)
    rep = EquivWitness(inst.tau, inst.tau, v).report
    assert not rep.get("counit: ε∘v = ε").passed


def test_unit_witness_is_convolution_unit():
    inst = twisted_instance("harrison:H4-twist", QQ)
    w = reflexive_witness(inst.tau)
    one = ConvElement(w.v, inst.mc.coalgebra, inst.hopf.algebra)
    assert w.v_inverse == w.v
    assert convolve(one, one).map == w.v
