import pytest

from cotwist import catalog as cat
from cotwist.cocycles import TrivialHarrison
from cotwist.crossed import (WeakCoaction, build_crossed, check_crossed_correspondence,
                             check_crossed_iso, check_harrison, check_iso_conditions,
                             check_weak_coaction, crossed_from_twisting, phi_from_u,
                             trivial_coaction, trivial_cocycle_map, twisting_from_crossed,
                             u_from_iso)
from cotwist.errors import NotACocycle
from cotwist.field import QQ
from cotwist.linmap import identity, is_bijective, zero_map
from cotwist.modcoalg import check_module_coalgebra
from cotwist.suites._common import twisted_instance
from cotwist.twistings import twist_coalgebra

GOOD = ["harrison:C2-sign", "harrison:C2-degenerate", "harrison:H4-twist"]


def _trivial_data(hname, fld):
    mc = cat.module_coalgebra(f"trivial:{hname}", fld)
    return TrivialHarrison(mc, trivial_cocycle_map(mc.coalgebra, mc.hopf), "1⊗1").as_harrison()


def test_sign_cocycle_values():
    alpha = cat.harrison("harrison:C2-sign", QQ).alpha
    col = alpha.column("1")
    assert dict(zip(alpha.cod.basis, col)) == {"e0⊗e0": 1, "e0⊗e1": 1, "e1⊗e0": 1, "e1⊗e1": -1}


@pytest.mark.parametrize("name", GOOD)
def test_catalog_cocycles_pass(name, fld):
    th = cat.harrison(name, fld)
    assert th.report.passed, th.report.to_text()
    assert check_harrison(th.as_harrison()).passed


def test_bad_sign_fails_counit():
    th = cat.harrison("harrison:C2-sign-bad", QQ)
    counit = [r for r in th.report.failures() if r.name.startswith("counit")]
    assert counit
    assert counit[0].witness is not None
    with pytest.raises(NotACocycle):
        th.require()


def test_bad_h4_fails_cocycle_condition():
    rep = cat.harrison("harrison:H4-twist-bad", QQ).report
    assert [r.name for r in rep.failures()] == ["cocycle condition"]


@pytest.mark.parametrize("hname", cat.HOPF_NAMES)
def test_trivial_data_gives_tensor_coalgebra(hname, fld):
    hc = _trivial_data(hname, fld)
    assert check_crossed_correspondence(hc).passed
    cc = build_crossed(hc)
    t = twisting_from_crossed(hc)
    plain = t.mc.delta
    assert cc.delta == plain
    assert twist_coalgebra(t).delta == plain


@pytest.mark.parametrize("name", GOOD)
def test_correspondence(name, fld):
    hc = cat.harrison(name, fld).as_harrison()
    rep = check_crossed_correspondence(hc)
    assert rep.passed, rep.to_text()


def test_sign_crossed_coproduct_is_module_coalgebra(fld):
    hc = cat.harrison("harrison:C2-sign", fld).as_harrison()
    t = twisting_from_crossed(hc)
    assert check_module_coalgebra(twist_coalgebra(t)).passed


def test_roundtrip_through_twisting(fld):
    hc = cat.harrison("harrison:H4-twist", fld).as_harrison()
    w, back = crossed_from_twisting(twisting_from_crossed(hc))
    assert w.rho == hc.rho
    assert back.alpha == hc.alpha


def test_weak_coaction_checks(fld):
    h = cat.hopf("group:C2", fld)
    c = cat.module_coalgebra("trivial:group:C2", fld).coalgebra
    assert check_weak_coaction(trivial_coaction(c, h)).passed
    broken = WeakCoaction(c, h, zero_map(c.space, trivial_coaction(c, h).rho.cod))
    rep = check_weak_coaction(broken)
    assert not rep.passed
    assert rep.failures()[0].witness is not None


@pytest.mark.parametrize("name", ["harrison:C2-sign", "harrison:H4-twist"])
def test_gauge_isomorphism(name, fld):
    inst = twisted_instance(name, fld)
    cocycles, _ = inst.partner(1)
    hc, src = cocycles[0].as_harrison(), cocycles[1].as_harrison()
    u = inst.gauges[0]
    assert check_iso_conditions(u, src, hc).passed
    phi = phi_from_u(u, hc.coalgebra, hc.hopf)
    assert is_bijective(phi)
    assert check_crossed_iso(phi, build_crossed(src), build_crossed(hc)).passed
    assert u_from_iso(phi, hc.coalgebra, hc.hopf) == u


def test_wrong_orientation_fails():
    inst = twisted_instance("harrison:H4-twist", QQ)
    cocycles, _ = inst.partner(1)
    hc, src = cocycles[0].as_harrison(), cocycles[1].as_harrison()
    rep = check_iso_conditions(inst.gauges[0], hc, src)
    assert not rep.get("cocycle transported by u").passed


def test_unit_gauge_is_identity(fld):
    hc = cat.harrison("harrison:C2-sign", fld).as_harrison()
    c, h = hc.coalgebra, hc.hopf
    one = h.unit.relabel(dom=c.space)
    assert check_iso_conditions(one, hc, hc).passed
    phi = phi_from_u(one, c, h)
    assert phi == identity(phi.dom)
