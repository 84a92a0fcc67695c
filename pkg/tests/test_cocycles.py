import pytest

from cotwist import catalog as cat
from cotwist.cocycles import (TrivialHarrison, TwistedCocycle, gauge_transform, lift_to_twisted,
                              restrict_to_harrison, twisting_from_twisted_cocycle)
from cotwist.crossed import trivial_cocycle_map, twisting_from_crossed
from cotwist.errors import NotACocycle, SpaceMismatch
from cotwist.field import QQ
from cotwist.linmap import chain
from cotwist.twistings import check_twisted_structures

POSITIVE = ["harrison:C2-sign", "harrison:C2-degenerate", "harrison:H4-twist"]


def _trivial(hname, fld):
    mc = cat.module_coalgebra(f"trivial:{hname}", fld)
    return TrivialHarrison(mc, trivial_cocycle_map(mc.coalgebra, mc.hopf), "1⊗1")


def _cocycles(fld):
    return [cat.harrison(n, fld) for n in POSITIVE] + [_trivial(h, fld) for h in cat.HOPF_NAMES]


def test_lift_restrict_roundtrip(fld):
    for th in _cocycles(fld):
        tc = lift_to_twisted(th)
        assert tc.report.passed, tc.report.to_text()
        back = restrict_to_harrison(tc, th.mc)
        assert back.alpha == th.alpha
        assert lift_to_twisted(back).alpha == tc.alpha


def test_trivial_lift_is_trivial(fld):
    # S(h₁)h₂ ⊗ S̄(h₄)h₃ collapses to ε(h)1⊗1
    th = _trivial("sweedler:H4", fld)
    tc = lift_to_twisted(th)
    h = th.hopf
    expect = chain(trivial_cocycle_map(th.mc.coalgebra, h), h.eps).relabel(dom=tc.mc.space)
    assert tc.alpha == expect


@pytest.mark.parametrize("name", POSITIVE)
def test_tau_of_lift_is_twisting(name, fld):
    th = cat.harrison(name, fld)
    t = twisting_from_twisted_cocycle(lift_to_twisted(th))
    assert t.report.passed, t.report.to_text()
    assert check_twisted_structures(t).passed
    assert t.map == twisting_from_crossed(th.as_harrison()).map


def test_bad_lift_rejected():
    th = cat.harrison("harrison:H4-twist-bad", QQ)
    with pytest.raises(NotACocycle):
        lift_to_twisted(th)
    tc = lift_to_twisted(th, force=True)
    assert not tc.report.get("cocycle condition").passed


def test_twisted_cocycle_needs_tensor_base():
    tc = lift_to_twisted(cat.harrison("harrison:C2-sign", QQ))
    bare = TwistedCocycle(cat.module_coalgebra("regular:dualgroup:C2"), tc.alpha, "a")
    with pytest.raises(SpaceMismatch):
        restrict_to_harrison(bare, force=True)


def test_gauge_transform_stays_cocycle(fld):
    for name in ("harrison:C2-sign", "harrison:H4-twist"):
        th = cat.harrison(name, fld)
        for u in cat.gauge_elements(th.hopf):
            moved = gauge_transform(th, u)
            assert moved.report.passed, moved.report.to_text()


def test_gauge_by_unit_is_identity(fld):
    th = cat.harrison("harrison:H4-twist", fld)
    assert gauge_transform(th, th.hopf.unit).alpha == th.alpha
