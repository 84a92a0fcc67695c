import pytest
from hypothesis import given
from hypothesis import strategies as st

from cotwist import catalog as cat
from cotwist.errors import FieldMismatch, NotInvertible, UnknownName
from cotwist.field import GF, QQ
from cotwist.hopf import (ConvElement, HopfAlgebra, check_hopf, conv_unit, convolution_inverse,
                          convolve, iterated_comult)
from cotwist.linmap import chain, from_images, identity
from cotwist.modcoalg import check_module_coalgebra

from .conftest import FIELDS, linmaps


def test_catalog_hopf_axioms(hopf_name, fld):
    rep = check_hopf(cat.hopf(hopf_name, fld))
    assert rep.passed, rep.to_text()


def test_catalog_module_coalgebras(mc_name, fld):
    rep = check_module_coalgebra(cat.module_coalgebra(mc_name, fld))
    assert rep.passed, rep.to_text()


def test_sweedler_antipode_order(fld):
    h = cat.hopf("sweedler:H4", fld)
    s = h.S
    s2 = chain(s, s)
    assert s2 != identity(h.space)
    assert chain(s2, s2) == identity(h.space)


def test_sweedler_antipode_values():
    h = cat.hopf("sweedler:H4")
    assert h.S.column("x") == [0, 0, 0, -1]   # S(x) = -gx
    assert h.S.column("gx") == [0, 0, 1, 0]   # S(gx) = x


def test_group_antipode_is_inverse():
    h = cat.hopf("group:C4")
    assert h.S.column("g") == [0, 0, 0, 1]
    assert h.S.column("g2") == [0, 0, 1, 0]


def test_dual_group_multiplication():
    h = cat.hopf("dualgroup:C2")
    # e0 e1 = 0, e1 e1 = e1
    assert h.mult.column("e0⊗e1") == [0, 0]
    assert h.mult.column("e1⊗e1") == [0, 1]


def test_sweedler_rejects_characteristic_two():
    with pytest.raises(FieldMismatch):
        cat.hopf("sweedler:H4", GF(2))


def test_group_algebra_in_characteristic_two():
    assert check_hopf(cat.hopf("group:C2", GF(2))).passed


def test_unknown_name():
    with pytest.raises(UnknownName):
        cat.hopf("group:C3")


def _corrupt_eps(h: HopfAlgebra) -> HopfAlgebra:
    k = h.eps.cod
    images = {b: {"1": 1} for b in h.space.basis}
    images[h.space.basis[1]] = {"1": 0}
    bad = from_images(h.space, k, images)
    return HopfAlgebra(h.space, h.mult, h.unit, h.delta, bad, h.S, h.name)


def test_corrupted_counit_fails_with_witness():
    rep = check_hopf(_corrupt_eps(cat.hopf("group:C2")))
    assert not rep.passed
    failed = rep.get("left counit")
    assert not failed.passed
    assert failed.witness is not None and failed.witness.label == "g"


def test_iterated_comult_three(fld):
    h = cat.hopf("group:C2", fld)
    d3 = iterated_comult(h.coalgebra, 2)   # C -> C⊗C⊗C
    assert d3.column("g") == [fld.scalar(int(i == 7)) for i in range(8)]


# ---------------------------------------------------------------- convolution


@pytest.mark.parametrize("name", cat.HOPF_NAMES)
@given(data=st.data())
def test_convolution_associative(name, data):
    for f in FIELDS:
        h = cat.hopf(name, f)
        c, a = h.coalgebra, h.algebra
        x, y, z = (ConvElement(data.draw(linmaps(h.space, h.space)), c, a) for _ in range(3))
        assert convolve(convolve(x, y), z).map == convolve(x, convolve(y, z)).map
        one = conv_unit(c, a)
        assert convolve(one, x).map == x.map
        assert convolve(x, one).map == x.map


def test_antipode_is_convolution_inverse_of_identity(hopf_name, fld):
    h = cat.hopf(hopf_name, fld)
    ident = ConvElement(identity(h.space), h.coalgebra, h.algebra)
    assert convolution_inverse(ident).map == h.S


def test_zero_map_not_invertible():
    h = cat.hopf("group:C2", QQ)
    zero = ConvElement(identity(h.space).scale(0), h.coalgebra, h.algebra)
    with pytest.raises(NotInvertible):
        convolution_inverse(zero)
