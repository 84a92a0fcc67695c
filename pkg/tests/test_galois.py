import pytest

from cotwist import catalog as cat
from cotwist.equivalence import psi_from_witness, reflexive_witness, witness_from_crossed_iso
from cotwist.errors import NotGaloisError, PsiNotColinear
from cotwist.field import QQ
from cotwist.galois import (GaloisCertificate, NotGalois, beta_raw, check_diamond,
                            check_extraction, check_galois, check_lemma31, extract_witness, regular_closed_forms,
                            require_galois, thm32_check)
from cotwist.linmap import LinMap, Space, chain, identity, tensor_space
from cotwist.matrix import Mat
from cotwist.suites._common import module_coalgebra_twist, twisted_instance
from cotwist.twistings import invert_twisting, sigma, twist_coalgebra


def test_regular_is_galois_with_closed_forms(hopf_name, fld):
    mc = cat.module_coalgebra(f"regular:{hopf_name}", fld)
    cert = check_galois(mc)
    assert isinstance(cert, GaloisCertificate)
    binv, dia = regular_closed_forms(mc.hopf)
    # B = k here, so the cotensor square is all of C⊗C
    assert cert.cotensor.space.dim == mc.space.dim ** 2
    assert chain(cert.beta_inv, cert.cotensor.coords) == binv
    assert chain(cert.diamond, cert.cotensor.coords) == dia


def test_diamond_identities(hopf_name, fld):
    cert = require_galois(cat.module_coalgebra(f"regular:{hopf_name}", fld))
    rep = check_diamond(cert)
    assert rep.passed, rep.to_text()


def test_trivial_is_not_galois(hopf_name, fld):
    mc = cat.module_coalgebra(f"trivial:{hopf_name}", fld)
    res = check_galois(mc)
    assert isinstance(res, NotGalois)
    # C⊗H has dim H but C□C = k
    assert (res.rank, res.dim_source, res.dim_target) == (1, mc.hopf.space.dim, 1)
    D = tensor_space(mc.space, mc.hopf.space)
    vec = LinMap(Space("one", ("e",), fld), D,
                 Mat.from_rows(fld, [[x] for x in res.kernel], (D.dim, 1)))
    assert chain(beta_raw(mc), vec).mat.is_zero()
    assert any(res.kernel)
    rep = res.report()
    assert rep.failures()[0].witness is not None
    with pytest.raises(NotGaloisError):
        require_galois(mc)


def test_beta_variants_same_rank_everywhere(mc_name, fld):
    rep = check_lemma31(cat.module_coalgebra(mc_name, fld))
    assert rep.passed, rep.to_text()


@pytest.mark.parametrize("name", ["regular:sweedler:H4", "regular:dualgroup:C2",
                                  "harrison:C2-sign", "harrison:H4-twist"])
def test_twisting_preserves_galois(name, fld):
    mc, tau = module_coalgebra_twist(name, fld)
    rep = thm32_check(mc, tau)
    assert rep.passed, rep.to_text()
    assert rep.get("square g o beta' = beta'^tau o f").passed
    assert isinstance(check_galois(twist_coalgebra(tau)), GaloisCertificate)


def test_forced_bad_twisting_fails_square():
    inst = twisted_instance("harrison:H4-twist-bad", QQ)
    tau = inst.tau
    if tau.inverse is None:
        invert_twisting(tau)
    rep = thm32_check(tau.mc, tau, force=True)
    assert not rep.passed
    assert rep.get("twisting: twisted coassociativity").witness is not None


@pytest.mark.parametrize("name", ["harrison:C2-sign", "harrison:H4-twist"])
def test_extract_roundtrip(name, fld):
    inst = twisted_instance(name, fld)
    _, (tau, lam) = inst.partner(1)
    cert = require_galois(inst.mc)
    for w in (reflexive_witness(tau), witness_from_crossed_iso(inst.gauges[0], tau, lam)):
        psi = psi_from_witness(w)
        assert extract_witness(psi, cert, w.tau, w.lam).v == w.v
        assert check_extraction(psi, cert, w.tau, w.lam).passed


def test_extract_identity_gives_unit():
    inst = twisted_instance("harrison:H4-twist", QQ)
    s = sigma(inst.mc)
    cert = require_galois(inst.mc)
    assert extract_witness(identity(inst.mc.space), cert, s, s).v == reflexive_witness(s).v


def test_extract_rejects_non_linear_map():
    inst = twisted_instance("harrison:H4-twist", QQ)
    mc = inst.mc
    s = sigma(mc)
    collapse = chain(mc.hopf.unit, mc.eps).relabel(cod=mc.space)
    with pytest.raises(PsiNotColinear):
        extract_witness(collapse, require_galois(mc), s, s)
