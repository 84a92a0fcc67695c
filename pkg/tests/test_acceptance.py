"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are printed even
under output capture) or directly with ``python -m tests.test_acceptance``.
"""

import dataclasses
import json

import numpy as np
import pytest
from click.testing import CliRunner

from cotwist import catalog as cat
from cotwist import serialize as ser
from cotwist.cli import builtin_bundle, main
from cotwist.cocycles import (TrivialHarrison, lift_to_twisted, restrict_to_harrison,
                              twisting_from_twisted_cocycle)
from cotwist.crossed import (WeakCoaction, build_crossed, check_crossed_correspondence,
                             check_crossed_iso, check_harrison, check_iso_conditions,
                             check_weak_coaction, crossed_from_twisting, trivial_coaction,
                             trivial_cocycle_map, twisting_from_crossed)
from cotwist.equivalence import (EquivWitness, compose_witness, crossed_iso_from_witness,
                                 check_psi, invert_witness, psi_from_witness, reflexive_witness,
                                 transfer_inverse, witness_from_crossed_iso)
from cotwist.errors import PsiNotColinear
from cotwist.exprlang import Env, check_equation
from cotwist.field import GF, QQ
from cotwist.galois import (GaloisCertificate, NotGalois, check_diamond, check_galois,
                            check_lemma31, extract_witness, regular_closed_forms,
                            require_galois, thm32_check)
from cotwist.hopf import check_hopf
from cotwist.linmap import chain, identity, is_bijective, zero_map, tensor_space
from cotwist.modcoalg import check_module_coalgebra
from cotwist.suites import verify
from cotwist.suites._common import module_coalgebra_twist, twisted_instance
from cotwist.twistings import (LeftTwist, RightTwist, invert_twisting, sigma, sigma_prime,
                               star_map, times_map, transpose_twisting, twist_coalgebra)

from .conftest import normalize_left, normalize_right, random_map

FIELDS = (QQ, GF(5))
PAIRS = ("harrison:C2-sign", "harrison:H4-twist")
CRITERIA = {}


def criterion(n, title):
    def register(fn):
        CRITERIA[n] = (title, fn)
        return fn
    return register


def _passes(rep, what):
    assert rep.passed, f"{what}:\n{rep.to_text()}"


def _fails_with_witness(rep, what):
    assert not rep.passed, f"{what} unexpectedly passed"
    assert any(r.witness is not None and r.witness.describe() for r in rep.failures()), \
        f"{what} failed without a witness"


# ---------------------------------------------------------------- 1


@criterion(1, "catalog Hopf algebras and module coalgebras satisfy their axioms; S^4 = id != S^2 on H4")
def axiom_suite():
    for f in FIELDS:
        for name in cat.HOPF_NAMES:
            _passes(check_hopf(cat.hopf(name, f)), f"{name} over {f}")
        for name in cat.MODULE_COALGEBRA_NAMES:
            _passes(check_module_coalgebra(cat.module_coalgebra(name, f)), f"{name} over {f}")
        h = cat.hopf("sweedler:H4", f)
        s2 = chain(h.S, h.S)
        assert s2 != identity(h.space)
        assert chain(s2, s2) == identity(h.space)


# ---------------------------------------------------------------- 2


@criterion(2, "star and times products are associative and unital on 20 random normalized maps each")
def monoid_suite():
    rng = np.random.default_rng(20240601)
    for f in FIELDS:
        for name in cat.MODULE_COALGEBRA_NAMES:
            mc = cat.module_coalgebra(name, f)
            H, C = mc.hopf.space, mc.space
            rs = [normalize_right(mc, random_map(rng, C, tensor_space(H, C))) for _ in range(20)]
            ls = [normalize_left(mc, random_map(rng, C, tensor_space(C, H))) for _ in range(20)]
            s, sp = sigma(mc).map, sigma_prime(mc).map
            for i in range(20):
                a, b, c = rs[i], rs[(i + 1) % 20], rs[(i + 2) % 20]
                assert star_map(mc, star_map(mc, a, b), c) == star_map(mc, a, star_map(mc, b, c))
                assert star_map(mc, s, a) == a and star_map(mc, a, s) == a
                a, b, c = ls[i], ls[(i + 1) % 20], ls[(i + 2) % 20]
                assert times_map(mc, times_map(mc, a, b), c) == times_map(mc, a, times_map(mc, b, c))
                assert times_map(mc, sp, a) == a and times_map(mc, a, sp) == a


# ---------------------------------------------------------------- 3


@criterion(3, "transposition exchanges sigma and sigma' and is a bijection on invertible twistings")
def transpose_suite():
    for f in FIELDS:
        for name in cat.MODULE_COALGEBRA_NAMES:
            mc = cat.module_coalgebra(name, f)
            s, sp = invert_twisting(sigma(mc)), invert_twisting(sigma_prime(mc))
            assert transpose_twisting(s).map == sp.map
            assert transpose_twisting(sp).map == s.map
        for name in PAIRS:
            tau = twisted_instance(name, f).tau
            for t in (tau, tau.inverse):
                left = transpose_twisting(t)
                assert isinstance(left, LeftTwist)
                _passes(left.report, f"l({t.name})")
                back = transpose_twisting(left)
                assert back.map == t.map
                assert transpose_twisting(back).map == left.map
            _passes(verify("prop1.2", name, f), f"transpose suite on {name}")


# ---------------------------------------------------------------- 4


def _trivial(hname, f):
    mc = cat.module_coalgebra(f"trivial:{hname}", f)
    return TrivialHarrison(mc, trivial_cocycle_map(mc.coalgebra, mc.hopf), "1⊗1")


@criterion(4, "crossed coproduct data and twistings correspond exactly; both coproducts agree")
def crossed_suite():
    for f in FIELDS:
        data = [_trivial(h, f).as_harrison() for h in cat.HOPF_NAMES]
        data += [cat.harrison(n, f).as_harrison() for n in PAIRS]
        for hc in data:
            _passes(check_crossed_correspondence(hc), "correspondence")
            t = twisting_from_crossed(hc)
            w, back = crossed_from_twisting(t)
            assert w.rho == hc.rho
            assert back.alpha == hc.alpha
            assert twisting_from_crossed(back).map == t.map
            assert twist_coalgebra(t).delta == build_crossed(hc).delta
        # for trivial data both are the plain tensor coalgebra
        for hc in data[:len(cat.HOPF_NAMES)]:
            assert build_crossed(hc).delta == twisting_from_crossed(hc).mc.delta


# ---------------------------------------------------------------- 5


@criterion(5, "cocycle lift/restrict roundtrips are exact and lifted cocycles give twistings")
def cocycle_suite():
    for f in FIELDS:
        ths = [_trivial(h, f) for h in cat.HOPF_NAMES]
        ths += [cat.harrison(n, f) for n in PAIRS]
        for th in ths:
            tc = lift_to_twisted(th)
            _passes(tc.report, "lifted cocycle")
            back = restrict_to_harrison(tc, th.mc)
            assert back.alpha == th.alpha
            assert lift_to_twisted(back).alpha == tc.alpha
            t = twisting_from_twisted_cocycle(tc)
            _passes(t.report, "twisting of the lift")
        for inst in ["harrison:C2-sign"] + [f"trivial:{h}" for h in cat.HOPF_NAMES]:
            _passes(verify("prop3.4", inst, f), f"lift/restrict suite on {inst}")
        for inst in PAIRS:
            _passes(verify("prop2.2", inst, f), f"twisted cocycle suite on {inst}")


# ---------------------------------------------------------------- 6


@criterion(6, "equivalence witnesses form an equivalence relation; inverse transfer and crossed isos agree")
def equivalence_suite():
    for f in FIELDS:
        for name in PAIRS:
            inst = twisted_instance(name, f)
            _, (tau, lam, gam) = inst.partner(2)
            w1 = witness_from_crossed_iso(inst.gauges[0], tau, lam)
            w2 = witness_from_crossed_iso(inst.gauges[1], lam, gam)
            for w in (reflexive_witness(tau), w1, w2, invert_witness(w1), compose_witness(w1, w2)):
                _passes(w.report, f"witness {w.tau.name} ~ {w.lam.name}")
            mu = transfer_inverse(w1)
            s = sigma(inst.mc).map
            assert star_map(inst.mc, mu.map, lam.map) == s
            assert star_map(inst.mc, lam.map, mu.map) == s
            assert mu.map == invert_twisting(RightTwist(lam.mc, lam.map, "lam")).map
            u = crossed_iso_from_witness(w1)
            assert u.map == inst.gauges[0]
            assert witness_from_crossed_iso(u, tau, lam).v == w1.v
            for tid in ("prop2.3", "lemma2.4a", "thm2.5", "thm3.5"):
                _passes(verify(tid, name, f), f"{tid} on {name}")


# ---------------------------------------------------------------- 7


@criterion(7, "Galois certificates, translation map identities, rank lemma, twisting square, extraction")
def galois_suite():
    for f in FIELDS:
        for h in cat.HOPF_NAMES:
            mc = cat.module_coalgebra(f"regular:{h}", f)
            cert = check_galois(mc)
            assert isinstance(cert, GaloisCertificate), h
            binv, dia = regular_closed_forms(mc.hopf)
            assert chain(cert.beta_inv, cert.cotensor.coords) == binv
            assert chain(cert.diamond, cert.cotensor.coords) == dia
            _passes(check_diamond(cert), f"translation map on {h}")
            triv = check_galois(cat.module_coalgebra(f"trivial:{h}", f))
            assert isinstance(triv, NotGalois)
        for name in cat.MODULE_COALGEBRA_NAMES:
            _passes(check_lemma31(cat.module_coalgebra(name, f)), f"rank lemma on {name}")
        for name in ("regular:sweedler:H4", "regular:dualgroup:C2") + PAIRS:
            mc, tau = module_coalgebra_twist(name, f)
            rep = thm32_check(mc, tau)
            _passes(rep, f"twisting square on {name}")
            twisted = check_galois(twist_coalgebra(tau))
            assert isinstance(twisted, GaloisCertificate)
            assert is_bijective(twisted.beta)
        for name in PAIRS:
            inst = twisted_instance(name, f)
            _, (tau, lam) = inst.partner(1)
            cert = require_galois(inst.mc)
            for w in (reflexive_witness(tau), witness_from_crossed_iso(inst.gauges[0], tau, lam)):
                psi = psi_from_witness(w)
                assert extract_witness(psi, cert, w.tau, w.lam).v == w.v
            _passes(verify("thm3.3", name, f), f"extraction suite on {name}")


# ---------------------------------------------------------------- 8


def _negative_reports():
    """(what, report) for every checker on its designated corrupted input."""
    out = []
    h = cat.hopf("sweedler:H4")
    out.append(("check_hopf: zero counit", check_hopf(dataclasses.replace(h, eps=h.eps.scale(0)))))

    mc = cat.module_coalgebra("regular:sweedler:H4")
    out.append(("check_module_coalgebra: doubled action",
                check_module_coalgebra(dataclasses.replace(mc, act=mc.act.scale(2)))))

    out.append(("right twisting: non-coassociative", twisted_instance("harrison:H4-twist-bad", QQ).tau.report))
    out.append(("left twisting: doubled sigma'",
                LeftTwist(mc, sigma_prime(mc).map.scale(2), "bad").report))

    c2 = cat.hopf("group:C2")
    c = cat.module_coalgebra("trivial:group:C2").coalgebra
    zero = WeakCoaction(c, c2, zero_map(c.space, trivial_coaction(c, c2).rho.cod))
    out.append(("weak coaction: zero", check_weak_coaction(zero)))

    out.append(("Harrison cocycle: bad sign", check_harrison(cat.harrison("harrison:C2-sign-bad").as_harrison())))
    out.append(("twisted cocycle: forced bad lift",
                lift_to_twisted(cat.harrison("harrison:H4-twist-bad"), force=True).report))

    inst = twisted_instance("harrison:H4-twist", QQ)
    cocycles, (tau, lam) = inst.partner(1)
    w = witness_from_crossed_iso(inst.gauges[0], tau, lam)
    out.append(("equivalence witness: wrong target", EquivWitness(tau, tau, w.v).report))
    hc, src = cocycles[0].as_harrison(), cocycles[1].as_harrison()
    out.append(("crossed iso conditions: wrong orientation", check_iso_conditions(inst.gauges[0], hc, src)))
    a, b = build_crossed(src), build_crossed(hc)
    out.append(("crossed iso: identity", check_crossed_iso(identity(a.delta.dom), a, b)))
    out.append(("induced map: identity", check_psi(identity(tau.mc.space), twist_coalgebra(tau),
                                                   twist_coalgebra(lam))))

    out.append(("Galois: trivial C = k", check_galois(cat.module_coalgebra("trivial:sweedler:H4")).report()))
    cert = require_galois(cat.module_coalgebra("regular:sweedler:H4"))
    out.append(("translation map: doubled",
                check_diamond(dataclasses.replace(cert, diamond=cert.diamond.scale(2)))))
    bad = twisted_instance("harrison:H4-twist-bad", QQ).tau
    out.append(("twisting square: forced bad twisting", thm32_check(bad.mc, bad, force=True)))

    env = Env.for_module_coalgebra(inst.mc, tau=inst.tau.map)
    out.append(("equation: plain vs twisted coproduct",
                check_equation("C.delta", "(C.act x id[C]) o (id[C] x tau) o C.delta", env)))
    return out


def _exit_codes():
    runner = CliRunner()
    doc = ser.to_doc(builtin_bundle("sweedler:H4", QQ))
    next(m for m in doc["maps"] if m["name"] == "H.eps")["matrix"][0][1] = "0"
    with runner.isolated_filesystem():
        with open("bad.json", "w", encoding="utf-8") as fh:
            json.dump(doc, fh)
        codes = {
            0: runner.invoke(main, ["check", "hopf", "sweedler:H4"], env={"COTWIST_FIELD": ""}),
            1: runner.invoke(main, ["check", "hopf", "bad.json"], env={"COTWIST_FIELD": ""}),
            2: runner.invoke(main, ["check", "hopf", "group:C3"], env={"COTWIST_FIELD": ""}),
        }
    for want, res in codes.items():
        assert res.exit_code == want, f"expected exit {want}, got {res.exit_code}: {res.output}"
    assert "witness at g:" in codes[1].output


@criterion(8, "every checker fails with a witness on its corrupted input; exit codes 0/1/2")
def negative_controls():
    for what, rep in _negative_reports():
        _fails_with_witness(rep, what)
    inst = twisted_instance("harrison:H4-twist", QQ)
    s = sigma(inst.mc)
    collapse = chain(inst.hopf.unit, inst.mc.eps).relabel(cod=inst.mc.space)
    with pytest.raises(PsiNotColinear, match="witness"):
        extract_witness(collapse, require_galois(inst.mc), s, s)
    _exit_codes()


# ---------------------------------------------------------------- runner


def _run(n):
    title, fn = CRITERIA[n]
    try:
        fn()
    except AssertionError as exc:
        return False, f"[FAIL] criterion {n}: {title}\n       {exc}"
    return True, f"[PASS] criterion {n}: {title}"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, line = _run(n)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    import sys

    results = [_run(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
