"""Command line interface.

Every structure argument is either a JSON structure document or a catalog
name (``sweedler:H4``, ``regular:group:C2``, ``harrison:C2-sign``, or
``tau:harrison:C2-sign`` for the twisting of C⊗H built from a cocycle).
Several arguments are merged into one document.

Exit codes: 0 when every check passes, 1 when some check fails (the full
report is still printed), 2 for malformed input or unknown names.
"""

from __future__ import annotations

import functools
import json
import os
import re
import sys
from pathlib import Path

import click

from . import catalog as cat
from . import serialize as ser
from .cocycles import (TrivialHarrison, TwistedCocycle, lift_to_twisted, restrict_to_harrison,
                       twisting_from_twisted_cocycle)
from .crossed import (HarrisonCocycle, WeakCoaction, build_crossed, check_crossed_correspondence,
                      check_crossed_iso, crossed_from_twisting, phi_from_u, trivial_coaction,
                      twisting_from_crossed)
from .equivalence import (EquivWitness, crossed_iso_from_witness, psi_from_witness, psi_map,
                          transfer_inverse, witness_from_crossed_iso)
from .errors import (CotwistError, FieldMismatch, FormatError, NotInvertible, ParseError,
                     SNotBijective, SpaceMismatch, UnknownName)
from .exprlang import Env, check_equation_file
from .field import FieldSpec, field_from_option
from .galois import (NotGalois, check_diamond, check_galois, check_lemma31, check_extraction,
                     thm32_check)
from .hopf import check_hopf
from .linmap import LinMap
from .modcoalg import ModuleCoalgebra, check_module_coalgebra
from .report import CheckReport
from .suites import THEOREM_IDS, verify
from .twistings import (LeftTwist, RightTwist, check_inverse_pair, check_twisted_structures,
                        invert_twisting, transpose_twisting, twist_coalgebra)

# errors that mean "the input is unusable" rather than "a check failed"
INPUT_ERRORS = (FormatError, ParseError, UnknownName, FieldMismatch, SpaceMismatch, SNotBijective)


# ---------------------------------------------------------------- resolving arguments


def _twist_bundle(name: str, fld: FieldSpec) -> ser.Bundle:
    th = cat.harrison(name, fld)
    t = twisting_from_crossed(th.as_harrison(), force=True)
    t = RightTwist(t.mc, t.map, "tau")
    b = ser.mc_bundle(t.mc, f"twisting of C⊗H from {name}")
    b.name = f"tau:{name}"
    try:
        invert_twisting(t)
    except NotInvertible:
        add_twisting(b, t)
    else:
        add_twisting(b, t, "tau^-1")
        add_twisting(b, t.inverse, "tau")
    return b


def _gauge_bundle(name: str, fld: FieldSpec) -> ser.Bundle:
    """τ from a cocycle, its partner λ under the first gauge element u, and the witness."""
    from .suites._common import twisted_instance

    inst = twisted_instance(name, fld)
    if not inst.gauges:
        raise UnknownName(f"no gauge elements known for {inst.hopf.name}")
    _, (tau, lam) = inst.partner(1)
    lam = RightTwist(lam.mc, lam.map, "lam")
    w = witness_from_crossed_iso(inst.gauges[0], tau, lam)
    b = _twist_bundle(name, fld)
    b.name = f"gauge:{name}"
    b.provenance = [f"gauge transform of {name}"]
    add_twisting(b, lam)
    b.add_map("u", "map", inst.gauges[0].relabel(dom=b.spaces["C0"]), ("C0",), ("H",))
    b.add_map("v", "witness", w.v, ser.c_legs(tau.mc), ("H",))
    return b


def builtin_bundle(name: str, fld: FieldSpec) -> ser.Bundle:
    if name in cat.HOPF_NAMES:
        return ser.hopf_bundle(cat.hopf(name, fld), f"catalog {name}")
    if name.startswith(("regular:", "trivial:")):
        return ser.mc_bundle(cat.module_coalgebra(name, fld), f"catalog {name}")
    if name.startswith("harrison:"):
        th = cat.harrison(name, fld)
        b = ser.mc_bundle(th.mc, f"catalog {name}")
        b.name = name
        b.add_map("alpha", "cocycle", th.alpha, ("C",), ("H", "H"))
        return b
    if name.startswith("tau:"):
        return _twist_bundle(name[4:], fld)
    if name.startswith("gauge:"):
        return _gauge_bundle(name[6:], fld)
    raise UnknownName(f"unknown structure {name!r}")


def resolve(refs, ctx: Ctx) -> ser.Bundle:
    """Merge the documents or catalog names in ``refs`` into one bundle.

    Catalog names are built over the selected field; a document declaring a
    different field is rejected when the field was chosen explicitly.
    """
    fld = ctx.field
    out = None
    for ref in refs:
        path = Path(ref)
        if ref.endswith(".json") or path.is_file():
            b = ser.load(path)
            if ctx.pinned and b.field != fld:
                raise FieldMismatch(f"{ref} is over {b.field}, but the selected field is {fld}")
        else:
            b = builtin_bundle(ref, fld)
        out = b if out is None else out.merge(b)
    if out is None:
        raise UnknownName("no structure given")
    return out


def add_twisting(b: ser.Bundle, t: RightTwist | LeftTwist, inverse: str | None = None):
    legs = ser.c_legs(t.mc)
    cod = ("H",) + legs if isinstance(t, RightTwist) else legs + ("H",)
    b.add_map(t.name, "twisting", t.map, legs, cod, inverse)


def _twistings(b: ser.Bundle, side: str):
    legs = ("C0", "H") if "C0" in b.spaces else ("C",)
    want = ("H",) + legs if side == "right" else legs + ("H",)
    return [n for n in b.of_role("twisting") if b.maps[n].codomain == want]


def _default_pair(b: ser.Bundle) -> list[str]:
    """Right twistings, skipping any stored as the inverse of an earlier one."""
    out, seen = [], set()
    for n in _twistings(b, "right"):
        if n not in seen:
            out.append(n)
        seen.update((n, b.maps[n].inverse))
    return out


def load_twisting(b: ser.Bundle, name: str | None, side: str = "right"):
    mc = b.module_coalgebra()
    names = _twistings(b, side)
    if name is None:
        if not names:
            raise UnknownName(f"document has no {side} twisting")
        name = names[0]
    elif name not in names:
        raise UnknownName(f"no {side} twisting named {name!r}; have {', '.join(names) or 'none'}")
    cls = RightTwist if side == "right" else LeftTwist
    t = cls(mc, b.linmap(name), name)
    inv = b.maps[name].inverse
    if inv:
        t.inverse = cls(mc, b.linmap(inv), inv)
        t.inverse.inverse = t
    return t


def _base_coalgebra(b: ser.Bundle):
    mc = b.module_coalgebra()
    if mc.tensor_base is not None:
        base = mc.tensor_base
        return base.coalgebra if isinstance(base, ModuleCoalgebra) else base
    return mc.coalgebra


def load_harrison(b: ser.Bundle, name: str | None = None) -> HarrisonCocycle:
    c = b.module_coalgebra().coalgebra
    h = b.hopf()
    coactions = b.of_role("coaction")
    w = WeakCoaction(c, h, b.linmap(coactions[0])) if coactions else trivial_coaction(c, h)
    alpha = b.pick("cocycle", name)
    return HarrisonCocycle(w, b.linmap(alpha), alpha)


# ---------------------------------------------------------------- output


class Ctx:
    def __init__(self, field: FieldSpec, as_json: bool, pinned: bool = False):
        self.field = field
        self.json = as_json
        self.pinned = pinned  # field chosen by --field or $COTWIST_FIELD


def emit(ctx: Ctx, reports: list[CheckReport], extra: dict | None = None):
    passed = all(r.passed for r in reports)
    if ctx.json:
        doc = {"passed": passed, "reports": [r.to_dict() for r in reports]}
        if extra:
            doc.update(extra)
        click.echo(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        for r in reports:
            click.echo(r.to_text())
        if extra:
            for k, v in extra.items():
                click.echo(f"{k}: {v}")
    sys.exit(0 if passed else 1)


def write_out(out: str | None, b: ser.Bundle) -> dict:
    if out:
        ser.dump(b, out)
        return {"written": out}
    return {}


def _run(fn):
    """Map input errors to exit code 2, other library errors to a failed report."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except INPUT_ERRORS as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except CotwistError as exc:
            ctx = click.get_current_context().find_object(Ctx)
            rep = CheckReport(fn.__name__.replace("_", " "))
            rep.record(type(exc).__name__, False, str(exc))
            emit(ctx, [rep])

    return wrapper


pass_ctx = click.make_pass_decorator(Ctx)


@click.group()
@click.option("--field", "field_opt", default=None,
              help="0 or Q for the rationals, a prime p for F_p (default: $COTWIST_FIELD, else Q).")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable report.")
@click.pass_context
def main(ctx, field_opt, as_json):
    """Exact checks for twistings of module coalgebras and Hopf-Galois coextensions."""
    try:
        fld = field_from_option(field_opt)
    except FieldMismatch as exc:
        raise click.BadParameter(str(exc), param_hint="--field")
    pinned = field_opt is not None or bool(os.environ.get("COTWIST_FIELD", "").strip())
    ctx.obj = Ctx(fld, as_json, pinned)


# ---------------------------------------------------------------- check


@main.command("check")
@click.argument("kind", type=click.Choice(["hopf", "modcoalg", "twisting", "left-twisting",
                                           "weak-coaction", "harrison", "twisted-cocycle",
                                           "witness", "galois"]))
@click.argument("refs", nargs=-1, required=True)
@click.option("--name", default=None, help="Which twisting/cocycle/witness to check.")
@click.option("--tau", "tau_name", default=None)
@click.option("--lam", "lam_name", default=None)
@pass_ctx
@_run
def check(ctx, kind, refs, name, tau_name, lam_name):
    """Check the axioms of a structure."""
    b = resolve(refs, ctx)
    if kind == "hopf":
        rep = check_hopf(b.hopf())
    elif kind == "modcoalg":
        rep = check_module_coalgebra(b.module_coalgebra())
    elif kind in ("twisting", "left-twisting"):
        t = load_twisting(b, name, "right" if kind == "twisting" else "left")
        rep = t.report
    elif kind == "weak-coaction":
        c, h = b.module_coalgebra().coalgebra, b.hopf()
        rep = WeakCoaction(c, h, b.linmap(b.pick("coaction", name))).report
    elif kind == "harrison":
        rep = load_harrison(b, name).report
    elif kind == "twisted-cocycle":
        alpha = b.pick("cocycle", name)
        rep = TwistedCocycle(b.module_coalgebra(), b.linmap(alpha), alpha).report
    elif kind == "witness":
        rep = _witness(b, tau_name, lam_name, name).report
    else:
        cert = check_galois(b.module_coalgebra())
        rep = cert.report() if isinstance(cert, NotGalois) else check_diamond(cert)
    emit(ctx, [rep])


def _witness(b, tau_name, lam_name, v_name) -> EquivWitness:
    names = _default_pair(b)
    tau = load_twisting(b, tau_name or (names[0] if names else None))
    lam = load_twisting(b, lam_name or (names[1] if len(names) > 1 else tau.name))
    v = b.pick("witness", v_name)
    return EquivWitness(tau, lam, b.linmap(v), v)


# ---------------------------------------------------------------- twistings


@main.command("twist")
@click.argument("refs", nargs=-1, required=True)
@click.option("--name", default=None, help="Twisting to apply (default: the first one).")
@click.option("--left", is_flag=True, help="Apply a left twisting.")
@click.option("--out", default=None, type=click.Path(dir_okay=False))
@pass_ctx
@_run
def twist(ctx, refs, name, left, out):
    """Deform the comultiplication of C by a twisting."""
    b = resolve(refs, ctx)
    t = load_twisting(b, name, "left" if left else "right")
    rep = CheckReport(f"twisting {t.name}")
    rep.extend(t.report)
    rep.extend(check_twisted_structures(t))
    twisted = twist_coalgebra(t, force=True)
    nb = ser.mc_bundle(twisted, f"{b.name or 'C'} twisted by {t.name}")
    emit(ctx, [rep], write_out(out, nb))


@main.command("invert-twisting")
@click.argument("refs", nargs=-1, required=True)
@click.option("--name", default=None)
@click.option("--left", is_flag=True)
@click.option("--out", default=None, type=click.Path(dir_okay=False))
@pass_ctx
@_run
def invert_twisting_cmd(ctx, refs, name, left, out):
    """Compute the two-sided inverse of a twisting."""
    b = resolve(refs, ctx)
    t = load_twisting(b, name, "left" if left else "right")
    inv = invert_twisting(t)
    rep = check_inverse_pair(t)
    nb = ser.mc_bundle(t.mc, f"inverse of {t.name}")
    add_twisting(nb, t, inv.name)
    add_twisting(nb, inv, t.name)
    emit(ctx, [rep], write_out(out, nb))


@main.command("transpose")
@click.argument("direction", type=click.Choice(["ltr", "rtl"]))
@click.argument("refs", nargs=-1, required=True)
@click.option("--name", default=None)
@click.option("--out", default=None, type=click.Path(dir_okay=False))
@pass_ctx
@_run
def transpose(ctx, direction, refs, name, out):
    """Turn a right twisting into a left one (rtl) or back (ltr)."""
    b = resolve(refs, ctx)
    t = load_twisting(b, name, "right" if direction == "rtl" else "left")
    if t.inverse is None:
        invert_twisting(t)
    res = transpose_twisting(t, direction)
    rep = CheckReport(f"transpose of {t.name}")
    rep.extend(res.report)
    rep.extend(check_inverse_pair(res))
    nb = ser.mc_bundle(t.mc, f"transpose of {t.name}")
    add_twisting(nb, res, res.inverse.name)
    add_twisting(nb, res.inverse, res.name)
    emit(ctx, [rep], write_out(out, nb))


# ---------------------------------------------------------------- crossed coproducts


@main.group("crossed")
def crossed():
    """Weak coactions, Harrison cocycles and crossed coproducts."""


def _crossed_bundle(cc, note) -> ser.Bundle:
    return ser.mc_bundle(cc.mc, note)


@crossed.command("build")
@click.argument("refs", nargs=-1, required=True)
@click.option("--name", default=None)
@click.option("--out", default=None, type=click.Path(dir_okay=False))
@pass_ctx
@_run
def crossed_build(ctx, refs, name, out):
    """Build C ⊲_α H from a weak coaction and a Harrison cocycle."""
    hc = load_harrison(resolve(refs, ctx), name)
    cc = build_crossed(hc, force=True)
    rep = CheckReport("crossed coproduct")
    rep.extend(hc.report, "cocycle: ")
    rep.extend(cc.report)
    emit(ctx, [rep], write_out(out, _crossed_bundle(cc, f"crossed coproduct of {hc.name}")))


@crossed.command("to-twisting")
@click.argument("refs", nargs=-1, required=True)
@click.option("--name", default=None)
@click.option("--out", default=None, type=click.Path(dir_okay=False))
@pass_ctx
@_run
def crossed_to_twisting(ctx, refs, name, out):
    """The twisting of C⊗H belonging to a Harrison cocycle."""
    hc = load_harrison(resolve(refs, ctx), name)
    t = twisting_from_crossed(hc, force=True)
    t = RightTwist(t.mc, t.map, "tau")
    rep = check_crossed_correspondence(hc)
    nb = ser.mc_bundle(t.mc, f"twisting from {hc.name}")
    add_twisting(nb, t)
    emit(ctx, [rep], write_out(out, nb))


@crossed.command("from-twisting")
@click.argument("refs", nargs=-1, required=True)
@click.option("--name", default=None)
@click.option("--out", default=None, type=click.Path(dir_okay=False))
@pass_ctx
@_run
def crossed_from_twisting_cmd(ctx, refs, name, out):
    """Recover the weak coaction and cocycle from a twisting of C⊗H."""
    b = resolve(refs, ctx)
    t = load_twisting(b, name)
    w, hc = crossed_from_twisting(t, force=True)
    rep = CheckReport(f"crossed data of {t.name}")
    rep.extend(t.report, "twisting: ")
    rep.extend(hc.report, "cocycle: ")
    rep.extend(w.report, "coaction: ")
    mc = ModuleCoalgebra(w.coalgebra, w.hopf, _trivial_act(w.coalgebra, w.hopf), "C")
    nb = ser.mc_bundle(mc, f"crossed data of {t.name}")
    nb.add_map("rho", "coaction", w.rho, ("C",), ("H", "C"))
    nb.add_map("alpha", "cocycle", hc.alpha, ("C",), ("H", "H"))
    emit(ctx, [rep], write_out(out, nb))


def _trivial_act(c, h) -> LinMap:
    """c·h = ε(h)c."""
    from .wiring import Wiring

    return Wiring(c.space, h.space).apply(h.eps, 1).map().relabel(cod=c.space)


@crossed.command("iso")
@click.argument("source")
@click.argument("target")
@click.argument("u_ref")
@click.option("--u", "u_name", default="u", help="Name of the map C -> H in U_REF.")
@pass_ctx
@_run
def crossed_iso(ctx, source, target, u_ref, u_name):
    """Check that u gives an isomorphism SOURCE -> TARGET of crossed coproducts.

    SOURCE carries the data transported from TARGET by u, e.g. α′ = u⁻¹·α·u.
    """
    from .crossed import check_iso_conditions

    src = load_harrison(resolve([source], ctx))
    tgt = load_harrison(resolve([target], ctx))
    u = resolve([u_ref], ctx).linmap(u_name)
    c, h = tgt.coalgebra, tgt.hopf
    rep = CheckReport("crossed coproduct isomorphism from u")
    rep.extend(check_iso_conditions(u, src, tgt), "conditions: ")
    phi = phi_from_u(u, c, h)
    rep.extend(check_crossed_iso(phi, build_crossed(src, force=True),
                                 build_crossed(tgt, force=True)), "phi: ")
    emit(ctx, [rep])


# ---------------------------------------------------------------- cocycles


@main.group("cocycle")
def cocycle():
    """Twisted 2-cocycles and Harrison cocycles for the trivial coaction."""


@cocycle.command("lift")
@click.argument("refs", nargs=-1, required=True)
@click.option("--name", default=None)
@click.option("--out", default=None, type=click.Path(dir_okay=False))
@pass_ctx
@_run
def cocycle_lift(ctx, refs, name, out):
    """Harrison cocycle on C -> twisted cocycle on C⊗H."""
    b = resolve(refs, ctx)
    alpha = b.pick("cocycle", name)
    th = TrivialHarrison(b.module_coalgebra(), b.linmap(alpha), alpha)
    tc = lift_to_twisted(th, force=True)
    rep = CheckReport(f"lift of {alpha}")
    rep.extend(th.report, "Harrison: ")
    rep.extend(tc.report, "lifted: ")
    nb = ser.mc_bundle(tc.mc, f"lift of {alpha}")
    nb.add_map(tc.name, "cocycle", tc.alpha, ser.c_legs(tc.mc), ("H", "H"))
    emit(ctx, [rep], write_out(out, nb))


@cocycle.command("restrict")
@click.argument("refs", nargs=-1, required=True)
@click.option("--name", default=None)
@click.option("--out", default=None, type=click.Path(dir_okay=False))
@pass_ctx
@_run
def cocycle_restrict(ctx, refs, name, out):
    """Twisted cocycle on C⊗H -> Harrison cocycle on C."""
    b = resolve(refs, ctx)
    alpha = b.pick("cocycle", name)
    tc = TwistedCocycle(b.module_coalgebra(), b.linmap(alpha), alpha)
    c, h = _base_coalgebra(b), b.hopf()
    base = ModuleCoalgebra(c, h, _trivial_act(c, h), "C")
    th = restrict_to_harrison(tc, base, force=True)
    rep = CheckReport(f"restriction of {alpha}")
    rep.extend(tc.report, "twisted: ")
    rep.extend(th.report, "restricted: ")
    nb = ser.mc_bundle(base, f"restriction of {alpha}")
    nb.add_map(th.name, "cocycle", th.alpha, ("C",), ("H", "H"))
    emit(ctx, [rep], write_out(out, nb))


@cocycle.command("to-twisting")
@click.argument("refs", nargs=-1, required=True)
@click.option("--name", default=None)
@click.option("--out", default=None, type=click.Path(dir_okay=False))
@pass_ctx
@_run
def cocycle_to_twisting(ctx, refs, name, out):
    """τ_α from a twisted cocycle α."""
    b = resolve(refs, ctx)
    alpha = b.pick("cocycle", name)
    tc = TwistedCocycle(b.module_coalgebra(), b.linmap(alpha), alpha)
    t = twisting_from_twisted_cocycle(tc, force=True)
    rep = CheckReport(f"twisting from {alpha}")
    rep.extend(tc.report, "cocycle: ")
    rep.extend(t.report, "twisting: ")
    nb = ser.mc_bundle(tc.mc, f"twisting from {alpha}")
    add_twisting(nb, t)
    emit(ctx, [rep], write_out(out, nb))


# ---------------------------------------------------------------- equivalence


@main.group("equiv")
def equiv():
    """Equivalences of twistings."""


def _witness_options(f):
    f = click.option("--v", "v_name", default=None, help="Witness map name.")(f)
    f = click.option("--lam", "lam_name", default=None)(f)
    f = click.option("--tau", "tau_name", default=None)(f)
    return f


@equiv.command("check")
@click.argument("refs", nargs=-1, required=True)
@_witness_options
@pass_ctx
@_run
def equiv_check(ctx, refs, tau_name, lam_name, v_name):
    """Check that v witnesses τ ~ λ."""
    w = _witness(resolve(refs, ctx), tau_name, lam_name, v_name)
    rep = CheckReport(f"equivalence {w.tau.name} ~ {w.lam.name}")
    rep.extend(w.report)
    rep.record("witness convolution invertible", w.invertible)
    emit(ctx, [rep])


@equiv.command("psi")
@click.argument("refs", nargs=-1, required=True)
@_witness_options
@click.option("--out", default=None, type=click.Path(dir_okay=False))
@pass_ctx
@_run
def equiv_psi(ctx, refs, tau_name, lam_name, v_name, out):
    """The coalgebra isomorphism C^τ -> C^λ induced by a witness."""
    b = resolve(refs, ctx)
    w = _witness(b, tau_name, lam_name, v_name)
    rep = CheckReport("induced map")
    rep.extend(w.report, "witness: ")
    psi = psi_from_witness(w) if w.report.passed else psi_map(w.mc, w.v)
    rep.record("induced map is an isomorphism over B", w.report.passed)
    legs = ser.c_legs(w.mc)
    b.add_map("psi", "map", psi, legs, legs)
    emit(ctx, [rep], write_out(out, b))


@equiv.command("transfer-inverse")
@click.argument("refs", nargs=-1, required=True)
@_witness_options
@click.option("--out", default=None, type=click.Path(dir_okay=False))
@pass_ctx
@_run
def equiv_transfer(ctx, refs, tau_name, lam_name, v_name, out):
    """Carry the inverse of τ over to λ along a witness."""
    b = resolve(refs, ctx)
    w = _witness(b, tau_name, lam_name, v_name)
    if w.tau.inverse is None:
        invert_twisting(w.tau)
    mu = transfer_inverse(w)
    rep = check_inverse_pair(w.lam, mu)
    nb = ser.mc_bundle(w.mc, f"inverse of {w.lam.name} via {w.name}")
    add_twisting(nb, w.lam, mu.name)
    add_twisting(nb, mu, w.lam.name)
    emit(ctx, [rep], write_out(out, nb))


@equiv.command("from-iso")
@click.argument("refs", nargs=-1, required=True)
@click.option("--u", "u_name", default="u")
@click.option("--tau", "tau_name", default=None)
@click.option("--lam", "lam_name", default=None)
@click.option("--out", default=None, type=click.Path(dir_okay=False))
@pass_ctx
@_run
def equiv_from_iso(ctx, refs, u_name, tau_name, lam_name, out):
    """Witness v for τ ~ λ on C⊗H from a crossed coproduct isomorphism u."""
    b = resolve(refs, ctx)
    names = _default_pair(b)
    tau = load_twisting(b, tau_name or names[0])
    lam = load_twisting(b, lam_name or names[-1])
    u = b.linmap(u_name)
    w = witness_from_crossed_iso(u, tau, lam)
    rep = CheckReport(f"witness from {u_name}")
    rep.extend(w.report)
    b.add_map("v", "witness", w.v, ser.c_legs(tau.mc), ("H",))
    emit(ctx, [rep], write_out(out, b))


@equiv.command("to-iso")
@click.argument("refs", nargs=-1, required=True)
@_witness_options
@click.option("--out", default=None, type=click.Path(dir_okay=False))
@pass_ctx
@_run
def equiv_to_iso(ctx, refs, tau_name, lam_name, v_name, out):
    """Crossed coproduct isomorphism u from a witness on C⊗H."""
    b = resolve(refs, ctx)
    w = _witness(b, tau_name, lam_name, v_name)
    rep = CheckReport("crossed isomorphism from a witness")
    rep.extend(w.report, "witness: ")
    u = crossed_iso_from_witness(w)
    again = witness_from_crossed_iso(u, w.tau, w.lam)
    rep.equal("witness rebuilt from u", again.v, w.v)
    b.add_map("u", "map", u.map, ("C0",), ("H",))
    emit(ctx, [rep], write_out(out, b))


# ---------------------------------------------------------------- Galois


@main.group("galois")
def galois():
    """Hopf-Galois coextensions."""


@galois.command("cert")
@click.argument("refs", nargs=-1, required=True)
@pass_ctx
@_run
def galois_cert(ctx, refs):
    """Decide whether the canonical map is bijective."""
    mc = resolve(refs, ctx).module_coalgebra()
    cert = check_galois(mc)
    if isinstance(cert, NotGalois):
        emit(ctx, [cert.report()], {"galois": False, "rank": cert.rank})
    rep = CheckReport(f"Galois test for {mc.name}")
    rep.record("beta bijective", True, f"dim {cert.beta.dom.dim}")
    rep.extend(check_lemma31(mc))
    emit(ctx, [rep], {"galois": True})


@galois.command("diamond")
@click.argument("refs", nargs=-1, required=True)
@pass_ctx
@_run
def galois_diamond(ctx, refs):
    """Check the properties of the translation map c◊d."""
    mc = resolve(refs, ctx).module_coalgebra()
    cert = check_galois(mc)
    if isinstance(cert, NotGalois):
        emit(ctx, [cert.report()])
    emit(ctx, [check_diamond(cert)])


@galois.command("thm32")
@click.argument("refs", nargs=-1, required=True)
@click.option("--name", default=None)
@click.option("--force", is_flag=True, help="Run the square even if the twisting fails its checks.")
@pass_ctx
@_run
def galois_thm32(ctx, refs, name, force):
    """Compare the canonical maps of C and C^τ."""
    b = resolve(refs, ctx)
    t = load_twisting(b, name)
    if t.inverse is None:
        invert_twisting(t)
    emit(ctx, [thm32_check(t.mc, t, force=force)])


@galois.command("extract")
@click.argument("refs", nargs=-1, required=True)
@click.option("--psi", "psi_name", default="psi")
@click.option("--tau", "tau_name", default=None)
@click.option("--lam", "lam_name", default=None)
@click.option("--out", default=None, type=click.Path(dir_okay=False))
@pass_ctx
@_run
def galois_extract(ctx, refs, psi_name, tau_name, lam_name, out):
    """Recover the witness v(c) = c₁◊ψ(c₂) from an induced map ψ."""
    from .galois import extract_witness, require_galois

    b = resolve(refs, ctx)
    names = _default_pair(b)
    tau = load_twisting(b, tau_name or names[0])
    lam = load_twisting(b, lam_name or (names[1] if len(names) > 1 else names[0]))
    cert = require_galois(tau.mc)
    psi = b.linmap(psi_name)
    rep = check_extraction(psi, cert, tau, lam)
    w = extract_witness(psi, cert, tau, lam)
    b.add_map("v", "witness", w.v, ser.c_legs(tau.mc), ("H",))
    emit(ctx, [rep], write_out(out, b))


# ---------------------------------------------------------------- equations and suites


@main.command("eval")
@click.argument("eqn_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--env", "env_refs", multiple=True, required=True,
              help="Structure document or catalog name providing the generators (repeatable). "
                   "NAME=REF puts the maps of REF under NAME., e.g. T.C.delta.")
@pass_ctx
@_run
def eval_cmd(ctx, eqn_file, env_refs):
    """Check every `LHS == RHS` line of an equation file."""
    plain = [r for r in env_refs if not _PREFIXED.match(r)]
    env = env_from_bundle(resolve(plain, ctx)) if plain else Env()
    for ref in env_refs:
        m = _PREFIXED.match(ref)
        if m:
            env = env.merged(env_from_bundle(resolve([m.group(2)], ctx)), m.group(1))
    emit(ctx, [check_equation_file(eqn_file, env)])


_PREFIXED = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)=(.+)$")


def env_from_bundle(b: ser.Bundle) -> Env:
    maps = {n: e.map for n, e in b.maps.items()}
    spaces = dict(b.spaces)
    if "H.S" in maps:
        try:
            maps.setdefault("H.Sbar", b.hopf().Sbar)
        except SNotBijective:
            pass
    if "C.eps" in b.maps and "C" not in spaces:
        spaces["C"] = b.maps["C.eps"].map.dom
    return Env(maps, spaces)


@main.command("verify")
@click.argument("theorem_id", type=click.Choice(THEOREM_IDS))
@click.option("--instance", default=None, help="Catalog instance (each suite has a default).")
@pass_ctx
@_run
def verify_cmd(ctx, theorem_id, instance):
    """Run the scripted verification of one result on a catalog instance."""
    emit(ctx, [verify(theorem_id, instance, ctx.field)])


@main.command("list")
@pass_ctx
def list_cmd(ctx):
    """List catalog names and verification suites."""
    from .suites import suite

    click.echo("Hopf algebras:        " + ", ".join(cat.HOPF_NAMES))
    click.echo("module coalgebras:    " + ", ".join(cat.MODULE_COALGEBRA_NAMES))
    click.echo("cocycles:             " + ", ".join(cat.COCYCLES))
    click.echo("twistings:            " + ", ".join(f"tau:{c}" for c in cat.COCYCLES))
    for tid in THEOREM_IDS:
        mod = suite(tid)
        click.echo(f"verify {tid:10s} default {mod.DEFAULT}; instances: {', '.join(mod.INSTANCES)}")
