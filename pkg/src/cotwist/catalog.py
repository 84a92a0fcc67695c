"""Built-in Hopf algebras, module coalgebras and cocycles."""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatch, UnknownName
from .field import QQ, FieldSpec
from .hopf import Coalgebra, HopfAlgebra
from .linmap import LinMap, Space, from_images, ground, identity, tensor_space
from .modcoalg import ModuleCoalgebra

SEP = "⊗"


def _pair(a: str, b: str) -> str:
    return f"{a}{SEP}{b}"


def _unit_map(space: Space, label: str) -> LinMap:
    return from_images(ground(space.field), space, {"1": {label: 1}}, "unit")


# ---------------------------------------------------------------- Hopf algebras


def _cyclic_label(i: int) -> str:
    return "1" if i == 0 else ("g" if i == 1 else f"g{i}")


def group_algebra(n: int, fld: FieldSpec = QQ) -> HopfAlgebra:
    """kC_n with Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹."""
    if n < 1:
        raise ValueError("group order must be positive")
    labels = [_cyclic_label(i) for i in range(n)]
    H = Space(f"kC{n}", labels, fld)
    HH = tensor_space(H, H)
    k = ground(fld)
    mult = from_images(HH, H, {_pair(labels[i], labels[j]): {labels[(i + j) % n]: 1}
                               for i in range(n) for j in range(n)}, "mult")
    delta = from_images(H, HH, {g: {_pair(g, g): 1} for g in labels}, "delta")
    eps = from_images(H, k, {g: {"1": 1} for g in labels}, "eps")
    S = from_images(H, H, {labels[i]: {labels[(-i) % n]: 1} for i in range(n)}, "S")
    return HopfAlgebra(H, mult, _unit_map(H, "1"), delta, eps, S, f"group:C{n}")


def dual_group_algebra(n: int, fld: FieldSpec = QQ) -> HopfAlgebra:
    """k^{C_n}: idempotents e_a, Δe_a = Σ_b e_b⊗e_{a−b}, ε(e_a) = δ_{a,0}."""
    labels = [f"e{a}" for a in range(n)]
    H = Space(f"k^C{n}", labels, fld)
    HH = tensor_space(H, H)
    k = ground(fld)
    mult = from_images(HH, H, {_pair(labels[a], labels[a]): {labels[a]: 1} for a in range(n)},
                       "mult")
    unit = from_images(k, H, {"1": {e: 1 for e in labels}}, "unit")
    delta = from_images(H, HH, {labels[a]: {_pair(labels[b], labels[(a - b) % n]): 1
                                            for b in range(n)} for a in range(n)}, "delta")
    eps = from_images(H, k, {labels[0]: {"1": 1}}, "eps")
    S = from_images(H, H, {labels[a]: {labels[(-a) % n]: 1} for a in range(n)}, "S")
    return HopfAlgebra(H, mult, unit, delta, eps, S, f"dualgroup:C{n}")


def sweedler_h4(fld: FieldSpec = QQ) -> HopfAlgebra:
    """Sweedler's four dimensional Hopf algebra with basis 1, g, x, gx."""
    if fld.characteristic == 2:
        raise FieldMismatch("sweedler:H4 needs a field of characteristic other than 2")
    labels = ["1", "g", "x", "gx"]
    word = {(0, 0): "1", (1, 0): "g", (0, 1): "x", (1, 1): "gx"}
    exps = {v: k for k, v in word.items()}
    H = Space("H4", labels, fld)
    HH = tensor_space(H, H)
    k = ground(fld)
    images = {}
    for s in labels:
        for t in labels:
            a, b = exps[s]
            c, d = exps[t]
            # g^a x^b g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
            if b + d >= 2:
                images[_pair(s, t)] = {}
            else:
                images[_pair(s, t)] = {word[((a + c) % 2, b + d)]: (-1) ** (b * c)}
    mult = from_images(HH, H, images, "mult")
    delta = from_images(H, HH, {
        "1": {_pair("1", "1"): 1},
        "g": {_pair("g", "g"): 1},
        "x": {_pair("x", "1"): 1, _pair("g", "x"): 1},
        "gx": {_pair("gx", "g"): 1, _pair("1", "gx"): 1},
    }, "delta")
    eps = from_images(H, k, {"1": {"1": 1}, "g": {"1": 1}}, "eps")
    S = from_images(H, H, {"1": {"1": 1}, "g": {"g": 1}, "x": {"gx": -1}, "gx": {"x": 1}}, "S")
    return HopfAlgebra(H, mult, _unit_map(H, "1"), delta, eps, S, "sweedler:H4")


HOPF_BUILDERS = {
    "group:C2": lambda f: group_algebra(2, f),
    "group:C4": lambda f: group_algebra(4, f),
    "dualgroup:C2": lambda f: dual_group_algebra(2, f),
    "sweedler:H4": sweedler_h4,
}


def hopf(name: str, fld: FieldSpec = QQ) -> HopfAlgebra:
    try:
        builder = HOPF_BUILDERS[name]
    except KeyError:
        raise UnknownName(f"unknown Hopf algebra {name!r}; known: {', '.join(HOPF_BUILDERS)}")
    return builder(fld)


# ---------------------------------------------------------------- module coalgebras


def regular(h: HopfAlgebra) -> ModuleCoalgebra:
    """C = H acting on itself by right multiplication."""
    return ModuleCoalgebra(h.coalgebra, h, h.mult, f"regular:{h.name}")


def trivial(h: HopfAlgebra) -> ModuleCoalgebra:
    """C = k with c·h = ε(h)c."""
    k = ground(h.field)
    c = Coalgebra(k, identity(k), identity(k))
    return ModuleCoalgebra(c, h, h.eps, f"trivial:{h.name}")


def module_coalgebra(name: str, fld: FieldSpec = QQ) -> ModuleCoalgebra:
    kind, _, rest = name.partition(":")
    if kind == "regular":
        return regular(hopf(rest, fld))
    if kind == "trivial":
        return trivial(hopf(rest, fld))
    raise UnknownName(f"unknown module coalgebra {name!r}")


# ---------------------------------------------------------------- cocycles on C = k


def sign_cocycle_map(h: HopfAlgebra, flip: bool = False, s=-1) -> LinMap:
    """R = Σ s^{ab} e_a⊗e_b on k^{C2}, as a map k -> H⊗H (s = −1 by default).

    With ``flip`` the e0⊗e1 coefficient is negated, which breaks both the
    counit and cocycle conditions (a negative control).  Any s gives a cocycle; s = 0
    gives one whose twisting has no inverse.
    """
    HH = tensor_space(h.space, h.space)
    img = {_pair(f"e{a}", f"e{b}"): s if a * b else 1 for a in range(2) for b in range(2)}
    if flip:
        img[_pair("e0", "e1")] = -1
    return from_images(ground(h.field), HH, {"1": img}, "R").with_legs(h.space, h.space)


def drinfeld_twist_h4(h: HopfAlgebra, t=Fraction(1, 2), left: str = "gx") -> LinMap:
    """J = 1⊗1 + t·gx⊗x on H4, as a map k -> H⊗H.

    ``left="x"`` gives 1⊗1 + t·x⊗x, which is normalized but not a cocycle.
    """
    HH = tensor_space(h.space, h.space)
    return from_images(ground(h.field), HH,
                       {"1": {_pair("1", "1"): 1, _pair(left, "x"): t}},
                       "J").with_legs(h.space, h.space)


COCYCLES = ("harrison:C2-sign", "harrison:C2-sign-bad", "harrison:C2-degenerate",
            "harrison:H4-twist", "harrison:H4-twist-bad")


def harrison(name: str, fld: FieldSpec = QQ):
    """Return (module coalgebra C = k, cocycle map k -> H⊗H)."""
    from .cocycles import TrivialHarrison

    if name in ("harrison:C2-sign", "harrison:C2-sign-bad"):
        h = dual_group_algebra(2, fld)
        return TrivialHarrison(trivial(h), sign_cocycle_map(h, flip=name.endswith("bad")),
                               name=name)
    if name == "harrison:C2-degenerate":
        h = dual_group_algebra(2, fld)
        return TrivialHarrison(trivial(h), sign_cocycle_map(h, s=0), name=name)
    if name in ("harrison:H4-twist", "harrison:H4-twist-bad"):
        h = sweedler_h4(fld)
        bad = name.endswith("bad")
        return TrivialHarrison(trivial(h), drinfeld_twist_h4(h, 1 if bad else Fraction(1, 2),
                                                             "x" if bad else "gx"), name=name)
    raise UnknownName(f"unknown cocycle {name!r}; known: {', '.join(COCYCLES)}")


# elements u with ε(u) = 1, used to move a cocycle within its class; the
# second one for H4 does not commute with the first
GAUGES = {
    "dualgroup:C2": ({"e0": 1, "e1": 2}, {"e0": 1, "e1": 3}),
    "sweedler:H4": ({"1": 1, "x": 1}, {"g": 1}),
}


def gauge_elements(h: HopfAlgebra) -> list[LinMap]:
    if h.name not in GAUGES:
        raise UnknownName(f"no gauge elements recorded for {h.name}")
    k = ground(h.field)
    return [from_images(k, h.space, {"1": img}, f"u{i + 1}") for i, img in enumerate(GAUGES[h.name])]


# the cocycle used to twist the regular module coalgebra of each Hopf algebra
REGULAR_TWISTS = {"dualgroup:C2": "harrison:C2-sign", "sweedler:H4": "harrison:H4-twist"}


HOPF_NAMES = tuple(HOPF_BUILDERS)
MODULE_COALGEBRA_NAMES = tuple(f"{kind}:{h}" for kind in ("regular", "trivial")
                               for h in HOPF_BUILDERS)
