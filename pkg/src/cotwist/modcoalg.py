"""Right H-module coalgebras, relative Hopf modules, the quotient
B = C/CH⁺ and the cotensor square C □_B C."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import linalg
from .errors import CoidealFailure, NotInCotensor, SpaceMismatch
from .hopf import Coalgebra, HopfAlgebra, check_coalgebra
from .linmap import (LinMap, Space, chain, ground, identity, kronecker, tensor_space)
from .matrix import Mat
from .report import CheckReport
from .wiring import Wiring


@dataclass(frozen=True, eq=False)
class ModuleCoalgebra:
    coalgebra: Coalgebra
    hopf: HopfAlgebra
    act: LinMap
    name: str = "C"
    # set for C⊗H with the regular action on the right factor
    tensor_base: Coalgebra | None = None

    def __post_init__(self):
        C, H = self.coalgebra.space, self.hopf.space
        if self.act.dom != tensor_space(C, H) or self.act.cod != C:
            raise SpaceMismatch(f"action of {self.name} must be {C.name}⊗{H.name} -> {C.name}")

    @property
    def space(self) -> Space:
        return self.coalgebra.space

    @property
    def delta(self) -> LinMap:
        return self.coalgebra.delta

    @property
    def eps(self) -> LinMap:
        return self.coalgebra.eps

    @property
    def field(self):
        return self.space.field

    def with_coalgebra(self, coalgebra: Coalgebra, name: str | None = None) -> ModuleCoalgebra:
        return ModuleCoalgebra(coalgebra, self.hopf, self.act, name or self.name, self.tensor_base)

    @cached_property
    def report(self) -> CheckReport:
        return check_module_coalgebra(self)


def tensor_module_coalgebra(c: Coalgebra, h: HopfAlgebra, name: str = "C⊗H") -> ModuleCoalgebra:
    """C⊗H with the tensor product coalgebra and H acting by right multiplication."""
    C, H = c.space, h.space
    D = tensor_space(C, H)
    delta = Wiring(C, H).apply(c.delta, 0).apply(h.delta, 2).permute(0, 2, 1, 3).map()
    delta = delta.with_legs(D, D)
    eps = kronecker(c.eps, h.eps)
    act = Wiring(C, H, H).apply(h.mult, 1, 2).map().with_legs(D)
    return ModuleCoalgebra(Coalgebra(D, delta, eps), h, act, name, tensor_base=c)


def check_module_coalgebra(mc: ModuleCoalgebra, title: str = "module coalgebra") -> CheckReport:
    C, H = mc.space, mc.hopf.space
    h = mc.hopf
    rep = CheckReport(title)
    rep.extend(check_coalgebra(mc.coalgebra))
    lhs = Wiring(C, H).apply(mc.act, 0, 1).apply(mc.delta, 0).map()
    rhs = (Wiring(C, H).apply(mc.delta, 0).apply(h.delta, 2).permute(0, 2, 1, 3)
           .apply(mc.act, 0, 1).apply(mc.act, 1, 2).map())
    rep.equal("action compatible with comultiplication", lhs, rhs)
    rep.equal("action compatible with counit", chain(mc.eps, mc.act), kronecker(mc.eps, h.eps))
    rep.equal("unit acts trivially", Wiring(C, ground(C.field)).apply(h.unit, 1)
              .apply(mc.act, 0, 1).map(), identity(C))
    lhs = Wiring(C, H, H).apply(mc.act, 0, 1).apply(mc.act, 0, 1).map()
    rhs = Wiring(C, H, H).apply(h.mult, 1, 2).apply(mc.act, 0, 1).map()
    rep.equal("action associative", lhs, rhs)
    return rep


# ---------------------------------------------------------------- relative Hopf modules


@dataclass(frozen=True, eq=False)
class RelHopfModule:
    """M with a right H-action and a C-coaction (M -> M⊗C, or C⊗M when side='left')."""

    space: Space
    act: LinMap
    coact: LinMap
    mc: ModuleCoalgebra
    side: str = "right"

    def __post_init__(self):
        M, C, H = self.space, self.mc.space, self.mc.hopf.space
        if self.side not in ("right", "left"):
            raise ValueError("side must be 'right' or 'left'")
        if self.act.dom != tensor_space(M, H) or self.act.cod != M:
            raise SpaceMismatch("module action has the wrong spaces")
        legs = (M, C) if self.side == "right" else (C, M)
        if self.coact.dom != M or self.coact.cod != tensor_space(*legs):
            raise SpaceMismatch("coaction has the wrong spaces")
        object.__setattr__(self, "coact", self.coact.with_legs(*legs))


def check_rel_hopf_module(m: RelHopfModule, title: str = "relative Hopf module") -> CheckReport:
    M, H = m.space, m.mc.hopf.space
    h, mc = m.mc.hopf, m.mc
    rep = CheckReport(title)
    lhs = Wiring(M, H, H).apply(m.act, 0, 1).apply(m.act, 0, 1).map()
    rhs = Wiring(M, H, H).apply(h.mult, 1, 2).apply(m.act, 0, 1).map()
    rep.equal("action associative", lhs, rhs)
    rep.equal("unit acts trivially", Wiring(M, ground(M.field)).apply(h.unit, 1)
              .apply(m.act, 0, 1).map(), identity(M))
    if m.side == "right":
        lhs = Wiring(M).apply(m.coact, 0).apply(m.coact, 0).map()
        rhs = Wiring(M).apply(m.coact, 0).apply(mc.delta, 1).map()
        rep.equal("coaction coassociative", lhs, rhs)
        rep.equal("coaction counital", Wiring(M).apply(m.coact, 0).apply(mc.eps, 1).map(),
                  identity(M))
        lhs = Wiring(M, H).apply(m.act, 0, 1).apply(m.coact, 0).map()
        rhs = (Wiring(M, H).apply(m.coact, 0).apply(h.delta, 2).permute(0, 2, 1, 3)
               .apply(m.act, 0, 1).apply(mc.act, 1, 2).map())
    else:
        lhs = Wiring(M).apply(m.coact, 0).apply(m.coact, 1).map()
        rhs = Wiring(M).apply(m.coact, 0).apply(mc.delta, 0).map()
        rep.equal("coaction coassociative", lhs, rhs)
        rep.equal("coaction counital", Wiring(M).apply(m.coact, 0).apply(mc.eps, 0).map(),
                  identity(M))
        lhs = Wiring(M, H).apply(m.act, 0, 1).apply(m.coact, 0).map()
        rhs = (Wiring(M, H).apply(m.coact, 0).apply(h.delta, 2).permute(0, 2, 1, 3)
               .apply(mc.act, 0, 1).apply(m.act, 1, 2).map())
    rep.equal("coaction is H-linear", lhs, rhs)
    return rep


def regular_comodule(mc: ModuleCoalgebra) -> RelHopfModule:
    """C itself, coacting on itself by Δ."""
    return RelHopfModule(mc.space, mc.act, mc.delta, mc)


# ---------------------------------------------------------------- quotient B = C/CH⁺


@dataclass(frozen=True, eq=False)
class QuotientBase:
    coalgebra: Coalgebra
    pi: LinMap
    section: LinMap
    pivots: tuple[int, ...]

    @property
    def space(self) -> Space:
        return self.coalgebra.space


def _ideal_generators(mc: ModuleCoalgebra) -> LinMap:
    """C⊗H -> C, c⊗h ↦ c·h − ε(h)c; its image is I = CH⁺."""
    eps_side = Wiring(mc.space, mc.hopf.space).apply(mc.hopf.eps, 1).map()
    return mc.act - eps_side.relabel(cod=mc.space).with_legs(mc.space)


def quotient_base(mc: ModuleCoalgebra) -> QuotientBase:
    C = mc.space
    f = C.field
    gens = _ideal_generators(mc)
    R, piv = linalg.rref(gens.mat.T)
    free = [j for j in range(C.dim) if j not in set(piv)]
    B = Space(f"B({mc.name})", tuple(f"[{C.basis[j]}]" for j in free), f)
    rows = [[f.scalar(0)] * C.dim for _ in free]
    for k, j in enumerate(free):
        rows[k][j] = f.scalar(1)
    for i, p in enumerate(piv):
        for k, j in enumerate(free):
            rows[k][p] = -R.entry(i, j)
    pi = LinMap(C, B, Mat.from_rows(f, rows, (len(free), C.dim)), "pi")
    sec_rows = [[f.scalar(1) if j == free[k] else f.scalar(0) for k in range(len(free))]
                for j in range(C.dim)]
    section = LinMap(B, C, Mat.from_rows(f, sec_rows, (C.dim, len(free))), "s")
    if not chain(mc.eps, gens).mat.is_zero():
        raise CoidealFailure("counit does not vanish on CH⁺")
    pipi = kronecker(pi, pi)
    if not chain(pipi, mc.delta, gens).mat.is_zero():
        raise CoidealFailure("CH⁺ is not a coideal")
    delta_b = chain(pipi, mc.delta, section).with_legs(B, B)
    eps_b = chain(mc.eps, section)
    return QuotientBase(Coalgebra(B, delta_b, eps_b), pi, section, tuple(piv))


def check_quotient(mc: ModuleCoalgebra, q: QuotientBase) -> CheckReport:
    rep = CheckReport("quotient base")
    rep.extend(check_coalgebra(q.coalgebra, "B"))
    rep.equal("pi is comultiplicative", chain(q.coalgebra.delta, q.pi),
              chain(kronecker(q.pi, q.pi), mc.delta))
    rep.equal("pi is counital", chain(q.coalgebra.eps, q.pi), mc.eps)
    rep.equal("pi o section = id", chain(q.pi, q.section), identity(q.space))
    rep.equal("action descends trivially", chain(q.pi, mc.act),
              chain(q.pi, Wiring(mc.space, mc.hopf.space).apply(mc.hopf.eps, 1).map()
                    .relabel(cod=mc.space)))
    return rep


# ---------------------------------------------------------------- cotensor square


@dataclass(frozen=True, eq=False)
class CotensorSquare:
    space: Space
    incl: LinMap      # W -> C⊗C
    coords: LinMap    # C⊗C -> W, left inverse of incl

    def contains(self, f: LinMap) -> bool:
        """Does every column of f (with codomain C⊗C) lie in W?"""
        return chain(self.incl, self.coords, f).mat == f.mat

    def to_coords(self, f: LinMap) -> LinMap:
        if not self.contains(f):
            raise NotInCotensor("map leaves the cotensor subspace")
        return chain(self.coords, f)


def cotensor_square(c: Coalgebra, q: QuotientBase) -> CotensorSquare:
    """Kernel of c⊗d ↦ c₁⊗π(c₂)⊗d − c⊗π(d₁)⊗d₂, basis by RREF free columns."""
    C = c.space
    B = q.space
    left = Wiring(C, C).apply(c.delta, 0).apply(q.pi, 1).map()
    right = Wiring(C, C).apply(c.delta, 1).apply(q.pi, 1).map()
    diff = left - right
    basis, free = linalg.nullspace(diff.mat)
    CC = tensor_space(C, C)
    W = Space(f"{C.name}□{B.name}{C.name}", tuple(f"[{CC.basis[j]}]" for j in free), C.field)
    incl = LinMap(W, CC, basis, "incl")
    coords = LinMap(CC, W, Mat(C.field, np.eye(CC.dim, dtype=np.int64)[free]), "coords")
    return CotensorSquare(W, incl, coords)
