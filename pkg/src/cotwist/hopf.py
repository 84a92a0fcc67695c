"""Coalgebras, algebras and Hopf algebras given by structure constants,
together with the convolution algebra Hom(C, A)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import NoSolution, NotInvertible, SNotBijective, SpaceMismatch
from .linmap import (LinMap, Space, chain, ground, identity, inverse, is_bijective,
                     kronecker, linear_solve, rank, tensor_space)
from .matrix import Mat
from .report import CheckReport
from .wiring import Wiring


def _expect(f: LinMap, dom: Space, cod: Space, what: str):
    if f.dom != dom or f.cod != cod:
        raise SpaceMismatch(f"{what}: expected {dom.name} -> {cod.name}, "
                            f"got {f.dom.name} -> {f.cod.name}")


@dataclass(frozen=True, eq=False)
class Coalgebra:
    space: Space
    delta: LinMap
    eps: LinMap

    def __post_init__(self):
        C = self.space
        k = ground(C.field)
        _expect(self.delta, C, tensor_space(C, C), "comultiplication")
        _expect(self.eps, C, k, "counit")
        object.__setattr__(self, "delta", self.delta.with_legs(C, C))

    @property
    def field(self):
        return self.space.field

    @cached_property
    def report(self) -> CheckReport:
        return check_coalgebra(self)

    def verify(self) -> bool:
        return self.report.passed


@dataclass(frozen=True, eq=False)
class Algebra:
    space: Space
    mult: LinMap
    unit: LinMap

    def __post_init__(self):
        A = self.space
        _expect(self.mult, tensor_space(A, A), A, "multiplication")
        _expect(self.unit, ground(A.field), A, "unit")

    @property
    def field(self):
        return self.space.field

    def mult_n(self, n: int) -> LinMap:
        """A^⊗n -> A, multiplying left to right (n = 0 gives the unit)."""
        if n == 0:
            return self.unit
        w = Wiring(*([self.space] * n))
        for _ in range(n - 1):
            w.apply(self.mult, 0, 1)
        return w.map()


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    space: Space
    mult: LinMap
    unit: LinMap
    delta: LinMap
    eps: LinMap
    antipode: LinMap
    name: str = "H"

    def __post_init__(self):
        H = self.space
        _expect(self.antipode, H, H, "antipode")
        object.__setattr__(self, "delta", self.delta.with_legs(H, H))

    @property
    def field(self):
        return self.space.field

    @cached_property
    def coalgebra(self) -> Coalgebra:
        return Coalgebra(self.space, self.delta, self.eps)

    @cached_property
    def algebra(self) -> Algebra:
        return Algebra(self.space, self.mult, self.unit)

    @cached_property
    def antipode_inverse(self) -> LinMap:
        return antipode_inverse(self)

    @property
    def S(self) -> LinMap:
        return self.antipode

    @property
    def Sbar(self) -> LinMap:
        return self.antipode_inverse

    def mult_n(self, n: int) -> LinMap:
        return self.algebra.mult_n(n)

    def comult_n(self, n: int) -> LinMap:
        return iterated_comult(self.coalgebra, n)

    @cached_property
    def unit_eps(self) -> LinMap:
        return chain(self.unit, self.eps).with_legs(self.space)

    @cached_property
    def report(self) -> CheckReport:
        return check_hopf(self)


# ---------------------------------------------------------------- checks


def check_coalgebra(c: Coalgebra, title: str = "coalgebra") -> CheckReport:
    C = c.space
    rep = CheckReport(title)
    lhs = Wiring(C).apply(c.delta, 0).apply(c.delta, 0).map()
    rhs = Wiring(C).apply(c.delta, 0).apply(c.delta, 1).map()
    rep.equal("coassociativity", lhs, rhs)
    rep.equal("left counit", Wiring(C).apply(c.delta, 0).apply(c.eps, 0).map(), identity(C))
    rep.equal("right counit", Wiring(C).apply(c.delta, 0).apply(c.eps, 1).map(), identity(C))
    return rep


def check_algebra(a: Algebra, title: str = "algebra") -> CheckReport:
    A = a.space
    k = ground(A.field)
    rep = CheckReport(title)
    lhs = Wiring(A, A, A).apply(a.mult, 0, 1).apply(a.mult, 0, 1).map()
    rhs = Wiring(A, A, A).apply(a.mult, 1, 2).apply(a.mult, 0, 1).map()
    rep.equal("associativity", lhs, rhs)
    rep.equal("left unit", Wiring(k, A).apply(a.unit, 0).apply(a.mult, 0, 1).map(), identity(A))
    rep.equal("right unit", Wiring(A, k).apply(a.unit, 1).apply(a.mult, 0, 1).map(), identity(A))
    return rep


def check_hopf(h: HopfAlgebra, title: str = "hopf algebra") -> CheckReport:
    H = h.space
    k = ground(H.field)
    rep = CheckReport(title)
    rep.extend(check_coalgebra(h.coalgebra))
    rep.extend(check_algebra(h.algebra))
    lhs = Wiring(H, H).apply(h.mult, 0, 1).apply(h.delta, 0).map()
    rhs = (Wiring(H, H).apply(h.delta, 0).apply(h.delta, 2)
           .permute(0, 2, 1, 3).apply(h.mult, 0, 1).apply(h.mult, 1, 2).map())
    rep.equal("comultiplication is multiplicative", lhs, rhs)
    rep.equal("comultiplication is unital", chain(h.delta, h.unit), kronecker(h.unit, h.unit))
    rep.equal("counit is multiplicative", chain(h.eps, h.mult), kronecker(h.eps, h.eps))
    rep.equal("counit is unital", chain(h.eps, h.unit), identity(k))
    left = Wiring(H).apply(h.delta, 0).apply(h.antipode, 0).apply(h.mult, 0, 1).map()
    right = Wiring(H).apply(h.delta, 0).apply(h.antipode, 1).apply(h.mult, 0, 1).map()
    rep.equal("antipode left", left, h.unit_eps)
    rep.equal("antipode right", right, h.unit_eps)
    r = rank(h.antipode)
    rep.record("antipode bijective", r == H.dim, f"rank {r} of {H.dim}")
    return rep


def antipode_inverse(h: HopfAlgebra) -> LinMap:
    """S̄ with S̄∘S = S∘S̄ = id."""
    if not is_bijective(h.antipode):
        raise SNotBijective(f"antipode of {h.name} has rank {rank(h.antipode)} < {h.space.dim}")
    return inverse(h.antipode).named("Sbar")


def iterated_comult(c: Coalgebra, n: int) -> LinMap:
    """C -> C^⊗(n+1), expanding the leftmost leg each time."""
    if n < 0:
        raise ValueError("n must be non-negative")
    w = Wiring(c.space)
    for _ in range(n):
        w.apply(c.delta, 0)
    return w.map()


# ---------------------------------------------------------------- convolution


@dataclass(frozen=True, eq=False)
class ConvElement:
    """A map C -> A regarded as an element of the convolution algebra Hom(C, A)."""

    map: LinMap
    coalgebra: Coalgebra
    algebra: Algebra

    def __post_init__(self):
        _expect(self.map, self.coalgebra.space, self.algebra.space, "convolution element")

    def same_context(self, other: ConvElement) -> bool:
        return (self.coalgebra.space == other.coalgebra.space
                and self.algebra.space == other.algebra.space
                and self.coalgebra.delta == other.coalgebra.delta
                and self.algebra.mult == other.algebra.mult)

    def __mul__(self, other: ConvElement) -> ConvElement:
        return convolve(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, ConvElement) and self.map == other.map

    __hash__ = None


def conv_unit(c: Coalgebra, a: Algebra) -> ConvElement:
    return ConvElement(chain(a.unit, c.eps), c, a)


def convolve(f: ConvElement, g: ConvElement) -> ConvElement:
    """(f ∗ g)(c) = f(c₁) g(c₂)."""
    if not f.same_context(g):
        raise SpaceMismatch("convolution of elements from different contexts")
    C = f.coalgebra.space
    m = Wiring(C).apply(f.coalgebra.delta, 0).apply(f.map, 0).apply(g.map, 1) \
        .apply(f.algebra.mult, 0, 1).map()
    return ConvElement(m, f.coalgebra, f.algebra)


def _left_mult_operator(f: ConvElement) -> Mat:
    """Matrix of g ↦ f ∗ g on Hom(C, A), vectorised row-major as g[a, c]."""
    C, A = f.coalgebra.space, f.algebra.space
    dc, da = C.dim, A.dim
    x = Wiring(C).apply(f.coalgebra.delta, 0).apply(f.map, 0).map().mat  # (a1, q) x c
    m = f.algebra.mult.mat                                                  # a x (a1, a2)
    m2 = m.like(np.ascontiguousarray(
        m.num.reshape(da, da, da).transpose(0, 2, 1).reshape(da * da, da)))
    x2 = x.like(np.ascontiguousarray(x.num.reshape(da, dc * dc)))
    t = m2 @ x2                                                             # (a, a2) x (q, c)
    num = t.num.reshape(da, da, dc, dc).transpose(0, 3, 1, 2).reshape(da * dc, da * dc)
    return t.like(np.ascontiguousarray(num))


def convolution_inverse(f: ConvElement) -> ConvElement:
    """Two-sided convolution inverse; raises NotInvertible outside Reg(C, A)."""
    C, A = f.coalgebra.space, f.algebra.space
    unit = conv_unit(f.coalgebra, f.algebra)
    op = _left_mult_operator(f)
    rhs = unit.map.mat
    rhs_vec = rhs.like(np.ascontiguousarray(rhs.num.reshape(-1, 1)))
    vec_space = Space("vec", tuple(str(i) for i in range(A.dim * C.dim)), C.field)
    one = Space("one", ("e",), C.field)
    try:
        x, _ = linear_solve(LinMap(vec_space, vec_space, op), LinMap(one, vec_space, rhs_vec))
    except NoSolution as exc:
        raise NotInvertible("map is not convolution invertible") from exc
    g = ConvElement(LinMap(C, A, x.mat.like(np.ascontiguousarray(x.mat.num.reshape(A.dim, C.dim)))),
                    f.coalgebra, f.algebra)
    if convolve(f, g).map != unit.map or convolve(g, f).map != unit.map:
        raise NotInvertible("one-sided convolution inverse is not two-sided")
    return g


def is_convolution_invertible(f: ConvElement) -> bool:
    try:
        convolution_inverse(f)
    except NotInvertible:
        return False
    return True
