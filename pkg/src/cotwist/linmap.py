"""Labelled vector spaces and linear maps between their tensor powers.

A space is identified structurally by its field and basis-label sequence.
The one-dimensional space with basis ("1",) is the ground field k and acts
as a strict unit for the tensor product, so C⊗k and C are the same space.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import reduce

import numpy as np

from . import linalg
from .errors import FieldMismatch, SpaceMismatch
from .field import FieldSpec
from .matrix import Mat

SEP = "⊗"
UNIT_LABEL = "1"


@dataclass(frozen=True, eq=False)
class Space:
    name: str
    basis: tuple[str, ...]
    field: FieldSpec

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        if len(set(self.basis)) != len(self.basis):
            raise ValueError(f"duplicate basis labels in space {self.name}")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_unit(self) -> bool:
        return self.basis == (UNIT_LABEL,)

    def index(self, label: str) -> int:
        return self.basis.index(label)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Space):
            return NotImplemented
        return self.field == other.field and self.basis == other.basis

    def __hash__(self):
        return hash((self.field, self.basis))

    def __repr__(self):
        return f"Space({self.name}, dim={self.dim}, {self.field})"


def ground(field: FieldSpec) -> Space:
    return Space("k", (UNIT_LABEL,), field)


def tensor_space(*spaces: Space) -> Space:
    """Row-major tensor product: the leftmost factor varies slowest."""
    if not spaces:
        raise ValueError("empty tensor product")
    fld = spaces[0].field
    for s in spaces[1:]:
        if s.field != fld:
            raise FieldMismatch(f"{spaces[0].name} over {fld} vs {s.name} over {s.field}")
    parts = [s for s in spaces if not s.is_unit]
    if not parts:
        return ground(fld)
    if len(parts) == 1:
        return parts[0]
    if any(s.dim == 0 for s in parts):
        return Space(SEP.join(s.name for s in parts), (), fld)
    labels = reduce(lambda acc, s: [f"{a}{SEP}{b}" for a in acc for b in s.basis],
                    parts[1:], list(parts[0].basis))
    return Space(SEP.join(s.name for s in parts), tuple(labels), fld)


@dataclass(frozen=True, eq=False)
class LinMap:
    """Linear map; ``mat[i, j]`` is the coefficient of cod basis i in the image of dom basis j.

    ``legs`` records how the codomain splits into tensor factors for wiring;
    it defaults to the codomain itself.
    """

    dom: Space
    cod: Space
    mat: Mat
    name: str = ""
    legs: tuple[Space, ...] = dc_field(default=())

    def __post_init__(self):
        if self.dom.field != self.cod.field or self.mat.field != self.dom.field:
            raise FieldMismatch(f"map {self.name} mixes fields")
        if self.mat.shape != (self.cod.dim, self.dom.dim):
            raise SpaceMismatch(
                f"map {self.name}: matrix {self.mat.shape} vs spaces "
                f"{self.cod.dim}x{self.dom.dim}")
        if not self.legs:
            object.__setattr__(self, "legs", (self.cod,))
        elif tensor_space(*self.legs) != self.cod:
            raise SpaceMismatch(f"map {self.name}: legs do not multiply to the codomain")

    @property
    def field(self) -> FieldSpec:
        return self.dom.field

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.mat == other.mat

    __hash__ = None

    def __matmul__(self, other: LinMap) -> LinMap:
        return compose(self, other)

    def __add__(self, other: LinMap) -> LinMap:
        _same_shape(self, other)
        return LinMap(self.dom, self.cod, self.mat + other.mat, legs=self.legs)

    def __sub__(self, other: LinMap) -> LinMap:
        _same_shape(self, other)
        return LinMap(self.dom, self.cod, self.mat - other.mat, legs=self.legs)

    def __neg__(self) -> LinMap:
        return LinMap(self.dom, self.cod, -self.mat, self.name, self.legs)

    def scale(self, s) -> LinMap:
        return LinMap(self.dom, self.cod, self.mat.scale(s), self.name, self.legs)

    def named(self, name: str) -> LinMap:
        return LinMap(self.dom, self.cod, self.mat, name, self.legs)

    def with_legs(self, *legs: Space) -> LinMap:
        return LinMap(self.dom, self.cod, self.mat, self.name, tuple(legs))

    def relabel(self, dom: Space | None = None, cod: Space | None = None) -> LinMap:
        """Same matrix viewed between spaces of equal dimension."""
        dom = dom or self.dom
        cod = cod or self.cod
        if (dom.dim, cod.dim) != (self.dom.dim, self.cod.dim):
            raise SpaceMismatch("relabel changes dimensions")
        legs = self.legs if cod == self.cod else (cod,)
        return LinMap(dom, cod, self.mat, self.name, legs)

    def column(self, label: str) -> list:
        return self.mat.column(self.dom.index(label))

    def apply(self, vec: Mat) -> Mat:
        return self.mat @ vec

    def __repr__(self):
        return f"LinMap({self.name or '?'}: {self.dom.name} -> {self.cod.name})"


def _same_shape(f: LinMap, g: LinMap):
    if f.dom != g.dom or f.cod != g.cod:
        raise SpaceMismatch(f"{f.name} and {g.name} have different spaces")


def from_rows(dom: Space, cod: Space, rows, name: str = "", legs=()) -> LinMap:
    return LinMap(dom, cod, Mat.from_rows(dom.field, rows, (cod.dim, dom.dim)), name, tuple(legs))


def from_images(dom: Space, cod: Space, images: dict, name: str = "", legs=()) -> LinMap:
    """Map given by images of basis labels as {dom_label: {cod_label: coeff}}."""
    f = dom.field
    rows = [[f.scalar(0)] * dom.dim for _ in range(cod.dim)]
    for src, image in images.items():
        j = dom.index(src)
        for tgt, coeff in image.items():
            rows[cod.index(tgt)][j] = f.scalar(rows[cod.index(tgt)][j] + f.scalar(coeff))
    return from_rows(dom, cod, rows, name, legs)


def identity(space: Space) -> LinMap:
    return LinMap(space, space, Mat.eye(space.field, space.dim), f"id[{space.name}]")


def zero_map(dom: Space, cod: Space, legs=()) -> LinMap:
    return LinMap(dom, cod, Mat.zeros(dom.field, cod.dim, dom.dim), "0", tuple(legs))


def compose(f: LinMap, g: LinMap) -> LinMap:
    """f ∘ g (g applied first)."""
    if f.field != g.field:
        raise FieldMismatch(f"{f.name} over {f.field} vs {g.name} over {g.field}")
    if f.dom != g.cod:
        raise SpaceMismatch(
            f"cannot compose {f.name or '?'} after {g.name or '?'}: "
            f"{g.cod.name} (dim {g.cod.dim}) is not {f.dom.name} (dim {f.dom.dim})")
    name = f"{f.name} o {g.name}" if f.name and g.name else ""
    return LinMap(g.dom, f.cod, f.mat @ g.mat, name, f.legs)


def chain(*maps: LinMap) -> LinMap:
    """chain(f, g, h) = f ∘ g ∘ h."""
    return reduce(compose, maps)


def kronecker(*maps: LinMap) -> LinMap:
    fld = maps[0].field
    for m in maps[1:]:
        if m.field != fld:
            raise FieldMismatch("kronecker of maps over different fields")
    mat = reduce(lambda a, b: a.kron(b), (m.mat for m in maps))
    legs = tuple(leg for m in maps for leg in m.legs)
    name = " x ".join(m.name for m in maps) if all(m.name for m in maps) else ""
    return LinMap(tensor_space(*(m.dom for m in maps)),
                  tensor_space(*(m.cod for m in maps)), mat, name, legs)


def permutation_map(legs: list[Space] | tuple[Space, ...], order: list[int]) -> LinMap:
    """Reorder tensor factors: output factor i is input factor order[i]."""
    dims = [s.dim for s in legs]
    dom = tensor_space(*legs)
    new_legs = tuple(legs[i] for i in order)
    cod = tensor_space(*new_legs)
    n = dom.dim
    idx = np.arange(n).reshape(dims).transpose(order).reshape(-1) if n else np.arange(0)
    num = np.zeros((n, n), dtype=np.int64)
    num[np.arange(n), idx] = 1
    return LinMap(dom, cod, Mat(dom.field, num), "perm", new_legs)


def swap_map(a: Space, b: Space) -> LinMap:
    """a⊗b -> b⊗a."""
    return permutation_map([a, b], [1, 0]).named(f"swap[{a.name},{b.name}]")


def rank(f: LinMap) -> int:
    return linalg.rank(f.mat)


def is_bijective(f: LinMap) -> bool:
    return f.dom.dim == f.cod.dim and rank(f) == f.dom.dim


def linear_solve(m: LinMap, rhs: LinMap) -> tuple[LinMap, int]:
    """X with m ∘ X = rhs; raises NoSolution.  Returns X and dim ker(m)."""
    if m.field != rhs.field:
        raise FieldMismatch("linear_solve over different fields")
    if m.cod != rhs.cod:
        raise SpaceMismatch("linear_solve: codomains differ")
    x, kernel = linalg.solve(m.mat, rhs.mat)
    return LinMap(rhs.dom, m.dom, x), kernel


def inverse(m: LinMap) -> LinMap:
    return LinMap(m.cod, m.dom, linalg.inverse(m.mat), f"{m.name}^-1" if m.name else "")
