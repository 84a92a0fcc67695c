"""String-diagram builder for maps between tensor products.

Every Sweedler-notation formula becomes a short script: start from the
input legs, duplicate with comultiplications, apply structure maps to
chosen legs, permute legs, multiply.  Example, the twisted comultiplication
c ↦ c₁·c₂₋₁ ⊗ c₂₀::

    w = Wiring(C)
    w.apply(C.delta, 0)        # c1, c2
    w.apply(tau, 1)            # c1, c2[-1], c2[0]
    w.apply(C.act, 0, 1)       # c1·c2[-1], c2[0]
    delta_tau = w.map()

Leg arithmetic is done on the numerator arrays by reshaping, so applying
a small map to one leg of a large tensor never builds a Kronecker product.
"""

from __future__ import annotations

from math import prod

import numpy as np

from .errors import SpaceMismatch
from .linmap import LinMap, Space, tensor_space
from .matrix import Mat


class Wiring:
    def __init__(self, *legs: Space):
        if not legs:
            raise ValueError("a wiring needs at least one input leg")
        self.legs: list[Space] = list(legs)
        self.dom = tensor_space(*legs)
        self.mat = Mat.eye(self.dom.field, self.dom.dim)

    @classmethod
    def after(cls, f: LinMap) -> Wiring:
        """Start from an existing map, using its legs."""
        w = cls.__new__(cls)
        w.legs = list(f.legs)
        w.dom = f.dom
        w.mat = f.mat
        return w

    def _dims(self) -> list[int]:
        return [s.dim for s in self.legs]

    def permute(self, *order: int) -> Wiring:
        """New leg i is old leg order[i]."""
        if sorted(order) != list(range(len(self.legs))):
            raise ValueError(f"bad permutation {order} of {len(self.legs)} legs")
        if list(order) == list(range(len(self.legs))):
            return self
        n = self.mat.shape[1]
        num = self.mat.num.reshape(self._dims() + [n])
        num = num.transpose(list(order) + [len(order)]).reshape(self.mat.shape)
        self.mat = self.mat.like(np.ascontiguousarray(num))
        self.legs = [self.legs[i] for i in order]
        return self

    def apply(self, f: LinMap, *wires: int) -> Wiring:
        """Apply ``f`` to the listed legs (in that order); outputs replace them."""
        if not wires:
            raise ValueError("apply needs at least one leg")
        start = min(wires)
        if list(wires) != list(range(start, start + len(wires))):
            rest = [i for i in range(len(self.legs)) if i not in wires]
            order = [i for i in rest if i < start] + list(wires) + [i for i in rest if i > start]
            self.permute(*order)
            start = order.index(wires[0])
        k = len(wires)
        sel = self.legs[start:start + k]
        if tensor_space(*sel) != f.dom:
            raise SpaceMismatch(
                f"cannot apply {f.name or 'map'} (domain {f.dom.name}) to legs "
                f"{[s.name for s in sel]}")
        dims = self._dims()
        left = prod(dims[:start])
        a = prod(dims[start:start + k])
        right = prod(dims[start + k:])
        n = self.mat.shape[1]
        num = self.mat.num.reshape(left, a, right * n).transpose(1, 0, 2).reshape(a, left * right * n)
        res = f.mat @ self.mat.like(np.ascontiguousarray(num))
        b = f.cod.dim
        num = res.num.reshape(b, left, right * n).transpose(1, 0, 2).reshape(left * b * right, n)
        self.mat = res.like(np.ascontiguousarray(num))
        self.legs = self.legs[:start] + list(f.legs) + self.legs[start + k:]
        return self

    def split(self, i: int, *spaces: Space) -> Wiring:
        """Regard leg i as the tensor product of ``spaces`` (no arithmetic)."""
        if tensor_space(*spaces) != self.legs[i]:
            raise SpaceMismatch(f"cannot split leg {self.legs[i].name} into {[s.name for s in spaces]}")
        self.legs = self.legs[:i] + list(spaces) + self.legs[i + 1:]
        return self

    def map(self, name: str = "") -> LinMap:
        return LinMap(self.dom, tensor_space(*self.legs), self.mat, name, tuple(self.legs))
