"""Exact dense matrices over QQ and F_p.

Over F_p a matrix is an int64 array of canonical residues.  Over QQ it is an
integer numerator array with one positive common denominator, kept reduced
(gcd of all entries and the denominator is 1).  The numerator array is int64
while every entry stays comfortably inside the int64 range and silently
switches to Python ints (dtype=object) otherwise, so no operation can
overflow.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import _accel
from .field import FieldSpec, same_field

_SAFE = 2**62


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(x)) for x in a.flat)
    return int(np.abs(a).max())


def _shrink(a: np.ndarray) -> np.ndarray:
    """Prefer int64 storage when the entries allow it."""
    if a.dtype == object and _maxabs(a) < _SAFE:
        return a.astype(np.int64)
    if a.dtype != object and a.dtype != np.int64:
        return a.astype(np.int64)
    return a


def _gcd_all(a: np.ndarray, start: int) -> int:
    g = start
    if a.size == 0:
        return g
    if a.dtype == object:
        for x in a.flat:
            g = math.gcd(g, int(x))
            if g == 1:
                break
        return g
    return math.gcd(g, int(np.gcd.reduce(a, axis=None)))


class Mat:
    __slots__ = ("field", "num", "den")

    def __init__(self, field: FieldSpec, num: np.ndarray, den: int = 1):
        self.field = field
        num = np.asarray(num)
        if num.ndim != 2:
            raise ValueError("matrices are two dimensional")
        if field.is_prime:
            if den != 1:
                num = num * pow(int(den), -1, field.p)
            if num.dtype == object:
                num = np.array([[int(x) % field.p for x in row] for row in num],
                               dtype=np.int64).reshape(num.shape)
            else:
                num = num.astype(np.int64) % field.p
            self.num = num
            self.den = 1
            return
        den = int(den)
        if den <= 0:
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            num, den = -num, -den
        num = _shrink(num)
        if den != 1:
            g = _gcd_all(num, den)
            if g != 1:
                num = num // g
                den //= g
        self.num = num
        self.den = den

    # ------------------------------------------------------------ constructors

    @classmethod
    def from_rows(cls, field: FieldSpec, rows, shape=None) -> Mat:
        rows = [[field.scalar(x) for x in row] for row in rows]
        if shape is None:
            shape = (len(rows), len(rows[0]) if rows else 0)
        if field.is_prime:
            return cls(field, np.array(rows, dtype=np.int64).reshape(shape))
        den = 1
        for row in rows:
            for x in row:
                den = den * x.denominator // math.gcd(den, x.denominator)
        num = np.array([[int(x * den) for x in row] for row in rows],
                       dtype=object).reshape(shape)
        return cls(field, num, den)

    @classmethod
    def zeros(cls, field: FieldSpec, m: int, n: int) -> Mat:
        return cls(field, np.zeros((m, n), dtype=np.int64))

    @classmethod
    def eye(cls, field: FieldSpec, n: int) -> Mat:
        return cls(field, np.eye(n, dtype=np.int64))

    def like(self, num: np.ndarray) -> Mat:
        """Same field and denominator, rearranged numerator (no arithmetic)."""
        out = object.__new__(Mat)
        out.field = self.field
        out.num = num
        out.den = self.den
        return out

    # ------------------------------------------------------------ access

    @property
    def shape(self) -> tuple[int, int]:
        return self.num.shape

    def entry(self, i: int, j: int):
        x = int(self.num[i, j])
        if self.field.is_prime:
            return x
        return Fraction(x, self.den)

    def column(self, j: int) -> list:
        return [self.entry(i, j) for i in range(self.shape[0])]

    def rows(self) -> list[list]:
        return [[self.entry(i, j) for j in range(self.shape[1])]
                for i in range(self.shape[0])]

    @property
    def T(self) -> Mat:
        return self.like(np.ascontiguousarray(self.num.T))

    def is_zero(self) -> bool:
        return not np.any(self.num)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self.den == other.den and bool(np.array_equal(self.num, other.num)))

    __hash__ = None

    def __repr__(self):
        return f"Mat({self.field}, {self.rows()})"

    # ------------------------------------------------------------ arithmetic

    def __matmul__(self, other: Mat) -> Mat:
        f = same_field(self.field, other.field)
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        a, b = self.num, other.num
        if f.is_prime:
            return Mat(f, _accel.matmul_mod(np.ascontiguousarray(a),
                                            np.ascontiguousarray(b), f.p))
        k = a.shape[1]
        if (a.dtype != object and b.dtype != object
                and _maxabs(a) * _maxabs(b) * max(k, 1) < _SAFE):
            prod = _accel.matmul_i64(np.ascontiguousarray(a), np.ascontiguousarray(b))
        else:
            prod = a.astype(object) @ b.astype(object)
            if k == 0:
                prod = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        return Mat(f, prod, self.den * other.den)

    def kron(self, other: Mat) -> Mat:
        f = same_field(self.field, other.field)
        a, b = self.num, other.num
        if f.is_prime:
            return Mat(f, np.kron(a, b) % f.p)
        if a.dtype == object or b.dtype == object or _maxabs(a) * _maxabs(b) >= _SAFE:
            a, b = a.astype(object), b.astype(object)
        return Mat(f, np.kron(a, b), self.den * other.den)

    def _combine(self, other: Mat, sign: int) -> Mat:
        f = same_field(self.field, other.field)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        if f.is_prime:
            return Mat(f, (self.num + sign * other.num) % f.p)
        d = self.den * other.den // math.gcd(self.den, other.den)
        sa, sb = d // self.den, d // other.den
        a, b = self.num, other.num
        if (a.dtype == object or b.dtype == object
                or (_maxabs(a) * sa + _maxabs(b) * sb) >= _SAFE):
            a, b = a.astype(object), b.astype(object)
        return Mat(f, a * sa + sign * (b * sb), d)

    def __add__(self, other: Mat) -> Mat:
        return self._combine(other, 1)

    def __sub__(self, other: Mat) -> Mat:
        return self._combine(other, -1)

    def __neg__(self) -> Mat:
        if self.field.is_prime:
            return Mat(self.field, (-self.num) % self.field.p)
        return self.like(-self.num)

    def scale(self, s) -> Mat:
        s = self.field.scalar(s)
        if self.field.is_prime:
            return Mat(self.field, (self.num * s) % self.field.p)
        num = self.num
        if num.dtype == object or _maxabs(num) * abs(s.numerator) >= _SAFE:
            num = num.astype(object)
        return Mat(self.field, num * s.numerator, self.den * s.denominator)

    def to_fraction_rows(self) -> list[list[Fraction]]:
        """Rows as Python scalars (Fraction over QQ, int over F_p)."""
        return self.rows()


def hstack(a: Mat, b: Mat) -> Mat:
    f = same_field(a.field, b.field)
    if f.is_prime:
        return Mat(f, np.hstack([a.num, b.num]))
    d = a.den * b.den // math.gcd(a.den, b.den)
    na = a.num.astype(object) * (d // a.den)
    nb = b.num.astype(object) * (d // b.den)
    return Mat(f, np.hstack([na, nb]), d)


def vstack(mats: list[Mat]) -> Mat:
    f = same_field(*[m.field for m in mats])
    if f.is_prime:
        return Mat(f, np.vstack([m.num for m in mats]))
    d = 1
    for m in mats:
        d = d * m.den // math.gcd(d, m.den)
    return Mat(f, np.vstack([m.num.astype(object) * (d // m.den) for m in mats]), d)
