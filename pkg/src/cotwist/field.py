"""Scalar fields: the rationals and prime fields F_p."""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatch, FormatError

RATIONALS_KIND = "rationals"
PRIME_KIND = "prime-field"

_MOD_RE = re.compile(r"^\s*(-?\d+)\s*mod\s*(\d+)\s*$")
_FRAC_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == RATIONALS_KIND:
            if self.characteristic != 0:
                raise FieldMismatch("the rationals have characteristic 0")
        elif self.kind == PRIME_KIND:
            p = self.characteristic
            if not (_is_prime(p) and p < 2**31):
                raise FieldMismatch(f"characteristic {p} is not a prime below 2^31")
        else:
            raise FieldMismatch(f"unknown field kind {self.kind!r}")

    @property
    def is_prime(self) -> bool:
        return self.kind == PRIME_KIND

    @property
    def p(self) -> int:
        return self.characteristic

    def scalar(self, x) -> Fraction | int:
        """Canonical representative of ``x`` (int, Fraction or string)."""
        if isinstance(x, str):
            return self.parse(x)
        if self.is_prime:
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return int(x) % self.p
        return Fraction(x)

    def inverse(self, x):
        x = self.scalar(x)
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.is_prime:
            return pow(x, -1, self.p)
        return 1 / x

    def parse(self, text: str):
        """Parse "3", "-1/2" or "4 mod 5" exactly."""
        m = _MOD_RE.match(text)
        if m:
            value, modulus = int(m.group(1)), int(m.group(2))
            if not self.is_prime or modulus != self.p:
                raise FormatError(f"scalar {text!r} does not belong to {self}")
            return value % self.p
        m = _FRAC_RE.match(text)
        if not m:
            raise FormatError(f"cannot parse scalar {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise FormatError(f"zero denominator in {text!r}")
        return self.scalar(Fraction(num, den))

    def format(self, x) -> str:
        x = self.scalar(x)
        if self.is_prime:
            return f"{x} mod {self.p}"
        return str(x)

    def __str__(self):
        return "QQ" if not self.is_prime else f"GF({self.p})"

    def to_dict(self) -> dict:
        if self.is_prime:
            return {"kind": PRIME_KIND, "characteristic": self.p}
        return {"kind": RATIONALS_KIND}

    @classmethod
    def from_dict(cls, d: dict) -> FieldSpec:
        try:
            return cls(d["kind"], int(d.get("characteristic", 0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad field spec {d!r}") from exc


QQ = FieldSpec(RATIONALS_KIND)


def GF(p: int) -> FieldSpec:
    return FieldSpec(PRIME_KIND, p)


def field_from_option(value: str | int | None) -> FieldSpec:
    """Resolve ``--field``; falls back to $COTWIST_FIELD, then QQ.

    Accepted spellings: "0", "Q", "QQ", "rationals" or a prime such as "5".
    """
    if value is None:
        value = os.environ.get("COTWIST_FIELD")
    if value is None or str(value).strip() == "":
        return QQ
    text = str(value).strip()
    if text.lower() in {"0", "q", "qq", "rationals"}:
        return QQ
    try:
        return GF(int(text))
    except ValueError as exc:
        raise FieldMismatch(f"cannot interpret field {text!r}") from exc


def same_field(*fields: FieldSpec) -> FieldSpec:
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatch(f"{first} vs {f}")
    return first
