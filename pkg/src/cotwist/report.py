"""Check reports: named equation checks with counterexample witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import SpaceMismatch
from .linmap import LinMap, Space


@dataclass(frozen=True)
class Witness:
    """First failing input basis vector and both output columns."""

    label: str
    lhs: tuple[str, ...]
    rhs: tuple[str, ...]
    cod_basis: tuple[str, ...] = ()

    def describe(self) -> str:
        return (f"at {self.label}: lhs = {_combo(self.lhs, self.cod_basis)}; "
                f"rhs = {_combo(self.rhs, self.cod_basis)}")

    def to_dict(self) -> dict:
        return {"input": self.label, "lhs": list(self.lhs), "rhs": list(self.rhs),
                "basis": list(self.cod_basis)}


def _combo(coeffs: tuple[str, ...], basis: tuple[str, ...]) -> str:
    terms = []
    for c, b in zip(coeffs, basis):
        if c.split(" mod ")[0] in ("0", "-0"):
            continue
        terms.append(b if c.split(" mod ")[0] == "1" else f"({c})*{b}")
    return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Witness | None = None
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name}"
        if self.detail:
            text += f" ({self.detail})"
        if self.witness is not None:
            text += f"\n       witness {self.witness.describe()}"
        return text

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if self.detail:
            d["detail"] = self.detail
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        return d


def witness_for(lhs: LinMap, rhs: LinMap) -> Witness | None:
    """None when the matrices agree, otherwise the first differing column."""
    if lhs.mat == rhs.mat:
        return None
    diff = (lhs.mat - rhs.mat).num
    cols = [j for j in range(diff.shape[1]) if diff[:, j].any()]
    j = cols[0]
    fmt = lhs.field.format
    return Witness(lhs.dom.basis[j],
                   tuple(fmt(x) for x in lhs.mat.column(j)),
                   tuple(fmt(x) for x in rhs.mat.column(j)),
                   lhs.cod.basis)


def _check_spaces(lhs: LinMap, rhs: LinMap, name: str):
    if lhs.field != rhs.field or lhs.dom.dim != rhs.dom.dim or lhs.cod.dim != rhs.cod.dim:
        raise SpaceMismatch(
            f"{name}: sides have shapes {lhs.cod.dim}x{lhs.dom.dim} and "
            f"{rhs.cod.dim}x{rhs.dom.dim}")


@dataclass
class CheckReport:
    title: str = ""
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __bool__(self) -> bool:
        return self.passed

    def equal(self, name: str, lhs: LinMap, rhs: LinMap) -> bool:
        """Record an exact map equality check."""
        _check_spaces(lhs, rhs, name)
        w = witness_for(lhs, rhs)
        self.results.append(CheckResult(name, w is None, w))
        return w is None

    def record(self, name: str, ok: bool, detail: str = "", witness: Witness | None = None) -> bool:
        self.results.append(CheckResult(name, bool(ok), witness, detail))
        return bool(ok)

    def extend(self, other: CheckReport, prefix: str = "") -> bool:
        for r in other.results:
            self.results.append(CheckResult(prefix + r.name, r.passed, r.witness, r.detail))
        return other.passed

    def get(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def to_text(self) -> str:
        lines = [f"== {self.title}"] if self.title else []
        lines += [r.line() for r in self.results]
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"verdict: {verdict} ({sum(r.passed for r in self.results)}"
                     f"/{len(self.results)} checks passed)")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"title": self.title, "passed": self.passed,
                "checks": [r.to_dict() for r in self.results]}


def vector_witness(space: Space, label: str, values) -> Witness:
    fmt = space.field.format
    return Witness(label, tuple(fmt(x) for x in values), (), space.basis)
