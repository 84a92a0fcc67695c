"""JSON structure documents.

A document names a field, a list of spaces and a list of maps.  Every map
records its domain and codomain as lists of space names (the tensor legs;
an empty list or ["k"] is the ground field) and a dense matrix of scalar
strings such as "3", "-1/2" or "4 mod 5".  Entry [i][j] is the coefficient
of the i-th codomain basis vector in the image of the j-th domain basis
vector.

Map names follow a convention the loaders rely on: "H.mult", "H.unit",
"H.delta", "H.eps", "H.S" for the Hopf algebra and "C.delta", "C.eps",
"C.act" for the module coalgebra.  When C is a tensor product C0⊗H the
legs of "C.eps" say so and "C0.delta", "C0.eps" give the first factor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from .errors import FormatError, SpaceMismatch, UnknownName
from .field import FieldSpec
from .hopf import Coalgebra, HopfAlgebra
from .linmap import LinMap, Space, ground, tensor_space
from .matrix import Mat
from .modcoalg import ModuleCoalgebra

FORMAT = "cotwist-structure"
VERSION = 1


@lru_cache(maxsize=1)
def schema() -> dict:
    text = resources.files("cotwist").joinpath("data/structure.schema.json").read_text("utf-8")
    return json.loads(text)


@dataclass
class MapEntry:
    role: str
    domain: tuple[str, ...]
    codomain: tuple[str, ...]
    map: LinMap
    inverse: str | None = None


@dataclass
class Bundle:
    field: FieldSpec
    name: str = ""
    provenance: list[str] = field(default_factory=list)
    spaces: dict[str, Space] = field(default_factory=dict)
    maps: dict[str, MapEntry] = field(default_factory=dict)

    # ------------------------------------------------------------ building

    def add_space(self, name: str, space: Space) -> Space:
        if name == "k":
            raise FormatError("'k' is reserved for the ground field")
        if space.field != self.field:
            raise SpaceMismatch(f"space {name} lives over {space.field}, not {self.field}")
        old = self.spaces.get(name)
        if old is not None and old != space:
            raise SpaceMismatch(f"space {name} declared twice with different bases")
        self.spaces[name] = Space(name, space.basis, space.field)
        return self.spaces[name]

    def legs(self, names) -> Space:
        spaces = [ground(self.field) if n == "k" else self.spaces.get(n) for n in names]
        missing = [n for n, s in zip(names, spaces) if s is None]
        if missing:
            raise UnknownName(f"undeclared space {missing[0]!r}")
        return tensor_space(*spaces) if spaces else ground(self.field)

    def add_map(self, name: str, role: str, f: LinMap, domain, codomain,
                inverse: str | None = None) -> LinMap:
        domain, codomain = tuple(domain), tuple(codomain)
        dom, cod = self.legs(domain), self.legs(codomain)
        if f.dom != dom or f.cod != cod:
            raise SpaceMismatch(f"map {name} does not match the declared legs "
                                f"{'⊗'.join(domain) or 'k'} -> {'⊗'.join(codomain) or 'k'}")
        legs = tuple(self.spaces[n] for n in codomain if n != "k") or (cod,)
        m = LinMap(dom, cod, f.mat, name, legs)
        self.maps[name] = MapEntry(role, domain, codomain, m, inverse)
        return m

    def merge(self, other: Bundle) -> Bundle:
        if other.field != self.field:
            raise SpaceMismatch(f"cannot merge documents over {self.field} and {other.field}")
        out = Bundle(self.field, self.name or other.name, self.provenance + other.provenance,
                     dict(self.spaces), dict(self.maps))
        for n, s in other.spaces.items():
            out.add_space(n, s)
        for n, e in other.maps.items():
            if n in out.maps and out.maps[n].map != e.map:
                raise FormatError(f"map {n} defined differently in two documents")
            out.maps[n] = e
        return out

    # ------------------------------------------------------------ reading

    def linmap(self, name: str) -> LinMap:
        try:
            return self.maps[name].map
        except KeyError:
            raise UnknownName(f"no map named {name!r}; have {', '.join(self.maps)}") from None

    def of_role(self, role: str) -> list[str]:
        return [n for n, e in self.maps.items() if e.role == role]

    def pick(self, role: str, name: str | None = None) -> str:
        names = self.of_role(role)
        if name is not None:
            if name not in names:
                raise UnknownName(f"no {role} named {name!r}; have {', '.join(names) or 'none'}")
            return name
        if not names:
            raise UnknownName(f"document has no map with role {role!r}")
        return names[0]

    def hopf(self, prefix: str = "H") -> HopfAlgebra:
        g = lambda s: self.linmap(f"{prefix}.{s}")  # noqa: E731
        space = self.spaces[prefix] if prefix in self.spaces else g("mult").cod
        return HopfAlgebra(space, g("mult"), g("unit"), g("delta"), g("eps"), g("S"),
                           self.name or prefix)

    def module_coalgebra(self, name: str | None = None) -> ModuleCoalgebra:
        h = self.hopf()
        eps = self.maps.get("C.eps")
        if eps is None:
            raise UnknownName("document has no module coalgebra (missing C.eps)")
        # C is one leg even when it is declared as C0⊗H
        D = eps.map.dom
        c = Coalgebra(D, self.linmap("C.delta").with_legs(D, D), eps.map)
        base = None
        if "C0.delta" in self.maps and eps.domain == ("C0", "H"):
            base = Coalgebra(self.spaces["C0"], self.linmap("C0.delta"), self.linmap("C0.eps"))
        return ModuleCoalgebra(c, h, self.linmap("C.act").with_legs(D), name or self.name or "C",
                               tensor_base=base)


# ---------------------------------------------------------------- documents


def to_doc(b: Bundle) -> dict:
    fmt = b.field.format
    doc = {"format": FORMAT, "version": VERSION}
    if b.name:
        doc["name"] = b.name
    if b.provenance:
        doc["provenance"] = list(b.provenance)
    doc["field"] = b.field.to_dict()
    doc["spaces"] = [{"name": n, "basis": list(s.basis)} for n, s in b.spaces.items()]
    maps = []
    for n, e in b.maps.items():
        rec = {"name": n, "role": e.role, "domain": list(e.domain), "codomain": list(e.codomain)}
        if e.inverse:
            rec["inverse"] = e.inverse
        rec["matrix"] = [[fmt(x) for x in row] for row in e.map.mat.rows()]
        maps.append(rec)
    doc["maps"] = maps
    return doc


def from_doc(doc: dict) -> Bundle:
    try:
        jsonschema.validate(doc, schema())
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "document"
        raise FormatError(f"{where}: {exc.message}") from None
    fld = FieldSpec.from_dict(doc["field"])
    b = Bundle(fld, doc.get("name", ""), list(doc.get("provenance", [])))
    for s in doc["spaces"]:
        b.add_space(s["name"], Space(s["name"], tuple(s["basis"]), fld))
    for rec in doc["maps"]:
        try:
            dom, cod = b.legs(rec["domain"]), b.legs(rec["codomain"])
        except UnknownName as exc:
            raise FormatError(f"map {rec['name']}: {exc}") from None
        rows = rec["matrix"]
        if len(rows) != cod.dim or any(len(r) != dom.dim for r in rows):
            raise FormatError(f"map {rec['name']}: matrix must be {cod.dim}x{dom.dim}")
        mat = Mat.from_rows(fld, [[fld.parse(x) for x in r] for r in rows], (cod.dim, dom.dim))
        if rec["name"] in b.maps:
            raise FormatError(f"map {rec['name']} defined twice")
        b.add_map(rec["name"], rec["role"], LinMap(dom, cod, mat, rec["name"]),
                  rec["domain"], rec["codomain"], rec.get("inverse"))
    return b


def dumps(b: Bundle) -> str:
    """Deterministic text: two-space indentation, one matrix row per line."""
    doc = to_doc(b)
    rows = []
    for rec in doc["maps"]:
        marked = []
        for row in rec["matrix"]:
            marked.append(f"\x00{len(rows)}\x00")
            rows.append(json.dumps(row, ensure_ascii=False))
        rec["matrix"] = marked
    text = json.dumps(doc, indent=2, ensure_ascii=False)
    for i, row in enumerate(rows):
        text = text.replace(json.dumps(f"\x00{i}\x00"), row, 1)
    return text + "\n"


def loads(text: str) -> Bundle:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from None
    return from_doc(doc)


def load(path: str | Path) -> Bundle:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def dump(b: Bundle, path: str | Path) -> None:
    Path(path).write_text(dumps(b), encoding="utf-8")


# ---------------------------------------------------------------- builders


def hopf_bundle(h: HopfAlgebra, provenance: str | None = None) -> Bundle:
    b = Bundle(h.field, h.name, [provenance] if provenance else [])
    b.add_space("H", h.space)
    b.add_map("H.mult", "mult", h.mult, ("H", "H"), ("H",))
    b.add_map("H.unit", "unit", h.unit, ("k",), ("H",))
    b.add_map("H.delta", "delta", h.delta, ("H",), ("H", "H"))
    b.add_map("H.eps", "eps", h.eps, ("H",), ("k",))
    b.add_map("H.S", "antipode", h.antipode, ("H",), ("H",))
    return b


def c_legs(mc: ModuleCoalgebra) -> tuple[str, ...]:
    return ("C0", "H") if mc.tensor_base is not None else ("C",)


def mc_bundle(mc: ModuleCoalgebra, provenance: str | None = None) -> Bundle:
    b = hopf_bundle(mc.hopf, provenance)
    b.name = mc.name
    legs = c_legs(mc)
    base = mc.tensor_base
    if base is not None:
        c0 = base.coalgebra if isinstance(base, ModuleCoalgebra) else base
        b.add_space("C0", c0.space)
        b.add_map("C0.delta", "delta", c0.delta, ("C0",), ("C0", "C0"))
        b.add_map("C0.eps", "eps", c0.eps, ("C0",), ("k",))
    else:
        b.add_space("C", mc.space)
    b.add_map("C.delta", "delta", mc.delta, legs, legs + legs)
    b.add_map("C.eps", "eps", mc.eps, legs, ("k",))
    b.add_map("C.act", "action", mc.act, legs + ("H",), legs)
    return b
